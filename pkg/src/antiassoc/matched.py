"""Matched pairs of q-generalized associative algebras.

Data: two algebras A and B with the same q, plus four action tables.
lA/rA act on B's space and are indexed by A's basis; lB/rB act on A's
space and are indexed by B's basis.  The six compatibility equations,
writing * for A's product and o for B's:

    (1) lA(x)(a o b)            = q^{-1} lA(rB(a)x) b + q^{-1} (lA(x)a) o b
    (2) rA(x)(a o b)            = q rA(lB(b)x) a + q a o (rA(x)b)
    (3) lB(a)(x * y)            = q^{-1} lB(rA(x)a) y + q^{-1} (lB(a)x) * y
    (4) rB(a)(x * y)            = q rB(lA(y)a) x + q x * (rB(a)y)
    (5) lA(lB(a)x)b + (rA(x)a) o b - q rA(rB(b)x)a - q a o (lA(x)b) = 0
    (6) lB(lA(x)a)y + (rB(a)x) * y - q rB(rA(y)a)x - q x * (lB(a)y) = 0

Equations (1), (2), (5) live in B's space and are quantified over
(x, a, b); violations carry indices (i_x, i_a, i_b).  Equations (3),
(4), (6) live in A's space over (a, x, y); indices are (i_a, i_x, i_y).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    CheckReport,
    StructureAlgebra,
    Violation,
    check_q_associative,
    multiply,
)
from .bimodules import Bimodule, action_of, check_bimodule
from .linalg import (
    DimensionMismatch,
    Matrix,
    Tensor3,
    basis_vec,
    vec_is_zero,
    vec_sub,
)


@dataclass
class MatchedPairData:
    A: StructureAlgebra
    B: StructureAlgebra
    lA: list[Matrix]
    rA: list[Matrix]
    lB: list[Matrix]
    rB: list[Matrix]

    def __post_init__(self):
        if self.A.q != self.B.q:
            raise ValueError("matched pair requires a single q on both algebras")
        n, m = self.A.dim, self.B.dim
        for name, table, count, size in (
            ("lA", self.lA, n, m),
            ("rA", self.rA, n, m),
            ("lB", self.lB, m, n),
            ("rB", self.rB, m, n),
        ):
            if len(table) != count:
                raise DimensionMismatch(f"{name}: expected {count} matrices")
            for mat in table:
                if mat.rows != size or mat.cols != size:
                    raise DimensionMismatch(
                        f"{name}: matrices must be {size}x{size}, got {mat.rows}x{mat.cols}"
                    )

    def actions_on_B(self) -> Bimodule:
        return Bimodule(self.A.dim, self.B.dim, self.lA, self.rA)

    def actions_on_A(self) -> Bimodule:
        return Bimodule(self.B.dim, self.A.dim, self.lB, self.rB)


def _precondition_violations(P: MatchedPairData) -> list[Violation]:
    out = []
    for tag, rep in (
        ("q_assoc:A", check_q_associative(P.A)),
        ("q_assoc:B", check_q_associative(P.B)),
        ("bimodule:A_on_B", check_bimodule(P.A, P.actions_on_B())),
        ("bimodule:B_on_A", check_bimodule(P.B, P.actions_on_A())),
    ):
        for v in rep.violations:
            out.append(
                Violation(f"precondition:{tag}:{v.identity_id}", v.indices, v.residual)
            )
    return out


def check_matched_pair(P: MatchedPairData) -> CheckReport:
    """Evaluate the six matched-pair equations on all basis tuples.

    Precondition failures (either algebra not q-associative, either action
    pair not a bimodule) are themselves reported as violations with an
    ``precondition:`` id prefix, so the verdict is the full conjunction.
    """
    q = P.A.q
    qi = 1 / q
    n, m = P.A.dim, P.B.dim
    eA = [basis_vec(n, i) for i in range(n)]
    eB = [basis_vec(m, i) for i in range(m)]
    violations = _precondition_violations(P)

    def lA(x):  # action matrix of an A-element on B's space
        return action_of(P.lA, x)

    def rA(x):
        return action_of(P.rA, x)

    def lB(a):
        return action_of(P.lB, a)

    def rB(a):
        return action_of(P.rB, a)

    mulA = lambda u, v: multiply(P.A, u, v)  # noqa: E731
    mulB = lambda u, v: multiply(P.B, u, v)  # noqa: E731

    # equations in B's space, over x in A and a, b in B
    for ix, x in enumerate(eA):
        for ia, a in enumerate(eB):
            for ib, b in enumerate(eB):
                idx = (ix + 1, ia + 1, ib + 1)
                ab = mulB(a, b)
                lhs1 = lA(x).apply(ab)
                rhs1 = [
                    qi * (u + v)
                    for u, v in zip(
                        lA(rB(a).apply(x)).apply(b), mulB(lA(x).apply(a), b)
                    )
                ]
                r1 = vec_sub(lhs1, rhs1)
                if not vec_is_zero(r1):
                    violations.append(Violation("eq1", idx, r1))

                lhs2 = rA(x).apply(ab)
                rhs2 = [
                    q * (u + v)
                    for u, v in zip(
                        rA(lB(b).apply(x)).apply(a), mulB(a, rA(x).apply(b))
                    )
                ]
                r2 = vec_sub(lhs2, rhs2)
                if not vec_is_zero(r2):
                    violations.append(Violation("eq2", idx, r2))

                t5 = lA(lB(a).apply(x)).apply(b)
                t5 = [u + v for u, v in zip(t5, mulB(rA(x).apply(a), b))]
                t5 = [
                    u - q * v for u, v in zip(t5, rA(rB(b).apply(x)).apply(a))
                ]
                t5 = [u - q * v for u, v in zip(t5, mulB(a, lA(x).apply(b)))]
                if not vec_is_zero(t5):
                    violations.append(Violation("eq5", idx, t5))

    # equations in A's space, over a in B and x, y in A
    for ia, a in enumerate(eB):
        for ix, x in enumerate(eA):
            for iy, y in enumerate(eA):
                idx = (ia + 1, ix + 1, iy + 1)
                xy = mulA(x, y)

                lhs3 = lB(a).apply(xy)
                rhs3 = [
                    qi * (u + v)
                    for u, v in zip(
                        lB(rA(x).apply(a)).apply(y), mulA(lB(a).apply(x), y)
                    )
                ]
                r3 = vec_sub(lhs3, rhs3)
                if not vec_is_zero(r3):
                    violations.append(Violation("eq3", idx, r3))

                lhs4 = rB(a).apply(xy)
                rhs4 = [
                    q * (u + v)
                    for u, v in zip(
                        rB(lA(y).apply(a)).apply(x), mulA(x, rB(a).apply(y))
                    )
                ]
                r4 = vec_sub(lhs4, rhs4)
                if not vec_is_zero(r4):
                    violations.append(Violation("eq4", idx, r4))

                t6 = lB(lA(x).apply(a)).apply(y)
                t6 = [u + v for u, v in zip(t6, mulA(rB(a).apply(x), y))]
                t6 = [
                    u - q * v for u, v in zip(t6, rB(rA(y).apply(a)).apply(x))
                ]
                t6 = [u - q * v for u, v in zip(t6, mulA(x, lB(a).apply(y)))]
                if not vec_is_zero(t6):
                    violations.append(Violation("eq6", idx, t6))

    return CheckReport.from_violations(violations, q=str(q))


def bowtie(P: MatchedPairData) -> StructureAlgebra:
    """Product on A + B:

    (x+a)(y+b) = (x*y + lB(a)y + rB(b)x) + (a o b + lA(x)b + rA(y)a).

    Built unconditionally; whether it satisfies the q-law is for
    check_q_associative to say.
    """
    n, m = P.A.dim, P.B.dim
    d = n + m
    t = Tensor3.zeros(d, d, d)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t.entries[i][j][k] = P.A.c.entries[i][j][k]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                t.entries[n + i][n + j][n + k] = P.B.c.entries[i][j][k]
    for i in range(n):  # e_i * b_j  ->  lA part in B
        for j in range(m):
            col = P.lA[i].column(j)
            for k in range(m):
                t.entries[i][n + j][n + k] = col[k]
    for j in range(n):  # a_i * e_j  ->  rA part in B
        for i in range(m):
            col = P.rA[j].column(i)
            for k in range(m):
                t.entries[n + i][j][n + k] = col[k]
    for i in range(m):  # a_i * e_j  ->  lB part in A
        for j in range(n):
            col = P.lB[i].column(j)
            for k in range(n):
                t.entries[n + i][j][k] = col[k]
    for j in range(m):  # e_i * b_j  ->  rB part in A
        for i in range(n):
            col = P.rB[j].column(i)
            for k in range(n):
                t.entries[i][n + j][k] = col[k]
    return StructureAlgebra(d, P.A.q, t)
