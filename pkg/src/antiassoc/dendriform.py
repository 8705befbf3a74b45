"""q-generalized dendriform algebras.

A structure carries two products (prec, succ) on one space; the axioms,
with x*y = x prec y + x succ y the associated product:

    (A1)  (x prec y) prec z = q * x prec (y * z)
    (A2)  (x succ y) prec z = q * x succ (y prec z)
    (A3)  x succ (y succ z) = q^{-1} * (x * y) succ z

Summing the three gives the q-law for *, so every valid structure splits
a q-generalized associative algebra into two halves.

Dendriform bimodules carry four action tables in the fixed slot order
(l_succ, r_succ, l_prec, r_prec); matched pairs carry eight.  The
eighteen matched-pair conditions are stored under the identity_ids
"35".."52": the first nine quantify (x; a, b) with x in A and a, b in B,
the last nine are their exact mirrors under swapping the roles of A and
B, in the same order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import CheckReport, StructureAlgebra, Violation
from .bimodules import Bimodule, action_of
from .linalg import (
    DimensionMismatch,
    Matrix,
    Scalar,
    Tensor3,
    basis_vec,
    rat,
    vec_add,
    vec_is_zero,
    zero_vec,
)


def _tensor_multiply(
    c: Tensor3, x: Sequence[Fraction], y: Sequence[Fraction]
) -> list[Fraction]:
    out = zero_vec(c.d3)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        plane = c.entries[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            f = xi * yj
            fiber = plane[j]
            for k in range(c.d3):
                if fiber[k] != 0:
                    out[k] += f * fiber[k]
    return out


class DendriformStructure:
    __slots__ = ("dim", "q", "c_prec", "c_succ")

    def __init__(self, dim: int, q: Scalar, c_prec: Tensor3, c_succ: Tensor3):
        q = rat(q)
        if q == 0:
            raise ValueError("q must be nonzero")
        for t in (c_prec, c_succ):
            if (t.d1, t.d2, t.d3) != (dim, dim, dim):
                raise DimensionMismatch("product tensor shape does not match dim")
        self.dim = dim
        self.q = q
        self.c_prec = c_prec
        self.c_succ = c_succ

    @classmethod
    def zero(cls, dim: int, q: Scalar = -1) -> "DendriformStructure":
        return cls(dim, q, Tensor3.zeros(dim, dim, dim), Tensor3.zeros(dim, dim, dim))

    @classmethod
    def from_products(
        cls,
        dim: int,
        q: Scalar,
        prec: dict[tuple[int, int], dict[int, Scalar]] | None = None,
        succ: dict[tuple[int, int], dict[int, Scalar]] | None = None,
    ) -> "DendriformStructure":
        """Sparse 1-indexed constructor, mirroring StructureAlgebra.from_products."""
        tensors = []
        for table in (prec, succ):
            t = Tensor3.zeros(dim, dim, dim)
            for (i, j), out in (table or {}).items():
                for k, v in out.items():
                    if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
                        raise DimensionMismatch(f"index out of range in ({i},{j})->{k}")
                    t.entries[i - 1][j - 1][k - 1] = rat(v)
            tensors.append(t)
        return cls(dim, q, tensors[0], tensors[1])

    def prec(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
        return _tensor_multiply(self.c_prec, x, y)

    def succ(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
        return _tensor_multiply(self.c_succ, x, y)

    def star(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
        return vec_add(self.prec(x, y), self.succ(x, y))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DendriformStructure):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.q == other.q
            and self.c_prec == other.c_prec
            and self.c_succ == other.c_succ
        )

    def __repr__(self) -> str:
        return f"DendriformStructure(dim={self.dim}, q={self.q})"


def check_q_dendriform(D: DendriformStructure) -> CheckReport:
    """The three axioms on all basis triples; ids axiom1/axiom2/axiom3."""
    n = D.dim
    q = D.q
    qi = 1 / q
    e = [basis_vec(n, i) for i in range(n)]
    violations = []
    for i in range(n):
        for j in range(n):
            p_ij = D.prec(e[i], e[j])
            s_ij = D.succ(e[i], e[j])
            star_ij = vec_add(p_ij, s_ij)
            for k in range(n):
                idx = (i + 1, j + 1, k + 1)
                star_jk = D.star(e[j], e[k])
                r1 = [
                    u - q * v
                    for u, v in zip(D.prec(p_ij, e[k]), D.prec(e[i], star_jk))
                ]
                if not vec_is_zero(r1):
                    violations.append(Violation("axiom1", idx, r1))
                r2 = [
                    u - q * v
                    for u, v in zip(
                        D.prec(s_ij, e[k]), D.succ(e[i], D.prec(e[j], e[k]))
                    )
                ]
                if not vec_is_zero(r2):
                    violations.append(Violation("axiom2", idx, r2))
                r3 = [
                    u - qi * v
                    for u, v in zip(
                        D.succ(e[i], D.succ(e[j], e[k])), D.succ(star_ij, e[k])
                    )
                ]
                if not vec_is_zero(r3):
                    violations.append(Violation("axiom3", idx, r3))
    return CheckReport.from_violations(violations, q=str(q), triples=n**3)


def associated_algebra(D: DendriformStructure) -> StructureAlgebra:
    """x * y = x prec y + x succ y, with the same q."""
    n = D.dim
    t = Tensor3.zeros(n, n, n)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t.entries[i][j][k] = (
                    D.c_prec.entries[i][j][k] + D.c_succ.entries[i][j][k]
                )
    return StructureAlgebra(n, D.q, t)


def dendriform_mult_operators(
    D: DendriformStructure,
) -> tuple[list[Matrix], list[Matrix], list[Matrix], list[Matrix]]:
    """(L_succ, R_succ, L_prec, R_prec) basis-operator tables."""
    n = D.dim

    def left(c: Tensor3) -> list[Matrix]:
        return [
            Matrix([[c.entries[i][j][k] for j in range(n)] for k in range(n)])
            for i in range(n)
        ]

    def right(c: Tensor3) -> list[Matrix]:
        return [
            Matrix([[c.entries[i][j][k] for i in range(n)] for k in range(n)])
            for j in range(n)
        ]

    return left(D.c_succ), right(D.c_succ), left(D.c_prec), right(D.c_prec)


@dataclass
class DendriformBimodule:
    algebra_dim: int
    module_dim: int
    l_succ: list[Matrix]
    r_succ: list[Matrix]
    l_prec: list[Matrix]
    r_prec: list[Matrix]

    def __post_init__(self):
        for name, table in (
            ("l_succ", self.l_succ),
            ("r_succ", self.r_succ),
            ("l_prec", self.l_prec),
            ("r_prec", self.r_prec),
        ):
            if len(table) != self.algebra_dim:
                raise DimensionMismatch(f"{name}: need {self.algebra_dim} matrices")
            for m in table:
                if m.rows != self.module_dim or m.cols != self.module_dim:
                    raise DimensionMismatch(f"{name}: matrices must be square of module_dim")

    @classmethod
    def zero(cls, algebra_dim: int, module_dim: int) -> "DendriformBimodule":
        def z():
            return [Matrix.zeros(module_dim, module_dim) for _ in range(algebra_dim)]

        return cls(algebra_dim, module_dim, z(), z(), z(), z())

    def sum_actions(self) -> Bimodule:
        """The associative-module shadow (l_*, r_*)."""
        l_star = [a + b for a, b in zip(self.l_succ, self.l_prec)]
        r_star = [a + b for a, b in zip(self.r_succ, self.r_prec)]
        return Bimodule(self.algebra_dim, self.module_dim, l_star, r_star)


def lift_assoc_bimodule(l: Sequence[Matrix], r: Sequence[Matrix]) -> DendriformBimodule:
    """Pad an associative bimodule into the slots (l, 0, 0, r)."""
    if not l or len(l) != len(r):
        raise DimensionMismatch("need equally long nonempty action tables")
    m = l[0].rows
    zeros = [Matrix.zeros(m, m) for _ in l]
    return DendriformBimodule(len(l), m, list(l), zeros, [z for z in zeros], list(r))


def regular_dendriform_bimodule(D: DendriformStructure) -> DendriformBimodule:
    ls, rs, lp, rp = dendriform_mult_operators(D)
    return DendriformBimodule(D.dim, D.dim, ls, rs, lp, rp)


def _flat(m: Matrix) -> list[Fraction]:
    return [x for row in m.entries for x in row]


def check_dendriform_bimodule(
    D: DendriformStructure, M: DendriformBimodule
) -> CheckReport:
    """The nine action laws on all basis pairs (i, j) of D.

    Laws are numbered law1..law9 in the order: the three laws with
    l_prec/r_prec against prec (1-3), the mixed block (4-6), then the
    succ block (7-9).  Residuals are matrices flattened row-major.
    """
    if M.algebra_dim != D.dim:
        raise DimensionMismatch("bimodule indexed by a different algebra dimension")
    q = D.q
    n = D.dim
    e = [basis_vec(n, i) for i in range(n)]
    ls, rs, lp, rp = M.l_succ, M.r_succ, M.l_prec, M.r_prec
    lstar = [a + b for a, b in zip(ls, lp)]
    rstar = [a + b for a, b in zip(rs, rp)]
    violations = []
    for i in range(n):
        for j in range(n):
            idx = (i + 1, j + 1)
            p_ij = D.prec(e[i], e[j])
            s_ij = D.succ(e[i], e[j])
            star_ij = vec_add(p_ij, s_ij)
            p_ji = D.prec(e[j], e[i])
            s_ji = D.succ(e[j], e[i])
            star_ji = vec_add(p_ji, s_ji)
            checks = (
                ("law1", action_of(lp, p_ij) - (lp[i] * lstar[j]).scale(q)),
                ("law2", rp[i] * lp[j] - (lp[j] * rstar[i]).scale(q)),
                ("law3", rp[i] * rp[j] - action_of(rp, star_ji).scale(q)),
                ("law4", action_of(lp, s_ij) - (ls[i] * lp[j]).scale(q)),
                ("law5", rp[i] * ls[j] - (ls[j] * rp[i]).scale(q)),
                ("law6", rp[i] * rs[j] - action_of(rs, p_ji).scale(q)),
                ("law7", action_of(ls, star_ij) - (ls[i] * ls[j]).scale(q)),
                ("law8", rs[i] * lstar[j] - (ls[j] * rs[i]).scale(q)),
                ("law9", rs[i] * rstar[j] - action_of(rs, s_ji).scale(q)),
            )
            for law, res in checks:
                if not res.is_zero():
                    violations.append(Violation(law, idx, _flat(res)))
    return CheckReport.from_violations(violations, q=str(q))


def dual_dendriform_bimodule(M: DendriformBimodule, q: Scalar) -> DendriformBimodule:
    """Actions on V* in the dual basis:

        (q^{-2}(r_succ^T + r_prec^T), -q^2 l_prec^T,
         -q^{-2} r_succ^T,            q^2 (l_succ^T + l_prec^T))
    """
    q = rat(q)
    q2 = q * q
    qm2 = 1 / q2
    l_succ = [
        (a.transpose() + b.transpose()).scale(qm2)
        for a, b in zip(M.r_succ, M.r_prec)
    ]
    r_succ = [m.transpose().scale(-q2) for m in M.l_prec]
    l_prec = [m.transpose().scale(-qm2) for m in M.r_succ]
    r_prec = [
        (a.transpose() + b.transpose()).scale(q2)
        for a, b in zip(M.l_succ, M.l_prec)
    ]
    return DendriformBimodule(M.algebra_dim, M.module_dim, l_succ, r_succ, l_prec, r_prec)


def dendriform_semidirect(
    D: DendriformStructure, M: DendriformBimodule
) -> DendriformStructure:
    """Structure on A + V:

        (x+u) succ (y+v) = x succ y + l_succ(x)v + r_succ(y)u
        (x+u) prec (y+v) = x prec y + l_prec(x)v + r_prec(y)u
    """
    if M.algebra_dim != D.dim:
        raise DimensionMismatch("bimodule indexed by a different algebra dimension")
    n, m = D.dim, M.module_dim
    d = n + m

    def build(c: Tensor3, l: list[Matrix], r: list[Matrix]) -> Tensor3:
        t = Tensor3.zeros(d, d, d)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    t.entries[i][j][k] = c.entries[i][j][k]
        for i in range(n):
            for j in range(m):
                col = l[i].column(j)
                for k in range(m):
                    t.entries[i][n + j][n + k] = col[k]
                col = r[i].column(j)
                for k in range(m):
                    t.entries[n + j][i][n + k] = col[k]
        return t

    return DendriformStructure(
        d,
        D.q,
        build(D.c_prec, M.l_prec, M.r_prec),
        build(D.c_succ, M.l_succ, M.r_succ),
    )


@dataclass
class DendriformMatchedPairData:
    """Two structures plus eight action tables.

    Tables prefixed la/ra are indexed by D_A's basis and act on D_B's
    space; lb/rb the other way around.  Suffix _succ/_prec names the slot.
    """

    D_A: DendriformStructure
    D_B: DendriformStructure
    la_succ: list[Matrix]
    ra_succ: list[Matrix]
    la_prec: list[Matrix]
    ra_prec: list[Matrix]
    lb_succ: list[Matrix]
    rb_succ: list[Matrix]
    lb_prec: list[Matrix]
    rb_prec: list[Matrix]

    def __post_init__(self):
        if self.D_A.q != self.D_B.q:
            raise ValueError("matched pair requires a single q on both structures")
        n, m = self.D_A.dim, self.D_B.dim
        for name, table, count, size in (
            ("la_succ", self.la_succ, n, m),
            ("ra_succ", self.ra_succ, n, m),
            ("la_prec", self.la_prec, n, m),
            ("ra_prec", self.ra_prec, n, m),
            ("lb_succ", self.lb_succ, m, n),
            ("rb_succ", self.rb_succ, m, n),
            ("lb_prec", self.lb_prec, m, n),
            ("rb_prec", self.rb_prec, m, n),
        ):
            if len(table) != count:
                raise DimensionMismatch(f"{name}: expected {count} matrices")
            for mat in table:
                if mat.rows != size or mat.cols != size:
                    raise DimensionMismatch(f"{name}: matrices must be {size}x{size}")

    def actions_on_B(self) -> DendriformBimodule:
        return DendriformBimodule(
            self.D_A.dim, self.D_B.dim,
            self.la_succ, self.ra_succ, self.la_prec, self.ra_prec,
        )

    def actions_on_A(self) -> DendriformBimodule:
        return DendriformBimodule(
            self.D_B.dim, self.D_A.dim,
            self.lb_succ, self.rb_succ, self.lb_prec, self.rb_prec,
        )


def _halfside_violations(
    q: Fraction,
    DY: DendriformStructure,
    x_dim: int,
    lx_s, rx_s, lx_p, rx_p,
    ly_s, ry_s, ly_p, ry_p,
    first_id: int,
) -> list[Violation]:
    """The nine conditions for X acting on Y, ids first_id..first_id+8.

    Quantified over x in X's basis and a, b in Y's basis; residuals live
    in Y's space; indices are (i_x, i_a, i_b).
    """
    qi = 1 / q
    m = DY.dim
    eX = [basis_vec(x_dim, i) for i in range(x_dim)]
    eY = [basis_vec(m, i) for i in range(m)]
    ids = [str(first_id + k) for k in range(9)]

    LXs = lambda v: action_of(lx_s, v)  # noqa: E731
    RXs = lambda v: action_of(rx_s, v)  # noqa: E731
    LXp = lambda v: action_of(lx_p, v)  # noqa: E731
    RXp = lambda v: action_of(rx_p, v)  # noqa: E731
    LX = lambda v: LXs(v) + LXp(v)  # noqa: E731
    RX = lambda v: RXs(v) + RXp(v)  # noqa: E731
    LYs = lambda w: action_of(ly_s, w)  # noqa: E731
    RYs = lambda w: action_of(ry_s, w)  # noqa: E731
    LYp = lambda w: action_of(ly_p, w)  # noqa: E731
    RYp = lambda w: action_of(ry_p, w)  # noqa: E731
    LY = lambda w: LYs(w) + LYp(w)  # noqa: E731
    RY = lambda w: RYs(w) + RYp(w)  # noqa: E731

    def comb(*terms):
        out = list(terms[0])
        for coeff, vecv in terms[1:]:
            out = [u + coeff * v for u, v in zip(out, vecv)]
        return out

    violations = []
    for ix, x in enumerate(eX):
        for ia, a in enumerate(eY):
            for ib, b in enumerate(eY):
                idx = (ix + 1, ia + 1, ib + 1)
                pab = DY.prec(a, b)
                sab = DY.succ(a, b)
                star_ab = vec_add(pab, sab)

                res = comb(
                    RXp(x).apply(pab),
                    (-q, DY.prec(a, RX(x).apply(b))),
                    (-q, RXp(LY(b).apply(x)).apply(a)),
                )
                if not vec_is_zero(res):
                    violations.append(Violation(ids[0], idx, res))

                res = comb(
                    LXp(LYp(a).apply(x)).apply(b),
                    (Fraction(1), DY.prec(RXp(x).apply(a), b)),
                    (-q, DY.prec(a, LX(x).apply(b))),
                    (-q, RXp(RY(b).apply(x)).apply(a)),
                )
                if not vec_is_zero(res):
                    violations.append(Violation(ids[1], idx, res))

                res = comb(
                    LXp(x).apply(star_ab),
                    (-qi, DY.prec(LXp(x).apply(a), b)),
                    (-qi, LXp(RYp(a).apply(x)).apply(b)),
                )
                if not vec_is_zero(res):
                    violations.append(Violation(ids[2], idx, res))

                res = comb(
                    RXp(x).apply(sab),
                    (-q, RXs(LYp(b).apply(x)).apply(a)),
                    (-q, DY.succ(a, RXp(x).apply(b))),
                )
                if not vec_is_zero(res):
                    violations.append(Violation(ids[3], idx, res))

                res = comb(
                    LXp(LYs(a).apply(x)).apply(b),
                    (Fraction(1), DY.prec(RXs(x).apply(a), b)),
                    (-q, DY.succ(a, LXp(x).apply(b))),
                    (-q, RXs(RYp(b).apply(x)).apply(a)),
                )
                if not vec_is_zero(res):
                    violations.append(Violation(ids[4], idx, res))

                res = comb(
                    LXs(x).apply(pab),
                    (-qi, DY.prec(LXs(x).apply(a), b)),
                    (-qi, LXp(RYs(a).apply(x)).apply(b)),
                )
                if not vec_is_zero(res):
                    violations.append(Violation(ids[5], idx, res))

                res = comb(
                    RXs(x).apply(star_ab),
                    (-q, DY.succ(a, RXs(x).apply(b))),
                    (-q, RXs(LYs(b).apply(x)).apply(a)),
                )
                if not vec_is_zero(res):
                    violations.append(Violation(ids[6], idx, res))

                res = comb(
                    DY.succ(a, LXs(x).apply(b)),
                    (Fraction(1), RXs(RYs(b).apply(x)).apply(a)),
                    (-qi, LXs(LY(a).apply(x)).apply(b)),
                    (-qi, DY.succ(RX(x).apply(a), b)),
                )
                if not vec_is_zero(res):
                    violations.append(Violation(ids[7], idx, res))

                res = comb(
                    LXs(x).apply(sab),
                    (-qi, DY.succ(LX(x).apply(a), b)),
                    (-qi, LXs(RY(a).apply(x)).apply(b)),
                )
                if not vec_is_zero(res):
                    violations.append(Violation(ids[8], idx, res))
    return violations


def check_dendriform_matched_pair(P: DendriformMatchedPairData) -> CheckReport:
    """All eighteen conditions, ids "35".."52", plus preconditions.

    Preconditions (both structures pass check_q_dendriform, both action
    quadruples pass check_dendriform_bimodule) are folded into the
    violation list with a precondition: prefix.
    """
    violations = []
    for tag, rep in (
        ("dendriform:A", check_q_dendriform(P.D_A)),
        ("dendriform:B", check_q_dendriform(P.D_B)),
        ("bimodule:A_on_B", check_dendriform_bimodule(P.D_A, P.actions_on_B())),
        ("bimodule:B_on_A", check_dendriform_bimodule(P.D_B, P.actions_on_A())),
    ):
        for v in rep.violations:
            violations.append(
                Violation(f"precondition:{tag}:{v.identity_id}", v.indices, v.residual)
            )
    q = P.D_A.q
    violations += _halfside_violations(
        q, P.D_B, P.D_A.dim,
        P.la_succ, P.ra_succ, P.la_prec, P.ra_prec,
        P.lb_succ, P.rb_succ, P.lb_prec, P.rb_prec,
        35,
    )
    violations += _halfside_violations(
        q, P.D_A, P.D_B.dim,
        P.lb_succ, P.rb_succ, P.lb_prec, P.rb_prec,
        P.la_succ, P.ra_succ, P.la_prec, P.ra_prec,
        44,
    )
    return CheckReport.from_violations(violations, q=str(q))


def dendriform_bowtie(P: DendriformMatchedPairData) -> DendriformStructure:
    """Both products on A + B:

        (x+a) succ (y+b) = (x succ y + rb_succ(b)x + lb_succ(a)y)
                         + (la_succ(x)b + ra_succ(y)a + a succ b)

    and the prec analogue with the _prec tables.
    """
    n, m = P.D_A.dim, P.D_B.dim
    d = n + m

    def build(cA, cB, la, ra, lb, rb) -> Tensor3:
        t = Tensor3.zeros(d, d, d)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    t.entries[i][j][k] = cA.entries[i][j][k]
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    t.entries[n + i][n + j][n + k] = cB.entries[i][j][k]
        for i in range(n):
            for j in range(m):
                col = la[i].column(j)  # e_i acting left on b_j
                for k in range(m):
                    t.entries[i][n + j][n + k] = col[k]
                col = rb[j].column(i)  # b_j acting right on e_i
                for k in range(n):
                    t.entries[i][n + j][k] = col[k]
        for i in range(m):
            for j in range(n):
                col = lb[i].column(j)  # a_i acting left on e_j
                for k in range(n):
                    t.entries[n + i][j][k] = col[k]
                col = ra[j].column(i)  # a_i acted on from the right by e_j
                for k in range(m):
                    t.entries[n + i][j][n + k] = col[k]
        return t

    return DendriformStructure(
        d,
        P.D_A.q,
        build(P.D_A.c_prec, P.D_B.c_prec, P.la_prec, P.ra_prec, P.lb_prec, P.rb_prec),
        build(P.D_A.c_succ, P.D_B.c_succ, P.la_succ, P.ra_succ, P.lb_succ, P.rb_succ),
    )
