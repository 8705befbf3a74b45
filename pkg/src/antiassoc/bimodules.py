"""Bimodules over q-generalized associative algebras.

A bimodule is a pair of action tables (l, r) on a module space V:
``l[i]`` is the matrix of the left action of e_i, ``r[i]`` of the right
action.  The three laws checked here, with q the algebra's parameter:

    l(x*y) = q * l(x) l(y)
    r(x*y) = q^{-1} * r(y) r(x)
    l(x) r(y) = q^{-1} * r(y) l(x)

Actions of non-basis elements extend linearly from the tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import CheckReport, StructureAlgebra, Violation, basis_product
from .linalg import DimensionMismatch, Matrix


@dataclass
class Bimodule:
    algebra_dim: int
    module_dim: int
    l: list[Matrix]
    r: list[Matrix]

    def __post_init__(self):
        if len(self.l) != self.algebra_dim or len(self.r) != self.algebra_dim:
            raise DimensionMismatch("need one action matrix per algebra basis vector")
        for m in list(self.l) + list(self.r):
            if m.rows != self.module_dim or m.cols != self.module_dim:
                raise DimensionMismatch(
                    f"action matrix {m.rows}x{m.cols}, module dim {self.module_dim}"
                )

    @classmethod
    def zero(cls, algebra_dim: int, module_dim: int) -> "Bimodule":
        z = [Matrix.zeros(module_dim, module_dim) for _ in range(algebra_dim)]
        return cls(algebra_dim, module_dim, z, [m for m in z])


def action_of(table: Sequence[Matrix], x: Sequence[Fraction]) -> Matrix:
    """Linear extension: the action matrix of the element with coordinates x."""
    if len(table) != len(x):
        raise DimensionMismatch("coordinate length does not match action table")
    out = Matrix.zeros(table[0].rows, table[0].cols)
    for xi, m in zip(x, table):
        if xi != 0:
            out = out + m.scale(xi)
    return out


def _flat(m: Matrix) -> list[Fraction]:
    return [x for row in m.entries for x in row]


def check_bimodule(A: StructureAlgebra, M: Bimodule) -> CheckReport:
    """Verify the three bimodule laws on all basis pairs of A.

    Violations are matrix identities, reported at indices (i, j) with the
    residual matrix flattened row-major.
    """
    if M.algebra_dim != A.dim:
        raise DimensionMismatch("bimodule is indexed by a different algebra dimension")
    q = A.q
    qinv = 1 / q
    n = A.dim
    violations = []
    for i in range(n):
        for j in range(n):
            prod = basis_product(A, i, j)
            lhs = action_of(M.l, prod) - (M.l[i] * M.l[j]).scale(q)
            if not lhs.is_zero():
                violations.append(Violation("l_law", (i + 1, j + 1), _flat(lhs)))
            rhs = action_of(M.r, prod) - (M.r[j] * M.r[i]).scale(qinv)
            if not rhs.is_zero():
                violations.append(Violation("r_law", (i + 1, j + 1), _flat(rhs)))
            mix = M.l[i] * M.r[j] - (M.r[j] * M.l[i]).scale(qinv)
            if not mix.is_zero():
                violations.append(Violation("lr_law", (i + 1, j + 1), _flat(mix)))
    return CheckReport.from_violations(violations, q=str(q))


def regular_bimodule(A: StructureAlgebra) -> Bimodule:
    """The algebra acting on itself by its own multiplication operators."""
    from .algebra import mult_operators

    L, R = mult_operators(A)
    return Bimodule(A.dim, A.dim, L, R)


def dual_bimodule(A: StructureAlgebra, M: Bimodule) -> Bimodule:
    """Contragredient actions on V*: (q^{-2} r^T, q^2 l^T).

    Coordinates on V* are with respect to the dual basis, which is what
    makes the starred operators literal transposes.  Applying this twice
    returns the original bimodule exactly.
    """
    q2 = A.q * A.q
    dual_l = [m.transpose().scale(1 / q2) for m in M.r]
    dual_r = [m.transpose().scale(q2) for m in M.l]
    return Bimodule(M.algebra_dim, M.module_dim, dual_l, dual_r)


def semidirect_product(A: StructureAlgebra, M: Bimodule) -> StructureAlgebra:
    """Algebra on A + V with product (x+a)(y+b) = x*y + l(x)b + r(y)a."""
    if M.algebra_dim != A.dim:
        raise DimensionMismatch("bimodule is indexed by a different algebra dimension")
    from .linalg import Tensor3

    n, m = A.dim, M.module_dim
    d = n + m
    t = Tensor3.zeros(d, d, d)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t.entries[i][j][k] = A.c.entries[i][j][k]
    for i in range(n):
        for j in range(m):
            col = M.l[i].column(j)  # l(e_i) v_j
            for k in range(m):
                t.entries[i][n + j][n + k] = col[k]
            col = M.r[i].column(j)  # v_j * e_i = r(e_i) v_j
            for k in range(m):
                t.entries[n + j][i][n + k] = col[k]
    return StructureAlgebra(d, A.q, t)
