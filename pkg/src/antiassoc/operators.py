"""O-operators, Rota-Baxter operators, and the induced dendriform splits.

Three construction routes produce a dendriform structure out of
associative data:

  * an O-operator T: V -> A relative to a bimodule (l, r) splits the
    module product as u succ v = l(Tu)v, u prec v = r(Tv)u;
  * an invertible O-operator transports that split onto A itself, where
    it is compatible (prec + succ = the original product, exactly);
  * a nondegenerate symplectic form on A is an invertible O-operator in
    disguise, via the musical map (Tx)_i = w(x, e_i).

Constructions refuse invalid input (NotAnOOperator / NotSymplectic)
instead of emitting structures the theorems say nothing about.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    CheckReport,
    StructureAlgebra,
    Violation,
    mult_operators,
    multiply,
)
from .bimodules import Bimodule, action_of
from .dendriform import DendriformStructure
from .forms import BilinearForm, check_symplectic
from .linalg import (
    DimensionMismatch,
    Matrix,
    Tensor3,
    basis_vec,
    vec_add,
    vec_is_zero,
    vec_sub,
)


class NotAnOOperator(ValueError):
    """The map fails the O-operator identity; the report is attached."""

    def __init__(self, report: CheckReport):
        super().__init__("the given map is not an O-operator for this bimodule")
        self.report = report


class NotSymplectic(ValueError):
    """The form fails the symplectic check; the report is attached."""

    def __init__(self, report: CheckReport):
        super().__init__("the given form is not symplectic for this algebra")
        self.report = report


@dataclass
class LinearMap:
    src_dim: int
    dst_dim: int
    m: Matrix

    def __post_init__(self):
        if self.m.rows != self.dst_dim or self.m.cols != self.src_dim:
            raise DimensionMismatch(
                f"matrix {self.m.rows}x{self.m.cols} does not map "
                f"dim {self.src_dim} to dim {self.dst_dim}"
            )

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, Matrix.identity(n))

    def __call__(self, v):
        return self.m.apply(v)


def check_o_operator(A: StructureAlgebra, M: Bimodule, T: LinearMap) -> CheckReport:
    """T(u).T(v) = T( l(Tu)v + r(Tv)u ) on all module basis pairs."""
    if M.algebra_dim != A.dim:
        raise DimensionMismatch("bimodule belongs to a different algebra dimension")
    if T.src_dim != M.module_dim or T.dst_dim != A.dim:
        raise DimensionMismatch("T must map the module space into the algebra")
    m = M.module_dim
    violations = []
    for i in range(m):
        u = basis_vec(m, i)
        Tu = T(u)
        for j in range(m):
            v = basis_vec(m, j)
            Tv = T(v)
            inner = vec_add(action_of(M.l, Tu).apply(v), action_of(M.r, Tv).apply(u))
            res = vec_sub(multiply(A, Tu, Tv), T(inner))
            if not vec_is_zero(res):
                violations.append(Violation("o_operator", (i + 1, j + 1), res))
    return CheckReport.from_violations(violations, q=str(A.q))


def check_rota_baxter(A: StructureAlgebra, tau: LinearMap) -> CheckReport:
    """Weight-zero identity tau(x).tau(y) = tau(tau(x).y + x.tau(y))."""
    if tau.src_dim != A.dim or tau.dst_dim != A.dim:
        raise DimensionMismatch("tau must be a square map on the algebra")
    n = A.dim
    violations = []
    for i in range(n):
        x = basis_vec(n, i)
        tx = tau(x)
        for j in range(n):
            y = basis_vec(n, j)
            ty = tau(y)
            inner = vec_add(multiply(A, tx, y), multiply(A, x, ty))
            res = vec_sub(multiply(A, tx, ty), tau(inner))
            if not vec_is_zero(res):
                violations.append(Violation("rota_baxter", (i + 1, j + 1), res))
    return CheckReport.from_violations(violations, q=str(A.q))


def induced_dendriform_on_module(
    A: StructureAlgebra, M: Bimodule, T: LinearMap, force: bool = False
) -> DendriformStructure:
    """Split the module: u succ v = l(Tu)v, u prec v = r(Tv)u.

    Refuses with NotAnOOperator when the identity fails (force=True
    assembles anyway, for audit runs).  The returned structure lives on
    V with q = -1 (the construction is the antiassociative-case
    theorem).  T is then a homomorphism from the associated product on
    V to A's product; that identity is re-checked here because it is
    cheap insurance against convention drift.
    """
    report = check_o_operator(A, M, T)
    if not report.passed and not force:
        raise NotAnOOperator(report)
    m = M.module_dim
    succ = Tensor3.zeros(m, m, m)
    prec = Tensor3.zeros(m, m, m)
    for i in range(m):
        u = basis_vec(m, i)
        Tu = T(u)
        for j in range(m):
            v = basis_vec(m, j)
            sv = action_of(M.l, Tu).apply(v)
            pv = action_of(M.r, T(v)).apply(u)
            for k in range(m):
                succ.entries[i][j][k] = sv[k]
                prec.entries[i][j][k] = pv[k]
            hom = vec_sub(
                multiply(A, Tu, T(v)), T(vec_add(sv, pv))
            )
            assert force or vec_is_zero(hom), "O-operator identity should force this"
    return DendriformStructure(m, Fraction(-1), prec, succ)


def compatible_dendriform_from_o_operator(
    A: StructureAlgebra, M: Bimodule, T: LinearMap, force: bool = False
) -> DendriformStructure:
    """Invertible-T transport onto A: x succ y = T(l(x) T^{-1}y), and
    x prec y = T(r(y) T^{-1}x).  The associated algebra is A itself.
    """
    report = check_o_operator(A, M, T)
    if not report.passed and not force:
        raise NotAnOOperator(report)
    Tinv = T.m.invert()
    n = A.dim
    succ = Tensor3.zeros(n, n, n)
    prec = Tensor3.zeros(n, n, n)
    for i in range(n):
        x = basis_vec(n, i)
        for j in range(n):
            y = basis_vec(n, j)
            sv = T.m.apply(action_of(M.l, x).apply(Tinv.apply(y)))
            pv = T.m.apply(action_of(M.r, y).apply(Tinv.apply(x)))
            for k in range(n):
                succ.entries[i][j][k] = sv[k]
                prec.entries[i][j][k] = pv[k]
    return DendriformStructure(n, A.q, prec, succ)


def dendriform_from_symplectic(
    A: StructureAlgebra, w: BilinearForm, force: bool = False
) -> DendriformStructure:
    """Split A through a symplectic form:

        x succ y = T^{-1}( R(x)^T T y ),   x prec y = T^{-1}( L(y)^T T x )

    with (Tx)_i = w(x, e_i), i.e. T = gram^T.  T^{-1} is an O-operator
    for the dual regular bimodule, which is where the split comes from.
    A degenerate gram raises SingularError before any other check
    (force cannot help there: the construction needs T^{-1}).
    """
    if w.dim != A.dim:
        raise DimensionMismatch("form and algebra dimensions differ")
    T = w.gram.transpose()
    Tinv = T.invert()  # SingularError on degenerate forms
    report = check_symplectic(A, w)
    if not report.passed and not force:
        raise NotSymplectic(report)
    L, R = mult_operators(A)
    n = A.dim
    succ = Tensor3.zeros(n, n, n)
    prec = Tensor3.zeros(n, n, n)
    for i in range(n):
        for j in range(n):
            Ty = T.apply(basis_vec(n, j))
            sv = Tinv.apply(R[i].transpose().apply(Ty))
            Tx = T.apply(basis_vec(n, i))
            pv = Tinv.apply(L[j].transpose().apply(Tx))
            for k in range(n):
                succ.entries[i][j][k] = sv[k]
                prec.entries[i][j][k] = pv[k]
    return DendriformStructure(n, A.q, prec, succ)
