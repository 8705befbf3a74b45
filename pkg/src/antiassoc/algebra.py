"""Structure-constant algebras and the q-associativity verifier.

An algebra is a dense tensor c together with the deformation parameter q:
``e_i * e_j = sum_k c[i][j][k] e_k`` and the law under test is

    (x * y) * z  =  q * x * (y * z)

with q = -1 the antiassociative case.  Storage is 0-indexed; every index
that reaches a report or an error message is 1-based (e1, e2, ...).

Left and right multiplication operators follow the column-vector convention:
``L[i][k][j] = c[i][j][k]`` so that multiply(A, e_i, v) == L[i].apply(v), and
``R[j][k][i] = c[i][j][k]`` so that multiply(A, v, e_j) == R[j].apply(v).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import (
    DimensionMismatch,
    Matrix,
    Scalar,
    Tensor3,
    basis_vec,
    rat,
    stack_rows,
    vec_is_zero,
    vec_sub,
    zero_vec,
)


@dataclass
class Violation:
    """One failed identity instance: which law, at which basis indices.

    ``residual`` is LHS minus RHS in coordinates, so a reader can see not
    just that a law failed but by how much and in which direction.
    """

    identity_id: str
    indices: tuple[int, ...]
    residual: list[Fraction]

    def as_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "indices": list(self.indices),
            "residual": [str(x) for x in self.residual],
        }


@dataclass
class CheckReport:
    passed: bool
    violations: list[Violation]
    info: dict = field(default_factory=dict)

    @classmethod
    def from_violations(cls, violations: list[Violation], **info) -> "CheckReport":
        return cls(passed=not violations, violations=violations, info=dict(info))

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [v.as_dict() for v in self.violations],
            "info": self.info,
        }


@dataclass
class Fingerprint:
    """Cheap isomorphism invariants used to separate non-isomorphic algebras."""

    dim: int
    dim_square: int
    dim_left_ann: int
    dim_right_ann: int
    commutative: bool

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "dim_square": self.dim_square,
            "dim_left_ann": self.dim_left_ann,
            "dim_right_ann": self.dim_right_ann,
            "commutative": self.commutative,
        }


class StructureAlgebra:
    """A finite-dimensional algebra over Q given by structure constants.

    The q-law is deliberately NOT enforced at construction time: auditing
    tables that fail it is a first-class use of this package, so validity
    is what check_q_associative decides, never an assumption.
    """

    __slots__ = ("dim", "q", "c")

    def __init__(self, dim: int, q: Scalar, c: Tensor3):
        q = rat(q)
        if q == 0:
            raise ValueError("q must be nonzero")
        if (c.d1, c.d2, c.d3) != (dim, dim, dim):
            raise DimensionMismatch(
                f"tensor {c.d1}x{c.d2}x{c.d3} does not match dim {dim}"
            )
        self.dim = dim
        self.q = q
        self.c = c

    @classmethod
    def zero(cls, dim: int, q: Scalar = -1) -> "StructureAlgebra":
        return cls(dim, q, Tensor3.zeros(dim, dim, dim))

    @classmethod
    def from_products(
        cls,
        dim: int,
        q: Scalar,
        products: dict[tuple[int, int], dict[int, Scalar]],
    ) -> "StructureAlgebra":
        """Build from a sparse 1-indexed table, e.g. {(1, 1): {2: 1}}."""
        t = Tensor3.zeros(dim, dim, dim)
        for (i, j), out in products.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise DimensionMismatch(f"product index ({i},{j}) out of range")
            for k, v in out.items():
                if not (1 <= k <= dim):
                    raise DimensionMismatch(f"output index {k} out of range")
                t.entries[i - 1][j - 1][k - 1] = rat(v)
        return cls(dim, q, t)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StructureAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.q == other.q and self.c == other.c

    def __repr__(self) -> str:
        return f"StructureAlgebra(dim={self.dim}, q={self.q})"


def multiply(
    A: StructureAlgebra, x: Sequence[Fraction], y: Sequence[Fraction]
) -> list[Fraction]:
    """Bilinear product: returns sum_{i,j,k} x_i y_j c[i][j][k] e_k."""
    if len(x) != A.dim or len(y) != A.dim:
        raise DimensionMismatch("operand length does not match algebra dimension")
    out = zero_vec(A.dim)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        plane = A.c.entries[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            f = xi * yj
            fiber = plane[j]
            for k in range(A.dim):
                if fiber[k] != 0:
                    out[k] += f * fiber[k]
    return out


def basis_product(A: StructureAlgebra, i: int, j: int) -> list[Fraction]:
    """e_{i+1} * e_{j+1} in coordinates (0-indexed arguments)."""
    return list(A.c.entries[i][j])


def mult_operators(A: StructureAlgebra) -> tuple[list[Matrix], list[Matrix]]:
    """Matrices of left and right multiplication by each basis vector."""
    n = A.dim
    L = [
        Matrix([[A.c.entries[i][j][k] for j in range(n)] for k in range(n)])
        for i in range(n)
    ]
    R = [
        Matrix([[A.c.entries[i][j][k] for i in range(n)] for k in range(n)])
        for j in range(n)
    ]
    return L, R


def check_q_associative(A: StructureAlgebra) -> CheckReport:
    """Test (e_i e_j) e_k - q * e_i (e_j e_k) = 0 on all basis triples."""
    n = A.dim
    violations = []
    for i in range(n):
        for j in range(n):
            ij = basis_product(A, i, j)
            for k in range(n):
                lhs = multiply(A, ij, basis_vec(n, k))
                jk = basis_product(A, j, k)
                rhs = [A.q * t for t in multiply(A, basis_vec(n, i), jk)]
                res = vec_sub(lhs, rhs)
                if not vec_is_zero(res):
                    violations.append(
                        Violation("q_assoc", (i + 1, j + 1, k + 1), res)
                    )
    return CheckReport.from_violations(
        violations, q=str(A.q), triples=n**3
    )


def anticommutator_algebra(A: StructureAlgebra) -> StructureAlgebra:
    """Symmetrized product a # b = (a*b + b*a)/2; output carries q = -1."""
    n = A.dim
    t = Tensor3.zeros(n, n, n)
    half = Fraction(1, 2)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t.entries[i][j][k] = half * (
                    A.c.entries[i][j][k] + A.c.entries[j][i][k]
                )
    # the q slot is meaningless for the symmetrized product; -1 by convention
    return StructureAlgebra(n, Fraction(-1), t)


def check_mock_lie(A: StructureAlgebra) -> CheckReport:
    """Commutativity plus the Jacobi identity, both on A's own product."""
    n = A.dim
    violations = []
    for i in range(n):
        for j in range(i + 1, n):
            res = vec_sub(basis_product(A, i, j), basis_product(A, j, i))
            if not vec_is_zero(res):
                violations.append(Violation("commutative", (i + 1, j + 1), res))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = multiply(A, basis_product(A, i, j), basis_vec(n, k))
                s = [
                    a + b
                    for a, b in zip(
                        s, multiply(A, basis_product(A, k, i), basis_vec(n, j))
                    )
                ]
                s = [
                    a + b
                    for a, b in zip(
                        s, multiply(A, basis_product(A, j, k), basis_vec(n, i))
                    )
                ]
                if not vec_is_zero(s):
                    violations.append(Violation("jacobi", (i + 1, j + 1, k + 1), s))
    return CheckReport.from_violations(violations)


def check_quartic_vanishing(A: StructureAlgebra) -> CheckReport:
    """All five parenthesizations of any four basis vectors must vanish.

    Indices in a violation are (p, i, j, k, l) where p numbers the
    parenthesization: 1 ((wx)y)z, 2 (w(xy))z, 3 (wx)(yz), 4 w((xy)z),
    5 w(x(yz)).
    """
    n = A.dim
    mul = lambda u, v: multiply(A, u, v)  # noqa: E731
    e = [basis_vec(n, i) for i in range(n)]
    violations = []
    for i in range(n):
        for j in range(n):
            ij = mul(e[i], e[j])
            for k in range(n):
                jk = mul(e[j], e[k])
                for l in range(n):
                    kl = mul(e[k], e[l])
                    prods = (
                        mul(mul(ij, e[k]), e[l]),
                        mul(mul(e[i], jk), e[l]),
                        mul(ij, kl),
                        mul(e[i], mul(jk, e[l])),
                        mul(e[i], mul(e[j], kl)),
                    )
                    for p, res in enumerate(prods, start=1):
                        if not vec_is_zero(res):
                            violations.append(
                                Violation(
                                    "quartic",
                                    (p, i + 1, j + 1, k + 1, l + 1),
                                    res,
                                )
                            )
    return CheckReport.from_violations(violations, quadruples=n**4)


def find_idempotents_grid(
    A: StructureAlgebra, grid: Sequence[Scalar]
) -> list[list[Fraction]]:
    """Nonzero x with grid-valued coordinates and x*x = x (brute force)."""
    if not grid:
        raise ValueError("grid must be nonempty")
    values = [rat(g) for g in grid]
    found = []
    for coords in itertools.product(values, repeat=A.dim):
        x = list(coords)
        if vec_is_zero(x):
            continue
        if multiply(A, x, x) == x:
            found.append(x)
    return found


def fingerprint(A: StructureAlgebra) -> Fingerprint:
    """Basis-change invariants: dim A^2, annihilator dimensions, symmetry."""
    n = A.dim
    if n == 0:
        return Fingerprint(0, 0, 0, 0, True)
    products = [basis_product(A, i, j) for i in range(n) for j in range(n)]
    dim_square = Matrix.from_columns(products).rank()
    L, R = mult_operators(A)
    # x is a left annihilator iff x*e_j = R[j] x = 0 for every j
    dim_left = n - stack_rows(R).rank()
    dim_right = n - stack_rows(L).rank()
    commutative = all(
        A.c.entries[i][j] == A.c.entries[j][i] for i in range(n) for j in range(i)
    )
    return Fingerprint(n, dim_square, dim_left, dim_right, commutative)
