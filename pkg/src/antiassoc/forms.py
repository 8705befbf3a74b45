"""Bilinear forms: invariant symmetric and symplectic verification.

A form is its Gram matrix with the orientation fixed once and for all:

    value(u, v) = u^T . gram . v

so gram[i][j] is the form evaluated at (e_{i+1}, e_{j+1}).  The natural
forms on a doubled space A + A* (coordinates: A-block first) are

    B: gram = [[0, I], [I, 0]]      symmetric pairing
    w: gram = [[0, -I], [I, 0]]     so w(e_1, e_1*) = -1, w(e_1*, e_1) = +1
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import CheckReport, StructureAlgebra, Violation, basis_product
from .linalg import DimensionMismatch, Matrix, basis_vec, dot

KINDS = ("symmetric", "antisymmetric", "general")


@dataclass
class BilinearForm:
    dim: int
    gram: Matrix
    kind: str = "general"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown form kind {self.kind!r}")
        if self.gram.rows != self.dim or self.gram.cols != self.dim:
            raise DimensionMismatch(
                f"gram is {self.gram.rows}x{self.gram.cols}, dim is {self.dim}"
            )
        if self.kind == "symmetric" and self.gram != self.gram.transpose():
            raise ValueError("kind is symmetric but the gram matrix is not")
        if self.kind == "antisymmetric":
            if self.gram != self.gram.transpose().scale(-1):
                raise ValueError("kind is antisymmetric but the gram matrix is not")

    def value(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return dot(u, self.gram.apply(v))

    def rank(self) -> int:
        return self.gram.rank()

    def nondegenerate(self) -> bool:
        return self.rank() == self.dim


def check_invariant_symmetric(A: StructureAlgebra, B: BilinearForm) -> CheckReport:
    """Symmetry plus B(x*y, z) = B(x, y*z) on all basis triples.

    Nondegeneracy is not a pass/fail condition here; the rank is reported
    in info because audits feed degenerate candidates on purpose.
    """
    if B.dim != A.dim:
        raise DimensionMismatch("form and algebra dimensions differ")
    n = A.dim
    violations = []
    for i in range(n):
        for j in range(i + 1, n):
            d = B.gram.entries[i][j] - B.gram.entries[j][i]
            if d != 0:
                violations.append(Violation("symmetric", (i + 1, j + 1), [d]))
    for i in range(n):
        for j in range(n):
            ij = basis_product(A, i, j)
            for k in range(n):
                jk = basis_product(A, j, k)
                d = B.value(ij, basis_vec(n, k)) - B.value(basis_vec(n, i), jk)
                if d != 0:
                    violations.append(Violation("invariance", (i + 1, j + 1, k + 1), [d]))
    rank = B.rank()
    return CheckReport.from_violations(
        violations, rank=rank, nondegenerate=rank == n
    )


def check_symplectic(A: StructureAlgebra, w: BilinearForm) -> CheckReport:
    """Antisymmetry, the cyclic invariance condition

        w(x*y, z) + w(y*z, x) + w(z*x, y) = 0

    on all basis triples, and nondegeneracy (a degenerate form is a
    violation here, with a kernel vector as the residual).
    """
    if w.dim != A.dim:
        raise DimensionMismatch("form and algebra dimensions differ")
    n = A.dim
    violations = []
    for i in range(n):
        for j in range(i, n):
            d = w.gram.entries[i][j] + w.gram.entries[j][i]
            if d != 0:
                violations.append(Violation("antisymmetric", (i + 1, j + 1), [d]))
    e = [basis_vec(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            ij = basis_product(A, i, j)
            for k in range(n):
                s = (
                    w.value(ij, e[k])
                    + w.value(basis_product(A, j, k), e[i])
                    + w.value(basis_product(A, k, i), e[j])
                )
                if s != 0:
                    violations.append(Violation("cyclic", (i + 1, j + 1, k + 1), [s]))
    kernel = w.gram.kernel_basis()
    if kernel:
        violations.append(Violation("nondegenerate", (), kernel[0]))
    return CheckReport.from_violations(violations, rank=n - len(kernel))


def natural_forms(n: int) -> tuple[BilinearForm, BilinearForm]:
    """The canonical pairing forms on a 2n-dimensional doubled space."""
    if n < 1:
        raise ValueError("n must be at least 1")
    d = 2 * n
    bg = Matrix.zeros(d, d)
    wg = Matrix.zeros(d, d)
    one = Fraction(1)
    for i in range(n):
        bg.entries[i][n + i] = one
        bg.entries[n + i][i] = one
        wg.entries[i][n + i] = -one
        wg.entries[n + i][i] = one
    return (
        BilinearForm(d, bg, "symmetric"),
        BilinearForm(d, wg, "antisymmetric"),
    )
