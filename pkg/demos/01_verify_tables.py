"""Check a handful of 2-dimensional multiplication tables at q = -1.

Each table is given sparsely: (i, j) -> {k: coefficient} means
e_i . e_j = sum_k coeff * e_k with 1-based indices.
"""

from antiassoc import (
    StructureAlgebra,
    anticommutator_algebra,
    check_mock_lie,
    check_q_associative,
    check_quartic_vanishing,
    fingerprint,
)
from antiassoc.classify2d import describe_residual

TABLES = {
    "zero": {},
    "e1.e1 = e2": {(1, 1): {2: 1}},
    "e2.e1 = e2": {(2, 1): {2: 1}},
    "e2.e2 = e1": {(2, 2): {1: 1}},
}

for name, products in TABLES.items():
    A = StructureAlgebra.from_products(2, -1, products)
    report = check_q_associative(A)
    print(f"{name:12s} antiassociative: {'yes' if report.passed else 'no'}")
    for v in report.violations:
        print(f"    triple {v.indices}: residual {describe_residual(v.residual)}")

# Everything that does pass also satisfies the consequences: fourth
# powers vanish and the anticommutator obeys the mock-Lie identity.
print()
for name, products in TABLES.items():
    A = StructureAlgebra.from_products(2, -1, products)
    if not check_q_associative(A).passed:
        continue
    quartic = check_quartic_vanishing(A).passed
    mock = check_mock_lie(anticommutator_algebra(A)).passed
    fp = fingerprint(A)
    print(
        f"{name:12s} quartic-zero: {quartic}  mock-Lie: {mock}  "
        f"dim A^2 = {fp.dim_square}"
    )
