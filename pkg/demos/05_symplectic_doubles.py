"""Symplectic doubles of dendriform halves, and the inverse direction.

A dendriform structure on A (here with the zero structure on the dual
half) produces an algebra on A + A* carrying the standard symplectic
form.  Going the other way, any symplectic antiassociative algebra
splits into prec/succ halves defined through the form, and for these
doubles that split recovers the input exactly.
"""

from fractions import Fraction

from antiassoc import (
    DendriformStructure,
    basis_product,
    build_symplectic_double,
    check_q_dendriform,
    dendriform_from_symplectic,
)
from antiassoc.io import double_basis_names, format_element

ZERO = DendriformStructure.zero(2, -1)


def half_for(lam: Fraction) -> DendriformStructure:
    return DendriformStructure.from_products(
        2,
        -1,
        prec={(1, 1): {2: lam}} if lam else {},
        succ={(1, 1): {2: 1 - lam}} if lam != 1 else {},
    )


names = double_basis_names(2)
for lam in (Fraction(0), Fraction(1, 2), Fraction(1)):
    double = build_symplectic_double(half_for(lam), ZERO)
    print(f"lambda = {lam}: all checks {'pass' if double.report.passed else 'FAIL'}")
    for i in range(4):
        for j in range(4):
            p = basis_product(double.total, i, j)
            if any(x != 0 for x in p):
                print(f"    {names[i]} * {names[j]} = {format_element(p, names)}")

# a second shape, with the nonzero products on the dual side
other = DendriformStructure.from_products(
    2, -1, prec={(2, 2): {1: -1}}, succ={(2, 2): {1: 1}}
)
double = build_symplectic_double(other, ZERO)
print(f"sign-split case: all checks {'pass' if double.report.passed else 'FAIL'}")
for i in range(4):
    for j in range(4):
        p = basis_product(double.total, i, j)
        if any(x != 0 for x in p):
            print(f"    {names[i]} * {names[j]} = {format_element(p, names)}")

# round trip through the form
D = dendriform_from_symplectic(double.total, double.form)
print("recovered split satisfies the axioms:", check_q_dendriform(D).passed)
print(
    "halves sum back to the double:",
    all(
        D.c_prec.entries[i][j][k] + D.c_succ.entries[i][j][k]
        == double.total.c.entries[i][j][k]
        for i in range(4)
        for j in range(4)
        for k in range(4)
    ),
)
