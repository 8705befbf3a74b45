from fractions import Fraction

import pytest

from antiassoc import (
    BilinearForm,
    LinearMap,
    NotAnOOperator,
    NotSymplectic,
    StructureAlgebra,
    associated_algebra,
    check_o_operator,
    check_q_dendriform,
    check_rota_baxter,
    compatible_dendriform_from_o_operator,
    dendriform_from_symplectic,
    induced_dendriform_on_module,
    multiply,
    regular_bimodule,
)
from antiassoc.linalg import DimensionMismatch, Matrix, SingularError, basis_vec

E1E1 = StructureAlgebra.from_products(2, -1, {(1, 1): {2: 1}})
TAU = LinearMap(2, 2, Matrix([["1", "0"], ["0", "1/2"]]))


def test_linear_map_shapes():
    with pytest.raises(DimensionMismatch):
        LinearMap(2, 3, Matrix.identity(2))
    f = LinearMap.identity(3)
    v = [Fraction(1), Fraction(2), Fraction(3)]
    assert f(v) == v


def test_diagonal_rota_baxter_operator():
    assert check_rota_baxter(E1E1, TAU).passed


def test_identity_is_not_rota_baxter_here():
    rep = check_rota_baxter(E1E1, LinearMap.identity(2))
    assert not rep.passed
    v = rep.violations[0]
    assert v.identity_id == "rota_baxter"
    assert v.indices == (1, 1)
    assert v.residual == [Fraction(0), Fraction(-1)]


def test_rota_baxter_matches_o_operator_on_regular_bimodule():
    reg = regular_bimodule(E1E1)
    for tau in (TAU, LinearMap.identity(2), LinearMap(2, 2, Matrix.zeros(2, 2))):
        assert (
            check_o_operator(E1E1, reg, tau).passed
            == check_rota_baxter(E1E1, tau).passed
        )


def test_induced_structure_on_module():
    reg = regular_bimodule(E1E1)
    D = induced_dendriform_on_module(E1E1, reg, TAU)
    assert D.q == Fraction(-1)
    assert check_q_dendriform(D).passed
    e1 = basis_vec(2, 0)
    assert D.succ(e1, e1) == [Fraction(0), Fraction(1)]
    assert D.prec(e1, e1) == [Fraction(0), Fraction(1)]
    assert D.star(e1, e1) == [Fraction(0), Fraction(2)]


def test_operator_is_homomorphism_from_induced_product():
    reg = regular_bimodule(E1E1)
    D = induced_dendriform_on_module(E1E1, reg, TAU)
    for i in range(2):
        for j in range(2):
            u, v = basis_vec(2, i), basis_vec(2, j)
            assert multiply(E1E1, TAU(u), TAU(v)) == TAU(D.star(u, v))


def test_refusal_carries_the_report():
    reg = regular_bimodule(E1E1)
    bad = LinearMap.identity(2)
    with pytest.raises(NotAnOOperator) as exc:
        induced_dendriform_on_module(E1E1, reg, bad)
    assert not exc.value.report.passed
    assert exc.value.report.violations[0].identity_id == "o_operator"
    forced = induced_dendriform_on_module(E1E1, reg, bad, force=True)
    assert forced.dim == 2


def test_compatible_transport_recovers_the_algebra():
    reg = regular_bimodule(E1E1)
    D = compatible_dendriform_from_o_operator(E1E1, reg, TAU)
    assert check_q_dendriform(D).passed
    assert associated_algebra(D).c == E1E1.c


def test_compatible_transport_needs_invertible_map():
    reg = regular_bimodule(E1E1)
    zero = LinearMap(2, 2, Matrix.zeros(2, 2))
    assert check_o_operator(E1E1, reg, zero).passed
    with pytest.raises(SingularError):
        compatible_dendriform_from_o_operator(E1E1, reg, zero)


def test_symplectic_split_on_a_double():
    from .support import case3_dendriform
    from antiassoc import DendriformStructure, build_symplectic_double

    double = build_symplectic_double(
        case3_dendriform(Fraction(1, 2)), DendriformStructure.zero(2, -1)
    )
    w = double.form
    D = dendriform_from_symplectic(double.total, w)
    assert check_q_dendriform(D).passed
    total = double.total
    n = total.dim
    e = [basis_vec(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            s = D.succ(e[i], e[j])
            p = D.prec(e[i], e[j])
            for k in range(n):
                assert w.value(s, e[k]) == w.value(e[j], multiply(total, e[k], e[i]))
                assert w.value(p, e[k]) == w.value(e[i], multiply(total, e[j], e[k]))
    summed = [
        [
            [
                D.c_prec.entries[i][j][k] + D.c_succ.entries[i][j][k]
                for k in range(n)
            ]
            for j in range(n)
        ]
        for i in range(n)
    ]
    assert summed == total.c.entries


def test_degenerate_form_is_singular_even_with_force():
    A = StructureAlgebra.zero(2, -1)
    w = BilinearForm(2, Matrix.zeros(2, 2), "antisymmetric")
    with pytest.raises(SingularError):
        dendriform_from_symplectic(A, w, force=True)


def test_noncyclic_form_is_refused():
    w = BilinearForm(2, Matrix([["0", "1"], ["-1", "0"]]), "antisymmetric")
    with pytest.raises(NotSymplectic) as exc:
        dendriform_from_symplectic(E1E1, w)
    ids = {v.identity_id for v in exc.value.report.violations}
    assert "cyclic" in ids
    forced = dendriform_from_symplectic(E1E1, w, force=True)
    assert forced.dim == 2
