"""Double constructions on A + A*.

Both builders follow one policy: assemble first, verify afterwards, and
never refuse.  The attached report carries every failed condition, which
is what makes auditing published-but-inconsistent tables possible.  The
two criterion verifiers are deliberately separate code paths from the
generic matched-pair machinery; agreement of their verdicts with the
builders' is a theorem, and the test suite exploits that.

Conventions.  The double space is coordinatized A-block first.  Every
dual action is a transpose of a multiplication operator taken in the
dual basis: the quadratic builder uses (R_A^T, L_A^T) for A acting on
A* and (R_{A*}^T, L_{A*}^T) the other way; the symplectic builder uses
the prec-right and succ-left operators of the two dendriform halves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    CheckReport,
    StructureAlgebra,
    Violation,
    basis_product,
    check_q_associative,
    mult_operators,
    multiply,
)
from .bimodules import action_of
from .dendriform import (
    DendriformMatchedPairData,
    DendriformStructure,
    associated_algebra,
    check_q_dendriform,
    dendriform_mult_operators,
)
from .forms import (
    BilinearForm,
    check_invariant_symmetric,
    check_symplectic,
    natural_forms,
)
from .linalg import DimensionMismatch, basis_vec, vec_is_zero
from .matched import MatchedPairData, bowtie, check_matched_pair
from .operators import LinearMap


@dataclass
class DoubleConstruction:
    total: StructureAlgebra
    form: BilinearForm
    half_dim: int
    kind: str
    report: CheckReport


def _prefixed(tag: str, rep: CheckReport) -> list[Violation]:
    return [
        Violation(f"{tag}:{v.identity_id}", v.indices, v.residual)
        for v in rep.violations
    ]


def _closure_violations(total: StructureAlgebra, n: int) -> list[Violation]:
    """Each half must be closed under the total product."""
    d = total.dim
    out = []
    for i in range(n):
        for j in range(n):
            prod = basis_product(total, i, j)
            leak = [Fraction(0)] * n + prod[n:]
            if not vec_is_zero(leak):
                out.append(Violation("closure:A", (i + 1, j + 1), leak))
    for i in range(n, d):
        for j in range(n, d):
            prod = basis_product(total, i, j)
            leak = prod[:n] + [Fraction(0)] * n
            if not vec_is_zero(leak):
                out.append(Violation("closure:B", (i + 1, j + 1), leak))
    return out


def _require_antiassociative_parameter(*qs: Fraction) -> None:
    for q in qs:
        if q != -1:
            raise ValueError("double constructions are defined at q = -1")


def build_quadratic_double(
    A: StructureAlgebra, Astar: StructureAlgebra
) -> DoubleConstruction:
    """Bowtie of (A, A*) under the transposed regular actions, with the
    canonical symmetric pairing attached.  Audit mode: every failed
    condition lands in the report, nothing raises.
    """
    if A.dim != Astar.dim:
        raise DimensionMismatch("the two halves must have equal dimension")
    _require_antiassociative_parameter(A.q, Astar.q)
    n = A.dim
    LA, RA = mult_operators(A)
    LB, RB = mult_operators(Astar)
    P = MatchedPairData(
        A,
        Astar,
        lA=[m.transpose() for m in RA],
        rA=[m.transpose() for m in LA],
        lB=[m.transpose() for m in RB],
        rB=[m.transpose() for m in LB],
    )
    total = bowtie(P)
    form, _ = natural_forms(n)
    violations = (
        _prefixed("matched_pair", check_matched_pair(P))
        + _prefixed("total_q_assoc", check_q_associative(total))
        + _prefixed("form", check_invariant_symmetric(total, form))
        + _closure_violations(total, n)
    )
    report = CheckReport.from_violations(
        violations, kind="quadratic", half_dim=n, form_rank=form.rank()
    )
    return DoubleConstruction(total, form, n, "quadratic", report)


def check_dual_matched_pair_criterion(
    A: StructureAlgebra, Astar: StructureAlgebra
) -> CheckReport:
    """The two-equation criterion for the quadratic double, namely

        R^T(x)(a o b) + R^T(L_o^T(a) x) b + (R^T(x)a) o b = 0
        R^T(R_o^T(a)x)b + (L^T(x)a) o b + L^T(L_o^T(b)x)a + a o (R^T(x)b) = 0

    over all (x, a, b), with antiassociativity of both halves reported
    as preconditions.  The verdict provably coincides with the full
    six-equation matched-pair check on the quadratic-double data; the
    two are implemented independently so tests can confirm that.
    """
    if A.dim != Astar.dim:
        raise DimensionMismatch("the two halves must have equal dimension")
    _require_antiassociative_parameter(A.q, Astar.q)
    n = A.dim
    violations = []
    for tag, rep in (
        ("A", check_q_associative(A)),
        ("B", check_q_associative(Astar)),
    ):
        violations += _prefixed(f"precondition:q_assoc:{tag}", rep)

    LA, RA = mult_operators(A)
    LB, RB = mult_operators(Astar)
    RstarA = [m.transpose() for m in RA]
    LstarA = [m.transpose() for m in LA]
    RstarB = [m.transpose() for m in RB]
    LstarB = [m.transpose() for m in LB]
    e = [basis_vec(n, i) for i in range(n)]

    for ix in range(n):
        x = e[ix]
        for ia in range(n):
            a = e[ia]
            for ib in range(n):
                b = e[ib]
                idx = (ix + 1, ia + 1, ib + 1)
                ab = multiply(Astar, a, b)
                r1 = action_of(RstarA, x).apply(ab)
                t = action_of(RstarA, action_of(LstarB, a).apply(x)).apply(b)
                r1 = [u + v for u, v in zip(r1, t)]
                t = multiply(Astar, action_of(RstarA, x).apply(a), b)
                r1 = [u + v for u, v in zip(r1, t)]
                if not vec_is_zero(r1):
                    violations.append(Violation("dual1", idx, r1))

                r2 = action_of(RstarA, action_of(RstarB, a).apply(x)).apply(b)
                t = multiply(Astar, action_of(LstarA, x).apply(a), b)
                r2 = [u + v for u, v in zip(r2, t)]
                t = action_of(LstarA, action_of(LstarB, b).apply(x)).apply(a)
                r2 = [u + v for u, v in zip(r2, t)]
                t = multiply(Astar, a, action_of(RstarA, x).apply(b))
                r2 = [u + v for u, v in zip(r2, t)]
                if not vec_is_zero(r2):
                    violations.append(Violation("dual2", idx, r2))
    return CheckReport.from_violations(violations)


def build_symplectic_double(
    D_A: DendriformStructure, D_Astar: DendriformStructure
) -> DoubleConstruction:
    """Bowtie of the associated algebras under the dendriform-transpose
    actions (prec-right and succ-left), with the canonical symplectic
    form attached.  Audit mode, like the quadratic builder.
    """
    if D_A.dim != D_Astar.dim:
        raise DimensionMismatch("the two halves must have equal dimension")
    _require_antiassociative_parameter(D_A.q, D_Astar.q)
    n = D_A.dim
    A = associated_algebra(D_A)
    B = associated_algebra(D_Astar)
    ls_a, rs_a, lp_a, rp_a = dendriform_mult_operators(D_A)
    ls_b, rs_b, lp_b, rp_b = dendriform_mult_operators(D_Astar)
    P = MatchedPairData(
        A,
        B,
        lA=[m.transpose() for m in rp_a],
        rA=[m.transpose() for m in ls_a],
        lB=[m.transpose() for m in rp_b],
        rB=[m.transpose() for m in ls_b],
    )
    total = bowtie(P)
    _, form = natural_forms(n)
    violations = (
        _prefixed("matched_pair", check_matched_pair(P))
        + _prefixed("total_q_assoc", check_q_associative(total))
        + _prefixed("form", check_symplectic(total, form))
        + _closure_violations(total, n)
    )
    report = CheckReport.from_violations(
        violations, kind="symplectic", half_dim=n, form_rank=form.rank()
    )
    return DoubleConstruction(total, form, n, "symplectic", report)


def check_symplectic_criterion(
    D_A: DendriformStructure, D_Astar: DendriformStructure
) -> CheckReport:
    """The six-equation criterion behind the symplectic double, written
    directly in terms of the two dendriform halves (ids eq1..eq6), with
    both q-dendriform checks reported as preconditions.  Independent of
    the builder's generic matched-pair path; the verdicts must agree.

    Equations eq1, eq2, eq5 live in the dual half and are indexed
    (i_x, i_a, i_b); eq3, eq4, eq6 live in the primal half and are
    indexed (i_a, i_x, i_y).
    """
    if D_A.dim != D_Astar.dim:
        raise DimensionMismatch("the two halves must have equal dimension")
    _require_antiassociative_parameter(D_A.q, D_Astar.q)
    n = D_A.dim
    violations = []
    for tag, rep in (
        ("A", check_q_dendriform(D_A)),
        ("B", check_q_dendriform(D_Astar)),
    ):
        violations += _prefixed(f"precondition:dendriform:{tag}", rep)

    A = associated_algebra(D_A)
    B = associated_algebra(D_Astar)
    ls_a, _, _, rp_a = dendriform_mult_operators(D_A)
    ls_b, _, _, rp_b = dendriform_mult_operators(D_Astar)
    Ra = [m.transpose() for m in rp_a]  # R_prec_A^T  : A* -> A*
    La = [m.transpose() for m in ls_a]  # L_succ_A^T  : A* -> A*
    Rb = [m.transpose() for m in rp_b]  # R_prec_B^T  : A  -> A
    Lb = [m.transpose() for m in ls_b]  # L_succ_B^T  : A  -> A
    e = [basis_vec(n, i) for i in range(n)]

    def acc(*vecs):
        out = list(vecs[0])
        for v in vecs[1:]:
            out = [u + w for u, w in zip(out, v)]
        return out

    for i1 in range(n):
        for i2 in range(n):
            for i3 in range(n):
                x, a, b = e[i1], e[i2], e[i3]
                idx = (i1 + 1, i2 + 1, i3 + 1)
                ab = multiply(B, a, b)
                r = acc(
                    action_of(Ra, x).apply(ab),
                    action_of(Ra, action_of(Lb, a).apply(x)).apply(b),
                    multiply(B, action_of(Ra, x).apply(a), b),
                )
                if not vec_is_zero(r):
                    violations.append(Violation("eq1", idx, r))
                r = acc(
                    action_of(La, x).apply(ab),
                    action_of(La, action_of(Rb, b).apply(x)).apply(a),
                    multiply(B, a, action_of(La, x).apply(b)),
                )
                if not vec_is_zero(r):
                    violations.append(Violation("eq2", idx, r))
                r = acc(
                    action_of(Ra, action_of(Rb, a).apply(x)).apply(b),
                    multiply(B, action_of(La, x).apply(a), b),
                    action_of(La, action_of(Lb, b).apply(x)).apply(a),
                    multiply(B, a, action_of(Ra, x).apply(b)),
                )
                if not vec_is_zero(r):
                    violations.append(Violation("eq5", idx, r))

                # primal-half equations; rename the loop triple (a, x, y)
                a2, x2, y2 = e[i1], e[i2], e[i3]
                xy = multiply(A, x2, y2)
                r = acc(
                    action_of(Rb, a2).apply(xy),
                    action_of(Rb, action_of(La, x2).apply(a2)).apply(y2),
                    multiply(A, action_of(Rb, a2).apply(x2), y2),
                )
                if not vec_is_zero(r):
                    violations.append(Violation("eq3", idx, r))
                r = acc(
                    action_of(Lb, a2).apply(xy),
                    action_of(Lb, action_of(Ra, y2).apply(a2)).apply(x2),
                    multiply(A, x2, action_of(Lb, a2).apply(y2)),
                )
                if not vec_is_zero(r):
                    violations.append(Violation("eq4", idx, r))
                r = acc(
                    action_of(Rb, action_of(Ra, x2).apply(a2)).apply(y2),
                    multiply(A, action_of(Lb, a2).apply(x2), y2),
                    action_of(Lb, action_of(La, y2).apply(a2)).apply(x2),
                    multiply(A, x2, action_of(Rb, a2).apply(y2)),
                )
                if not vec_is_zero(r):
                    violations.append(Violation("eq6", idx, r))
    return CheckReport.from_violations(violations)


def octuple_from_symplectic_pair(
    D_A: DendriformStructure, D_Astar: DendriformStructure
) -> DendriformMatchedPairData:
    """The eight dendriform actions extending the symplectic-double data:

        ( R_succ^T + R_prec^T,  -L_prec^T,  -R_succ^T,  L_succ^T + L_prec^T )

    on each side.  Summing the succ and prec slots collapses back to the
    four associative actions used by build_symplectic_double.
    """
    if D_A.dim != D_Astar.dim:
        raise DimensionMismatch("the two halves must have equal dimension")
    _require_antiassociative_parameter(D_A.q, D_Astar.q)

    def octuple_half(D: DendriformStructure):
        ls, rs, lp, rp = dendriform_mult_operators(D)
        l_succ = [a.transpose() + b.transpose() for a, b in zip(rs, rp)]
        r_succ = [m.transpose().scale(-1) for m in lp]
        l_prec = [m.transpose().scale(-1) for m in rs]
        r_prec = [a.transpose() + b.transpose() for a, b in zip(ls, lp)]
        return l_succ, r_succ, l_prec, r_prec

    la_s, ra_s, la_p, ra_p = octuple_half(D_A)
    lb_s, rb_s, lb_p, rb_p = octuple_half(D_Astar)
    return DendriformMatchedPairData(
        D_A, D_Astar, la_s, ra_s, la_p, ra_p, lb_s, rb_s, lb_p, rb_p
    )


def verify_double_isomorphism(
    T1: DoubleConstruction, T2: DoubleConstruction, phi: LinearMap
) -> CheckReport:
    """Candidate-isomorphism verification between two doubles.

    Checks, in order: phi invertible; multiplicative on all basis pairs;
    maps each half into the corresponding half; pulls the second form
    back to the first (phi^T gram2 phi = gram1).  No searching happens
    here; finding phi is someone else's job.
    """
    d = T1.total.dim
    if T2.total.dim != d or phi.src_dim != d or phi.dst_dim != d:
        raise DimensionMismatch("phi must be square of the common double dimension")
    n = T1.half_dim
    violations = []
    kernel = phi.m.kernel_basis()
    if kernel:
        violations.append(Violation("invertible", (), kernel[0]))
    cols = [phi.m.column(j) for j in range(d)]
    for i in range(d):
        for j in range(d):
            lhs = phi.m.apply(basis_product(T1.total, i, j))
            rhs = multiply(T2.total, cols[i], cols[j])
            res = [u - v for u, v in zip(lhs, rhs)]
            if not vec_is_zero(res):
                violations.append(Violation("multiplicative", (i + 1, j + 1), res))
    for j in range(n):
        leak = cols[j][n:]
        if not vec_is_zero(leak):
            violations.append(Violation("block_A", (j + 1,), leak))
    for j in range(n, d):
        leak = cols[j][:n]
        if not vec_is_zero(leak):
            violations.append(Violation("block_Astar", (j + 1,), leak))
    pulled = phi.m.transpose() * T2.form.gram * phi.m
    diff = pulled - T1.form.gram
    for i in range(d):
        for j in range(d):
            if diff.entries[i][j] != 0:
                violations.append(Violation("form", (i + 1, j + 1), [diff.entries[i][j]]))
    return CheckReport.from_violations(
        violations, kinds=[T1.kind, T2.kind], dim=d
    )
