"""Command-line interface.

Exit codes: 0 when every check in the run passed, 1 when a verification
failed (reports are still emitted), 2 for malformed input (bad JSON,
bad shapes, bad flags).
"""

from __future__ import annotations

import argparse
import os
import pathlib
import re
import sys
from fractions import Fraction
from importlib import resources

from . import io as aio
from .algebra import (
    StructureAlgebra,
    anticommutator_algebra,
    basis_product,
    check_mock_lie,
    check_q_associative,
    fingerprint,
    multiply,
)
from .bimodules import check_bimodule, dual_bimodule, semidirect_product
from .classify2d import (
    AUDIT_GRID,
    describe_products,
    enumerate_2d_antiassociative,
    partition_into_classes,
    verify_paper_classification,
)
from .dendriform import DendriformStructure, associated_algebra, check_q_dendriform
from .doubles import build_quadratic_double, build_symplectic_double
from .forms import check_invariant_symmetric, check_symplectic
from .linalg import DimensionMismatch, SingularError
from .matched import bowtie, check_matched_pair
from .operators import (
    NotAnOOperator,
    NotSymplectic,
    check_o_operator,
    check_rota_baxter,
    compatible_dendriform_from_o_operator,
    dendriform_from_symplectic,
)

_RATIONAL_TOKEN = re.compile(r"-?\d+(?:/\d+)?")


def _rational_arg(text: str) -> Fraction:
    if not _RATIONAL_TOKEN.fullmatch(text):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")
    if "/" in text and int(text.split("/", 1)[1]) == 0:
        raise argparse.ArgumentTypeError(f"zero denominator: {text!r}")
    return Fraction(text)


def _grid_arg(text: str) -> list[Fraction]:
    return [_rational_arg(tok.strip()) for tok in text.split(",") if tok.strip()]


def _merge_value_flags(argv: list[str]) -> list[str]:
    """Turn ['--q', '-1'] into ['--q=-1'] so negative values survive."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] in ("--q", "--grid") and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def _fmt_residual(residual, names=None) -> str:
    if names is not None and len(residual) == len(names):
        return aio.format_element(residual, names)
    if len(residual) <= 8:
        return aio.format_element(residual)
    return "[" + ", ".join(str(x) for x in residual) + "]"


def _print_report(title: str, rep, names=None, total=None, unit="identities") -> None:
    verdict = "pass" if rep.passed else "FAIL"
    if total is not None:
        good = total - len({(v.identity_id, v.indices) for v in rep.violations})
        print(f"{title}: {verdict} ({good}/{total} {unit})")
    else:
        print(f"{title}: {verdict}")
    ids = {v.identity_id for v in rep.violations}
    for v in rep.violations:
        where = f"violation {v.identity_id} at" if len(ids) > 1 else "violation at"
        print(f"{where} {v.indices}: residual {_fmt_residual(v.residual, names)}")


def _verify_json(command: str, path: str, rep, extra: dict | None = None) -> None:
    doc = {"command": command, "input": path, "passed": rep.passed, "report": rep.as_dict()}
    if extra:
        doc.update(extra)
    sys.stdout.write(aio.dump_json(doc))


def _emit_doc(doc: dict, ns) -> None:
    text = aio.dump_json(doc)
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {ns.out}")
    else:
        sys.stdout.write(text)


def _override_q(A: StructureAlgebra, q) -> StructureAlgebra:
    return A if q is None else StructureAlgebra(A.dim, q, A.c)


# ---------------------------------------------------------------------------
# verify

def cmd_verify_algebra(ns) -> int:
    A = _override_q(aio.load_algebra(ns.file), ns.q)
    rep = check_q_associative(A)
    if ns.json:
        _verify_json("verify-algebra", ns.file, rep,
                     {"fingerprint": fingerprint(A).as_dict()})
    else:
        total = A.dim ** 3
        _print_report("q-associative", rep, aio.basis_names(A.dim), total, "triples")
    return 0 if rep.passed else 1


def cmd_verify_bimodule(ns) -> int:
    A, M = aio.load_bimodule(ns.file)
    A = _override_q(A, ns.q)
    rep = check_bimodule(A, M)
    if ns.json:
        _verify_json("verify-bimodule", ns.file, rep)
    else:
        _print_report("bimodule laws", rep, None, 3 * A.dim * A.dim, "pairs")
    return 0 if rep.passed else 1


def cmd_verify_matched_pair(ns) -> int:
    data = aio.load_matched_pair(ns.file)
    rep = check_matched_pair(data)
    if ns.json:
        _verify_json("verify-matched-pair", ns.file, rep)
    else:
        na, nb = data.A.dim, data.B.dim
        total = 3 * na * nb * nb + 3 * nb * na * na
        _print_report("matched pair", rep, None, None if not rep.passed else total)
    return 0 if rep.passed else 1


def cmd_verify_dendriform(ns) -> int:
    D = aio.load_dendriform(ns.file)
    if ns.q is not None:
        D = DendriformStructure(D.dim, ns.q, D.c_prec, D.c_succ)
    rep = check_q_dendriform(D)
    if ns.json:
        _verify_json("verify-dendriform", ns.file, rep)
    else:
        _print_report("q-dendriform", rep, aio.basis_names(D.dim), 3 * D.dim ** 3, "triples")
    return 0 if rep.passed else 1


def cmd_verify_form(ns) -> int:
    A, w = aio.load_form(ns.file)
    A = _override_q(A, ns.q)
    if w.kind == "symmetric":
        title, rep = "invariant symmetric form", check_invariant_symmetric(A, w)
    elif w.kind == "antisymmetric":
        title, rep = "symplectic form", check_symplectic(A, w)
    else:
        raise ValueError("form.kind must be symmetric or antisymmetric to verify")
    if ns.json:
        _verify_json("verify-form", ns.file, rep)
    else:
        _print_report(title, rep, aio.basis_names(A.dim))
        print(f"rank {rep.info['rank']}")
    return 0 if rep.passed else 1


def cmd_verify_o_operator(ns) -> int:
    A, M, T = aio.load_o_operator(ns.file)
    A = _override_q(A, ns.q)
    rep = check_o_operator(A, M, T)
    if ns.json:
        _verify_json("verify-o-operator", ns.file, rep)
    else:
        _print_report("o-operator", rep, aio.basis_names(A.dim),
                      M.module_dim ** 2, "pairs")
    return 0 if rep.passed else 1


def cmd_verify_rota_baxter(ns) -> int:
    A, tau = aio.load_rota_baxter(ns.file)
    A = _override_q(A, ns.q)
    rep = check_rota_baxter(A, tau)
    if ns.json:
        _verify_json("verify-rota-baxter", ns.file, rep)
    else:
        _print_report("rota-baxter", rep, aio.basis_names(A.dim), A.dim ** 2, "pairs")
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------
# build

def cmd_build_semidirect(ns) -> int:
    A, M = aio.load_bimodule(ns.file)
    S = semidirect_product(A, M)
    rep = check_q_associative(S)
    _emit_doc({"algebra": aio.algebra_to_doc(S), "report": rep.as_dict()}, ns)
    return 0 if rep.passed else 1


def cmd_build_bowtie(ns) -> int:
    data = aio.load_matched_pair(ns.file)
    total = bowtie(data)
    rep = check_q_associative(total)
    _emit_doc({"algebra": aio.algebra_to_doc(total), "report": rep.as_dict()}, ns)
    return 0 if rep.passed else 1


def cmd_build_dual_bimodule(ns) -> int:
    A, M = aio.load_bimodule(ns.file)
    D = dual_bimodule(A, M)
    rep = check_bimodule(A, D)
    _emit_doc({"bimodule": aio.bimodule_to_doc(A, D), "report": rep.as_dict()}, ns)
    return 0 if rep.passed else 1


def cmd_build_anticommutator(ns) -> int:
    A = aio.load_algebra(ns.file)
    out = anticommutator_algebra(A)
    rep = check_mock_lie(out)
    _emit_doc({"algebra": aio.algebra_to_doc(out), "report": rep.as_dict()}, ns)
    return 0 if rep.passed else 1


def cmd_build_associated(ns) -> int:
    D = aio.load_dendriform(ns.file)
    out = associated_algebra(D)
    rep = check_q_associative(out)
    _emit_doc({"algebra": aio.algebra_to_doc(out), "report": rep.as_dict()}, ns)
    return 0 if rep.passed else 1


def cmd_build_double_quadratic(ns) -> int:
    A = aio.load_algebra(ns.a)
    Astar = aio.load_algebra(ns.astar)
    d = build_quadratic_double(A, Astar)
    _emit_doc(aio.double_to_doc(d), ns)
    return 0 if d.report.passed else 1


def cmd_build_double_symplectic(ns) -> int:
    DA = aio.load_dendriform(ns.a)
    DAstar = aio.load_dendriform(ns.astar)
    d = build_symplectic_double(DA, DAstar)
    _emit_doc(aio.double_to_doc(d), ns)
    return 0 if d.report.passed else 1


def cmd_build_dendriform_from_omega(ns) -> int:
    A, w = aio.load_form(ns.file)
    rep_pre = check_symplectic(A, w)
    if not rep_pre.passed and not ns.force:
        _print_report("symplectic form", rep_pre, aio.basis_names(A.dim))
        return 1
    D = dendriform_from_symplectic(A, w, force=True)
    rep_out = check_q_dendriform(D)
    _emit_doc(
        {
            "dendriform": aio.dendriform_to_doc(D),
            "precondition": rep_pre.as_dict(),
            "report": rep_out.as_dict(),
        },
        ns,
    )
    return 0 if rep_pre.passed and rep_out.passed else 1


def cmd_build_dendriform_from_o_operator(ns) -> int:
    A, M, T = aio.load_o_operator(ns.file)
    rep_pre = check_o_operator(A, M, T)
    if not rep_pre.passed and not ns.force:
        _print_report("o-operator", rep_pre, aio.basis_names(A.dim))
        return 1
    D = compatible_dendriform_from_o_operator(A, M, T, force=True)
    rep_out = check_q_dendriform(D)
    _emit_doc(
        {
            "dendriform": aio.dendriform_to_doc(D),
            "precondition": rep_pre.as_dict(),
            "report": rep_out.as_dict(),
        },
        ns,
    )
    return 0 if rep_pre.passed and rep_out.passed else 1


# ---------------------------------------------------------------------------
# classify

def cmd_classify_dim2(ns) -> int:
    grid = ns.grid if ns.grid else [Fraction(-1), Fraction(0), Fraction(1)]
    solutions = enumerate_2d_antiassociative(grid)
    classes = partition_into_classes(solutions, AUDIT_GRID)
    audit = verify_paper_classification()
    if ns.json:
        doc = {
            "grid": [str(g) for g in sorted(set(grid))],
            "solutions": [
                {
                    "index": k + 1,
                    "products": describe_products(s),
                    "fingerprint": fingerprint(s).as_dict(),
                }
                for k, s in enumerate(solutions)
            ],
            "classes": [
                {
                    "members": [k + 1 for k in cls],
                    "representative": describe_products(solutions[cls[0]]),
                }
                for cls in classes
            ],
            "audit": audit,
        }
        sys.stdout.write(aio.dump_json(doc))
        return 0
    gtxt = ",".join(str(g) for g in sorted(set(grid)))
    print(f"{len(solutions)} antiassociative tables over grid {{{gtxt}}}")
    for k, s in enumerate(solutions):
        print(f"  [{k + 1}] {describe_products(s)}")
    print(f"{len(classes)} isomorphism classes")
    for num, cls in enumerate(classes, start=1):
        members = ", ".join(str(k + 1) for k in cls)
        print(f"  class {num}: [{members}]  rep: {describe_products(solutions[cls[0]])}")
    print("audit of the published table:")
    for entry in audit["tables"]:
        verdict = "pass" if entry["passed"] else "FAIL"
        print(f"  {entry['label']}: antiassociative {verdict}")
        for v in entry["violations"]:
            res = [Fraction(x) for x in v["residual"]]
            print(f"    violation at {tuple(v['indices'])}: "
                  f"residual {aio.format_element(res)}")
    for pair in audit["pairwise"]:
        print(f"  {pair['first']} vs {pair['second']}: {pair['status']} ({pair['detail']})")
    for line in audit["discrepancies"]:
        print(f"  note: {line}")
    return 0


# ---------------------------------------------------------------------------
# paper fixtures

_CONDITION_NAMES = {
    "matched_pair:": "matched-pair",
    "total_q_assoc:": "q-associative",
    "form:": "form",
    "closure:": "closure",
}


def _fixture_dir():
    env = os.environ.get("ANTIASSOC_FIXTURES")
    if env:
        return pathlib.Path(env)
    return resources.files("antiassoc") / "fixtures"


def _basis_pair(line) -> tuple[int, int] | None:
    """(i, j) when left and right are plain basis vectors, else None."""

    def index_of(v) -> int | None:
        hits = [k for k, x in enumerate(v) if x != 0]
        if len(hits) == 1 and v[hits[0]] == 1:
            return hits[0]
        return None

    i, j = index_of(line["left"]), index_of(line["right"])
    if i is None or j is None:
        return None
    return i, j


def paper_fixtures() -> dict:
    """Run every bundled fixture through its double builder and diff the
    assembled products against the published lines."""
    base = _fixture_dir()
    names = sorted(p.name for p in base.iterdir() if p.name.endswith(".json"))
    cases = []
    all_passed = True
    for name in names:
        fx = aio.load_fixture(str(base / name))
        if fx.kind == "quadratic":
            d = build_quadratic_double(fx.A, fx.Astar)
        else:
            d = build_symplectic_double(fx.DA, fx.DAstar)
        labels = aio.double_basis_names(fx.half_dim)
        conditions = []
        for prefix, cname in _CONDITION_NAMES.items():
            ok = not any(v.identity_id.startswith(prefix) for v in d.report.violations)
            conditions.append({"name": cname, "passed": ok})
        table = []
        listed_pairs = set()
        for line in fx.displayed:
            recomputed = multiply(d.total, line["left"], line["right"])
            match = recomputed == line["result"]
            pair = _basis_pair(line)
            if pair is not None:
                listed_pairs.add(pair)
            table.append(
                {
                    "left": aio.format_element(line["left"], labels),
                    "right": aio.format_element(line["right"], labels),
                    "displayed": aio.format_element(line["result"], labels),
                    "recomputed": aio.format_element(recomputed, labels),
                    "match": match,
                }
            )
        undisplayed = []
        if fx.complete:
            n2 = 2 * fx.half_dim
            for i in range(n2):
                for j in range(n2):
                    if (i, j) in listed_pairs:
                        continue
                    prod = basis_product(d.total, i, j)
                    if any(x != 0 for x in prod):
                        undisplayed.append(
                            {
                                "left": labels[i],
                                "right": labels[j],
                                "product": aio.format_element(prod, labels),
                            }
                        )
        case_ok = (
            all(c["passed"] for c in conditions)
            and all(row["match"] for row in table)
            and not undisplayed
        )
        all_passed = all_passed and case_ok
        cases.append(
            {
                "label": fx.label,
                "kind": fx.kind,
                "source": name,
                "conditions": conditions,
                "table": table,
                "undisplayed_nonzero": undisplayed,
                "passed": case_ok,
            }
        )
    return {"cases": cases, "all_passed": all_passed}


def cmd_paper_fixtures(ns) -> int:
    report = paper_fixtures()
    if ns.json:
        sys.stdout.write(aio.dump_json(report))
        return 0 if report["all_passed"] else 1
    for case in report["cases"]:
        print(f"{case['label']} ({case['kind']})")
        for cond in case["conditions"]:
            verdict = "pass" if cond["passed"] else "FAIL"
            print(f"  {cond['name']:<16} {verdict}")
        good = sum(1 for row in case["table"] if row["match"])
        print(f"  displayed table  {good}/{len(case['table'])} lines match")
        for row in case["table"]:
            if not row["match"]:
                print(
                    f"    ({row['left']}) * ({row['right']}): "
                    f"displayed {row['displayed']}, recomputed {row['recomputed']}"
                )
        for extra in case["undisplayed_nonzero"]:
            print(
                f"    undisplayed nonzero: {extra['left']} * {extra['right']}"
                f" = {extra['product']}"
            )
    fully = sum(1 for c in report["cases"] if c["passed"])
    print(f"{fully}/{len(report['cases'])} cases fully reproduced")
    return 0 if report["all_passed"] else 1


# ---------------------------------------------------------------------------
# wiring

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antiassoc")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a checker on a JSON document")
    vsub = verify.add_subparsers(dest="target", required=True)
    for target, fn in (
        ("algebra", cmd_verify_algebra),
        ("bimodule", cmd_verify_bimodule),
        ("matched-pair", cmd_verify_matched_pair),
        ("dendriform", cmd_verify_dendriform),
        ("form", cmd_verify_form),
        ("o-operator", cmd_verify_o_operator),
        ("rota-baxter", cmd_verify_rota_baxter),
    ):
        p = vsub.add_parser(target)
        p.add_argument("file")
        p.add_argument("--json", action="store_true")
        p.add_argument("--q", type=_rational_arg, default=None,
                       help="override the document's q before checking")
        p.set_defaults(func=fn)

    build = sub.add_parser("build", help="assemble a construction and emit JSON")
    bsub = build.add_subparsers(dest="target", required=True)
    one_file = (
        ("semidirect", cmd_build_semidirect),
        ("bowtie", cmd_build_bowtie),
        ("dual-bimodule", cmd_build_dual_bimodule),
        ("anticommutator", cmd_build_anticommutator),
        ("associated", cmd_build_associated),
        ("dendriform-from-omega", cmd_build_dendriform_from_omega),
        ("dendriform-from-o-operator", cmd_build_dendriform_from_o_operator),
    )
    for target, fn in one_file:
        p = bsub.add_parser(target)
        p.add_argument("file")
        p.add_argument("-o", dest="out", default=None)
        if target.startswith("dendriform-from"):
            p.add_argument("--force", action="store_true",
                           help="assemble even when the precondition check fails")
        p.set_defaults(func=fn)
    for target, fn in (
        ("double-quadratic", cmd_build_double_quadratic),
        ("double-symplectic", cmd_build_double_symplectic),
    ):
        p = bsub.add_parser(target)
        p.add_argument("a")
        p.add_argument("astar")
        p.add_argument("-o", dest="out", default=None)
        p.set_defaults(func=fn)

    classify = sub.add_parser("classify", help="enumerate small antiassociative algebras")
    csub = classify.add_subparsers(dest="target", required=True)
    p = csub.add_parser("dim2")
    p.add_argument("--grid", type=_grid_arg, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify_dim2)

    paper = sub.add_parser("paper", help="audit the bundled double-construction fixtures")
    psub = paper.add_subparsers(dest="target", required=True)
    p = psub.add_parser("fixtures")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_paper_fixtures)

    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(_merge_value_flags(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return ns.func(ns)
    except aio.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotAnOOperator as exc:
        _print_report("o-operator", exc.report)
        return 1
    except NotSymplectic as exc:
        _print_report("symplectic form", exc.report)
        return 1
    except SingularError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DimensionMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
