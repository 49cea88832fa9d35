"""Command-line front end for exact submodular approximation.

Reads JSON function documents, runs one construction / certificate / check,
and prints a JSON report. Rationals travel as "p/q" strings and subsets as
sorted index arrays. Reports contain no timestamps or paths beyond what was
passed in, so identical invocations print identical bytes.

Exit codes: 0 success or property holds, 1 property fails, 2 input or usage
error, 3 exhaustive guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from . import certify, construct, verify
from .core import (
    BudgetedAdditive,
    ConcaveModular,
    CoverageSystem,
    DirectedCut,
    HardInstance,
    HittingWeights,
    ScaledSum,
    SetFunction,
    SqrtModular,
    Table,
    TreeCut,
    UndirectedCut,
    UniformProfile,
    build_oracle,
    check_ground_set,
    elements_of,
    fraction_str,
    get_max_exhaustive_n,
    set_max_exhaustive_n,
)
from .errors import (
    ExhaustiveGuardExceeded,
    GomoryHuValidationFailed,
    ParseError,
    ReconstructionFailed,
    SchemaError,
    SubapproxError,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


# --------------------------------------------------------------------------
# documents


@dataclass(frozen=True)
class FunctionDocument:
    ground_set: int
    function: SetFunction
    raw: dict


def parse_spec(text: str) -> FunctionDocument:
    """Parse a function document; decimals are read exactly."""
    try:
        data = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise SchemaError("document must be a JSON object")
    if "ground_set" not in data:
        raise SchemaError("missing field 'ground_set'")
    n = data["ground_set"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise SchemaError("ground_set must be an integer", "ground_set")
    check_ground_set(n)
    if "function" not in data:
        raise SchemaError("missing field 'function'")
    return FunctionDocument(n, build_oracle(data["function"], n), data)


def q(x) -> str:
    return fraction_str(Fraction(x))


def subset(mask: int | None):
    return None if mask is None else elements_of(mask)


def _pairs(items):
    return [[u, v, q(w)] for u, v, w in items]


def function_spec(f: SetFunction) -> dict:
    """Serialize an oracle to the ``function`` object of a document."""
    if isinstance(f, Table):
        return {"kind": "table", "values": [q(v) for v in f.entries]}
    if isinstance(f, BudgetedAdditive):
        return {"kind": "budgeted_additive", "values": [q(v) for v in f.items], "budget": q(f.budget)}
    if isinstance(f, CoverageSystem):
        return {
            "kind": "coverage",
            "weights": [q(w) for w in f.weights],
            "sets": [sorted(s) for s in f.sets],
        }
    if isinstance(f, HittingWeights):
        return {
            "kind": "hitting",
            "weights": [{"set": elements_of(t), "value": q(x)} for t, x in f.weights],
        }
    if isinstance(f, DirectedCut):
        return {"kind": "directed_cut", "arcs": _pairs(f.graph.arcs)}
    if isinstance(f, UndirectedCut):
        return {"kind": "undirected_cut", "edges": _pairs(f.graph.edges)}
    if isinstance(f, TreeCut):
        return {"kind": "tree_cut", "edges": _pairs(f.tree.edges)}
    if isinstance(f, UniformProfile):
        return {"kind": "uniform_profile", "profile": [q(v) for v in f.profile]}
    if isinstance(f, ConcaveModular):
        return {"kind": "concave_modular", "profile": [q(v) for v in f.profile], "values": list(f.items)}
    if isinstance(f, SqrtModular):
        return {"kind": "sqrt_modular", "values": [q(v) for v in f.items]}
    if isinstance(f, ScaledSum):
        return {
            "kind": "scaled_sum",
            "terms": [{"coef": q(c), "function": function_spec(t)} for c, t in f.terms],
        }
    if isinstance(f, HardInstance):
        out = {"kind": "hard", "hard_kind": f.hard_kind}
        if f.hard_kind == "general":
            out["a_set"] = elements_of(f.a_mask)
        return out
    if isinstance(f, construct.ExpectedCoverage):
        orig = f.original
        return {"kind": "expected_coverage", "values": [q(v) for v in orig.items], "budget": q(orig.budget)}
    raise TypeError(f"no document form for {type(f).__name__}")


def function_document(f: SetFunction) -> dict:
    return {"ground_set": f.n, "function": function_spec(f)}


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def approx_report(r: verify.ApproxReport) -> dict:
    out = {
        "lower_ok": r.lower_ok,
        "theta": "inf" if r.theta == math.inf else q(r.theta),
        "witness_theta": subset(r.witness_theta),
        "witness_lower": subset(r.witness_lower),
        "zero_set_conflicts": [subset(m) for m in r.zero_set_conflicts],
    }
    if r.theta != math.inf:
        out["theta_decimal_approx"] = f"{float(r.theta):.6f}"
    return out


def property_report(r: verify.PropertyReport, labels=()) -> dict:
    out = {"holds": r.holds}
    if r.witness is not None:
        out["witness"] = {
            label: (subset(w) if label in ("S", "complement") else w) for label, w in zip(labels, r.witness)
        }
        out["detail"] = r.detail
    return out


def read_document(path: str) -> FunctionDocument:
    if path == "-":
        return parse_spec(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# --------------------------------------------------------------------------
# commands


def cmd_check(args):
    f = read_document(args.file).function
    sub = verify.check_submodular(f)
    cls = verify.check_class(f)
    report = {
        "command": ["check", args.file],
        "submodular": property_report(sub, ("S", "i", "j")),
        "nonnegative": property_report(cls.nonnegative, ("S",)),
        "monotone": property_report(cls.monotone, ("S", "i")),
        "symmetric": property_report(cls.symmetric, ("S", "complement")),
        "empty_zero": property_report(cls.empty_zero, ("S",)),
        "universe_zero": property_report(cls.universe_zero, ("S",)),
        "zero_boundary": cls.zero_boundary,
    }
    required = [sub, cls.nonnegative]
    if args.strict:
        required += [cls.monotone, cls.symmetric, cls.empty_zero, cls.universe_zero]
    report["verdict"] = all(r.holds for r in required)
    return report, EXIT_OK if report["verdict"] else EXIT_FAIL


def _budgeted_input(f):
    if not isinstance(f, BudgetedAdditive):
        raise SchemaError("this method needs a budgeted_additive function")
    return f


def cmd_approx(args):
    f = read_document(args.file).function
    n = f.n
    report = {"command": ["approx", "--method", args.method, args.file], "method": args.method}
    if args.method == "directed-cut":
        g = construct.directed_cut_approx(f, workers=args.parallel)
        approximator = DirectedCut(g)
        sandwich = verify.approximation_ratio(f, approximator)
        bound = Fraction(n * n, 4)
        ok = sandwich.within(bound)
    elif args.method == "gomory-hu":
        tree = construct.gomory_hu_tree(f)
        approximator = TreeCut(tree)
        sandwich = verify.approximation_ratio(f, approximator)
        bound = Fraction(n - 1) if n > 1 else Fraction(1)
        report["gomory_hu_property"] = verify.check_gomory_hu(f, tree).holds
        ok = sandwich.within(bound) and report["gomory_hu_property"]
    elif args.method == "coverage-expected":
        ec = construct.budgeted_expected_coverage(_budgeted_input(f))
        approximator = ec.scaled()
        sandwich = verify.approximation_ratio(f, approximator)
        bound = ec.scale
        below = verify.approximation_ratio(ec, f)
        coverage = verify.is_coverage(ec)
        report.update(
            lift=q(ec.lift),
            lifted_budget=ec.budget,
            rho=q(ec.rho),
            scale=q(ec.scale),
            expected_below_target=below.lower_ok,
            expected_is_coverage=coverage.holds,
            scale_at_most_e_over_e_minus_1=certify.compare_one_minus_inv_e(ec.rho) > 0,
        )
        ok = sandwich.within(bound) and below.lower_ok and coverage.holds
    elif args.method == "coverage-sampled":
        report["seed"] = args.seed
        approximator = construct.budgeted_sampled_coverage(_budgeted_input(f), args.seed)
        sandwich = verify.approximation_ratio(approximator, f)
        bound = None
        report["sample_below_target"] = sandwich.lower_ok
        ok = sandwich.lower_ok
    else:  # budgeted-sum
        if isinstance(f, UniformProfile):
            dec = construct.decompose_uniform_profile(f)
        elif isinstance(f, ConcaveModular):
            dec = construct.concave_modular_to_budgeted(f.profile, f.items)
        else:
            raise SchemaError("budgeted-sum needs a uniform_profile or concave_modular function")
        approximator = dec.as_oracle()
        sandwich = verify.approximation_ratio(f, approximator)
        bound = Fraction(1)
        report["alphas"] = [q(a) for a in dec.alphas]
        report["swapped_alpha1_differs"] = dec.swapped_alpha1_differs
        ok = sandwich.within(bound)
    report["approximator"] = function_document(approximator)
    report["sandwich"] = approx_report(sandwich)
    if bound is not None:
        report["bound"] = q(bound)
    report["verdict"] = bool(ok)
    if args.output:
        write_text(args.output, dumps(function_document(approximator)))
    return report, EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args):
    f = read_document(args.target).function
    g = read_document(args.candidate).function
    r = verify.approximation_ratio(f, g)
    ok = r.lower_ok and r.theta != math.inf
    report = {
        "command": ["verify", "--target", args.target, "--candidate", args.candidate],
        "report": approx_report(r),
        "verdict": ok,
    }
    return report, EXIT_OK if ok else EXIT_FAIL


def cmd_is_coverage(args):
    f = read_document(args.file).function
    r = verify.is_coverage(f)
    report = {"command": ["is-coverage", args.file], "verdict": r.holds}
    if r.holds:
        report["weights"] = function_spec(r.weights)["weights"]
    else:
        report["detail"] = r.detail
        report["witness"] = subset(r.witness)
        if r.witness_value is not None:
            report["witness_value"] = q(r.witness_value)
    return report, EXIT_OK if r.holds else EXIT_FAIL


def cmd_certify_dual(args):
    d = certify.dual_certificate(args.k)
    above = certify.compare_one_minus_inv_e(d.objective) > 0
    report = {
        "command": ["certify-dual", "--k", str(args.k)],
        "k": d.k,
        "n": d.n,
        "v_k": q(d.v_k),
        "u_1": q(d.u_1),
        "u_n": q(d.u_n),
        "c": [str(x) for x in d.c],
        "delta_c_k": str(d.delta_c_k),
        "feasible": d.feasible,
        "objective": q(d.objective),
        "objective_decimal_approx": f"{float(d.objective):.6f}",
        "objective_above_one_minus_inv_e": above,
        "primal_construction_bound": q(certify.primal_construction_bound(args.k)),
    }
    report["verdict"] = d.feasible
    return report, EXIT_OK if d.feasible else EXIT_FAIL


def cmd_certify_primal(args):
    p = certify.symmetrized_primal_optimum(args.k)
    lower = certify.primal_construction_bound(args.k)
    upper = certify.dual_certificate(args.k).objective
    ok = p.certified and lower <= p.alpha <= upper
    report = {
        "command": ["certify-primal", "--k", str(args.k)],
        "k": p.k,
        "alpha": q(p.alpha),
        "x_by_size": [q(x) for x in p.x],
        "certified_optimal": p.certified,
        "primal_construction_bound": q(lower),
        "dual_objective": q(upper),
        "verdict": ok,
    }
    return report, EXIT_OK if ok else EXIT_FAIL


def cmd_gallery(args):
    if args.kind == "general":
        a_mask = None if args.a is None else (1 << args.a) - 1
        spec = certify.HardInstanceSpec("general", args.n, a_mask)
        doc = {"ground_set": spec.n, "function": {"kind": "hard", "hard_kind": "general", "a_set": elements_of(spec.a_mask)}}
    elif args.kind == "symmetric":
        spec = certify.HardInstanceSpec("symmetric", args.n)
        doc = {"ground_set": spec.n, "function": {"kind": "hard", "hard_kind": "symmetric"}}
    else:
        spec = certify.HardInstanceSpec("budgeted-uniform", args.n or 0, k=args.k)
        doc = {"ground_set": spec.n, "function": {"kind": "hard", "hard_kind": "budgeted-uniform", "k": spec.k}}
    return doc, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--max-n", type=int, default=None, help="exhaustive guard (default 16)")
    top.add_argument("--parallel", type=int, default=1, help="worker threads for internal scans")
    # repeated on each subcommand without defaults, so they never mask the top-level values
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=argparse.SUPPRESS, help="exhaustive guard (default 16)")
    common.add_argument("--parallel", type=int, default=argparse.SUPPRESS, help="worker threads")

    p = argparse.ArgumentParser(prog="subapprox", description=__doc__.splitlines()[0], parents=[top])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="submodularity and class checks")
    s.add_argument("file")
    s.add_argument("--strict", action="store_true", help="also require monotone, symmetric, zero boundary")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("approx", parents=[common], help="build an approximator")
    s.add_argument(
        "--method",
        required=True,
        choices=["directed-cut", "gomory-hu", "coverage-expected", "coverage-sampled", "budgeted-sum"],
    )
    s.add_argument("file")
    s.add_argument("-o", "--output", help="write the approximator as a function document")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(run=cmd_approx)

    s = sub.add_parser("verify", parents=[common], help="sandwich report of candidate vs target")
    s.add_argument("--target", required=True)
    s.add_argument("--candidate", required=True)
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("is-coverage", parents=[common], help="coverage recognition via hitting weights")
    s.add_argument("file")
    s.set_defaults(run=cmd_is_coverage)

    s = sub.add_parser("certify-dual", parents=[common], help="dual certificate for f_k")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(run=cmd_certify_dual)

    s = sub.add_parser("certify-primal", parents=[common], help="symmetrized primal optimum for f_k")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(run=cmd_certify_primal)

    s = sub.add_parser("gallery", parents=[common], help="emit a hard-instance document")
    s.add_argument("--kind", required=True, choices=["general", "symmetric", "budgeted"])
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--a", type=int, default=None, help="size of A for the general instance")
    s.add_argument("--k", type=int, default=None)
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_gallery)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    previous = get_max_exhaustive_n()
    try:
        if args.max_n is not None:
            set_max_exhaustive_n(args.max_n)
        if args.command == "gallery" and args.n is None and args.kind != "budgeted":
            raise SchemaError("--n is required for this kind")
        report, code = args.run(args)
    except ExhaustiveGuardExceeded as exc:
        sys.stderr.write(dumps({"error": "ExhaustiveGuardExceeded", "message": str(exc)}))
        return EXIT_GUARD
    except (GomoryHuValidationFailed, ReconstructionFailed) as exc:
        sys.stderr.write(dumps({"error": type(exc).__name__, "message": str(exc)}))
        return EXIT_FAIL
    except (SubapproxError, ValueError, TypeError, OSError) as exc:
        sys.stderr.write(dumps({"error": type(exc).__name__, "message": str(exc)}))
        return EXIT_USAGE
    finally:
        set_max_exhaustive_n(previous)
    out = getattr(args, "output", None) if args.command == "gallery" else None
    write_text(out, dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
