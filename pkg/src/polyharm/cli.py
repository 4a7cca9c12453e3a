"""Command-line front end with deterministic text/JSON output.

Exit codes: 0 for success / compliant form / clean suite, 1 when a
violating witness, suite failure, or counterexample candidate was found,
2 for usage or parse errors (reported on stderr with the byte offset).

Composition argument order: ``compose OUTER INNER`` applies INNER first,
so it computes OUTER after INNER.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import numeric, theorems
from .bipoly import GaussianRational, format_scalar
from .classify import classify
from .errors import ParseError
from .parser import parse, unparse
from .wirtinger import almansi_decompose, d_dz, d_dzbar, laplacian, polyharmonic_order

SEED_ENV_VAR = "POLYHARM_SEED"

GRAMMAR_HELP = """\
expression grammar (whitespace insignificant):

  expr     := ["-"] term (("+" | "-") term)*
  term     := factor ("*" factor)*
  factor   := atom ("^" uint)?
  atom     := "z" | "zbar" | "i" | rational
            | "conj" "(" expr ")" | "abs2" "(" expr ")" | "(" expr ")"
  rational := uint ("/" uint)?

examples: "z^2 + conj(z)*abs2(z)", "(1/2 + 3/4*i)*z", "abs2(z+1)"
"""


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r} ({exc})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyharm",
        description="Exact toolkit for polyharmonic polynomial mappings of one complex variable.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON object")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", parents=[common], help="polyharmonic order of a mapping")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_order)

    p = sub.add_parser("dz", parents=[common], help="formal d/dz")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_dz)

    p = sub.add_parser("dzbar", parents=[common], help="formal d/dzbar")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_dzbar)

    p = sub.add_parser("laplacian", parents=[common], help="iterated Laplacian 4 d/dz d/dzbar")
    p.add_argument("--times", type=_positive_int, default=1)
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_laplacian)

    p = sub.add_parser("almansi", parents=[common], help="harmonic components G_1..G_p")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_almansi)

    p = sub.add_parser(
        "compose",
        parents=[common],
        help="compose OUTER INNER computes OUTER after INNER",
    )
    p.add_argument("outer")
    p.add_argument("inner")
    p.set_defaults(handler=_cmd_compose)

    p = sub.add_parser("classify", parents=[common], help="structural classification flags")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser(
        "witness",
        parents=[common],
        help="check a mapping's form and construct a violating composition partner",
    )
    p.add_argument("--theorem", required=True, choices=("1a", "1b", "1c", "2a", "2b", "3b", "3c"))
    p.add_argument("--l", type=_positive_int, default=None)
    p.add_argument("--q", type=_nonnegative_int, default=None)
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="run a named sampled suite")
    p.add_argument("--suite", required=True, choices=theorems.SUITE_NAMES)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cases", type=_positive_int, default=200)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "conjecture",
        parents=[common],
        help="seeded counterexample search for the open pre-composition question (evidence only)",
    )
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cases", type=_positive_int, default=1000)
    p.add_argument("--l", type=_positive_int, default=None, help="fix l (default: alternate 3 and 4)")
    p.set_defaults(handler=_cmd_conjecture)

    p = sub.add_parser(
        "reich",
        parents=[common],
        help="test the harmonicity ODE (G')^2 == alpha^2 G^4 + 2c G^3 + conj(alpha)^2 G^2",
    )
    p.add_argument("--alpha", required=True, help="constant expression, e.g. '1/2 + 3/4*i'")
    p.add_argument("--c", required=True, type=_fraction, help="real rational constant")
    p.add_argument("expr", help="analytic mapping G")
    p.set_defaults(handler=_cmd_reich)

    p = sub.add_parser("eval", parents=[common], help="exact evaluation at a rational point")
    p.add_argument("expr")
    p.add_argument("--at", required=True, metavar="X,Y", help="point x + y*i with rational x, y")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser(
        "fdcheck",
        parents=[common],
        help="finite-difference cross-check of the Laplacian (or, with --m, of the exp identity)",
    )
    p.add_argument("expr")
    p.add_argument("--points", type=_positive_int, default=5)
    p.add_argument("--h", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument(
        "--m",
        type=int,
        default=None,
        help="check the exp(m*f) identity instead (exact for biharmonic mappings)",
    )
    p.add_argument("--tol-abs", type=float, default=None)
    p.add_argument("--tol-rel", type=float, default=None)
    p.set_defaults(handler=_cmd_fdcheck)

    return parser


def _resolve_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _UsageError(f"{SEED_ENV_VAR} must be an integer, got {env!r}")
    return 0


class _UsageError(Exception):
    pass


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _bool_text(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _cmd_order(args) -> int:
    order = polyharmonic_order(parse(args.expr))
    _emit(args, {"order": order}, str(order))
    return 0


def _cmd_dz(args) -> int:
    text = unparse(d_dz(parse(args.expr)))
    _emit(args, {"result": text}, text)
    return 0


def _cmd_dzbar(args) -> int:
    text = unparse(d_dzbar(parse(args.expr)))
    _emit(args, {"result": text}, text)
    return 0


def _cmd_laplacian(args) -> int:
    text = unparse(laplacian(parse(args.expr), args.times))
    _emit(args, {"result": text}, text)
    return 0


def _cmd_almansi(args) -> int:
    form = almansi_decompose(parse(args.expr))
    components = [unparse(g) for g in form.components]
    human_lines = [f"order: {len(components)}"]
    human_lines += [f"G_{k + 1} = {text}" for k, text in enumerate(components)]
    _emit(args, {"order": len(components), "components": components}, "\n".join(human_lines))
    return 0


def _cmd_compose(args) -> int:
    text = unparse(parse(args.outer).compose(parse(args.inner)))
    _emit(args, {"result": text}, text)
    return 0


def _cmd_classify(args) -> int:
    report = classify(parse(args.expr)).as_dict()
    human = "\n".join(f"{key}: {_bool_text(value)}" for key, value in report.items())
    _emit(args, report, human)
    return 0


def _cmd_witness(args) -> int:
    f = parse(args.expr)
    theorem = args.theorem
    forced_l = {"3b": 1, "3c": 2}.get(theorem)
    if forced_l is not None:
        if args.l is not None and args.l != forced_l:
            raise _UsageError(f"--theorem {theorem} fixes --l {forced_l}")
        l = forced_l
    else:
        if args.l is None:
            raise _UsageError(f"--theorem {theorem} requires --l")
        l = args.l
    fixed_q = {"1a": 0, "1b": 1, "2a": 1}.get(theorem)
    if fixed_q is not None:
        if args.q is not None and args.q != fixed_q:
            raise _UsageError(f"--theorem {theorem} fixes --q {fixed_q}")
        q = fixed_q
    else:
        if args.q is None or args.q < 2:
            raise _UsageError(f"--theorem {theorem} requires --q >= 2")
        q = args.q
    if theorem in ("1a", "1b", "1c"):
        result = theorems.witness_post(f, q, l)
    else:
        result = theorems.witness_pre(f, q, l)
    witness_text = unparse(result.witness) if result.witness is not None else None
    payload = {
        "verdict": result.verdict,
        "witness": witness_text,
        "composition_order": result.composition_order,
        "required_bound": result.required_bound,
        "family": result.family_tag,
    }
    human_lines = [f"verdict: {result.verdict}"]
    if result.verdict == theorems.VIOLATION:
        human_lines += [
            f"witness: {witness_text}",
            f"composition_order: {result.composition_order}",
            f"required_bound: {result.required_bound}",
            f"family: {result.family_tag}",
        ]
    elif result.verdict == theorems.CONJECTURE_ONLY:
        human_lines.append(
            "only a conjectured characterization is known here; "
            "see the conjecture subcommand"
        )
    _emit(args, payload, "\n".join(human_lines))
    return 1 if result.verdict == theorems.VIOLATION else 0


def _suite_payload(report) -> dict:
    first = report.first_failure
    return {
        "suite": report.suite_name,
        "cases_run": report.cases_run,
        "failures": report.failures,
        "seed": report.seed,
        "first_failure": None
        if first is None
        else {"input": first[0], "expected": first[1], "got": first[2]},
    }


def _suite_human(report) -> str:
    lines = [
        f"suite: {report.suite_name}",
        f"cases_run: {report.cases_run}",
        f"failures: {report.failures}",
        f"seed: {report.seed}",
    ]
    if report.first_failure is not None:
        lines += [
            f"first_failure input: {report.first_failure[0]}",
            f"first_failure expected: {report.first_failure[1]}",
            f"first_failure got: {report.first_failure[2]}",
        ]
    return "\n".join(lines)


def _cmd_verify(args) -> int:
    report = theorems.run_suite(args.suite, _resolve_seed(args.seed), args.cases)
    _emit(args, _suite_payload(report), _suite_human(report))
    return 0 if report.failures == 0 else 1


def _cmd_conjecture(args) -> int:
    if args.l is not None and args.l < 3:
        raise _UsageError("--l must be >= 3; smaller l is settled (see verify --suite thm3)")
    l_values = (args.l,) if args.l is not None else (3, 4)
    report = theorems.run_conjecture_search(_resolve_seed(args.seed), args.cases, l_values)
    payload = _suite_payload(report)
    payload.update(
        {
            "candidates": report.failures,
            "l_values": list(l_values),
            "conclusive": False,
        }
    )
    human = (
        _suite_human(report)
        + f"\ncandidates: {report.failures}"
        + f"\nl_values: {', '.join(str(l) for l in l_values)}"
        + "\nnote: sampled evidence only; a clean run decides nothing"
    )
    _emit(args, payload, human)
    return 0 if report.failures == 0 else 1


def _parse_constant(text: str, flag: str) -> GaussianRational:
    value = parse(text)
    if not set(value.terms) <= {(0, 0)}:
        raise _UsageError(f"{flag} must be a constant expression, got {text!r}")
    return value.coefficient(0, 0)


def _cmd_reich(args) -> int:
    alpha = _parse_constant(args.alpha, "--alpha")
    holds = theorems.reich_condition_check(parse(args.expr), alpha, args.c)
    _emit(args, {"holds": holds}, f"holds: {_bool_text(holds)}")
    return 0 if holds else 1


def _cmd_eval(args) -> int:
    parts = args.at.split(",")
    if len(parts) != 2:
        raise _UsageError("--at expects X,Y with rational X and Y")
    try:
        point = GaussianRational(Fraction(parts[0].strip()), Fraction(parts[1].strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"bad --at point: {exc}")
    value = parse(args.expr).eval_exact(point)
    text = format_scalar(value)
    _emit(args, {"value": text}, text)
    return 0


def _cmd_fdcheck(args) -> int:
    f = parse(args.expr)
    points = numeric.sample_points(_resolve_seed(args.seed), args.points)
    if args.m is not None:
        h = args.h if args.h is not None else numeric.DEFAULT_EXP_H
        rel = args.tol_rel if args.tol_rel is not None else numeric.EXP_REL_TOL
        reports = [numeric.exp_identity_check(f, args.m, pt, h) for pt in points]
        ok = all(numeric.exp_within_tolerance(r, f, args.m, rel) for r in reports)
        mode_payload = {"m": args.m}
    else:
        h = args.h if args.h is not None else numeric.DEFAULT_H
        abs_tol = args.tol_abs if args.tol_abs is not None else numeric.FD_ABS_TOL
        rel = args.tol_rel if args.tol_rel is not None else numeric.FD_REL_TOL
        reports = [numeric.fd_laplacian(f, pt, h) for pt in points]
        ok = all(numeric.fd_within_tolerance(r, abs_tol, rel) for r in reports)
        mode_payload = {}
    max_error = max(r.abs_error for r in reports)
    payload = {
        "points": args.points,
        "h": h,
        "abs_error": max_error,
        "within_tolerance": ok,
        **mode_payload,
    }
    human = f"max abs error {max_error!r} over {args.points} points at h={h!r}: " + (
        "ok" if ok else "FAIL"
    )
    _emit(args, payload, human)
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (_UsageError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
