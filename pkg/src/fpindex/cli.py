"""Command-line front end with JSON input and output.

Exit codes: 0 success, 1 negative verdict from a check subcommand
(congruence violations, inadmissible sequence, inconsistent portfolio,
unequal zetas, failed verification), 2 usage or parse errors, 3 numerical
failures of the winding engine.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import planar, portfolio, sequences, zeta

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

DEFAULT_HORIZON = 24
DEFAULT_RADIUS = math.exp(-3.0)


class UsageError(ValueError):
    pass


def _parse_sequence(text: str) -> sequences.IndexSequence:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--seq is not valid JSON: {exc}") from exc
    if not isinstance(obj, list):
        raise UsageError("--seq must be a JSON array of decimal integer strings")
    try:
        return sequences.IndexSequence.from_strings(obj)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_coefficients(text: str, horizon: int) -> sequences.DoldDecomposition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--coeffs is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise UsageError("--coeffs must be a JSON object with string keys and values")
    try:
        return sequences.DoldDecomposition.from_mapping(obj, horizon)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_factors(text: str, flag: str) -> zeta.ZetaProductForm:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag} is not valid JSON: {exc}") from exc
    if not isinstance(obj, list):
        raise UsageError(f"{flag} must be a JSON list of factor objects")
    try:
        return zeta.ZetaProductForm.from_list(obj)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_portfolio(text: str) -> portfolio.Portfolio:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--portfolio is not valid JSON: {exc}") from exc
    try:
        return portfolio.Portfolio.from_dict(obj)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_period_set(text: str) -> set[int]:
    try:
        return {int(part, 10) for part in text.split(",") if part}
    except ValueError as exc:
        raise UsageError(f"--F must be comma-separated integers: {exc}") from exc


def _parse_multiplicities(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    try:
        for part in text.split(","):
            if not part:
                continue
            k, _, a = part.partition("=")
            out[int(k, 10)] = int(a, 10)
    except ValueError as exc:
        raise UsageError(f"--a must look like 1=2,3=1: {exc}") from exc
    return out


def _parse_center(text: str) -> planar.Point:
    try:
        x, y = (float(part) for part in text.split(","))
        return planar.Point(x, y)
    except ValueError as exc:
        raise UsageError(f"--center must be two floats like 0.0,0.0: {exc}") from exc


def _build_map(args):
    if args.family == "sink":
        return planar.SinkExample()
    if args.family == "source":
        if args.d is None:
            raise UsageError("--family source needs --d")
        return planar.SourceExample(args.d)
    if args.family == "realization":
        if args.F is None or args.a is None:
            raise UsageError("--family realization needs --F and --a")
        F = _parse_period_set(args.F)
        mult = _parse_multiplicities(args.a)
        try:
            return planar.RealizationMap(F, mult)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return planar.UnboundedExample()


def _expected_sequence(args, horizon: int) -> list[int]:
    if args.family == "sink":
        return [1] * horizon
    if args.family == "source":
        return [args.d ** n for n in range(1, horizon + 1)]
    if args.family == "realization":
        mult = _parse_multiplicities(args.a)
        return [
            1 - sum(k * a for k, a in mult.items() if n % k == 0)
            for n in range(1, horizon + 1)
        ]
    return [2 ** n - 1 for n in range(1, horizon + 1)]


def _emit(doc: dict, out_path: str | None) -> None:
    text = json.dumps(doc, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_decompose(args) -> int:
    seq = _parse_sequence(args.seq)
    try:
        decomp = sequences.dold_coefficients(seq)
    except sequences.NonIntegralCoefficient as exc:
        _emit({"error": {"type": "non-integral-coefficient", "k": exc.k}}, args.out)
        print(f"decompose: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    _emit({"coefficients": decomp.to_mapping()}, args.out)
    return EXIT_OK


def _cmd_synth(args) -> int:
    decomp = _parse_coefficients(args.coeffs, args.N)
    seq = sequences.from_dold(decomp, args.N)
    _emit({"seq": seq.to_strings()}, args.out)
    return EXIT_OK


def _cmd_congruences(args) -> int:
    seq = _parse_sequence(args.seq)
    violations = sequences.check_dold_congruences(seq)
    _emit({"violations": list(violations)}, args.out)
    return EXIT_OK if not violations else EXIT_VERDICT


def _cmd_admissible(args) -> int:
    seq = _parse_sequence(args.seq)
    cert = sequences.certify_admissible(seq)
    _emit({
        "admissible": cert.admissible,
        "F": sorted(cert.F),
        "multiplicities": {str(k): str(a) for k, a in sorted(cert.multiplicities.items())},
        "horizon": cert.horizon,
    }, args.out)
    return EXIT_OK if cert.admissible else EXIT_VERDICT


def _cmd_zeta_expand(args) -> int:
    if (args.coeffs is None) == (args.factors is None):
        raise UsageError("zeta-expand needs exactly one of --coeffs or --factors")
    if args.coeffs is not None:
        form = zeta.zeta_from_dold(_parse_coefficients(args.coeffs, args.N))
    else:
        form = _parse_factors(args.factors, "--factors")
    series = zeta.expand(form, args.N)
    _emit({"factors": form.to_list(), "series": series.to_strings()}, args.out)
    return EXIT_OK


def _cmd_zeta_equal(args) -> int:
    left = _parse_factors(args.left, "--left")
    right = _parse_factors(args.right, "--right")
    equal = zeta.equals(left, right)
    _emit({"equal": equal}, args.out)
    return EXIT_OK if equal else EXIT_VERDICT


def _cmd_classify(args) -> int:
    p = _parse_portfolio(args.portfolio)
    consistent = portfolio.check_consistency(p)
    report = portfolio.structural_checks(p)
    triggers = portfolio.infinitude_triggers(p)
    _emit({
        "consistent": consistent,
        "violations": list(report.violations),
        "assumption": report.assumption,
        "triggers": [{"code": t.code, "detail": t.detail} for t in triggers],
    }, args.out)
    return EXIT_OK if consistent else EXIT_VERDICT


def _cmd_index(args) -> int:
    planar_map = _build_map(args)
    result = planar.winding_index(
        planar_map, args.n, _parse_center(args.center), args.radius
    )
    _emit({
        "index": result.index,
        "samples_used": result.samples_used,
        "max_arc_step": result.max_arc_step,
    }, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    planar_map = _build_map(args)
    expected = _expected_sequence(args, args.N)
    computed = [
        planar.winding_index(planar_map, n, radius=args.radius).index
        for n in range(1, args.N + 1)
    ]
    match = computed == expected
    _emit({
        "family": args.family,
        "horizon": args.N,
        "expected": [str(v) for v in expected],
        "computed": [str(v) for v in computed],
        "match": match,
    }, args.out)
    return EXIT_OK if match else EXIT_VERDICT


def _cmd_growth(args) -> int:
    bound = portfolio.growth_lower_bound(args.d, args.n)
    _emit({
        "bound": str(bound.bound),
        "vacuous": bound.vacuous,
        "rate_satisfied": bound.rate_satisfied,
    }, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpindex",
        description="Exact fixed point index sequences, zeta products, portfolios, "
        "and numerical winding-number indices of the built-in planar maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", help="write the JSON document to this file instead of stdout")

    p = sub.add_parser("decompose", help="coefficients a_k of a sequence")
    p.add_argument("--seq", required=True, help='JSON array of integer strings, e.g. \'["1","1","-2"]\'')
    add_out(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("synth", help="sequence from coefficients")
    p.add_argument("--coeffs", required=True, help='JSON object, e.g. \'{"1":"1","3":"-1"}\'')
    p.add_argument("--N", type=int, default=DEFAULT_HORIZON, help="horizon (default 24)")
    add_out(p)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("congruences", help="Dold congruence check (exit 1 on violations)")
    p.add_argument("--seq", required=True)
    add_out(p)
    p.set_defaults(func=_cmd_congruences)

    p = sub.add_parser("admissible", help="isolated-invariant-set shape check (exit 1 if not)")
    p.add_argument("--seq", required=True)
    add_out(p)
    p.set_defaults(func=_cmd_admissible)

    p = sub.add_parser("zeta-expand", help="exact truncated series of a zeta product form")
    p.add_argument("--coeffs", help="decomposition to convert first")
    p.add_argument("--factors", help='JSON list like \'[{"r":1,"k":3,"e":-1}]\'')
    p.add_argument("--N", type=int, default=DEFAULT_HORIZON)
    add_out(p)
    p.set_defaults(func=_cmd_zeta_expand)

    p = sub.add_parser("zeta-equal", help="rational-function equality (exit 1 if unequal)")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    add_out(p)
    p.set_defaults(func=_cmd_zeta_equal)

    p = sub.add_parser("classify", help="portfolio consistency, structure, triggers")
    p.add_argument("--portfolio", required=True, help='JSON like \'{"ambient":{"sphere":2},"orbits":[...]}\'')
    add_out(p)
    p.set_defaults(func=_cmd_classify)

    def add_family(p):
        p.add_argument("--family", required=True,
                       choices=("sink", "source", "realization", "unbounded"))
        p.add_argument("--d", type=int, help="degree for --family source")
        p.add_argument("--F", help="comma-separated periods for --family realization")
        p.add_argument("--a", help="multiplicities like 1=2,2=1 for --family realization")
        p.add_argument("--radius", type=float, default=DEFAULT_RADIUS,
                       help="circle radius (default e^-3)")

    p = sub.add_parser("index", help="winding-number index of one iterate")
    add_family(p)
    p.add_argument("--n", type=int, required=True, help="iterate")
    p.add_argument("--center", default="0,0")
    add_out(p)
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("verify", help="numerical indices against the exact formulas (exit 1 on mismatch)")
    add_family(p)
    p.add_argument("--N", type=int, default=DEFAULT_HORIZON, help="horizon (default 24)")
    add_out(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("growth", help="lower bound 1 + d^n with the exact rate check")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_out(p)
    p.set_defaults(func=_cmd_growth)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fpindex {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (planar.FixedPointOnCurve, planar.RefinementExhausted) as exc:
        print(f"fpindex {args.command}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (planar.DomainError, ValueError) as exc:
        print(f"fpindex {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
