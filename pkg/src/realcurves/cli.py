"""Command line front end with stable JSON output.

Subcommands: check, classify, enumerate, brown, integral.  Output is
deterministic (sorted keys, no timestamps) so golden files can compare
byte for byte.  Exit codes: 0 pass, 1 fail or drift, 2 input error,
3 i/o error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import (
    classify_cubic_degree2,
    classify_ellipsoid,
    classify_m55,
    enumerate_forests,
)
from .congruence import (
    FAIL,
    FORCES_TYPE_I,
    HYPOTHESIS_VIOLATED,
    PASS,
    ProjectiveHypotheses,
    disjoint_cubic_filter,
    ellipsoid_check,
    fiedler_check,
    hyperboloid_chi_check,
    hyperboloid_orientation_check,
    plane_orientation_check,
    projective_check,
)
from .models import (
    CurveClass,
    ModelError,
    complete_intersection_model,
    cubic_disjoint_model,
    curve_class_for,
    ellipsoid_model,
    hyperboloid_model,
)
from .regions import IndexUndefinedError
from .scheme import (
    SchemeError,
    SchemeSyntaxError,
    UnorientedSchemeError,
    parse_scheme,
    print_scheme,
)
from .zform import FormError, Z4Form, brown_invariant

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_IO = 3


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _fail_input(code: str, message: str, position: int | None = None) -> int:
    error = {"code": code, "message": message}
    if position is not None:
        error["position"] = position
    _emit({"error": error})
    return EXIT_INPUT


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("expected two comma separated integers")
    return int(parts[0]), int(parts[1])


def _curve_for(model, scheme, klass: str):
    count = scheme.curve_component_count
    curve = curve_class_for(model, count)
    if klass == "auto":
        return curve
    if klass == "typeI":
        return curve_class_for(model, count, type_flag="I")
    wanted = {"M": 0, "M-1": 1, "M-2": 2}[klass]
    if curve.deficiency != wanted:
        raise ModelError(
            f"scheme has {count} components, so its deficiency is "
            f"{curve.deficiency}, not {wanted}"
        )
    return curve


def _aggregate(reports) -> str:
    verdicts = [r.verdict for r in reports]
    if FAIL in verdicts:
        return FAIL
    if FORCES_TYPE_I in verdicts:
        return FORCES_TYPE_I
    if PASS in verdicts:
        return PASS
    return HYPOTHESIS_VIOLATED


def cmd_check(args) -> int:
    try:
        if args.model == "ci":
            return _check_complete_intersection(args)
        if args.scheme is None:
            return _fail_input("flags", "check needs --scheme")
        scheme = parse_scheme(args.scheme)
        reports = []
        if args.model == "ellipsoid":
            if args.d is None:
                return _fail_input("flags", "--model ellipsoid needs --d")
            model = ellipsoid_model(args.d)
            curve = _curve_for(model, scheme, args.klass)
            if args.d % 2 == 1:
                reports.append(ellipsoid_check(scheme, args.d, curve))
            else:
                reports.append(fiedler_check(scheme, args.d, curve))
        elif args.model == "cubic-disjoint":
            model = cubic_disjoint_model()
            curve = _curve_for(model, scheme, args.klass)
            reports.append(disjoint_cubic_filter(scheme, curve))
        elif args.model == "plane":
            if args.k is None:
                return _fail_input("flags", "--model plane needs --k")
            reports.append(plane_orientation_check(scheme, args.k))
        elif args.model == "hyperboloid":
            if args.bidegree is None:
                return _fail_input("flags", "--model hyperboloid needs --bidegree")
            d, r = args.bidegree
            model = hyperboloid_model(d, r)
            curve = _curve_for(model, scheme, args.klass)
            reports.append(hyperboloid_chi_check(scheme, d, r, curve))
            if scheme.oriented:
                reports.extend(hyperboloid_orientation_check(scheme, d, r))
        else:
            return _fail_input("flags", f"check does not support model {args.model}")
    except SchemeSyntaxError as exc:
        return _fail_input("syntax", exc.message, exc.position)
    except (SchemeError, ModelError, FormError) as exc:
        return _fail_input("invalid", str(exc))

    verdict = _aggregate(reports)
    _emit(
        {
            "scheme": print_scheme(scheme),
            "verdict": verdict,
            "reports": [r.to_json_dict() for r in reports],
        }
    )
    return EXIT_PASS if verdict in (PASS, FORCES_TYPE_I) else EXIT_FAIL


def _check_complete_intersection(args) -> int:
    """Halves congruence with caller-supplied homological hypothesis data."""
    if args.degrees is None or args.chi_bplus is None:
        return _fail_input("flags", "--model ci needs --degrees and --chi-bplus")
    try:
        degrees = tuple(int(p) for p in args.degrees.split(","))
        model = complete_intersection_model(degrees)
    except (ValueError, ModelError) as exc:
        return _fail_input("invalid", str(exc))
    deficiency = {"M": 0, "M-1": 1, "M-2": 2, "auto": 0}.get(args.klass)
    type_flag = "I" if args.klass == "typeI" else "unknown"
    curve = CurveClass(deficiency=deficiency, type_flag=type_flag)
    hyp = ProjectiveHypotheses(
        d_rank=args.d_rank, e_rank=args.e_rank, c_count=args.c_count
    )
    report = projective_check(model, hyp, curve, args.chi_bplus, mode=args.mode)
    _emit({"verdict": report.verdict, "reports": [report.to_json_dict()]})
    return EXIT_PASS if report.verdict in (PASS, FORCES_TYPE_I) else EXIT_FAIL


def _classification_payload(args):
    """Rows as a JSON array; the large streamed survey gets a summary object."""
    if args.model == "cubic-disjoint":
        return classify_cubic_degree2().to_json_rows()
    if args.model == "ellipsoid":
        if args.d is None:
            raise ModelError("--model ellipsoid needs --d")
        bound = (args.d - 1) ** 2 + 1
        if bound > 13 and args.jmax is None:
            return classify_m55(node_budget=args.budget).to_json_dict()
        return classify_ellipsoid(args.d, jmax=args.jmax).to_json_rows()
    raise ModelError(f"classify does not support model {args.model}")


def _render_table(payload) -> str:
    if isinstance(payload, dict):
        lines = [f"{k} = {payload[k]}" for k in sorted(payload) if k != "survivors"]
        return "\n".join(lines) + "\n"
    rows = payload
    width = max((len(r["scheme"]) for r in rows), default=6)
    lines = [f"{'scheme'.ljust(width)}  ovals  admissible  notes"]
    for r in rows:
        lines.append(
            f"{r['scheme'].ljust(width)}  {str(r['ovals']).rjust(5)}  "
            f"{str(r['admissible']).ljust(10)}  {';'.join(r['notes'])}"
        )
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    try:
        payload = _classification_payload(args)
    except (SchemeError, ModelError) as exc:
        return _fail_input("invalid", str(exc))
    rendered = (
        json.dumps(payload, sort_keys=True, indent=2) + "\n"
        if args.format == "json"
        else _render_table(payload)
    )
    if args.golden:
        try:
            with open(args.golden, "rb") as fh:
                golden = fh.read()
        except OSError as exc:
            sys.stderr.write(f"cannot read golden file: {exc}\n")
            return EXIT_IO
        if golden != rendered.encode():
            sys.stderr.write("output drifted from the golden file\n")
            sys.stdout.write(rendered)
            return EXIT_FAIL
        sys.stdout.write(rendered)
        return EXIT_PASS
    sys.stdout.write(rendered)
    return EXIT_PASS


def cmd_enumerate(args) -> int:
    try:
        schemes = enumerate_forests(args.n, carrier=args.carrier)
    except SchemeError as exc:
        return _fail_input("invalid", str(exc))
    _emit([print_scheme(s) for s in schemes])
    return EXIT_PASS


def cmd_brown(args) -> int:
    if (args.form is None) == (args.form_file is None):
        return _fail_input("flags", "give exactly one of --form or --form-file")
    try:
        if args.form_file is not None:
            try:
                with open(args.form_file, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                sys.stderr.write(f"cannot read form file: {exc}\n")
                return EXIT_IO
        else:
            text = args.form
        data = json.loads(text)
        form = Z4Form.from_json_dict(data)
    except json.JSONDecodeError as exc:
        return _fail_input("syntax", f"bad JSON: {exc}", exc.pos)
    except FormError as exc:
        return _fail_input("invalid", str(exc))
    beta = brown_invariant(form)
    _emit({"value": beta.to_json()})
    return EXIT_PASS


def cmd_integral(args) -> int:
    try:
        scheme = parse_scheme(args.scheme)
        if args.model == "plane":
            if args.k is None:
                return _fail_input("flags", "--model plane needs --k")
            reports = [plane_orientation_check(scheme, args.k)]
        elif args.model == "hyperboloid":
            if args.bidegree is None:
                return _fail_input("flags", "--model hyperboloid needs --bidegree")
            d, r = args.bidegree
            reports = list(hyperboloid_orientation_check(scheme, d, r))
        else:
            return _fail_input("flags", f"integral does not support model {args.model}")
    except SchemeSyntaxError as exc:
        return _fail_input("syntax", exc.message, exc.position)
    except (UnorientedSchemeError, IndexUndefinedError) as exc:
        return _fail_input("invalid", str(exc))
    except (SchemeError, ModelError) as exc:
        return _fail_input("invalid", str(exc))
    verdict = _aggregate(reports)
    _emit(
        {
            "scheme": print_scheme(scheme),
            "integral": reports[0].lhs,
            "verdict": verdict,
            "reports": [r.to_json_dict() for r in reports],
        }
    )
    return EXIT_PASS if verdict in (PASS, FORCES_TYPE_I) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realcurves",
        description="congruence filters for topological schemes of real curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_flags(p):
        p.add_argument(
            "--model",
            required=True,
            choices=["ellipsoid", "hyperboloid", "plane", "cubic-disjoint", "ci"],
        )
        p.add_argument("--d", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--bidegree", type=_parse_pair, metavar="D,R")
        p.add_argument("--degrees", metavar="M1,...,MS")

    check = sub.add_parser("check", help="run the congruence filters on one scheme")
    add_model_flags(check)
    check.add_argument("--scheme", default=None)
    check.add_argument(
        "--class",
        dest="klass",
        default="auto",
        choices=["M", "M-1", "M-2", "typeI", "auto"],
    )
    check.add_argument("--filters", default=None)
    check.add_argument("--format", default="json", choices=["json", "table"])
    check.add_argument("--chi-bplus", dest="chi_bplus", type=int, default=None)
    check.add_argument("--d-rank", dest="d_rank", type=int, default=0)
    check.add_argument("--e-rank", dest="e_rank", type=int, default=0)
    check.add_argument("--c-count", dest="c_count", type=int, default=0)
    check.add_argument(
        "--mode", default="generalized", choices=["classical", "generalized"]
    )
    check.set_defaults(func=cmd_check)

    classify = sub.add_parser("classify", help="enumerate schemes and filter them")
    add_model_flags(classify)
    classify.add_argument("--jmax", type=int, default=None)
    classify.add_argument("--budget", type=int, default=2_000_000)
    classify.add_argument("--golden", default=None)
    classify.add_argument("--format", default="json", choices=["json", "table"])
    classify.set_defaults(func=cmd_classify)

    enum = sub.add_parser("enumerate", help="list rooted oval forests")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument(
        "--carrier", default="sphere", choices=["sphere", "rp2", "torus"]
    )
    enum.set_defaults(func=cmd_enumerate)

    brown = sub.add_parser("brown", help="Brown invariant of a form")
    brown.add_argument("--form", default=None, help="inline JSON object")
    brown.add_argument("--form-file", default=None)
    brown.set_defaults(func=cmd_brown)

    integral = sub.add_parser("integral", help="squared-index integral checkers")
    add_model_flags(integral)
    integral.add_argument("--scheme", required=True)
    integral.set_defaults(func=cmd_integral)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
