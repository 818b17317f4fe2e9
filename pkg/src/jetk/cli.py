"""Command-line interface.

Subcommands:

    kclass   -N <n> "<expr>"            evaluate a class in K(P^N)
    split    -N 1 "<J-expr>"            Birkhoff splitting of a jet on P^1
    verify   mainsplit -N <n> -l <l>    non-isomorphism certificate
    verify   ktheory -N <n> -k <k> -l <l>
    verify   atiyah -l <l>
    birkhoff --matrix <path>            factor an ingested transition matrix
    table    jets -N 1 --lmin <a> --lmax <b>

Exit codes: 0 verified/success, 1 refuted claim, 2 usage or input error
(an inapplicable verdict maps to 2 as an out-of-range query).  With
``--json`` every command emits one report object {claim, params, verdict,
steps}; all numbers are serialized as decimal strings so arbitrary
precision survives any consumer.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import jetcalc, kring, p1lab, sheafdsl
from .report import INAPPLICABLE, REFUTED, VERIFIED, Report, Step

_EXIT_BY_VERDICT = {VERIFIED: 0, REFUTED: 1, INAPPLICABLE: 2}


def _encode(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _decode(value):
    if isinstance(value, str):
        if re.fullmatch(r"-?\d+", value):
            return int(value)
        if re.fullmatch(r"-?\d+/\d+", value):
            return Fraction(value)
        return value
    if isinstance(value, list):
        return [_decode(v) for v in value]
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    return value


def emit_json(report: Report) -> str:
    """Serialize a report; numbers become decimal strings."""
    payload = {
        "claim": report.claim,
        "params": _encode(report.params),
        "verdict": report.verdict,
        "steps": [
            {"description": s.description, "values": _encode(s.values)}
            for s in report.steps
        ],
    }
    return json.dumps(payload, indent=2)


def report_from_json(text: str) -> Report:
    """Inverse of emit_json up to int/Fraction equivalence of values."""
    payload = json.loads(text)
    steps = [
        Step(s["description"], _decode(s["values"])) for s in payload["steps"]
    ]
    return Report(payload["claim"], _decode(payload["params"]), payload["verdict"], steps)


def _render_value(value) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_render_value(v)}" for k, v in value.items()) + "}"
    return str(value)


def _render_report(report: Report) -> str:
    lines = [f"claim: {report.claim}"]
    params = ", ".join(f"{k}={_render_value(v)}" for k, v in report.params.items())
    lines.append(f"params: {params}")
    lines.append(f"verdict: {report.verdict}")
    for idx, step in enumerate(report.steps, start=1):
        lines.append(f"  {idx}. {step.description}")
        for key, value in step.values.items():
            lines.append(f"     {key} = {_render_value(value)}")
    return "\n".join(lines)


def _require(args, names: list, claim: str) -> None:
    missing = [n for n in names if getattr(args, n.strip("-"), None) is None]
    if missing:
        raise ValueError(f"verify {claim} requires {' '.join('-' + n for n in missing)}")


def _cmd_kclass(args):
    expr = sheafdsl.parse(args.expr)
    value = sheafdsl.evaluate(expr, args.N)
    report = Report(
        "kclass",
        {"N": args.N, "expr": args.expr},
        VERIFIED,
        [
            Step(
                f"class in the basis {{1, t, ..., t^{args.N}}}",
                {"coefficients": list(value.coefficients()), "rendered": str(value)},
            )
        ],
    )
    return report, str(value)


def _cmd_split(args):
    if args.N != 1:
        raise ValueError(
            "splitting types are algorithmic only on the line; use -N 1"
        )
    expr = sheafdsl.parse(args.expr)
    if not isinstance(expr, sheafdsl.Jet):
        raise ValueError(
            f"split expects a jet expression like J1(O(2), left), got {args.expr!r}"
        )
    if expr.order != 1:
        raise ValueError(
            "explicit transition matrices exist only at first order; use J1"
        )
    matrix = p1lab.jet_transition(expr.arg.d, expr.side)
    splitting = p1lab.birkhoff_split(matrix)
    report = Report(
        "birkhoff-splitting",
        {"N": 1, "expr": args.expr, "l": expr.arg.d, "side": expr.side},
        VERIFIED,
        [
            Step(
                "first-order jet transition matrix",
                {"matrix": [str(e) for row in matrix.rows() for e in row]},
            ),
            Step(
                "Birkhoff splitting degrees",
                {"splitting": list(splitting.degrees), "rendered": str(splitting)},
            ),
        ],
    )
    return report, str(splitting)


def _cmd_verify(args):
    if args.claim == "mainsplit":
        _require(args, ["N", "l"], "mainsplit")
        report = jetcalc.prove_non_isomorphic(args.N, args.l)
    elif args.claim == "ktheory":
        _require(args, ["N", "k", "l"], "ktheory")
        report = jetcalc.verify_ktheory_equality(args.N, args.k, args.l)
    else:
        _require(args, ["l"], "atiyah")
        report = p1lab.verify_corr_p1(args.l)
    return report, _render_report(report)


def _cmd_birkhoff(args):
    text = Path(args.matrix).read_text(encoding="utf-8")
    matrix = p1lab.matrix_from_text(text)
    coeff, exponent = matrix.det_monomial()
    splitting = p1lab.birkhoff_split(matrix)
    report = Report(
        "birkhoff-splitting",
        {"matrix": str(args.matrix), "size": matrix.size},
        VERIFIED,
        [
            Step(
                "ingested matrix",
                {"rows": [" ; ".join(str(e) for e in row) for row in matrix.rows()]},
            ),
            Step(
                "determinant monomial",
                {"coefficient": coeff, "exponent": exponent},
            ),
            Step(
                "Birkhoff splitting degrees",
                {"splitting": list(splitting.degrees), "rendered": str(splitting)},
            ),
        ],
    )
    return report, str(splitting)


def _cmd_table(args):
    if args.N != 1:
        raise ValueError("the jet table tabulates splittings on the line; use -N 1")
    if args.lmin > args.lmax:
        raise ValueError(f"--lmin {args.lmin} exceeds --lmax {args.lmax}")
    steps = []
    lines = [f"{'l':>4}  {'left':<12}  {'right':<12}  class"]
    for l in range(args.lmin, args.lmax + 1):
        left = p1lab.birkhoff_split(p1lab.jet_transition(l, "left"))
        right = p1lab.birkhoff_split(p1lab.jet_transition(l, "right"))
        value = jetcalc.jet_class(jetcalc.JetSpec(1, 1, l, "left"))
        steps.append(
            Step(
                f"first-order jet of O({l})",
                {
                    "l": l,
                    "left": list(left.degrees),
                    "right": list(right.degrees),
                    "class": list(value.coefficients()),
                },
            )
        )
        lines.append(f"{l:>4}  {str(left):<12}  {str(right):<12}  {value}")
    report = Report(
        "jet-table",
        {"N": 1, "lmin": args.lmin, "lmax": args.lmax},
        VERIFIED,
        steps,
    )
    return report, "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jetk",
        description="Exact jet-bundle classes and splitting types on projective space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kclass", help="evaluate an expression in K(P^N)")
    p.add_argument("-N", type=int, required=True, help="ambient dimension")
    p.add_argument("expr", help="sheaf expression, e.g. 'Sym2(Omega) * O(5)'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_kclass)

    p = sub.add_parser("split", help="Birkhoff splitting of a jet bundle on P^1")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("expr", help="jet expression, e.g. 'J1(O(2), right)'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_split)

    p = sub.add_parser("verify", help="run a verification certificate")
    p.add_argument("claim", choices=["mainsplit", "ktheory", "atiyah"])
    p.add_argument("-N", type=int)
    p.add_argument("-k", type=int)
    p.add_argument("-l", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("birkhoff", help="factor a transition matrix from a file")
    p.add_argument("--matrix", required=True, help="path to a ';'-separated matrix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_birkhoff)

    p = sub.add_parser("table", help="tabulate jet splittings and classes")
    p.add_argument("what", choices=["jets"])
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--lmin", type=int, required=True)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_table)

    return parser


def run(argv) -> int:
    """Execute one CLI invocation; prints the report, returns the exit code."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        report, text = args.handler(args)
    except (ValueError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(emit_json(report) if args.json else text)
    return _EXIT_BY_VERDICT[report.verdict]


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
