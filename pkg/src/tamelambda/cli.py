"""Command line front end.

Every command prints JSON records, one per line, with sorted keys.  Fourth
roots of unity appear as {"value": "-i", "i_exp": 3}; floats as fixed
"%.12e" strings.  Exit status: 0 on success, 1 on an internal
inconsistency or a failed verification, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .cyclotomic import Mu4
from .finite_field import build_field
from .gauss import gauss_closed_quadratic, gauss_sum_direct
from .lambda_core import QuadExt, lambda_q2, lambda_tame_quadratic
from .local_field import c_input, make_tame_field
from .oracles import gauss_numeric, lambda_direct_path
from .verify import SUITES


class Inconsistency(RuntimeError):
    pass


def mu4_record(z: Mu4) -> dict:
    return {"value": str(z), "i_exp": z.k}


def fmt_float(x: float) -> str:
    return format(x, ".12e")


def complex_record(z: complex) -> dict:
    return {"re": fmt_float(z.real), "im": fmt_float(z.imag)}


def emit(record: dict, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")


def parse_residue(text: str) -> int | list[int]:
    """'3' -> 3 (prime-field scalar); '1,2' -> [1, 2] (polynomial-basis coefficients)."""
    parts = [t for t in text.split(",") if t.strip()]
    try:
        values = [int(t) for t in parts]
    except ValueError:
        raise ValueError(f"cannot parse residue {text!r}") from None
    if not values:
        raise ValueError("empty residue")
    return values[0] if len(values) == 1 and "," not in text else values


def cmd_lambda_tame(args) -> dict:
    F = make_tame_field(args.p, args.f, args.e, parse_residue(args.w))
    c = c_input(F, parse_residue(args.c_unit))
    result = lambda_tame_quadratic(QuadExt(F), c)
    if result.value != result.delta_factor * result.gauss_factor:
        raise Inconsistency(f"lambda {result.value} != {result.delta_factor} * {result.gauss_factor}")
    record = {
        "command": "lambda-tame",
        "inputs": {"p": args.p, "f": args.f, "e": args.e, "w": list(F.w_res.coeffs),
                   "c_unit": list(c.unit_res.coeffs)},
        "result": mu4_record(result.value),
        "factors": {"delta": mu4_record(result.delta_factor), "gauss": mu4_record(result.gauss_factor)},
        "provenance": result.provenance,
    }
    if args.oracle:
        direct = lambda_direct_path(F)
        record["oracle"] = {
            "direct_path": complex_record(direct),
            "deviation": fmt_float(abs(direct - result.gauss_factor.to_complex())),
        }
    return record


def cmd_gauss(args) -> dict:
    closed = gauss_closed_quadratic(args.p, args.s)
    record = {
        "command": "gauss",
        "inputs": {"p": args.p, "s": args.s},
        "result": {"eps": mu4_record(closed.eps),
                   "half_power": str(closed.half_power)},
    }
    if args.numeric:
        k = build_field(args.p, args.s)
        exact = gauss_sum_direct(k, "quadratic", 1)
        numeric = gauss_numeric(k, "quadratic", 1)
        expected = closed.to_complex()
        record["oracle"] = {
            "exact_coeffs": list(exact.coeffs),
            "exact_embedded": complex_record(exact.embed()),
            "numeric": complex_record(numeric),
            "deviation": fmt_float(max(abs(exact.embed() - expected), abs(numeric - expected))),
            "scale": fmt_float(math.sqrt(k.q)),
        }
    return record


def cmd_q2(args) -> dict:
    return {
        "command": "q2",
        "inputs": {"class": args.square_class},
        "result": mu4_record(lambda_q2(args.square_class)),
    }


def cmd_verify(args) -> list[dict]:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    records = []
    for name in names:
        kwargs = {}
        if args.pmax is not None:
            kwargs["pmax"] = args.pmax
        if args.fmax is not None:
            kwargs["fmax"] = args.fmax
        if args.emax is not None and name != "gauss":
            kwargs["emax"] = args.emax
        if args.qmax is not None and name != "trace":
            kwargs["qmax"] = args.qmax
        report = SUITES[name](**kwargs)
        records.append(dict(report.as_record(), command="verify"))
    return records


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tamelambda",
        description="Lambda functions of tamely ramified quadratic extensions of p-adic fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda-tame", help="lambda_{K/F}(psi_F) for ramified quadratic K/F")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--f", type=int, default=1, help="residue degree")
    p.add_argument("--e", type=int, default=1, help="ramification index of F/Q_p")
    p.add_argument("--w", default="1", help="residue of w in pi^e = p w; int or comma list")
    p.add_argument("--c-unit", default="1", help="unit residue of c = pi^-e u")
    p.add_argument("--oracle", action="store_true", help="compare with direct summation")
    p.set_defaults(handler=cmd_lambda_tame)

    p = sub.add_parser("gauss", help="closed form of the quadratic Gauss sum of F_{p^s}")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--numeric", action="store_true", help="also sum directly and report the deviation")
    p.set_defaults(handler=cmd_gauss)

    p = sub.add_parser("q2", help="lambda of Q_2(sqrt d)/Q_2")
    p.add_argument("--class", dest="square_class", type=int, required=True,
                   help="one of 5, -1, -5, 2, 10, -2, -10")
    p.set_defaults(handler=cmd_q2)

    p = sub.add_parser("verify", help="sweep closed forms against brute-force oracles")
    p.add_argument("--suite", choices=["gauss", "lambda", "trace", "all"], default="all")
    p.add_argument("--pmax", type=int)
    p.add_argument("--fmax", type=int)
    p.add_argument("--emax", type=int)
    p.add_argument("--qmax", type=int)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.handler(args)
    except (ValueError, ZeroDivisionError) as exc:
        emit({"command": args.command, "error": str(exc)}, sys.stderr)
        return 2
    except Inconsistency as exc:
        emit({"command": args.command, "error": str(exc)}, sys.stderr)
        return 1
    records = result if isinstance(result, list) else [result]
    for record in records:
        emit(record)
    if args.command == "verify" and not all(r["status"] == "pass" for r in records):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
