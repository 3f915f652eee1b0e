"""Command-line interface: ``tropmod <subcommand> ...``.

Exit status is 0 on success, 1 on invalid input, and 2 when an internal
consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from tropmod import formats
from tropmod.contraction import build_strata_poset, contract_set
from tropmod.enumeration import check_range, enumerate_stable_graphs
from tropmod.tropical import build_complex, check_order_reversal
from tropmod.valuation import trop_of_model
from tropmod.weierstrass import WeierstrassCurve, discriminant, is_singular, j_invariant


class InvariantViolation(RuntimeError):
    pass


def _read_json(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON in {path}: {exc.msg} at line {exc.lineno} "
                         f"column {exc.colno} (char {exc.pos})") from None


def _edge_id(token: str) -> int:
    t = token.strip()
    if t[:1] in ("e", "E"):
        t = t[1:]
    try:
        return int(t)
    except ValueError:
        raise ValueError(f"bad edge id {token!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _moduli_args(p: argparse.ArgumentParser):
    p.add_argument("--genus", "-g", type=int, required=True)
    p.add_argument("--legs", "-n", type=int, default=0)
    p.add_argument("--force", action="store_true",
                   help="skip the g+n size guard (TMW_MAX_COMPLEXITY, default 8)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", default="-", help="output file (default stdout)")
    parser = argparse.ArgumentParser(prog="tropmod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    p = add("enumerate", "stable graphs of genus g with n legs")
    _moduli_args(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("poset", "stratification poset (Hasse diagram)")
    _moduli_args(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("complex", "tropical moduli cone complex")
    _moduli_args(p)

    p = add("check-reversal", "compare cone faces with strata closures")
    _moduli_args(p)

    p = add("contract", "contract edges of a graph given as JSON")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--edges", nargs="*", default=[], help="edge ids, e.g. e1 e2 or 1,2")
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("tropicalize", "tropical curve of a nodal model given as JSON")
    p.add_argument("--input", "-i", required=True)

    p = add("jinv", "discriminant and j-invariant of y^2 = x^3 + ax + b")
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument("--b", type=_rational, required=True)
    return parser


def _execute(args) -> tuple[str, int]:
    cmd = args.command
    if cmd in ("enumerate", "poset", "complex", "check-reversal"):
        check_range(args.genus, args.legs, args.force)
    if cmd == "enumerate":
        r = enumerate_stable_graphs(args.genus, args.legs, force=True)
        if args.format == "dot":
            return formats.enumeration_to_dot(r), 0
        return formats.dumps(formats.enumeration_to_json(r)), 0
    if cmd == "poset":
        r = enumerate_stable_graphs(args.genus, args.legs, force=True)
        if not r.classes:
            raise ValueError(f"no stable graphs for g={args.genus}, n={args.legs}")
        P = build_strata_poset(r.graphs)
        if args.format == "dot":
            return formats.poset_to_dot(P), 0
        return formats.dumps(formats.poset_to_json(P)), 0
    if cmd == "complex":
        C = build_complex(args.genus, args.legs, force=True)
        return formats.dumps(formats.complex_to_json(C)), 0
    if cmd == "check-reversal":
        report = check_order_reversal(args.genus, args.legs, force=True)
        if not report.passed:
            raise InvariantViolation(report.summary())
        return report.summary() + "\n", 0
    if cmd == "contract":
        G = formats.graph_from_json(_read_json(args.input))
        edges = [_edge_id(t) for tok in args.edges for t in tok.split(",") if t.strip()]
        H = contract_set(G, edges)
        if args.format == "dot":
            return formats.graph_to_dot(H), 0
        return formats.dumps(formats.graph_to_json(H)), 0
    if cmd == "tropicalize":
        m = formats.model_from_json(_read_json(args.input))
        return formats.dumps(formats.curve_to_json(trop_of_model(m))), 0
    if cmd == "jinv":
        E = WeierstrassCurve(args.a, args.b)
        lines = [f"discriminant {discriminant(E)}"]
        lines.append("singular" if is_singular(E) else f"j {j_invariant(E)}")
        return "\n".join(lines) + "\n", 0
    raise AssertionError(cmd)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = _execute(args)
    except (InvariantViolation, AssertionError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return status


if __name__ == "__main__":
    sys.exit(main())
