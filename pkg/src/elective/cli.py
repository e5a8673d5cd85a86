"""Command-line front door: parse, expand, eliminate, solve, verify.

Subcommands: expand, solve, eliminate, syllogism, partition, compare,
nyaya, check.  Every command is deterministic: identical invocations
produce byte-identical output.  --json switches to a schema-stable JSON
document in which finite coefficients appear as {"num", "den"} integer
pairs and extended coefficients as the strings "0/0" and "k/0".

Exit codes: 0 success, 1 usage or parse error, 2 algebra-domain error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Coeff,
    Indeterminate,
    Infinite,
    LinearForm,
    coeff_factor_text,
    coeff_text,
    constituents,
    display_order,
    eval_at,
    expand,
    normal_form,
)
from .errors import ElectiveError, ParseError
from .expr import Add, Symbol, ZERO, format_expr, free_symbols, symbols
from .inference import SolvedClass, eliminate, solve_for, syllogism
from .nyaya import negation_table
from .modern import analyze
from .oracle import Universe, assignments, holds, verify_solved
from .parsing import parse_equation, parse_expression

# Full expansion of the constituent sum is quadratic in 2**n; above this
# many symbols the partition check falls back to per-vertex evaluation.
_PARTITION_EXPAND_LIMIT = 8


@dataclass
class OutputDocument:
    text: str
    payload: dict
    exit_code: int = 0


def _coeff_json(v: Coeff):
    if isinstance(v, Fraction):
        return {"num": v.numerator, "den": v.denominator}
    return str(v)


def _term_entries(form: LinearForm) -> tuple[list[str], list[dict]]:
    lines = []
    entries = []
    for c, v in form.display_items():
        line = f"{coeff_factor_text(v)}*{c}"
        if isinstance(v, Infinite):
            line += f"  [side condition: {c} = 0]"
        elif isinstance(v, Indeterminate):
            line += "  [indeterminate]"
        lines.append(line)
        entries.append({"constituent": str(c), "coefficient": _coeff_json(v)})
    return lines, entries


def _symbol_list(arg: str | None, fallback) -> tuple[Symbol, ...]:
    if arg:
        return symbols(arg)
    return tuple(fallback)


def cmd_expand(args) -> OutputDocument:
    e = parse_expression(args.expression)
    syms = _symbol_list(args.symbols, free_symbols(e))
    form = expand(e, syms)
    lines, entries = _term_entries(form)
    interpretable = form.is_interpretable()
    lines.append("interpretable" if interpretable else "NOT INTERPRETABLE")
    payload = {
        "command": "expand",
        "expression": format_expr(e),
        "symbols": [s.name for s in form.symbols],
        "terms": entries,
        "interpretable": interpretable,
    }
    return OutputDocument("\n".join(lines), payload)


def _solution_payload(sol: SolvedClass) -> dict:
    return {
        "unknown": sol.unknown.name,
        "symbols": [s.name for s in sol.free_symbols],
        "included": [str(c) for c in display_order(tuple(sol.included))],
        "indeterminate": [
            {"name": v.name, "constituent": str(c)} for v, c in sol.indeterminate
        ],
        "side_conditions": [
            str(c) for c in display_order(tuple(sol.side_conditions))
        ],
        "excluded": [str(c) for c in display_order(tuple(sol.excluded))],
        "solution": sol.describe(),
    }


def cmd_solve(args) -> OutputDocument:
    eq = parse_equation(args.equation)
    syms = symbols(args.symbols) if args.symbols else None
    sol = solve_for(eq, Symbol(args.unknown), syms)
    text = sol.describe()
    payload = {"command": "solve", "equation": str(eq)}
    payload.update(_solution_payload(sol))
    payload["verification"] = None
    exit_code = 0
    if args.verify:
        report = verify_solved(sol, eq, args.max_universe)
        payload["verification"] = {
            "max_universe": args.max_universe,
            "sound": report.sound,
            "complete": report.complete,
            "counterexample": (
                str(report.counterexample) if report.counterexample else None
            ),
        }
        if report.ok:
            text += f"\nverified sound and complete on universes 1..{args.max_universe}"
        else:
            text += f"\nverification FAILED: {report.counterexample}"
            exit_code = 3
    return OutputDocument(text, payload, exit_code)


def _elimination_payload(command: str, result, extra: dict) -> OutputDocument:
    lines = [str(result.residual)]
    entries = []
    if result.form is not None:
        _, entries = _term_entries(result.form)
    payload = {"command": command}
    payload.update(extra)
    payload["residual"] = str(result.residual)
    payload["terms"] = entries
    return OutputDocument("\n".join(lines), payload)


def cmd_eliminate(args) -> OutputDocument:
    eq = parse_equation(args.equation)
    result = eliminate(eq, Symbol(args.drop))
    return _elimination_payload(
        "eliminate", result, {"equation": str(eq), "dropped": [args.drop]}
    )


def cmd_syllogism(args) -> OutputDocument:
    premises = [parse_equation(p) for p in args.premise]
    drops = symbols(args.drop) if args.drop else ()
    conclude = Symbol(args.conclude_for) if args.conclude_for else None
    result = syllogism(premises, drops, conclude)
    extra = {
        "premises": [str(p) for p in premises],
        "dropped": [s.name for s in drops],
    }
    if isinstance(result, SolvedClass):
        payload = {"command": "syllogism"}
        payload.update(extra)
        payload.update(_solution_payload(result))
        return OutputDocument(result.describe(), payload)
    return _elimination_payload("syllogism", result, extra)


def cmd_partition(args) -> OutputDocument:
    syms = symbols(args.symbols)
    items = display_order(constituents(syms))
    if len(syms) <= _PARTITION_EXPAND_LIMIT:
        total = None
        for c in items:
            total = c.to_expr() if total is None else Add(total, c.to_expr())
        sum_is_one = expand(total, syms) == LinearForm.constant(syms, 1)
    else:
        # The full expansion would be quadratic in 2**n; checking that each
        # constituent's product is 1 at its own vertex still exercises the
        # mask plumbing.
        sum_is_one = all(eval_at(c.to_expr(), c.vertex()) == 1 for c in items)
    lines = [str(c) for c in items]
    lines.append("sum = 1: OK" if sum_is_one else "sum = 1: FAILED")
    payload = {
        "command": "partition",
        "symbols": [s.name for s in syms],
        "constituents": [str(c) for c in items],
        "sum_is_one": sum_is_one,
    }
    return OutputDocument("\n".join(lines), payload, 0 if sum_is_one else 2)


def cmd_compare(args) -> OutputDocument:
    e = parse_expression(args.expression)
    syms = _symbol_list(args.symbols, free_symbols(e))
    report = analyze(e, syms)
    if report.interpretable:
        lines = ["interpretable"]
    else:
        lines = ["NOT INTERPRETABLE"]
        lines += [
            f"coefficient {coeff_text(v)} at {c} (condition: {c} = 0)"
            for c, v in report.offending
        ]
    payload = {
        "command": "compare",
        "expression": format_expr(e),
        "symbols": [s.name for s in syms],
        "interpretable": report.interpretable,
        "offending": [
            {"constituent": str(c), "coefficient": _coeff_json(v)}
            for c, v in report.offending
        ],
        "conditions": [str(c) for c in report.interpretability_conditions],
    }
    return OutputDocument("\n".join(lines), payload)


def cmd_nyaya(args) -> OutputDocument:
    rows = negation_table()
    lines = ["w\tnot-w"] + [f"{a}\t{b}" for a, b in rows]
    payload = {
        "command": "nyaya",
        "table": [{"w": str(a), "not_w": str(b)} for a, b in rows],
    }
    return OutputDocument("\n".join(lines), payload)


def cmd_check(args) -> OutputDocument:
    eq = parse_equation(args.equation)
    syms = _symbol_list(args.symbols, eq.free_symbols())
    residual, form = normal_form(eq, syms or None)
    if form is None:
        identity = residual.lhs == ZERO
        zeros: list = []
        satisfiable = identity
    else:
        identity = form.is_zero()
        zeros = [c for c, v in form.display_items() if v == 0]
        satisfiable = bool(zeros)

    failure = None  # first assignment on which the equation fails
    for m in range(0, args.max_universe + 1):
        for a in assignments(Universe(m), syms):
            if not holds(eq, a):
                failure = f"universe size {m}" + (
                    f"; {a.describe()}" if a.subsets else ""
                )
                break
        if failure:
            break
    if identity:
        confirmed = failure is None
        counterexample = failure
    else:
        # A non-identity must fail somewhere once a non-empty universe is in
        # range; not finding a failure would mean algebra and oracle disagree.
        counterexample = failure
        confirmed = failure is not None or args.max_universe < 1

    lines = [f"identity: {'yes' if identity else 'no'}"]
    if not identity and counterexample:
        lines.append(f"counterexample: {counterexample}")
    if satisfiable:
        detail = f" (zero coefficient at {zeros[0]})" if zeros else ""
        lines.append(f"satisfiable: yes{detail}")
    else:
        lines.append("satisfiable: no (no zero coefficient in the development)")
    lines.append(
        f"oracle: {'confirmed' if confirmed else 'DISAGREES'} "
        f"on universes 0..{args.max_universe}"
    )
    payload = {
        "command": "check",
        "equation": str(eq),
        "symbols": [s.name for s in syms],
        "identity": identity,
        "satisfiable": satisfiable,
        "zero_constituents": [str(c) for c in zeros],
        "oracle": {
            "max_universe": args.max_universe,
            "confirmed": confirmed,
            "counterexample": counterexample,
        },
    }
    exit_code = 0 if identity and confirmed else 3
    return OutputDocument("\n".join(lines), payload, exit_code)


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract wants 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="elective",
        description="Boole's elective-symbol algebra on constituent normal forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_symbols=True, with_universe=False):
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        if with_symbols:
            p.add_argument(
                "--symbols",
                help="ordered symbol list, e.g. x,y,z (default: free symbols)",
            )
        if with_universe:
            p.add_argument(
                "--max-universe",
                type=int,
                default=4,
                metavar="M",
                help="largest universe for exhaustive checks (default 4, cap 8)",
            )

    p = sub.add_parser("expand", help="develop an expression over its constituents")
    p.add_argument("expression")
    common(p)
    p.set_defaults(handler=cmd_expand)

    p = sub.add_parser("solve", help="solve an equation for one unknown class")
    p.add_argument("equation")
    p.add_argument("--for", dest="unknown", required=True, metavar="SYMBOL")
    p.add_argument(
        "--verify",
        action="store_true",
        help="exhaustively verify the solution against the set oracle",
    )
    common(p, with_universe=True)
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("eliminate", help="eliminate a symbol from an equation")
    p.add_argument("equation")
    p.add_argument("--drop", required=True, metavar="SYMBOL")
    common(p, with_symbols=False)
    p.set_defaults(handler=cmd_eliminate)

    p = sub.add_parser(
        "syllogism", help="combine premises, eliminate middles, optionally conclude"
    )
    p.add_argument(
        "-p",
        "--premise",
        action="append",
        required=True,
        metavar="EQUATION",
    )
    p.add_argument("--drop", default="", metavar="SYMBOLS")
    p.add_argument("--conclude-for", metavar="SYMBOL")
    common(p, with_symbols=False)
    p.set_defaults(handler=cmd_syllogism)

    p = sub.add_parser("partition", help="list the 2**n constituents of a basis")
    p.add_argument("--symbols", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_partition)

    p = sub.add_parser(
        "compare", help="show where an expression leaves modern Boolean algebra"
    )
    p.add_argument("expression")
    common(p)
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("nyaya", help="three-valued negation table")
    p.add_argument("what", choices=["table"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_nyaya)

    p = sub.add_parser(
        "check", help="test whether an equation is an identity, with oracle"
    )
    p.add_argument("equation")
    common(p, with_universe=True)
    p.set_defaults(handler=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        doc = args.handler(args)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ElectiveError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(doc.payload, indent=2))
    else:
        print(doc.text)
    return doc.exit_code


def run() -> None:
    raise SystemExit(main())
