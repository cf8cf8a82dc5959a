"""Command-line front-end: ``boolprop decide|solve|explain|table|audit|compare|clone``.

Exit codes: 0 success (for ``decide``: the proportion holds), 1 the proportion
fails (``decide`` only), 2 usage error, 3 ``--check-stability`` found verdicts
that change with the arity.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from boolprop.axioms import audit, check_monotonicity
from boolprop.clone import enumerate_term_functions
from boolprop.engine import (
    QUADRUPLES,
    Engine,
    Maximal,
    ProportionVerdict,
    StrictInclusion,
    render_quadruple,
    stable_arity_check,
)
from boolprop.formula import pretty, to_text
from boolprop.reference import FULL_STRUCTURE, NEG_STRUCTURE, comparison_table
from boolprop.structure import (
    ARITY_CAP,
    DEFAULT_ARITY,
    StructureSpec,
    StructureSpecError,
    parse_structure,
)

EXIT_HOLDS, EXIT_FAILS, EXIT_USAGE, EXIT_UNSTABLE = 0, 1, 2, 3


def _structure(text: str) -> StructureSpec:
    try:
        return parse_structure(text)
    except StructureSpecError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bit(text: str) -> int:
    if text not in ("0", "1"):
        raise argparse.ArgumentTypeError(f"expected 0 or 1, got {text!r}")
    return int(text)


def _arity(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"arity must be an integer, got {text!r}") from None
    if not 1 <= n <= ARITY_CAP:
        raise argparse.ArgumentTypeError(f"arity must be between 1 and {ARITY_CAP}")
    return n


def _tf(v: bool) -> str:
    return "T" if v else "F"


def _md_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c).replace("|", "\\|") for c in row) + " |" for row in rows]
    return "\n".join(lines)


def _csv_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dump(obj: object) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _verdict_json(v: ProportionVerdict, engine: Engine) -> dict:
    out: dict = {
        "structure": v.structure.text,
        "quadruple": list(v.quadruple),
        "arity": v.arity,
        "mode": v.mode,
        "holds": v.holds,
    }
    ev = v.evidence
    if isinstance(ev, StrictInclusion):
        out["evidence"] = {
            "kind": "strict_inclusion",
            "lower": list(ev.lower.quadruple),
            "upper": list(ev.upper.quadruple),
            "distinguishing": engine.render(ev.distinguishing),
        }
    elif isinstance(ev, Maximal):
        out["evidence"] = {
            "kind": "tie" if ev.tie else "maximal",
            "rival": list(ev.rival.quadruple),
            "characteristic": [engine.render(j) for j in ev.characteristic if not j.trivial],
        }
    return out


def cmd_decide(args: argparse.Namespace) -> int:
    q = (args.a, args.b, args.c, args.d)
    engine = Engine(args.structure, args.arity)
    verdict = engine.proportion(*q)
    if args.format == "json":
        out = _verdict_json(verdict, engine)
        if args.explain:
            out["explanation"] = engine.explain(*q, show_trivial=args.show_trivial).render()
        print(_dump(out))
    elif args.explain:
        print(engine.explain(*q, show_trivial=args.show_trivial).render())
    else:
        verb = "⊨" if verdict.holds else "⊭"
        print(f"{args.structure.name} {verb} {render_quadruple(q)}")
    return EXIT_HOLDS if verdict.holds else EXIT_FAILS


def cmd_solve(args: argparse.Namespace) -> int:
    sols = sorted(Engine(args.structure, args.arity).solve(args.a, args.b, args.c))
    if args.format == "json":
        print(_dump({
            "structure": args.structure.text,
            "equation": [args.a, args.b, args.c],
            "arity": args.arity,
            "solutions": sols,
        }))
    else:
        print("{" + ", ".join(map(str, sols)) + "}")
    return EXIT_HOLDS


def cmd_explain(args: argparse.Namespace) -> int:
    q = (args.a, args.b, args.c, args.d)
    exp = Engine(args.structure, args.arity).explain(*q, show_trivial=args.show_trivial)
    if args.format == "json":
        print(_dump({
            "structure": args.structure.text,
            "quadruple": list(q),
            "arity": args.arity,
            "holds": exp.holds,
            "directions": [
                {
                    "quadruple": list(d.quadruple),
                    "holds": d.holds,
                    "rival": list(d.rival),
                    "relation": d.relation,
                    "members": [
                        {"rule": m.rule, "first": list(m.first), "second": list(m.second)}
                        for m in d.members
                    ],
                    "distinguishing": d.distinguishing.rule if d.distinguishing else None,
                }
                for d in exp.directions
            ],
        }))
    else:
        print(exp.render())
    return EXIT_HOLDS


def render_table(structures: Sequence[StructureSpec], n: int, fmt: str) -> str:
    rels = [Engine(s, n).relation() for s in structures]
    if fmt == "json":
        return _dump({
            "arity": n,
            "columns": [s.text for s in structures],
            "rows": [
                {
                    "a": q[0], "b": q[1], "c": q[2], "d": q[3],
                    "verdicts": {s.text: rel[q] for s, rel in zip(structures, rels)},
                }
                for q in QUADRUPLES
            ],
        })
    rows = [[*q, *(_tf(rel[q]) for rel in rels)] for q in QUADRUPLES]
    if fmt == "csv":
        return _csv_table(["a", "b", "c", "d", *(s.text for s in structures)], rows)
    return _md_table(["a", "b", "c", "d", *(s.name for s in structures)], rows)


def cmd_table(args: argparse.Namespace) -> int:
    print(render_table(args.structures, args.arity, args.format))
    return EXIT_HOLDS


def render_audit(s: StructureSpec, n: int, fmt: str, superstructure: StructureSpec | None = None) -> str:
    report = audit(s, n)
    entries = list(report.entries)
    if superstructure is not None:
        entries.append(check_monotonicity(s, superstructure, n))
    if fmt == "json":
        out = {"structure": s.text, "arity": n, "axioms": [e.as_dict() for e in entries]}
        if superstructure is not None:
            out["superstructure"] = superstructure.text
        return _dump(out)
    rows = [
        [e.axiom, "holds" if e.holds else "fails", " ".join("".join(map(str, t)) for t in e.counterexamples)]
        for e in entries
    ]
    if fmt == "csv":
        return _csv_table(["axiom", "holds", "counterexamples"], rows)
    return _md_table(["axiom", "holds", "counterexamples"], rows)


def cmd_audit(args: argparse.Namespace) -> int:
    if args.superstructure is not None and not args.structure <= args.superstructure:
        print(f"error: {args.structure.text} is not a substructure of {args.superstructure.text}",
              file=sys.stderr)
        return EXIT_USAGE
    print(render_audit(args.structure, args.arity, args.format, args.superstructure))
    return EXIT_HOLDS


def render_comparison(n: int, fmt: str) -> str:
    rows = comparison_table(n)
    if fmt == "json":
        return _dump({
            "arity": n,
            "rows": [
                {
                    "a": r.quadruple[0], "b": r.quadruple[1], "c": r.quadruple[2], "d": r.quadruple[3],
                    "miclet": r.miclet, "klein": r.klein,
                    "neg_structure": r.neg_structure, "full_structure": r.full_structure,
                }
                for r in rows
            ],
        })
    cells = [
        [*r.quadruple, _tf(r.miclet), _tf(r.klein), _tf(r.neg_structure), _tf(r.full_structure)]
        for r in rows
    ]
    if fmt == "csv":
        return _csv_table(["a", "b", "c", "d", "miclet", "klein", "neg_structure", "full_structure"], cells)
    return _md_table(["a", "b", "c", "d", "Miclet", "Klein", "(𝔹,¬,B)", "(𝔹,∨,¬,B)"], cells)


def cmd_compare(args: argparse.Namespace) -> int:
    print(render_comparison(args.arity, args.format))
    return EXIT_HOLDS


def cmd_clone(args: argparse.Namespace) -> int:
    terms = enumerate_term_functions(args.structure, args.arity)
    rows = [
        ["".join(map(str, t.values)), pretty(terms.representative[t], args.arity),
         to_text(terms.representative[t])]
        for t in terms.ordered
    ]
    if args.format == "json":
        print(_dump({
            "structure": args.structure.text,
            "arity": args.arity,
            "tables": [{"values": r[0], "term": r[2]} for r in rows],
        }))
    elif args.format == "csv":
        print(_csv_table(["values", "term", "text"], rows))
    else:
        print(_md_table(["values", "term", "text"], rows))
    return EXIT_HOLDS


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--arity", type=_arity, default=DEFAULT_ARITY,
                        help=f"number of variables available to justifications (1..{ARITY_CAP})")
    common.add_argument("--format", choices=("md", "csv", "json"), default="md")
    common.add_argument("--json", dest="format", action="store_const", const="json",
                        help="shorthand for --format json")
    common.add_argument("--show-trivial", action="store_true",
                        help="list justifications that justify every quadruple")
    common.add_argument("--check-stability", action="store_true",
                        help="first confirm the verdicts agree at every arity from --arity up to the cap")

    parser = argparse.ArgumentParser(prog="boolprop", description="Boolean analogical proportions a:b::c:d.")
    sub = parser.add_subparsers(dest="command", required=True)

    def quad(p: argparse.ArgumentParser, letters: str) -> None:
        for letter in letters:
            p.add_argument(letter, type=_bit)

    p = sub.add_parser("decide", parents=[common], help="decide S ⊨ a:b::c:d")
    p.add_argument("structure", type=_structure)
    quad(p, "abcd")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("solve", parents=[common], help="all d with S ⊨ a:b::c:d")
    p.add_argument("structure", type=_structure)
    quad(p, "abc")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("explain", parents=[common], help="justifications and witnesses for a:b::c:d")
    p.add_argument("structure", type=_structure)
    quad(p, "abcd")
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("table", parents=[common], help="16-row verdict table over structures")
    p.add_argument("structures", type=_structure, nargs="+")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("audit", parents=[common], help="check the axiom battery")
    p.add_argument("structure", type=_structure)
    p.add_argument("--superstructure", type=_structure, default=None,
                   help="also check monotonicity into this larger structure")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("compare", parents=[common], help="Miclet / Klein / engine comparison table")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("clone", parents=[common], help="term functions with representative terms")
    p.add_argument("structure", type=_structure)
    p.set_defaults(func=cmd_clone)
    return parser


def _structures_of(args: argparse.Namespace) -> list[StructureSpec]:
    if args.command == "compare":
        return [NEG_STRUCTURE, FULL_STRUCTURE]
    if args.command == "table":
        return list(args.structures)
    return [args.structure]


def _check_stability(args: argparse.Namespace) -> bool:
    n_lo = min(args.arity, ARITY_CAP - 1)
    ok = True
    for s in _structures_of(args):
        report = stable_arity_check(s, n_lo, ARITY_CAP)
        for q, row in report.disagreements:
            ok = False
            detail = ", ".join(f"n={n}: {_tf(v)}" for n, v in row.items())
            print(f"unstable: {s.text} {render_quadruple(q)} ({detail})", file=sys.stderr)
    return ok


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    if args.check_stability and not _check_stability(args):
        return EXIT_UNSTABLE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
