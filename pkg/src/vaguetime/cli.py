"""Command-line front end.

Subcommands:

* convert -- calendar expressions to Julian days and back;
* relate  -- three-state classification of all 13 relations for one pair;
* query   -- match every record in a dataset against a reference and
  condition;
* resolve -- table of resolved boundary values (optionally re-emitted as
  Turtle);
* render  -- static SVG or ASCII timeline.

Interval operands are written either as four comma-separated Julian days
"pb,rb,re,pe", as a single calendar period ("2019", "1760s", "2018-03-01"),
or as a period range "iso..iso" spanning from the first period's start to
the second one's end.  Datasets are Turtle files ("-" reads stdin).

Exit codes: 0 success, 1 partial (some records failed), 2 bad input,
3 internal consistency failure (closed forms disagree with the oracle).
"""

from __future__ import annotations

import argparse
import sys

from . import calendar as cal
from . import ontology, render, retrieval
from .allen import RELATIONS, oracle_profile, profile
from .core import OperandKind, UncertainInterval, make_uncertain
from .errors import VaguetimeError


def parse_interval_spec(
    text: str, system: cal.CalendarSystem = cal.CalendarSystem.GREGORIAN
) -> UncertainInterval:
    """Interval operand syntax: 'pb,rb,re,pe' JDs, 'iso', or 'iso..iso'."""
    text = text.strip()
    if "," in text:
        parts = text.split(",")
        if len(parts) != 4:
            raise cal.ParseError(
                f"expected four comma-separated Julian days, got {len(parts)}"
            )
        try:
            values = [float(p) for p in parts]
        except ValueError as exc:
            raise cal.ParseError(f"bad Julian day in {text!r}: {exc}") from None
        return make_uncertain(*values)
    if ".." in text:
        left, _, right = text.partition("..")
        lo = cal.period_bounds(cal.parse_iso(left, system))
        hi = cal.period_bounds(cal.parse_iso(right, system))
        return make_uncertain(lo.begin, lo.begin, hi.end, hi.end)
    bounds = cal.period_bounds(cal.parse_iso(text, system))
    return make_uncertain(bounds.begin, bounds.begin, bounds.end, bounds.end)


def _read_dataset(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _system(args) -> cal.CalendarSystem:
    return cal.CalendarSystem(args.system)


def _kind(text: str) -> OperandKind:
    return OperandKind(text)


def _fmt_jd(value: float) -> str:
    return repr(float(value))


def _condition(args) -> frozenset:
    if args.preset:
        return retrieval.preset(args.preset)
    if args.condition:
        return retrieval.as_condition(args.condition.split(","))
    raise VaguetimeError("supply --preset or --condition")


def cmd_convert(args) -> int:
    system = _system(args)
    if args.to_jd is not None:
        period = cal.parse_iso(args.to_jd, system)
        bounds = cal.period_bounds(period)
        if period.granularity is cal.Granularity.DAY:
            print(_fmt_jd(bounds.begin))
        else:
            sep = "\t" if args.format == "lines" else " "
            print(f"{_fmt_jd(bounds.begin)}{sep}{_fmt_jd(bounds.end)}")
        return 0
    try:
        jd = float(args.to_date)
    except ValueError:
        raise cal.ParseError(f"bad Julian day {args.to_date!r}") from None
    print(cal.format_julian_day(jd, system))
    return 0


def cmd_relate(args) -> int:
    system = _system(args)
    a = parse_interval_spec(args.a, system)
    b = parse_interval_spec(args.b, system)
    kind_a, kind_b = _kind(args.kind_a), _kind(args.kind_b)
    prof = profile(a, b, kind_a, kind_b)
    sep = "\t" if args.format == "lines" else None
    for rel, state in prof.items():
        if sep:
            print(f"{rel}{sep}{state}")
        else:
            print(f"{rel.value:<14} {state}")
    if args.oracle:
        oracle = oracle_profile(a, b, kind_a, kind_b)
        mismatches = [
            rel for rel in RELATIONS if prof[rel] is not oracle[rel]
        ]
        if mismatches:
            for rel in mismatches:
                print(
                    f"oracle mismatch: {rel} closed-form={prof[rel]} "
                    f"oracle={oracle[rel]}",
                    file=sys.stderr,
                )
            return 3
        if not sep:
            print("oracle check: ok")
    return 0


def _resolve_dataset(args):
    doc = ontology.parse_turtle(_read_dataset(args.dataset))
    resolved, failures = ontology.resolve_all(doc)
    return doc, resolved, failures


def _print_failures(failures) -> None:
    for failure in failures:
        print(f"error: {failure.id}: {failure.error}", file=sys.stderr)


def cmd_query(args) -> int:
    system = _system(args)
    _, resolved, failures = _resolve_dataset(args)
    by_id = {item.id: item for item in resolved}
    if args.reference in by_id:
        reference = by_id[args.reference].interval
        records = [
            (item.id, item.interval) for item in resolved
            if item.id != args.reference
        ]
    else:
        reference = parse_interval_spec(args.reference, system)
        records = [(item.id, item.interval) for item in resolved]
    condition = _condition(args)
    results = retrieval.query(records, reference, condition)
    sep = "\t" if args.format == "lines" else None
    counts = {cls: 0 for cls in retrieval.MatchClass}
    for res in results:
        assert isinstance(res, retrieval.MatchResult)  # records pre-validated
        counts[res.match] += 1
        rels = ",".join(
            rel.value for rel in sorted(res.possible_set, key=lambda r: r.index)
        )
        if sep:
            print(f"{res.record_id}{sep}{res.match}{sep}{rels}")
        else:
            print(f"{res.record_id:<28} {str(res.match):<10} possible: {rels}")
    _print_failures(failures)
    summary = (
        f"reliable={counts[retrieval.MatchClass.RELIABLE]} "
        f"possible={counts[retrieval.MatchClass.POSSIBLE]} "
        f"impossible={counts[retrieval.MatchClass.IMPOSSIBLE]} "
        f"errors={len(failures)}"
    )
    if sep:
        print("summary" + sep + summary.replace(" ", sep))
    else:
        print(summary)
    return 1 if failures else 0


def cmd_resolve(args) -> int:
    _, resolved, failures = _resolve_dataset(args)
    if args.emit:
        sys.stdout.write(ontology.emit_turtle(resolved))
        _print_failures(failures)
        return 1 if failures else 0
    sep = "\t" if args.format == "lines" else None
    for item in resolved:
        w = item.interval
        values = [_fmt_jd(v) for v in w.as_tuple()]
        if sep:
            print(sep.join([item.id, *values]))
        else:
            prov = ", ".join(
                f"{name}: {source}" for name, source in item.provenance.items()
            )
            print(f"{item.id:<28} {' '.join(values)}")
            print(f"{'':<28} [{prov}]")
    _print_failures(failures)
    return 1 if failures else 0


def cmd_render(args) -> int:
    _, resolved, failures = _resolve_dataset(args)
    if failures:
        _print_failures(failures)
        return 2
    if args.format == "ascii":
        text = render.render_ascii(resolved)
    else:
        text = render.render_svg(resolved)
        if not text.endswith("\n"):
            text += "\n"
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vaguetime",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("text", "lines")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument(
            "--system",
            choices=[s.value for s in cal.CalendarSystem],
            default="gregorian",
            help="calendar system for parsing and display",
        )

    p = sub.add_parser("convert", help="calendar expression <-> Julian day")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--to-jd", metavar="ISO",
                       help="period expression; prints its Julian day bounds")
    group.add_argument("--to-date", metavar="JD",
                       help="Julian day; prints date and time of day")
    add_common(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("relate", help="three-state classification of one pair")
    p.add_argument("a", help="first interval: 'pb,rb,re,pe', 'iso', 'iso..iso'")
    p.add_argument("b", help="second interval")
    p.add_argument("--kind-a", choices=["interval", "instant"],
                   default="interval")
    p.add_argument("--kind-b", choices=["interval", "instant"],
                   default="interval")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the brute-force oracle (exit 3 on mismatch)")
    add_common(p)
    p.set_defaults(func=cmd_relate)

    p = sub.add_parser("query", help="match dataset records against a condition")
    p.add_argument("dataset", help="Turtle file, or - for stdin")
    p.add_argument("--reference", required=True,
                   help="resource id in the dataset, or an interval spec")
    p.add_argument("--preset", help="named condition: "
                   + ", ".join(sorted(retrieval.PRESETS)))
    p.add_argument("--condition", help="comma-separated relation names")
    add_common(p)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("resolve", help="resolve a dataset to boundary values")
    p.add_argument("dataset", help="Turtle file, or - for stdin")
    p.add_argument("--emit", action="store_true",
                   help="re-export as Turtle with Julian-day literals")
    add_common(p)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("render", help="render a dataset as a timeline")
    p.add_argument("dataset", help="Turtle file, or - for stdin")
    p.add_argument("--output", help="output file (default stdout)")
    add_common(p, formats=("svg", "ascii"))
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VaguetimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
