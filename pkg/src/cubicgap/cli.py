"""Command-line surface: batch certification, families, enumeration, reports.

graph6 flows on stdin/stdout ("-" selects stdin for graph-consuming
commands); verdicts are JSON with exact rational strings.  Exit codes: 0
success, 1 verification failure, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .certify import (adjacency_matrix, find_negative_witness, gap_check, interval_json)
from .corona import enumerate_girth5_extensions
from .families import build_xn, sporadic
from .generate import DEFAULT_CAP, EnumSpec, enumerate_cubic, verify_classification
from .graphs import parse_graph6, to_graph6
from .intmatrix import char_poly
from .lemmas import lemma_replay
from .roots import Interval, count_roots_in


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _read_graphs(source: str):
    """Yield (line_number, Graph) from a file path or stdin ('-')."""
    stream = sys.stdin if source == "-" else open(source, "r", encoding="ascii")
    try:
        for lineno, line in enumerate(stream, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield lineno, parse_graph6(line)
            except ValueError as exc:
                raise SystemExit(f"line {lineno}: malformed graph6: {exc}")
    finally:
        if stream is not sys.stdin:
            stream.close()


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _cmd_spectrum(args) -> int:
    for _, g in _read_graphs(args.graphs):
        p = char_poly(adjacency_matrix(g))
        n = max(g.n, 1)
        counts = []
        for k in range(-n, n):
            iv = Interval(Fraction(k), Fraction(k + 1), False, k + 1 != n)
            c = count_roots_in(p, iv, with_multiplicity=True)
            counts.append({"interval": interval_json(iv), "count": c})
        _emit({
            "graph6": to_graph6(g).decode("ascii"),
            "char_poly": [str(c) for c in p.coeffs],
            "unit_interval_counts": counts,
        })
    return 0


def _cmd_gap(args) -> int:
    iv = Interval(args.lo, args.hi, not args.closed_lo, not args.closed_hi)
    all_gapped = True
    for _, g in _read_graphs(args.graphs):
        verdict = gap_check(g, iv)
        payload = verdict.as_json_dict()
        if args.witness and not verdict.has_gap:
            w = find_negative_witness(g, min(g.n, args.witness_max_size))
            if w is not None:
                payload["witness"] = w.as_json_dict()
        _emit(payload)
        all_gapped = all_gapped and verdict.has_gap
    return 0 if all_gapped else 1


def _cmd_witness(args) -> int:
    for _, g in _read_graphs(args.graphs):
        w = find_negative_witness(g, min(args.max_size, g.n))
        if w is None:
            print("none")
        else:
            _emit(w.as_json_dict())
    return 0


def _cmd_family(args) -> int:
    if (args.name is None) == (args.xn is None):
        raise SystemExit2("family needs exactly one of --name or --xn")
    if args.name:
        g, _ = sporadic(args.name.upper())
    else:
        if args.xn < 2:
            raise SystemExit2("--xn must be at least 2")
        g = build_xn(args.xn)
    sys.stdout.write(to_graph6(g).decode("ascii") + "\n")
    return 0


def _cmd_spectrum_record(args) -> int:
    _, record = sporadic(args.name.upper())
    _emit({"name": record.name, "spectrum": record.as_json()})
    return 0


def _cmd_corona5(args) -> int:
    survivors = enumerate_girth5_extensions()
    for mg in survivors:
        sys.stdout.write(to_graph6(mg.graph).decode("ascii") + "\n")
        sys.stdout.write(mg.core_mask_string() + "\n")
    print(f"count {len(survivors)}")
    return 0


def _cmd_enumerate(args) -> int:
    spec = EnumSpec(args.n, args.min_girth)
    for g in enumerate_cubic(spec, cap=args.cap):
        sys.stdout.write(to_graph6(g).decode("ascii") + "\n")
    return 0


def _cmd_verify(args) -> int:
    report = verify_classification(args.upto, cap=max(args.upto, DEFAULT_CAP))
    _emit(report.as_json_dict())
    if not report.ok:
        for line in report.failures:
            print(f"FAIL {line}", file=sys.stderr)
    return 0 if report.ok else 1


def _cmd_replay(args) -> int:
    rows = lemma_replay()
    if args.json:
        _emit([r.as_json_dict() for r in rows])
    else:
        width = max(len(r.lemma_id) for r in rows)
        for r in rows:
            exp = ",".join(map(str, r.expected))
            got = ",".join(map(str, r.computed))
            status = "ok" if r.match else "MISMATCH"
            print(f"{r.lemma_id:<{width}}  expected {exp:>12}  computed {got:>12}  {status}")
        print(f"{sum(r.match for r in rows)}/{len(rows)} witness determinants match")
    return 0 if all(r.match for r in rows) else 1


class SystemExit2(SystemExit):
    def __init__(self, message: str):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(2)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubicgap",
                                     description="exact spectral-gap certification for cubic graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="exact char poly and unit-interval root counts")
    p.add_argument("graphs", help="graph6 file or - for stdin")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("gap", help="count eigenvalues in a rational interval")
    p.add_argument("--lo", type=_parse_rational, required=True)
    p.add_argument("--hi", type=_parse_rational, required=True)
    p.add_argument("--closed-lo", action="store_true", help="include the lower endpoint")
    p.add_argument("--closed-hi", action="store_true", help="include the upper endpoint")
    p.add_argument("--witness", action="store_true", help="attach a negative-minor witness when the gap fails")
    p.add_argument("--witness-max-size", type=int, default=8)
    p.add_argument("graphs", help="graph6 file or - for stdin")
    p.set_defaults(func=_cmd_gap)

    p = sub.add_parser("witness", help="search for a negative principal minor of A(A+2I)")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("graphs", help="graph6 file or - for stdin")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("family", help="emit a classification-list graph as graph6")
    p.add_argument("--name", choices=["prism", "k33", "petersen", "dodecahedron", "tutte8"])
    p.add_argument("--xn", type=int, help="emit X(n) for the given n >= 2")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("sporadic-spectrum", help="exact spectrum record of a sporadic graph (JSON)")
    p.add_argument("name", choices=["prism", "k33", "petersen", "dodecahedron", "tutte8"])
    p.set_defaults(func=_cmd_spectrum_record)

    p = sub.add_parser("corona5", help="the 13 girth-5 corona extensions (graph6 + core mask)")
    p.set_defaults(func=_cmd_corona5)

    p = sub.add_parser("enumerate", help="stream connected cubic graphs, isomorph-free")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-girth", type=int, default=3)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive classification check up to n vertices")
    p.add_argument("--upto", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("replay", help="recompute every witness determinant from the case analysis")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_replay)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit2 as exc:
        return 2
    except SystemExit as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
