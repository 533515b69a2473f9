"""Command-line interface: ``star-anagrams <subcommand> ...``.

Exit codes: 0 success (for ``classify``: the pair is a star), 1 the pair is
not a star or an I/O failure, 2 usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import corpus
from .classify import classify_anagram
from .core import path_steps
from .errors import OutOfRangeError, StarAnagramError
from .paths import AnagramPair, iter_paths
from .render import FigureSpec, render_gallery, render_polygon
from .shapes import MAX_N, MIN_N, enumerate_star_shapes

EXIT_OK, EXIT_NOT_STAR, EXIT_USAGE = 0, 1, 2
EXIT_IO = 1


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _pair(w1: str, w2: str) -> AnagramPair:
    a, b = corpus.normalize_word(w1), corpus.normalize_word(w2)
    if a is None or b is None:
        raise StarAnagramError(f"words must contain letters only: {w1!r}, {w2!r}")
    return AnagramPair(a, b)


def _orders(o_rot, o_ref) -> str:
    return f"O_rot={-1 if o_rot is None else o_rot}, O_ref={-1 if o_ref is None else o_ref}"


def cmd_classify(args) -> int:
    pair = _pair(args.first, args.second)
    c = classify_anagram(pair, cap=args.cap)
    line = f"{c.star_class.label}, {_orders(c.o_rot, c.o_ref)}"
    if c.perfect_step is not None:
        line += f", S={c.perfect_step}, L={c.edge_length}"
    print(f"{pair.first} -> {pair.second}")
    print(line)
    print(f"path: {list(c.path)}")
    print(f"steps: {list(path_steps(c.path))}")
    return EXIT_OK if c.is_star else EXIT_NOT_STAR


def print_histogram(report: corpus.CorpusReport, out=None) -> None:
    out = out or sys.stdout
    labels = [c.label for c in corpus.STAR_CLASSES]
    print(f"{'N':>3}  " + "  ".join(f"{lab:>16}" for lab in labels) + f"  {'total':>6}", file=out)
    for n, row in report.histogram().items():
        cells = "  ".join(f"{row[lab][0]:>7} ({row[lab][1]:>4} cl)" for lab in labels)
        print(f"{n:>3}  {cells}  {sum(row[lab][0] for lab in labels):>6}", file=out)


def print_summary(report: corpus.CorpusReport, out=None) -> None:
    out = out or sys.stdout
    classes = report.class_counts()
    print(f"words: {report.word_count}", file=out)
    print(f"anagrams: {report.anagram_count}", file=out)
    print(f"stars: {report.star_count} ("
          + ", ".join(f"{k} {v}" for k, v in classes.items())
          + f"); star fraction {100 * report.star_fraction:.2f}%", file=out)
    print(f"excluded pairs: {len(report.excluded_pairs)}", file=out)
    print(f"starriness violations: {len(report.starriness_violations)}", file=out)
    print(f"perfection violations: {len(report.perfection_violations)}", file=out)
    n_ce = len(report.conjecture_counterexamples)
    print(f"symmetry-reversal counterexamples: {n_ce}", file=out)
    for a, b in report.conjecture_counterexamples:
        print(f"  COUNTEREXAMPLE {a} -> {b}: symmetric, reverse is not", file=out)
    if report.autostars is not None:
        print_autostars(report.autostars, out, details=False)


def print_autostars(inv: corpus.AutostarInventory, out=None, details: bool = True) -> None:
    out = out or sys.stdout
    print(f"autostars: {inv.count()} of {inv.candidates} candidate words ("
          + ", ".join(f"{c.label} {inv.count(c.label)}" for c in corpus.STAR_CLASSES)
          + f"); {len(inv.excluded)} excluded by cap {inv.cap}", file=out)
    if details:
        for a in inv.autostars:
            extra = f", L={list(a.perfect_lengths)}" if a.perfect_lengths else ""
            print(f"  {a.word}: {a.star_class}, {_orders(a.o_rot, a.o_ref)}{extra}", file=out)
        for w in inv.excluded:
            print(f"  excluded: {w}", file=out)


def cmd_scan(args) -> int:
    wl = corpus.load_wordlist(args.wordlist)
    report = corpus.scan(wl, cap=args.cap, jobs=args.jobs, autostars=not args.no_autostars)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    formats = [args.format] if args.format else ["structured", "tabular"]
    for fmt in formats:
        name = "report.json" if fmt == "structured" else "stars.csv"
        (out / name).write_bytes(corpus.export_report(report, fmt))
    print_histogram(report)
    print_summary(report)
    return EXIT_OK


def cmd_autostars(args) -> int:
    wl = corpus.load_wordlist(args.wordlist)
    inv = corpus.find_autostars(wl, cap=args.cap, jobs=args.jobs)
    print_autostars(inv)
    return EXIT_OK


def cmd_shapes(args) -> int:
    bad = [n for n in args.n if not MIN_N <= n <= MAX_N]
    if bad:
        raise OutOfRangeError(f"N must be in {MIN_N}..{MAX_N}, got {bad[0]}")
    print(f"{'N':>3} {'asymmetric':>10} {'symmetric':>10} {'perfect':>8} {'total':>8}")
    for n in args.n:
        census = enumerate_star_shapes(n, jobs=args.jobs)
        a, s, p, t = census.row()
        print(f"{n:>3} {a:>10} {s:>10} {p:>8} {t:>8}")
    return EXIT_OK


def cmd_render(args) -> int:
    pair = _pair(args.first, args.second)
    c = classify_anagram(pair, cap=args.cap) if len(pair) >= 5 else None
    if c is not None:
        path = c.path
    else:
        path = next(iter_paths(pair))
    spec = FigureSpec(pair, path, show_steps=args.steps, show_indices=args.indices,
                      caption=args.caption)
    Path(args.out).write_text(render_polygon(spec))
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_gallery(args) -> int:
    report = corpus.import_report(Path(args.report).read_bytes())
    files = render_gallery(report, args.out)
    print(f"wrote {len(files)} figures under {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="star-anagrams",
        description="Detect, classify, census and draw star anagrams.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        p.set_defaults(fn=fn)
        return p

    def cap_jobs(p):
        p.add_argument("--cap", type=_positive, default=corpus.DEFAULT_CAP,
                       help="skip anagrams with more possible paths than this (default %(default)s)")
        p.add_argument("--jobs", type=_positive, default=1, help="worker processes (default 1)")

    p = add("classify", cmd_classify, "classify the ordered anagram FIRST -> SECOND")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--cap", type=_positive, default=None)

    p = add("scan", cmd_scan, "census every star anagram in a wordlist")
    p.add_argument("wordlist")
    cap_jobs(p)
    p.add_argument("--format", choices=["structured", "tabular"], default=None,
                   help="write only this report format (default: both)")
    p.add_argument("--no-autostars", action="store_true", help="skip the autostar search")
    p.add_argument("--out", default=".", help="output directory (default: current)")

    p = add("autostars", cmd_autostars, "list the words that are star anagrams of themselves")
    p.add_argument("wordlist")
    cap_jobs(p)

    p = add("shapes", cmd_shapes, "count distinct star polygons for word lengths N (5..12)")
    p.add_argument("n", type=int, nargs="+")
    p.add_argument("--jobs", type=_positive, default=1)

    p = add("render", cmd_render, "draw the polygon of FIRST -> SECOND as SVG")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("out")
    p.add_argument("--steps", action="store_true", help="label chords with their steps")
    p.add_argument("--indices", action="store_true", help="label nodes with their index")
    p.add_argument("--caption", default=None)
    p.add_argument("--cap", type=_positive, default=None)

    p = add("gallery", cmd_gallery, "draw every star of a structured report")
    p.add_argument("report")
    p.add_argument("out")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.fn(args)
    except StarAnagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
