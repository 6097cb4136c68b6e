"""Command line entry point: ``graphstirling <command> ...``.

Exit codes: 0 success, 1 cross-check disagreement, 2 input error, 3 resource
cap exceeded, 4 domain error (graph not quasi-threshold).
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import random
import sys
from collections import Counter
from pathlib import Path

from . import __version__
from .counting import (
    CountSeq,
    cross_check,
    stirling_enumerate,
    stirling_from_chromatic,
    stirling_matching,
    stirling_rook,
    stirling_weyl,
)
from .dyck import (
    DyckWord,
    board_above,
    dyck_words,
    parse_word,
    random_dyck_word,
    squares_below,
    turning_squares,
)
from .errors import NotQuasiThreshold, TooLarge, WordError
from .families import FamilySpec, family_graph, family_stirling, family_word, parse_family
from .graphs import (
    Graph,
    chromatic_polynomial,
    format_graph,
    graph_to_word,
    is_forest,
    read_graph,
    recognize_qt,
    word_to_graph,
)
from .normality import kahn_check, normality_report

log = logging.getLogger("graphstirling")

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_CAP, EXIT_DOMAIN = 0, 1, 2, 3, 4

CSV_COLUMNS = ["n", "f", "chi", "g", "mean", "variance", "kolmogorov", "real_rooted", "ratio"]


class InputError(Exception):
    pass


def _fmt(x) -> str:
    return format(float(x), ".10g")


def _squares(sqs) -> str:
    return " ".join(str(sq) for sq in sorted(sqs))


# -- word ---------------------------------------------------------------------------


def cmd_word(args) -> int:
    w = parse_word(args.text)
    views = [v for v in ("board", "below", "turns", "graph") if getattr(args, v)]
    g = word_to_graph(w)[0] if "graph" in views else None
    if args.json:
        out: dict = {"word": w.symbols, "n": w.n}
        if "board" in views:
            b = board_above(w)
            out["board"] = {
                "n": b.n,
                "heights": list(b.heights),
                "squares": [list(sq) for sq in sorted(b.squares())],
            }
        if "below" in views:
            out["below"] = [list(sq) for sq in sorted(squares_below(w))]
        if "turns" in views:
            out["turns"] = [list(sq) for sq in sorted(turning_squares(w))]
        if g is not None:
            out["graph"] = {"n": g.n_vertices, "edges": [list(e) for e in sorted(g.edges)]}
        print(json.dumps(out))
        return EXIT_OK
    if not views:
        print(f"{w.symbols} n={w.n}")
    if "board" in views:
        print(_squares(board_above(w).squares()))
    if "below" in views:
        print(_squares(squares_below(w)))
    if "turns" in views:
        print(_squares(turning_squares(w)))
    if g is not None:
        print(format_graph(g), end="")
    return EXIT_OK


# -- stirling -----------------------------------------------------------------------------

WORD_METHODS = ("weyl", "rook", "matching")


def _family_from_args(args, n: int | None = None) -> FamilySpec:
    try:
        text = args.family if getattr(args, "family", None) is not None else args.spec
        return parse_family(text, n=n, components=args.components, seed=args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _stirling_for_graph(g: Graph, method: str) -> CountSeq:
    if method == "auto":
        if is_forest(g):
            method = "chromatic"
        else:
            try:
                recognize_qt(g)
                method = "rook"
            except NotQuasiThreshold:
                method = "enumerate"
    if method == "enumerate":
        return stirling_enumerate(g)
    if method == "chromatic":
        if is_forest(g):
            p = chromatic_polynomial(g)
        else:
            try:
                p = chromatic_polynomial(recognize_qt(g))
            except NotQuasiThreshold:
                p = chromatic_polynomial(g)
        return stirling_from_chromatic(p, g.n_vertices)
    return _stirling_for_word(graph_to_word(g), method)


def _stirling_for_word(w: DyckWord, method: str) -> CountSeq:
    if method in ("rook", "auto"):
        return stirling_rook(w)
    if method == "weyl":
        return stirling_weyl(w)
    if method == "matching":
        return stirling_matching(w)
    g, decomposition = word_to_graph(w)
    if method == "enumerate":
        return stirling_enumerate(g)
    return stirling_from_chromatic(chromatic_polynomial(decomposition), w.n)


def cmd_stirling(args) -> int:
    method = args.method
    if args.word is not None:
        seq = _stirling_for_word(parse_word(args.word), method)
    elif args.graph is not None:
        try:
            text = Path(args.graph).read_text()
            g = read_graph(text)
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read graph file {args.graph}: {exc}") from None
        seq = _stirling_for_graph(g, method)
    else:
        spec = _family_from_args(args)
        if method == "auto":
            seq = family_stirling(spec)
        elif spec.is_forest:
            seq = _stirling_for_graph(family_graph(spec), method)
        else:
            seq = _stirling_for_word(family_word(spec), method)
    print(seq.to_json())
    return EXIT_OK


# -- crosscheck -------------------------------------------------------------------------------


def _crosscheck_words(args):
    if args.word is not None:
        yield parse_word(args.word)
    elif args.exhaustive is not None:
        for n in range(1, args.exhaustive + 1):
            yield from dyck_words(n)
    else:
        if args.nmax is None or args.nmax < 1:
            raise InputError("--random needs --nmax >= 1")
        rng = random.Random(args.seed)
        for _ in range(args.random):
            yield random_dyck_word(rng.randint(1, args.nmax), rng)


def cmd_crosscheck(args) -> int:
    count = 0
    skipped: Counter[str] = Counter()
    divergences = []
    for w in _crosscheck_words(args):
        report = cross_check(w)
        count += 1
        skipped.update(report.skipped)
        if not report.agree:
            divergences.append(report.to_dict())
            log.error("disagreement on %s: method %s at k=%d", w, *report.divergence)
    summary = {"instances": count, "agree": not divergences, "divergences": divergences, "skipped": dict(skipped)}
    if args.word is not None:
        summary["values"] = [str(v) for v in cross_check(parse_word(args.word)).reference.values]
    print(json.dumps(summary))
    return EXIT_OK if not divergences else EXIT_DISAGREE


# -- normality ----------------------------------------------------------------------------------


def normality_row(spec: FamilySpec):
    seq = family_stirling(spec)
    report = normality_report(seq)
    kahn = kahn_check(family_word(spec))
    row = {"n": spec.n, "family": spec.kind.value}
    row.update(report.to_dict())
    row["kahn"] = kahn.to_dict()
    row["f"], row["chi"], row["g"] = kahn.f, kahn.chi, row["kahn"]["g"]
    row["ratio"] = row["kahn"]["ratio"]
    return row, report, kahn


def _csv_row(spec: FamilySpec, report, kahn) -> dict:
    return {
        "n": spec.n,
        "f": kahn.f,
        "chi": kahn.chi,
        "g": _fmt(kahn.g),
        "mean": _fmt(report.stats.mean),
        "variance": _fmt(report.stats.variance),
        "kolmogorov": "degenerate" if report.degenerate else _fmt(report.kolmogorov),
        "real_rooted": report.real_rooted.status.value,
        "ratio": "" if kahn.ratio is None else _fmt(kahn.ratio),
    }


def cmd_normality(args) -> int:
    try:
        sizes = [int(tok) for tok in args.sweep.split(",") if tok.strip()]
    except ValueError:
        raise InputError(f"bad --sweep {args.sweep!r}; expected comma-separated integers") from None
    if not sizes:
        raise InputError("--sweep is empty")
    rows, csv_rows = [], []
    for n in sorted(sizes):
        spec = _family_from_args(args, n=n)
        row, report, kahn = normality_row(spec)
        if report.degenerate:
            log.warning("n=%d: degenerate distribution (single nonzero entry)", n)
        rows.append(row)
        csv_rows.append(_csv_row(spec, report, kahn))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
            writer.writeheader()
            writer.writerows(csv_rows)
    print(json.dumps(rows))
    return EXIT_OK


# -- family ---------------------------------------------------------------------------------------


def cmd_family(args) -> int:
    spec = _family_from_args(args)
    if args.emit == "word":
        if spec.is_forest:
            g = family_graph(spec)
            try:
                print(graph_to_word(g).symbols)
            except NotQuasiThreshold:
                log.warning("forest is not quasi-threshold; emitting the co-chromatic star-plus-isolated word")
                print(family_word(spec).symbols)
        else:
            print(family_word(spec).symbols)
    else:
        print(format_graph(family_graph(spec)), end="")
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------------------


def _components_arg(text: str):
    if text == "sqrt":
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer or 'sqrt'") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphstirling", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", help="views of a Dyck word")
    p.add_argument("text")
    p.add_argument("--board", action="store_true", help="squares above the path")
    p.add_argument("--below", action="store_true", help="squares below the path, above the diagonal")
    p.add_argument("--turns", action="store_true", help="squares the path turns around")
    p.add_argument("--graph", action="store_true", help="edge list of the quasi-threshold graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_word)

    def add_family_opts(q):
        q.add_argument("--components", type=_components_arg, default=None, help="forest components (int or 'sqrt')")
        q.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("stirling", help="graph Stirling sequence")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word")
    src.add_argument("--graph", help="edge-list file")
    src.add_argument("--family", help="kind:n")
    p.add_argument(
        "--method", default="auto", choices=["enumerate", "weyl", "rook", "matching", "chromatic", "auto"]
    )
    add_family_opts(p)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("crosscheck", help="compare all routes")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word")
    src.add_argument("--exhaustive", type=int, metavar="NMAX")
    src.add_argument("--random", type=int, metavar="COUNT")
    p.add_argument("--nmax", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("normality", help="normality sweep over a family")
    p.add_argument("--family", required=True, help="family kind")
    p.add_argument("--sweep", required=True, help="comma-separated sizes")
    p.add_argument("--csv")
    add_family_opts(p)
    p.set_defaults(func=cmd_normality)

    p = sub.add_parser("family", help="emit a family member")
    p.add_argument("spec", help="kind:n")
    p.add_argument("--emit", choices=["graph", "word"], default="graph")
    add_family_opts(p)
    p.set_defaults(func=cmd_family)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (WordError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NotQuasiThreshold as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
