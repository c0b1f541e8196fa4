"""Command-line front end.

Every subcommand writes machine-readable output to stdout: graph6 lines for
``gen``, ``truncate`` and ``cayley``, TSV (default) or JSON reports for the
rest.  Exit status is 0 on success, 2 on usage errors (bad flags, missing
files) and 1 when the computation itself fails.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .autgroup import are_isomorphic, automorphism_group, canonical_form
from .cayley import cayley_graph
from .classify import classify_corpus, quotient_canonical, summary_counts
from .construction import TABLE_COLUMNS, NamedGroup, enumerate_table
from .coset import CosetOverflow, max_cosets_from_env, parse_word, read_presentation, todd_coxeter
from .families import FAMILY_NAMES, FamilySpec, make_family
from .graph import Graph, encode_graph6, girth, read_graph6_file
from .perm import Perm, format_perm
from .permgroup import read_generator_file
from .truncation import lift, lifted_subgroup, parse_labeling, projecting_subgroup, truncate

log = logging.getLogger(__name__)


class UsageError(Exception):
    pass


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def emit_report(rows: Sequence[dict], fmt: str, columns: Sequence[str] | None = None) -> str:
    """Render homogeneous rows as TSV (header first) or a JSON array of flat objects."""
    if columns is None:
        columns = list(rows[0]) if rows else []
    if fmt == "json":
        return json.dumps([{c: r[c] for c in columns} for r in rows], indent=2) + "\n"
    if fmt != "tsv":
        raise ValueError(f"unknown format {fmt!r}")
    lines = ["\t".join(columns)]
    lines += ["\t".join(_cell(r[c]) for c in columns) for r in rows]
    return "\n".join(lines) + "\n"


def _read_graphs(path: str) -> list[Graph]:
    if not Path(path).is_file():
        raise UsageError(f"no such file: {path}")
    return read_graph6_file(path)


def _one_graph(path: str) -> Graph:
    graphs = _read_graphs(path)
    if not graphs:
        raise UsageError(f"{path}: no graph found")
    return graphs[0]


def _need_file(path: str) -> str:
    if not Path(path).is_file():
        raise UsageError(f"no such file: {path}")
    return path


def _parse_params(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--params must be comma-separated integers, got {text!r}") from None


def _parse_range(text: str) -> range:
    a, sep, b = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return range(int(a), int(b) + 1)
    except ValueError:
        raise UsageError(f"--range must look like A..B, got {text!r}") from None


def _format_gens(gens: Iterable[Perm]) -> str:
    return "; ".join(format_perm(s) for s in gens) or "()"


def cmd_gen(args, out: TextIO) -> None:
    g = make_family(FamilySpec(args.family, _parse_params(args.params)))
    out.write(encode_graph6(g) + "\n")


def cmd_girth(args, out: TextIO) -> None:
    rows = [{"index": i, "n": g.n, "girth": str(girth(g))} for i, g in enumerate(_read_graphs(args.input), 1)]
    out.write(emit_report(rows, args.format, ["index", "n", "girth"]))


def cmd_aut(args, out: TextIO) -> None:
    rows = []
    for i, g in enumerate(_read_graphs(args.input), 1):
        grp = automorphism_group(g)
        rows.append({"index": i, "n": g.n, "aut_order": grp.order(), "generators": _format_gens(grp.generators)})
    out.write(emit_report(rows, args.format, ["index", "n", "aut_order", "generators"]))


def cmd_iso(args, out: TextIO) -> None:
    a, b = _one_graph(args.a), _one_graph(args.b)
    m = are_isomorphic(a, b)
    row = {"isomorphic": m is not None, "mapping": " ".join(map(str, m.images)) if m else None}
    out.write(emit_report([row], args.format, ["isomorphic", "mapping"]))


def _truncation_from_args(args):
    base = _one_graph(args.base)
    inserted = _one_graph(args.insert)
    rho = parse_labeling(Path(_need_file(args.rho)).read_text(encoding="utf-8"), base)
    return truncate(base, rho, inserted)


def cmd_truncate(args, out: TextIO) -> None:
    out.write(encode_graph6(_truncation_from_args(args).result) + "\n")


def cmd_lifts(args, out: TextIO) -> None:
    t = _truncation_from_args(args)
    group = read_generator_file(_need_file(args.group))
    if group.degree != t.base.n:
        raise ValueError(f"group degree {group.degree} differs from base order {t.base.n}")
    if args.summary:
        info = projecting_subgroup(t)
        row = {
            "group_order": group.order(),
            "lifted_order": lifted_subgroup(t, group).order(),
            "aut_order": info.aut.order(),
            "projecting_order": info.projecting.order(),
            "has_mixers": info.has_mixers,
        }
        out.write(emit_report([row], args.format, list(row)))
        return
    rows = []
    for s in group.generators:
        lifted = lift(t, s)
        rows.append({"generator": format_perm(s), "lifts": lifted is not None,
                     "lift": format_perm(lifted) if lifted is not None else None})
    out.write(emit_report(rows, args.format, ["generator", "lifts", "lift"]))


def cmd_table1(args, out: TextIO) -> None:
    if (args.n is None) == (args.range is None):
        raise UsageError("give exactly one of --n and --range")
    ns = range(args.n, args.n + 1) if args.n is not None else _parse_range(args.range)
    if ns.start < 4 or ns.stop - 1 > 20:
        raise UsageError("n must lie in 4..20")
    extra = [NamedGroup(Path(p).stem, read_generator_file(_need_file(p))) for p in args.groups]
    rows = enumerate_table(ns, extra, include_16=args.include_16, jobs=args.jobs)
    out.write(emit_report([r.as_dict() for r in rows], args.format, TABLE_COLUMNS))


def cmd_classify(args, out: TextIO) -> None:
    entries = classify_corpus(_need_file(args.input), decompose=args.decompose)
    columns = ["line_no", "n", "tag", "quotient_canonical", "aut_order"]
    if args.decompose:
        columns.append("girth_decomposition")
    rows = []
    for e in entries:
        if e.label is None:
            log.error("line %d: %s", e.line_no, e.error)
            row = {"line_no": e.line_no, "n": None, "tag": "error", "quotient_canonical": None, "aut_order": None}
        else:
            row = {"line_no": e.line_no, "n": e.n, "tag": e.label.tag,
                   "quotient_canonical": quotient_canonical(e.label), "aut_order": e.label.aut_order}
        if args.decompose:
            dec = e.girth_decomposition
            row["girth_decomposition"] = canonical_form(dec.quotient).string if dec else None
        rows.append(row)
    out.write(emit_report(rows, args.format, columns))
    for tag, count in sorted(summary_counts(entries).items()):
        print(f"{tag}\t{count}", file=sys.stderr)


def cmd_cayley(args, out: TextIO) -> None:
    pres = read_presentation(_need_file(args.presentation))
    group = todd_coxeter(pres, max_cosets_from_env())
    gens = group.generators
    connection = []
    for tok in args.connection.split(","):
        elem = Perm.identity(group.degree)
        for c in parse_word(tok.strip(), pres.generators):
            elem = elem * (gens[c // 2] if c % 2 == 0 else ~gens[c // 2])
        connection.append(elem)
    out.write(encode_graph6(cayley_graph(group, connection)) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gentrunc", description="Generalized truncations of graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("gen", help="print a named graph as graph6")
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p.add_argument("--params", help="comma-separated integer parameters")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("girth", help="girth of every graph in a graph6 file")
    p.add_argument("--in", dest="input", required=True)
    fmt(p)
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("aut", help="automorphism group order and generators (1-based cycles)")
    p.add_argument("--in", dest="input", required=True)
    fmt(p)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("iso", help="isomorphism test between the first graphs of two files")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    fmt(p)
    p.set_defaults(func=cmd_iso)

    for name, func, helptext in (("truncate", cmd_truncate, "build a generalized truncation"),
                                 ("lifts", cmd_lifts, "test which group generators lift")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--base", required=True)
        p.add_argument("--rho", required=True)
        p.add_argument("--insert", required=True)
        if name == "lifts":
            p.add_argument("--group", required=True)
            p.add_argument("--summary", action="store_true", help="report group, lift and mixer orders")
            fmt(p)
        p.set_defaults(func=func)

    p = sub.add_parser("table1", help="truncations of K_n by C_(n-1) from 2-transitive groups")
    p.add_argument("--n", type=int)
    p.add_argument("--range")
    p.add_argument("--include-16", action="store_true")
    p.add_argument("--groups", action="append", default=[], metavar="FILE")
    p.add_argument("--jobs", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("classify", help="classify cubic vertex-transitive graphs of girth 3, 4, 5")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--decompose", action="store_true",
                   help="also try a girth-cycle decomposition for unclassified graphs")
    fmt(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cayley", help="Cayley graph of a finitely presented group")
    p.add_argument("--presentation", required=True)
    p.add_argument("--connection", required=True, help="comma-separated words, e.g. a,b,c")
    p.set_defaults(func=cmd_cayley)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        args.func(args, out)
    except UsageError as exc:
        print(f"gentrunc {args.command}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, CosetOverflow, RuntimeError) as exc:
        print(f"gentrunc {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
