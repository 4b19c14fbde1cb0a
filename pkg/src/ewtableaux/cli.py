"""Command-line entry point: ``ewtab <verb> ...`` or ``python -m ewtableaux``.

Exit status is 0 on success, 1 when the input is invalid (the message names
the broken rule) and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from . import bijections as bij
from . import permstat as ps
from . import sandpile as sp
from .core import Family, FerrersShape, ShapeError, Tableau, TableauError, ferrers_graph, parse, serialize, serialize_line
from .tableaux import enumerate_of_size, enumerate_tableaux, reflect_complement, reflect_complement_inverse, structure_stats
from .verify import SUITES, GuardrailExceeded, UnknownSuite, run_suite


class UsageError(Exception):
    pass


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _family(text: str) -> Family:
    try:
        return Family(text.upper())
    except ValueError:
        raise UsageError(f"unknown tableau kind {text!r}") from None


# -- conversions ---------------------------------------------------------------


def _tree_to_ew(t: Tableau, via: str, tree_map: str) -> Tableau:
    if tree_map == "walk":
        return bij.tree_to_ew_M(t)
    return bij.tree_to_ew_via_le(t) if via == "direct" else bij.tree_to_ew_via_le_composed(t)


def _ew_to_tree(e: Tableau, via: str, tree_map: str) -> Tableau:
    if tree_map == "walk":
        return bij.tree_from_perm(bij.psi(e))
    le = bij.ew_to_le(e) if via == "direct" else bij.ew_to_le_composed(e)
    return bij.le_to_tree(le)


CONVERSIONS: dict[tuple[Family, Family], Callable[[Tableau, str, str], Tableau]] = {
    (Family.EW, Family.LE): lambda t, via, _: bij.ew_to_le(t) if via == "direct" else bij.ew_to_le_composed(t),
    (Family.LE, Family.EW): lambda t, via, _: bij.le_to_ew(t)[0] if via == "direct" else bij.le_to_ew_composed(t),
    (Family.NEW, Family.LE): lambda t, via, _: bij.new_to_le(t),
    (Family.LE, Family.NEW): lambda t, via, _: bij.le_to_new(t)[0] if via == "direct" else bij.le_to_new_composed(t),
    (Family.TREE, Family.LE): lambda t, via, _: bij.tree_to_le(t) if via == "direct" else bij.tree_to_le_by_free_dots(t),
    (Family.LE, Family.TREE): lambda t, via, _: bij.le_to_tree(t),
    (Family.EW, Family.NEW): lambda t, via, _: reflect_complement(t),
    (Family.NEW, Family.EW): lambda t, via, _: reflect_complement_inverse(t),
    (Family.TREE, Family.EW): _tree_to_ew,
    (Family.EW, Family.TREE): _ew_to_tree,
}


def cmd_convert(args) -> str:
    src, dst = _family(args.from_kind), _family(args.to_kind)
    t = parse(_read(args.file))
    if t.family is not src:
        raise TableauError(f"input is a {t.family} tableau, --from says {src}")
    if src is dst:
        return serialize(t)
    fn = CONVERSIONS.get((src, dst))
    if fn is None:
        raise UsageError(f"no conversion from {src} to {dst}")
    return serialize(fn(t, args.via, args.tree_map))


def to_perm(t: Tableau) -> tuple[int, ...]:
    if t.family in (Family.EW, Family.NEW):
        return bij.psi(t)
    if t.family is Family.LE:
        return bij.phi_le(t)
    return bij.tree_to_perm(t)


def from_perm(p, family: Family) -> Tableau:
    if family in (Family.EW, Family.NEW):
        return bij.psi_inverse(p, family)
    if family is Family.LE:
        return bij.phi_le_inverse(p)
    return bij.tree_from_perm(p)


def cmd_to_perm(args) -> str:
    return ps.format_perm(to_perm(parse(_read(args.file))))


def cmd_from_perm(args) -> str:
    return serialize(from_perm(ps.parse_perm(args.perm), _family(args.kind)))


def cmd_enumerate(args) -> str:
    family = _family(args.kind)
    if args.size is not None:
        items = enumerate_of_size(args.size, family)
    else:
        items = enumerate_tableaux(FerrersShape.of(args.shape), family)
    if args.count_only:
        return str(sum(1 for _ in items))
    return "\n".join(serialize_line(t) for t in items)


def _set(xs) -> str:
    return "{" + ",".join(map(str, sorted(xs))) + "}"


def _perm_stats_lines(p) -> list[str]:
    st = ps.stats(p)
    return [
        f"perm: {ps.format_perm(p)}",
        f"descent_bottoms: {_set(st.descent_bottoms)}",
        f"descent_tops: {_set(st.descent_tops)}",
        f"excedance_bottoms: {_set(st.excedance_bottoms)}",
        f"excedance_tops: {_set(st.excedance_tops)}",
        f"weak_excedance_bottoms: {_set(st.weak_excedance_bottoms)}",
        f"fixed_points: {_set(st.fixed_points)}",
        f"rtl_minima: {_set(st.rtl_minima)}",
        f"big_descents: {st.big_descents}",
        f"decreasing_adjacencies: {st.decreasing_adjacencies}",
        "run_decomposition: " + "-".join(ps.format_perm(b) for b in st.run_decomposition),
        f"desexc: {ps.format_perm(ps.desexc(p))}",
    ]


def cmd_stats(args) -> str:
    if args.perm is not None:
        return "\n".join(_perm_stats_lines(ps.parse_perm(args.perm)))
    t = parse(_read(args.file))
    lines = [f"kind: {t.family}", f"shape: {t.shape}", f"size: {t.size}"]
    if t.family in (Family.EW, Family.NEW):
        st = structure_stats(t)
        lines += [
            f"all_one_columns: {st.all_one_columns}",
            f"all_zero_rows: {st.all_zero_rows}",
            f"zero_containing_columns: {st.zero_containing_columns}",
            f"rows_containing_one: {st.rows_containing_one}",
            f"top_justified: {str(st.is_top_justified).lower()}",
            f"domination_free: {str(st.is_domination_free).lower()}",
            f"zero_minimal: {str(st.is_zero_minimal).lower()}",
        ]
    return "\n".join(lines + _perm_stats_lines(to_perm(t)))


def cmd_sandpile(args) -> str:
    g = ferrers_graph(FerrersShape.of(args.shape))
    if args.action == "minrec":
        found = sp.enumerate_minimal_recurrent(g)
        return "\n".join(sorted(sp.serialize_config(c) for c in found))
    if args.config is None:
        raise UsageError(f"sandpile {args.action} needs --config")
    c = sp.parse_config(args.config)
    if len(c.grains) != g.labeling.n:
        raise ValueError(f"configuration has {len(c.grains)} vertices, the graph has {g.labeling.n}")
    if args.action == "stabilize":
        out, odo = sp.stabilize(g, c, policy=args.policy)
        return f"config: {sp.serialize_config(out)}\nodometer: {sp.serialize_config(sp.SandpileConfig(odo))}"
    return "true" if sp.is_recurrent(g, c) else "false"


def cmd_verify(args) -> tuple[str, int]:
    try:
        report = run_suite(args.suite, args.max_size)
    except (UnknownSuite, GuardrailExceeded) as exc:
        raise UsageError(str(exc)) from None
    text = "\n".join(report.tsv_lines()) if args.format == "tsv" else report.table()
    return text, 0 if report.passed else 1


def render(t: Tableau) -> str:
    """Grid of cell values padded to a rectangle with '·', row labels on the
    right margin and column labels under each column."""
    lab = t.labeling()
    width = len(str(lab.n))
    ncols = t.shape.ncols
    chars = "·*" if t.family is Family.TREE else "01"

    def cell(s: str) -> str:
        return s.rjust(width)

    lines = []
    for i, row in enumerate(t.cells):
        body = [cell(chars[b]) for b in row] + [cell("·")] * (ncols - len(row))
        lines.append(" ".join(body) + "  " + str(lab.row_label[i]))
    lines.append(" ".join(cell("-" * width) for _ in range(ncols)))
    lines.append(" ".join(cell(str(lab.col_label[j])) for j in range(ncols)))
    return "\n".join(lines)


def cmd_render(args) -> str:
    return render(parse(_read(args.file)))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ewtab", description="Tableaux, permutations and sandpiles on Ferrers shapes.")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("convert", help="convert a tableau between families")
    c.add_argument("--from", dest="from_kind", required=True)
    c.add_argument("--to", dest="to_kind", required=True)
    c.add_argument("--via", choices=("direct", "composed"), default="direct")
    c.add_argument("--tree-map", choices=("le", "walk"), default="le",
                   help="tree/EW conversions: through Le tableaux or by the dot walk")
    c.add_argument("--file")
    c.set_defaults(func=cmd_convert)

    c = sub.add_parser("to-perm", help="permutation of a tableau")
    c.add_argument("--file")
    c.set_defaults(func=cmd_to_perm)

    c = sub.add_parser("from-perm", help="tableau of a permutation")
    c.add_argument("--perm", required=True)
    c.add_argument("--kind", required=True)
    c.set_defaults(func=cmd_from_perm)

    c = sub.add_parser("enumerate", help="list the tableaux of a size or shape")
    c.add_argument("--kind", required=True)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--size", type=int)
    g.add_argument("--shape")
    c.add_argument("--count-only", action="store_true")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("stats", help="statistics of a permutation or tableau")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--perm")
    g.add_argument("--file")
    c.set_defaults(func=cmd_stats)

    c = sub.add_parser("sandpile", help="sandpile model on a Ferrers graph")
    c.add_argument("action", choices=("stabilize", "recurrent", "minrec"))
    c.add_argument("--shape", required=True)
    c.add_argument("--config", help='grains as "v:g" pairs, e.g. "1:0 2:1"')
    c.add_argument("--policy", choices=("fifo", "lifo"), default="fifo")
    c.set_defaults(func=cmd_sandpile)

    c = sub.add_parser("verify", help="run an exhaustive verification suite")
    c.add_argument("--suite", required=True, help=", ".join(SUITES))
    c.add_argument("--max-size", type=int)
    c.add_argument("--format", choices=("table", "tsv"), default="table")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("render", help="draw a tableau with its border labels")
    c.add_argument("--file")
    c.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    status = 0
    try:
        result = args.func(args)
        if isinstance(result, tuple):
            result, status = result
    except UsageError as exc:
        print(f"ewtab: {exc}", file=sys.stderr)
        return 2
    except (TableauError, ShapeError, ValueError) as exc:
        print(f"ewtab: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ewtab: {exc}", file=sys.stderr)
        return 1
    if result:
        sys.stdout.write(result + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
