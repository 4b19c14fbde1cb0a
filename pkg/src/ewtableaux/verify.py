"""Exhaustive verification suites for the counting results.

Each suite enumerates objects for every size up to ``max_n`` and records
rows of (n, key, expected, observed).  Expected values come from recurrences
or from an independent count; nothing is read from a table.

The worker count for the per-size fan-out is read from ``EWTAB_WORKERS``
(default: the machine's CPU count).  Results are merged in size order, so the
report does not depend on scheduling.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Callable, Hashable, Iterable, TypeVar

from . import permstat as ps
from .bijections import psi, psi_inverse, psi_passes
from .core import Family, Tableau, ferrers_graph, serialize_line
from .sandpile import (
    SpanningSubgraph,
    config_of,
    enumerate_minimal_recurrent,
    external_activity,
    find_directed_cycle,
    has_directed_4cycle,
    is_spanning_tree,
    longest_directed_path,
    orientation_of,
    Orientation,
    row_major_order,
    toppling_order_check,
)
from .tableaux import (
    count_tableaux,
    enumerate_tableaux,
    shapes_of_size,
    shapes_with_cells,
    structure_stats,
)

T = TypeVar("T")

MAX_COUNTEREXAMPLES = 10


class UnknownSuite(ValueError):
    pass


class GuardrailExceeded(ValueError):
    pass


# -- expected-value generators ----------------------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def eulerian(n: int, k: int) -> int:
    """Permutations of n with k excedances (equivalently k descents)."""
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k >= n:
        return 0
    return (k + 1) * eulerian(n - 1, k) + (n - k) * eulerian(n - 1, k - 1)


@lru_cache(maxsize=None)
def fibonacci(m: int) -> int:
    """F_0 = F_1 = 1."""
    a, b = 1, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def narayana(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if not 1 <= k <= n:
        return 0
    return comb(n, k) * comb(n, k - 1) // n


def distribution(objects: Iterable[T], statistic: Callable[[T], Hashable]) -> dict:
    """Exact histogram of a statistic, keys in sorted order."""
    counts = Counter(statistic(x) for x in objects)
    return dict(sorted(counts.items()))


# -- report ------------------------------------------------------------------


@dataclass
class VerificationReport:
    suite: str
    max_n: int
    label: str = "THEOREM"
    rows: list[tuple[int, str, int, int]] = field(default_factory=list)
    counterexamples: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples and all(e == o for _, _, e, o in self.rows)

    @property
    def status(self) -> str:
        if not self.passed:
            return "FAIL"
        return "CONJECTURE-CONSISTENT" if self.label == "CONJECTURE" else "PASS"

    def add(self, n: int, key: str, expected: int, observed: int) -> None:
        self.rows.append((n, key, expected, observed))

    def counterexample(self, text: str) -> None:
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(text)

    def tsv_lines(self) -> list[str]:
        return [
            f"{self.suite}\t{n}\t{key}\t{e}\t{o}\t{'PASS' if e == o else 'FAIL'}"
            for n, key, e, o in self.rows
        ]

    def table(self) -> str:
        lines = [f"suite {self.suite} up to {self.max_n}: {self.status} ({self.seconds:.2f}s)"]
        lines += [f"{n} {key} {e} {o} {'PASS' if e == o else 'FAIL'}" for n, key, e, o in self.rows]
        for c in self.counterexamples:
            lines.append(f"counterexample {c}")
        return "\n".join(lines)


# -- shared enumeration -------------------------------------------------------


def perms(n: int):
    return permutations(range(1, n + 1))


def ew_by_perm(n: int):
    """(p, EW tableau) for every p in S_n."""
    for p in perms(n):
        yield p, psi_inverse(p, Family.EW)


def new_by_perm(n: int):
    for p in perms(n):
        yield p, psi_inverse(p, Family.NEW)


def _k_rows(report: VerificationReport, n: int, expected: dict, observed: dict, prefix: str = "k=") -> None:
    for k in sorted(set(expected) | set(observed)):
        report.add(n, f"{prefix}{k}", expected.get(k, 0), observed.get(k, 0))


# -- suites: each returns (rows, counterexamples) for one size ---------------


def _shapes(n: int):
    r = VerificationReport("shapes", n)
    by_bottoms = distribution(perms(n), lambda p: frozenset(ps.excedance_bottoms(p)))
    for shape in shapes_of_size(n, Family.EW):
        rows = frozenset(border_rows(shape) - {0})
        key = "rows=" + ",".join(map(str, sorted(rows | {0})))
        r.add(n, key, by_bottoms.get(rows, 0), count_tableaux(shape, Family.EW))
    return r


def border_rows(shape) -> set[int]:
    from .core import border_labels

    return set(border_labels(shape, Family.EW).row_label)


def _fibonacci(n: int):
    r = VerificationReport("fibonacci", n)
    by_k: Counter = Counter()
    for _, e in ew_by_perm(n):
        if structure_stats(e).is_zero_minimal:
            by_k[e.shape.row_lengths[0]] += 1
    r.add(n, "total", fibonacci(2 * n - 2), sum(by_k.values()))
    for k in range(1, n + 1):
        r.add(n, f"k={k}", comb(2 * n - 1 - k, k - 1), by_k.get(k, 0))
    return r


def _stirling_top(n: int):
    r = VerificationReport("stirling_top", n)
    observed: Counter = Counter()
    for _, t in new_by_perm(n):
        if structure_stats(t).is_top_justified:
            observed[t.shape.nrows] += 1
    _k_rows(r, n, {k: stirling2(n, k) for k in range(1, n + 1)}, observed)
    return r


def _stirling_domfree(n: int):
    r = VerificationReport("stirling_domfree", n)
    tabs: Counter = Counter()
    words: Counter = Counter()
    for p, t in new_by_perm(n):
        st = structure_stats(t)
        k = st.zero_containing_columns
        good_word = p[0] == 1 and ps.avoids(p, ps.VINCULAR_32_1)
        if st.is_domination_free:
            tabs[k] += 1
        if good_word:
            words[n - len(ps.rtl_minima(p))] += 1
        if st.is_domination_free != good_word or (good_word and k != n - len(ps.rtl_minima(p))):
            r.counterexample(f"{serialize_line(t)} {ps.format_perm(p)}")
    expected = {k: stirling2(n - 1, n - 1 - k) for k in range(n)}
    _k_rows(r, n, expected, tabs, "tableaux k=")
    _k_rows(r, n, expected, words, "perms k=")
    return r


def _bigdesc(n: int):
    r = VerificationReport("bigdesc", n)
    expected = distribution(perms(n), ps.big_descents)
    observed = distribution((t for _, t in new_by_perm(n)), lambda t: structure_stats(t).zero_containing_columns)
    _k_rows(r, n, expected, observed)
    return r


def _eulerian(n: int):
    r = VerificationReport("eulerian", n, label="CONJECTURE")
    observed = distribution((t for _, t in ew_by_perm(n)), lambda t: structure_stats(t).zero_containing_columns)
    _k_rows(r, n, {k: eulerian(n, k) for k in range(n)}, observed)
    return r


def _allzero(n: int):
    r = VerificationReport("allzero", n)
    fixed = distribution(perms(n), lambda p: len(ps.fixed_points(p) - {1}))
    adj = distribution(perms(n), ps.decreasing_adjacencies)
    rows = distribution((t for _, t in ew_by_perm(n)), lambda t: structure_stats(t).all_zero_rows)
    _k_rows(r, n, fixed, rows, "allzero k=")
    _k_rows(r, n, fixed, adj, "decadj k=")
    return r


def _fixedpts(n: int):
    r = VerificationReport("fixedpts", n)
    bad_ew = bad_new = 0
    for p, e in ew_by_perm(n):
        fixed = ps.fixed_points(ps.desexc(p))
        if structure_stats(e).all_one_column_labels != fixed:
            bad_ew += 1
            r.counterexample(serialize_line(e))
    for p, t in new_by_perm(n):
        fixed = ps.fixed_points(ps.desexc(p))
        st = structure_stats(t)
        # 1 is a fixed point exactly when the top row is the only all-1 row
        all_one_rows = [i for i, row in enumerate(t.cells) if all(row)]
        one_fixed = all_one_rows == [0]
        if st.all_one_column_labels != fixed - {1} or (1 in fixed) != one_fixed:
            bad_new += 1
            r.counterexample(serialize_line(t))
    r.add(n, "EW-mismatches", 0, bad_ew)
    r.add(n, "NEW-mismatches", 0, bad_new)
    return r


def _second_row_unique_zero(e: Tableau) -> bool:
    return e.shape.nrows >= 2 and e.cells[1].count(0) == 1


def _pattern231(n: int):
    r = VerificationReport("pattern231", n)
    bad = 0
    for p, e in ew_by_perm(n):
        if e.shape.nrows < 2:
            continue
        avoids = ps.avoids(p, "231")
        if avoids and not _second_row_unique_zero(e):
            bad += 1
            r.counterexample(serialize_line(e))
    r.add(n, "implication-violations", 0, bad)
    return r


def _row_form_213(e: Tableau) -> bool:
    cells = e.cells
    for i, row in enumerate(cells):
        if 1 not in row:
            continue
        j = row.index(1)
        if 0 in row[j:]:
            return False
        if any(cells[k][j] for k in range(i + 1, len(cells)) if len(cells[k]) > j):
            return False
    return True


def _pattern213(n: int):
    r = VerificationReport("pattern213", n)
    fwd = back = 0
    for p, e in ew_by_perm(n):
        avoids = ps.avoids(p, "213")
        form = _row_form_213(e)
        if avoids and not form:
            fwd += 1
            r.counterexample(serialize_line(e))
        if form and not avoids:
            back += 1
            r.counterexample(serialize_line(e))
    r.add(n, "avoid=>form-violations", 0, fwd)
    r.add(n, "form=>avoid-violations", 0, back)
    return r


def _pattern231new(n: int):
    r = VerificationReport("pattern231new", n)
    bad = 0
    for p, t in new_by_perm(n):
        if ps.avoids(p, "231") and not structure_stats(t).is_top_justified:
            bad += 1
            r.counterexample(serialize_line(t))
    r.add(n, "implication-violations", 0, bad)
    return r


def _reachable(succ: dict[int, list[int]], v: int) -> set[int]:
    seen, stack = set(), [v]
    while stack:
        u = stack.pop()
        for w in succ[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _paths(n: int):
    r = VerificationReport("paths", n)
    bad_len = bad_block = 0
    for p, e in ew_by_perm(n):
        blocks = ps.run_decomposition(p)
        o = orientation_of(e)
        # the blocks partition 1..n; the sink 0 lies outside every block
        if longest_directed_path(o) - 1 != len(blocks):
            bad_len += 1
            r.counterexample(serialize_line(e))
        block_of = {x: k for k, b in enumerate(blocks) for x in b}
        succ = o.successors()
        for v in block_of:
            if any(block_of.get(w) == block_of[v] for w in _reachable(succ, v)):
                bad_block += 1
                r.counterexample(serialize_line(e))
                break
    r.add(n, "longest-path-mismatches", 0, bad_len)
    r.add(n, "same-block-path-violations", 0, bad_block)
    return r


def _ordering(n: int):
    r = VerificationReport("ordering", n)
    bad_order = bad_bottoms = 0
    for p, e in ew_by_perm(n):
        if psi(e) != p:
            r.counterexample(serialize_line(e))
        rows = set(e.labeling().row_label) - {0}
        # the letter just before a row label is larger, before a column label smaller
        word = (0,) + p
        ok = all((word[k] in rows) == (word[k - 1] > word[k]) for k in range(1, len(word)))
        passes = psi_passes(e)
        for k, (kind, labels) in enumerate(passes):
            want = sorted(labels, reverse=kind == "row")
            if kind != ("col" if k % 2 == 0 else "row") or list(labels) != want:
                ok = False
        if not ok:
            bad_order += 1
            r.counterexample(serialize_line(e))
        if ps.descent_bottoms(p) != rows:
            bad_bottoms += 1
    r.add(n, "ordering-violations", 0, bad_order)
    r.add(n, "descent-bottom-mismatches", 0, bad_bottoms)
    return r


def _runblocks(n: int):
    r = VerificationReport("runblocks", n)
    bad = 0
    for p, e in ew_by_perm(n):
        passes = [labels for _, labels in psi_passes(e)]
        if [tuple(b) for b in ps.run_decomposition(p)] != passes:
            bad += 1
            r.counterexample(serialize_line(e))
    r.add(n, "block-mismatches", 0, bad)
    return r


def _toppling(n: int):
    r = VerificationReport("toppling", n)
    bad = total = 0
    for _, e in ew_by_perm(n):
        total += 1
        if not toppling_order_check(e):
            bad += 1
            r.counterexample(serialize_line(e))
    r.add(n, "illegal-orders", 0, bad)
    return r


def _sandpile(cells: int):
    """Shapes with exactly ``cells`` cells: EW configs vs minimal recurrent."""
    r = VerificationReport("sandpile", cells)
    expected = observed = diff = 0
    for shape in shapes_with_cells(cells):
        if shape.ncells != cells:
            continue
        mrc = enumerate_minimal_recurrent(ferrers_graph(shape))
        ew = [config_of(e) for e in enumerate_tableaux(shape, Family.EW)]
        expected += len(mrc)
        observed += len(ew)
        sym = len(set(ew) ^ mrc) + (len(ew) - len(set(ew)))
        if sym:
            diff += sym
            r.counterexample(f"shape {shape}")
    r.add(cells, "configs", expected, observed)
    r.add(cells, "set-differences", 0, diff)
    return r


def _trees(cells: int):
    """Shapes with exactly ``cells`` cells: tree-like fillings vs spanning
    trees of external activity 0 under the row-major order."""
    r = VerificationReport("trees", cells)
    expected = observed = diff = 0
    for shape in shapes_with_cells(cells):
        if shape.ncells != cells:
            continue
        g = ferrers_graph(shape)
        order = row_major_order(shape)
        edges = [g.edge_of_cell(i, j) for i, j in shape.cells()]
        need = len(g.vertices) - 1
        ea0 = set()
        for mask in range(1 << cells):
            if bin(mask).count("1") != need:
                continue
            s = SpanningSubgraph(g, frozenset(edges[k] for k in range(cells) if mask >> k & 1))
            if is_spanning_tree(s) and external_activity(s, order) == 0:
                ea0.add(mask)
        tree_like = set()
        for t in enumerate_tableaux(shape, Family.TREE):
            flat = [b for row in t.cells for b in row]
            tree_like.add(sum(1 << k for k, b in enumerate(flat) if b))
        expected += len(ea0)
        observed += len(tree_like)
        if ea0 != tree_like:
            diff += len(ea0 ^ tree_like)
            r.counterexample(f"shape {shape}")
    r.add(cells, "tableaux", expected, observed)
    r.add(cells, "set-differences", 0, diff)
    return r


def _fourcycle(edges: int):
    """All orientations of Ferrers graphs with exactly ``edges`` edges."""
    r = VerificationReport("fourcycle", edges)
    cyclic = with4 = bad = 0
    for shape in shapes_with_cells(edges):
        if shape.ncells != edges:
            continue
        g = ferrers_graph(shape)
        cell_edges = [g.edge_of_cell(i, j) for i, j in shape.cells()]
        for mask in range(1 << edges):
            arcs = frozenset((c, rr) if mask >> k & 1 else (rr, c) for k, (rr, c) in enumerate(cell_edges))
            o = Orientation(g, arcs)
            cycle = find_directed_cycle(o)
            four = has_directed_4cycle(o)
            cyclic += cycle is not None
            with4 += four
            if cycle is not None and not _is_directed_cycle(o, cycle, 4):
                bad += 1
                r.counterexample(f"shape {shape} mask {mask}")
    r.add(edges, "cyclic-orientations", cyclic, with4)
    r.add(edges, "bad-short-cycles", 0, bad)
    return r


def _is_directed_cycle(o: Orientation, cycle: list[int], length: int) -> bool:
    return len(cycle) == length and all(
        (cycle[k], cycle[(k + 1) % length]) in o.arcs for k in range(length)
    )


def _noncrossing(n: int):
    """Counts only: top-justified NEW tableaux with k rows whose permutation
    avoids 231, against non-crossing set partitions with k blocks."""
    r = VerificationReport("noncrossing", n)
    tabs: Counter = Counter()
    for p, t in new_by_perm(n):
        if ps.avoids(p, "231") and structure_stats(t).is_top_justified:
            tabs[t.shape.nrows] += 1
    parts = distribution(
        (b for b in ps.set_partitions(n) if ps.is_noncrossing(b)), len
    )
    _k_rows(r, n, parts, tabs)
    return r


# name -> (per-size function, first size, default max, hard limit, unit)
SUITES: dict[str, tuple[Callable, int, int, int, str]] = {
    "shapes": (_shapes, 1, 8, 9, "n"),
    "fibonacci": (_fibonacci, 1, 8, 9, "n"),
    "stirling_top": (_stirling_top, 1, 8, 9, "n"),
    "stirling_domfree": (_stirling_domfree, 1, 8, 9, "n"),
    "bigdesc": (_bigdesc, 1, 8, 9, "n"),
    "eulerian": (_eulerian, 1, 9, 10, "n"),
    "allzero": (_allzero, 1, 8, 9, "n"),
    "fixedpts": (_fixedpts, 1, 8, 9, "n"),
    "pattern231": (_pattern231, 1, 8, 9, "n"),
    "pattern213": (_pattern213, 1, 8, 9, "n"),
    "pattern231new": (_pattern231new, 1, 8, 9, "n"),
    "paths": (_paths, 1, 7, 8, "n"),
    "ordering": (_ordering, 1, 7, 9, "n"),
    "runblocks": (_runblocks, 1, 7, 9, "n"),
    "toppling": (_toppling, 1, 7, 8, "n"),
    "sandpile": (_sandpile, 1, 10, 12, "cells"),
    "trees": (_trees, 1, 12, 14, "cells"),
    "fourcycle": (_fourcycle, 1, 12, 14, "edges"),
    "noncrossing": (_noncrossing, 1, 8, 9, "n"),
}


def workers() -> int:
    env = os.environ.get("EWTAB_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_suite(name: str, max_n: int | None = None, n_workers: int | None = None) -> VerificationReport:
    """Run a suite for every size from its first size to ``max_n``."""
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    fn, first, default, limit, unit = SUITES[name]
    if max_n is None:
        max_n = default
    if max_n > limit:
        raise GuardrailExceeded(f"suite {name} allows {unit} <= {limit}, got {max_n}")
    if max_n < first:
        raise GuardrailExceeded(f"suite {name} needs {unit} >= {first}")
    sizes = list(range(first, max_n + 1))
    n_workers = workers() if n_workers is None else n_workers
    start = time.perf_counter()
    if n_workers > 1 and len(sizes) > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            parts = list(pool.map(fn, sizes))
    else:
        parts = [fn(n) for n in sizes]
    report = VerificationReport(name, max_n, label=parts[0].label)
    for part in parts:
        report.rows.extend(part.rows)
        for c in part.counterexamples:
            report.counterexample(c)
    report.seconds = time.perf_counter() - start
    return report
