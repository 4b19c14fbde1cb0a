"""Orientations and the sandpile model on Ferrers graphs, plus spanning trees
of dotted tableaux and their external activity.

Vertices are border labels (EW convention): row vertices and column vertices,
with the top row, vertex 0, as the sink.  Edges are ``(row_label, col_label)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Mapping, Sequence

from .core import Family, FerrersGraph, FerrersShape, Tableau, TableauError, ferrers_graph
from .tableaux import validate

ROW_TO_COL = "RowToCol"
COL_TO_ROW = "ColToRow"

MRC_STATE_LIMIT = 10**7


class ToppleLimitExceeded(RuntimeError):
    pass


# -- orientations -------------------------------------------------------------


@dataclass(frozen=True)
class Orientation:
    graph: FerrersGraph
    arcs: frozenset[tuple[int, int]]  # (tail, head)

    def direction(self, edge: tuple[int, int]) -> str:
        r, c = edge
        if (r, c) in self.arcs:
            return ROW_TO_COL
        if (c, r) in self.arcs:
            return COL_TO_ROW
        raise KeyError(f"{edge} is not an edge")

    def successors(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in self.graph.vertices}
        for u, v in sorted(self.arcs):
            out[u].append(v)
        return out

    def sinks(self) -> list[int]:
        succ = self.successors()
        return [v for v in self.graph.vertices if not succ[v]]


def orientation_of(t: Tableau) -> Orientation:
    """A 0 in cell (r, c) orients the edge row -> column, a 1 column -> row.

    Any 0/1 filling is accepted, so invalid fillings can be inspected too.
    """
    g = ferrers_graph(t.shape)
    arcs = set()
    for i, j in t.shape.cells():
        r, c = g.edge_of_cell(i, j)
        arcs.add((r, c) if t.cells[i][j] == 0 else (c, r))
    return Orientation(g, frozenset(arcs))


def tableau_of(o: Orientation) -> Tableau:
    """Filling of the graph's shape recording each edge direction (family EW)."""
    g = o.graph
    rows = []
    for i, L in enumerate(g.shape.row_lengths):
        rows.append(tuple(0 if g.edge_of_cell(i, j) in o.arcs else 1 for j in range(L)))
    return Tableau(Family.EW, g.shape, tuple(rows))


def _any_cycle(o: Orientation) -> list[int] | None:
    succ = o.successors()
    color = {v: 0 for v in succ}  # 0 new, 1 on stack, 2 done
    for root in succ:
        if color[root]:
            continue
        stack = [(root, iter(succ[root]))]
        path = [root]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            w = next(it, None)
            if w is None:
                color[v] = 2
                stack.pop()
                path.pop()
            elif color[w] == 1:
                return path[path.index(w):]
            elif color[w] == 0:
                color[w] = 1
                stack.append((w, iter(succ[w])))
                path.append(w)
    return None


def _shorten(o: Orientation, cycle: list[int]) -> list[int]:
    """Cut a directed cycle down to length 4 using chords.

    The row vertex with the smallest label is adjacent to every column vertex
    on the cycle, so a cycle longer than 4 always has a chord from it, and
    one of the two halves it cuts off is again directed.
    """
    g = o.graph
    while len(cycle) > 4:
        k = len(cycle)
        rows = [v for v in cycle if g.is_row(v)]
        r = min(rows)
        a = cycle.index(r)
        cycle = cycle[a:] + cycle[:a]  # r first
        # columns not adjacent to r along the cycle
        for b in range(3, k - 1, 2):
            c = cycle[b]
            if (r, c) in o.arcs:
                cycle = [r] + cycle[b:]  # r -> c -> ... -> r
            else:
                cycle = cycle[: b + 1]  # r -> ... -> c -> r
            break
    return cycle


def find_directed_cycle(o: Orientation) -> list[int] | None:
    """A directed 4-cycle ``[v0, v1, v2, v3]`` (v3 -> v0) if the orientation
    has any directed cycle, else None."""
    cycle = _any_cycle(o)
    if cycle is None:
        return None
    return _shorten(o, cycle)


def has_cycle(o: Orientation) -> bool:
    return _any_cycle(o) is not None


def has_directed_4cycle(o: Orientation) -> bool:
    """Brute force over ordered pairs of row vertices: a 4-cycle r1 -> x -> r2
    -> y -> r1 needs common columns x, y with those directions."""
    g = o.graph
    arcs = o.arcs
    rows = g.top_vertices
    for r1 in rows:
        for r2 in rows:
            if r1 == r2:
                continue
            common = [c for c in g.bottom_vertices if (r1, c) in g.edges and (r2, c) in g.edges]
            there = any((r1, c) in arcs and (c, r2) in arcs for c in common)
            back = any((r2, c) in arcs and (c, r1) in arcs for c in common)
            if there and back:
                return True
    return False


def is_unique_sink_acyclic(o: Orientation) -> bool:
    return not has_cycle(o) and o.sinks() == [0]


def longest_directed_path(o: Orientation) -> int:
    """Number of vertices on a longest directed path (topological-order DP)."""
    succ = o.successors()
    indeg = {v: 0 for v in succ}
    for v in succ:
        for w in succ[v]:
            indeg[w] += 1
    queue = deque(v for v in succ if indeg[v] == 0)
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) != len(succ):
        raise ValueError("longest_directed_path needs an acyclic orientation")
    best = {v: 1 for v in succ}
    for v in reversed(order):
        for w in succ[v]:
            best[v] = max(best[v], 1 + best[w])
    return max(best.values())


# -- sandpile configurations --------------------------------------------------


@dataclass(frozen=True)
class SandpileConfig:
    """Grains on the non-sink vertices 1..n; ``grains[v - 1]`` is vertex v."""

    grains: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.grains[v - 1]

    @property
    def total(self) -> int:
        return sum(self.grains)

    def as_dict(self) -> dict[int, int]:
        return {v: g for v, g in enumerate(self.grains, 1)}

    def __str__(self) -> str:
        return serialize_config(self)


def make_config(grains: Mapping[int, int] | Sequence[int]) -> SandpileConfig:
    if isinstance(grains, Mapping):
        n = max(grains, default=0)
        if set(grains) != set(range(1, n + 1)):
            raise ValueError("a configuration needs grains on every vertex 1..n")
        values = tuple(int(grains[v]) for v in range(1, n + 1))
    else:
        values = tuple(int(x) for x in grains)
    if any(x < 0 for x in values):
        raise ValueError("grain counts must be nonnegative")
    return SandpileConfig(values)


def serialize_config(c: SandpileConfig) -> str:
    return " ".join(f"{v}:{g}" for v, g in enumerate(c.grains, 1))


def parse_config(text: str) -> SandpileConfig:
    pairs = {}
    for tok in text.replace(",", " ").split():
        v, _, g = tok.partition(":")
        if not _:
            raise ValueError(f"expected v:grains, got {tok!r}")
        pairs[int(v)] = int(g)
    return make_config(pairs)


def degrees(g: FerrersGraph) -> tuple[int, ...]:
    return tuple(g.degree(v) for v in range(1, g.labeling.n + 1))


def is_stable(g: FerrersGraph, c: SandpileConfig) -> bool:
    return all(x < d for x, d in zip(c.grains, degrees(g)))


def _check_size(g: FerrersGraph, c: SandpileConfig) -> None:
    if len(c.grains) != g.labeling.n:
        raise ValueError(f"configuration has {len(c.grains)} vertices, graph has {g.labeling.n}")


def topple(g: FerrersGraph, grains: list[int], v: int) -> None:
    """Topple vertex v in place (grains indexed by vertex - 1)."""
    grains[v - 1] -= g.degree(v)
    for w in g.neighbors(v):
        if w:
            grains[w - 1] += 1


def stabilize(
    g: FerrersGraph,
    c: SandpileConfig,
    policy: str = "fifo",
    max_topples: int = 10**7,
) -> tuple[SandpileConfig, tuple[int, ...]]:
    """Topple unstable vertices until stable; returns (config, odometer).

    ``policy`` picks the next unstable vertex: "fifo" or "lifo".
    """
    _check_size(g, c)
    if policy not in ("fifo", "lifo"):
        raise ValueError(f"unknown policy {policy!r}")
    deg = degrees(g)
    nbrs = {v: [w for w in g.neighbors(v) if w] for v in range(1, len(deg) + 1)}
    grains = list(c.grains)
    odometer = [0] * len(grains)
    work = deque(v for v in range(1, len(deg) + 1) if grains[v - 1] >= deg[v - 1])
    queued = set(work)
    count = 0
    while work:
        v = work.popleft() if policy == "fifo" else work.pop()
        queued.discard(v)
        if grains[v - 1] < deg[v - 1]:
            continue
        grains[v - 1] -= deg[v - 1]
        odometer[v - 1] += 1
        count += 1
        if count > max_topples:
            raise ToppleLimitExceeded(f"more than {max_topples} topples")
        for w in nbrs[v]:
            grains[w - 1] += 1
        for w in nbrs[v] + [v]:
            if grains[w - 1] >= deg[w - 1] and w not in queued:
                work.append(w)
                queued.add(w)
    return SandpileConfig(tuple(grains)), tuple(odometer)


def tilde(g: FerrersGraph, c: SandpileConfig) -> SandpileConfig:
    """Add one grain to every column vertex."""
    _check_size(g, c)
    cols = set(g.bottom_vertices)
    return SandpileConfig(tuple(x + (v in cols) for v, x in enumerate(c.grains, 1)))


def tilde_by_sink_neighbors(g: FerrersGraph, c: SandpileConfig) -> SandpileConfig:
    """Add one grain to every neighbour of the sink."""
    _check_size(g, c)
    near = set(g.neighbors(0))
    return SandpileConfig(tuple(x + (v in near) for v, x in enumerate(c.grains, 1)))


def recurrence_odometer(g: FerrersGraph, c: SandpileConfig) -> tuple[SandpileConfig, tuple[int, ...]]:
    if not is_stable(g, c):
        raise ValueError("recurrence is tested on stable configurations only")
    return stabilize(g, tilde(g, c))


def is_recurrent(g: FerrersGraph, c: SandpileConfig) -> bool:
    return recurrence_odometer(g, c)[0] == c


def stable_configs(g: FerrersGraph, total: int | None = None):
    deg = degrees(g)
    if total is None:
        for grains in product(*(range(d) for d in deg)):
            yield SandpileConfig(grains)
        return

    def rec(k: int, left: int, acc: list[int]):
        if k == len(deg):
            if left == 0:
                yield SandpileConfig(tuple(acc))
            return
        room = sum(d - 1 for d in deg[k + 1 :])
        for x in range(max(0, left - room), min(deg[k] - 1, left) + 1):
            acc.append(x)
            yield from rec(k + 1, left - x, acc)
            acc.pop()

    yield from rec(0, total, [])


def enumerate_minimal_recurrent(g: FerrersGraph, limit: int = MRC_STATE_LIMIT) -> set[SandpileConfig]:
    """All recurrent configurations of least total, by brute force.

    Stable configurations are scanned by increasing total and the scan stops
    at the first total that has a recurrent one.
    """
    deg = degrees(g)
    states = prod(deg)
    if states > limit:
        raise ValueError(f"{states} stable configurations exceed the limit of {limit}")
    for total in range(sum(d - 1 for d in deg) + 1):
        found = {c for c in stable_configs(g, total) if is_recurrent(g, c)}
        if found:
            return found
    return set()


def config_of(e: Tableau) -> SandpileConfig:
    """Column vertex: number of 0s in its column; row vertex: number of 1s in its row."""
    if e.family is not Family.EW:
        raise TableauError("config_of expects an EW tableau")
    validate(e)
    lab = e.labeling()
    grains = [0] * lab.n
    for i in range(1, e.shape.nrows):
        grains[lab.row_label[i] - 1] = e.cells[i].count(1)
    for j in range(e.shape.ncols):
        grains[lab.col_label[j] - 1] = e.column(j).count(0)
    return SandpileConfig(tuple(grains))


def toppling_order_check(e: Tableau) -> bool:
    """Toppling the vertices of tilde(config_of(e)) in the order of the
    tableau's permutation is legal at every step and returns config_of(e)."""
    from .bijections import psi

    g = ferrers_graph(e.shape)
    c = config_of(e)
    grains = list(tilde(g, c).grains)
    for v in psi(e):
        if grains[v - 1] < g.degree(v):
            return False
        topple(g, grains, v)
    return tuple(grains) == c.grains


# -- spanning subgraphs and external activity ---------------------------------


@dataclass(frozen=True)
class SpanningSubgraph:
    graph: FerrersGraph
    edges: frozenset[tuple[int, int]]


def spanning_tree_of(d: Tableau) -> SpanningSubgraph:
    """Subgraph keeping the edges of dotted (nonzero) cells; family rules are not checked."""
    g = ferrers_graph(d.shape)
    edges = frozenset(g.edge_of_cell(i, j) for i, j in d.shape.cells() if d.cells[i][j])
    return SpanningSubgraph(g, edges)


def _tree_parents(s: SpanningSubgraph) -> dict[int, int] | None:
    """Parent pointers toward vertex 0, or None if not a spanning tree."""
    g = s.graph
    if len(s.edges) != len(g.vertices) - 1:
        return None
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for r, c in s.edges:
        adj[r].append(c)
        adj[c].append(r)
    parent = {0: -1}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return parent if len(parent) == len(g.vertices) else None


def is_spanning_tree(s: SpanningSubgraph) -> bool:
    return _tree_parents(s) is not None


def row_major_order(shape: FerrersShape) -> list[tuple[int, int]]:
    g = ferrers_graph(shape)
    return [g.edge_of_cell(i, j) for i, j in shape.cells()]


def is_f_compatible(shape: FerrersShape, order: Sequence[tuple[int, int]]) -> bool:
    """Increasing along every row (left to right) and every column (downward)."""
    g = ferrers_graph(shape)
    if len(order) != len(g.edges) or set(order) != g.edges:
        return False
    rank = {e: k for k, e in enumerate(order)}
    for i, j in shape.cells():
        e = g.edge_of_cell(i, j)
        if j + 1 < shape.row_lengths[i] and rank[e] > rank[g.edge_of_cell(i, j + 1)]:
            return False
        if shape.has_cell(i + 1, j) and rank[e] > rank[g.edge_of_cell(i + 1, j)]:
            return False
    return True


def tree_path_to_sink(s: SpanningSubgraph, v: int) -> list[int]:
    """Vertices on the unique tree path from v to 0."""
    parent = _tree_parents(s)
    if parent is None:
        raise ValueError("not a spanning tree")
    path = [v]
    while path[-1] != 0:
        path.append(parent[path[-1]])
    return path


def zigzag_path_to_sink(d: Tableau, v: int) -> list[int]:
    """Path to 0 read off a tree-like tableau: from a row take its leftmost
    dot, from a column its topmost dot."""
    lab = d.labeling()
    path = [v]
    while path[-1] != 0:
        kind, idx = lab.locate(path[-1])
        if kind == "row":
            j = d.cells[idx].index(1)
            path.append(lab.col_label[j])
        else:
            i = d.column(idx).index(1)
            path.append(lab.row_label[i])
        if len(path) > lab.n + 2:
            raise ValueError("dots do not lead to the sink")
    return path


def external_activity(s: SpanningSubgraph, order: Sequence[tuple[int, int]] | None = None) -> int:
    """Number of non-tree edges that are the least edge of their fundamental
    cycle.  ``order`` defaults to row-major and must be F-compatible."""
    g = s.graph
    parent = _tree_parents(s)
    if parent is None:
        raise ValueError("external activity is defined for spanning trees only")
    if order is None:
        order = row_major_order(g.shape)
    elif not is_f_compatible(g.shape, order):
        raise ValueError("edge order is not F-compatible")
    rank = {e: k for k, e in enumerate(order)}
    depth = {0: 0}

    def d(v):
        if v not in depth:
            depth[v] = d(parent[v]) + 1
        return depth[v]

    def key(a, b):
        return rank[(a, b)] if (a, b) in rank else rank[(b, a)]

    active = 0
    for e in g.edges - s.edges:
        a, b = e
        low = rank[e]
        while a != b:
            if d(a) < d(b):
                a, b = b, a
            low = min(low, key(a, parent[a]))
            a = parent[a]
        if low == rank[e]:
            active += 1
    return active
