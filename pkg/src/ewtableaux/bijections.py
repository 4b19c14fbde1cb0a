"""Maps between tableaux and permutations.

All border-to-border paths run through :func:`trace`, parameterised by a turn
predicate and the initial heading.  Forward paths head east/south and swap
between those two at a turn; reverse paths head west/north and swap likewise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import permstat as ps
from .core import (
    COL,
    ROW,
    Family,
    FerrersShape,
    Tableau,
    TableauError,
    border_labels,
    shape_from_labels,
)
from .permstat import Perm
from .tableaux import enumerate_tableaux, validate

E, S, W, N = "E", "S", "W", "N"
_TURN = {E: S, S: E, W: N, N: W}


@dataclass(frozen=True)
class PathTrace:
    start: tuple[str, int]  # (kind, index) of the entry edge
    steps: tuple[tuple[int, int, str], ...]  # cell and heading on leaving it
    exit: tuple[str, int]  # (kind, index) of the exit edge


TurnRule = Callable[[int, int, str], bool]


def trace(shape: FerrersShape, start: tuple[str, int], turn: TurnRule, reverse: bool = False) -> PathTrace:
    """Follow a path from a border edge until it leaves the shape.

    ``start`` is ``("row", i)`` or ``("col", j)``.  Forward paths enter rows
    from the left and columns from the top; reverse paths enter rows from the
    right and columns from the bottom.
    """
    lengths = shape.row_lengths
    kind, idx = start
    col_len = shape.column_lengths()
    if kind == ROW:
        if lengths[idx] == 0:
            return PathTrace(start, (), (ROW, idx))
        i, j, h = (idx, lengths[idx] - 1, W) if reverse else (idx, 0, E)
    else:
        i, j, h = (col_len[idx] - 1, idx, N) if reverse else (0, idx, S)
    steps = []
    while True:
        if turn(i, j, h):
            h = _TURN[h]
        steps.append((i, j, h))
        if h == E:
            if j + 1 < lengths[i]:
                j += 1
                continue
            return PathTrace(start, tuple(steps), (ROW, i))
        if h == S:
            if i + 1 < col_len[j]:
                i += 1
                continue
            return PathTrace(start, tuple(steps), (COL, j))
        if h == W:
            if j > 0:
                j -= 1
                continue
            return PathTrace(start, tuple(steps), (ROW, i))
        if i > 0:
            i -= 1
            continue
        return PathTrace(start, tuple(steps), (COL, j))


def _cell_rule(t: Tableau) -> TurnRule:
    cells = t.cells
    return lambda i, j, h: cells[i][j] == 1


def _require(t: Tableau, *families: Family) -> None:
    if t.family not in families:
        names = "/".join(f.value for f in families)
        raise TableauError(f"expected a {names} tableau, got {t.family}")
    validate(t)


# -- Psi: EW / NEW tableaux to permutations ---------------------------------


def psi_passes(t: Tableau) -> list[tuple[str, tuple[int, ...]]]:
    """Run the reading algorithm and return its non-empty passes in order.

    Each pass is ``("col", labels)`` or ``("row", labels)``.  Column passes
    read 1-free columns right to left, row passes read 0-free rows bottom to
    top.  For EW tableaux the top row is deleted first and label 0 ignored.
    """
    _require(t, Family.EW, Family.NEW)
    lab = t.labeling()
    cells = t.cells
    nrows, ncols = t.shape.nrows, t.shape.ncols
    lengths = t.shape.row_lengths
    col_len = t.shape.column_lengths()
    row_alive = [True] * nrows
    col_alive = [True] * ncols
    zeros = [row.count(0) for row in cells]
    ones = [t.column(j).count(1) for j in range(ncols)]

    def delete_row(i):
        row_alive[i] = False
        for j in range(lengths[i]):
            if col_alive[j] and cells[i][j] == 1:
                ones[j] -= 1

    def delete_col(j):
        col_alive[j] = False
        for i in range(col_len[j]):
            if row_alive[i] and cells[i][j] == 0:
                zeros[i] -= 1

    if t.family is Family.EW:
        delete_row(0)
    remaining = sum(row_alive) + ncols
    passes = []
    read_columns = True
    stalled = 0
    while remaining:
        if read_columns:
            batch = [j for j in range(ncols - 1, -1, -1) if col_alive[j] and ones[j] == 0]
            for j in batch:
                delete_col(j)
            labels = tuple(lab.col_label[j] for j in batch)
        else:
            batch = [i for i in range(nrows - 1, -1, -1) if row_alive[i] and zeros[i] == 0]
            for i in batch:
                delete_row(i)
            labels = tuple(lab.row_label[i] for i in batch)
        if labels:
            passes.append((COL if read_columns else ROW, labels))
            remaining -= len(labels)
            stalled = 0
        else:
            stalled += 1
            if stalled > 1:
                raise TableauError("reading stalled: the filling has a directed cycle")
        read_columns = not read_columns
    return passes


def psi(t: Tableau) -> Perm:
    """EW or NEW tableau to permutation (the column/row reading)."""
    return tuple(x for _, labels in psi_passes(t) for x in labels)


def psi_inverse(p: Sequence[int], family: Family | str = Family.EW) -> Tableau:
    """Permutation to EW (default) or NEW tableau.

    Rows are the descent bottoms (plus the top row 0 for EW, plus the first
    letter for NEW); a cell is 1 exactly when its row label precedes its
    column label in ``p``.
    """
    p = ps.check_perm(p)
    family = Family(family)
    n = len(p)
    if family is Family.EW:
        rows = {0} | ps.descent_bottoms(p)
        start = 0
    elif family is Family.NEW:
        if n == 0:
            return Tableau(Family.NEW, FerrersShape(()), ())
        rows = {p[0]} | ps.descent_bottoms(p)
        start = 1
    else:
        raise ValueError("psi_inverse builds EW or NEW tableaux")
    shape = shape_from_labels(rows, n, start)
    lab = border_labels(shape, family)
    pos = {x: k for k, x in enumerate(p)}
    pos[0] = -1
    cells = tuple(
        tuple(
            1 if pos[lab.row_label[i]] < pos[lab.col_label[j]] else 0
            for j in range(shape.row_lengths[i])
        )
        for i in range(shape.nrows)
    )
    return Tableau(family, shape, cells)


def fill_by_reading(shape: FerrersShape, family: Family | str, reading: Sequence[int]) -> Tableau:
    """Fill a shape by scanning ``reading``: columns get 0s, rows get 1s.

    Only empty cells are filled; for EW the top row is pre-filled with 1s.
    """
    family = Family(family)
    lab = border_labels(shape, family)
    cells = [[None] * L for L in shape.row_lengths]
    if family is Family.EW:
        cells[0] = [1] * shape.row_lengths[0]
    col_len = shape.column_lengths()
    for x in reading:
        kind, idx = lab.locate(x)
        if kind == COL:
            for i in range(col_len[idx]):
                if cells[i][idx] is None:
                    cells[i][idx] = 0
        else:
            for j in range(shape.row_lengths[idx]):
                if cells[idx][j] is None:
                    cells[idx][j] = 1
    if any(b is None for row in cells for b in row):
        raise TableauError("reading left cells unfilled")
    return Tableau(family, shape, tuple(tuple(r) for r in cells))


# -- Phi: Le tableaux to permutations ---------------------------------------


def phi_le(t: Tableau) -> Perm:
    """Le tableau to permutation.

    From each label on the top/left border, head into the tableau and turn at
    every 1 (down becomes right, right becomes down); the exit label is the
    letter in that place.
    """
    _require(t, Family.LE)
    lab = t.labeling()
    rule = _cell_rule(t)
    out = [0] * (lab.n + 1)
    for i in range(t.shape.nrows):
        out[lab.row_label[i]] = _exit_label(lab, trace(t.shape, (ROW, i), rule))
    for j in range(t.shape.ncols):
        out[lab.col_label[j]] = _exit_label(lab, trace(t.shape, (COL, j), rule))
    return tuple(out[1:])


def _exit_label(lab, path: PathTrace) -> int:
    kind, idx = path.exit
    return lab.row_label[idx] if kind == ROW else lab.col_label[idx]


def phi_le_inverse(p: Sequence[int]) -> Tableau:
    """Permutation to Le tableau, built cell by cell in reading order.

    Each cell meets the path arriving from the west and the one arriving from
    the north.  The cell is a 1 (the two paths bounce) when the Le rule forces
    it or when the western path already ends further down the border than
    the northern one; otherwise the paths cross at a 0.
    """
    p = ps.check_perm(p)
    n = len(p)
    shape = shape_from_labels(ps.weak_excedance_bottoms(p), n, 1)
    lab = border_labels(shape, Family.LE)
    cells: list[list[int]] = []
    down = [lab.col_label[j] for j in range(shape.ncols)]
    col_has_one = [False] * shape.ncols
    for i, length in enumerate(shape.row_lengths):
        row: list[int] = []
        across = lab.row_label[i]
        for j in range(length):
            from_north = down[j]
            forced = 1 in row and col_has_one[j]
            if forced or p[across - 1] > p[from_north - 1]:
                row.append(1)
                col_has_one[j] = True
                down[j], across = across, from_north
            else:
                row.append(0)
        cells.append(row)
    return Tableau(Family.LE, shape, tuple(tuple(r) for r in cells))


# -- EW <-> Le ----------------------------------------------------------------


def _ell_label(label: int, n: int) -> int:
    return label - 1 if label > 1 else n


def _reverse_cycle_walk(
    shape: FerrersShape,
    n: int,
    lab_le,
    turn: TurnRule,
    target: Callable[[int], int],
) -> list[int]:
    """Chain of landing labels used by the Le -> EW/NEW constructions.

    Start from the smallest unvisited r-label, follow the reverse path and
    record where it lands (through ``target``); chain from there while the
    landing label is unvisited.
    """
    visited = [False] * (n + 1)
    out: list[int] = []
    for first in range(1, n + 1):
        if visited[first]:
            continue
        i = first
        while not visited[i]:
            visited[i] = True
            kind, idx = lab_le.locate(i)
            path = trace(shape, (kind, idx), turn, reverse=True)
            ekind, eidx = path.exit
            start_label = lab_le.row_label[eidx] if ekind == ROW else lab_le.col_label[eidx]
            j = target(start_label)
            out.append(j)
            i = j
    return out


def _ew_shape_from_le(shape: FerrersShape) -> FerrersShape:
    return FerrersShape(tuple(L + 1 for L in shape.row_lengths))


def le_to_ew(t: Tableau) -> tuple[Tableau, Perm]:
    """Le tableau to EW tableau by tracing reverse paths (returns the EW
    tableau and its permutation)."""
    _require(t, Family.LE)
    n = t.size
    lab = t.labeling()
    pi = _reverse_cycle_walk(t.shape, n, lab, _cell_rule(t), lambda s: _ell_label(s, n))
    e = fill_by_reading(_ew_shape_from_le(t.shape), Family.EW, pi)
    return e, tuple(pi)


def le_to_ew_composed(t: Tableau) -> Tableau:
    """Inverse of ew_to_le via permutations: Psi^-1 o desexc^-1 o left shift o Phi."""
    sigma = ps.cyclic_shift(phi_le(t), "left")
    return psi_inverse(ps.desexc_inverse(sigma), Family.EW)


def m_helper(pi: Sequence[int]) -> dict[int, int]:
    """m(i) = position of i in desexc(pi), read off ``pi`` directly.

    Prepend 0.  If i is a right-to-left minimum, m(i) is the letter right
    after the next right-to-left minimum to the left of i; otherwise it is
    the letter right after i.
    """
    word = (0,) + tuple(pi)
    mins = ps.rtl_minima(pi) | {0}
    out = {}
    for k in range(1, len(word)):
        x = word[k]
        if x in mins:
            q = k - 1
            while word[q] not in mins:
                q -= 1
            out[x] = word[q + 1]
        else:
            out[x] = word[k + 1]
    return out


def ew_to_le(e: Tableau) -> Tableau:
    """EW tableau to Le tableau, filling cells along reverse paths.

    Paths are entered from r-labels 1..n in turn; an empty cell met on the
    way is filled according to where the path must land (its target is
    m(i), reached at the left end of row r when r - 1 = m(i), or the top of
    column c when c - 1 = m(i)).
    """
    _require(e, Family.EW)
    n = e.size
    shape = FerrersShape(tuple(L - 1 for L in e.shape.row_lengths))
    lab = border_labels(shape, Family.LE)
    m = m_helper(psi(e))
    cells: list[list[int | None]] = [[None] * L for L in shape.row_lengths]

    for i in range(1, n + 1):
        target = m[i]

        def rule(r: int, c: int, d: str) -> bool:
            if cells[r][c] is None:
                rl = _ell_label(lab.row_label[r], n)
                cl = _ell_label(lab.col_label[c], n)
                if target == rl:
                    value = 0 if d == W else 1
                elif target == cl:
                    value = 0 if d == N else 1
                elif d == W:
                    value = 1 if any(cells[k][c] == 1 for k in range(r)) else 0
                else:
                    value = 0
                cells[r][c] = value
            return cells[r][c] == 1

        trace(shape, lab.locate(i), rule, reverse=True)
    if any(b is None for row in cells for b in row):
        raise TableauError("ew_to_le left cells unfilled")
    return Tableau(Family.LE, shape, tuple(tuple(r) for r in cells))


def ew_to_le_composed(e: Tableau) -> Tableau:
    """Phi^-1 o right shift o desexc o Psi."""
    return phi_le_inverse(ps.cyclic_shift(ps.desexc(psi(e)), "right"))


# -- NEW <-> Le ---------------------------------------------------------------


def new_to_le(t: Tableau) -> Tableau:
    """Shape-preserving NEW -> Le map: Phi^-1 o down shift o desexc o Psi."""
    _require(t, Family.NEW)
    return phi_le_inverse(ps.cyclic_down_shift(ps.desexc(psi(t))))


def le_to_new(t: Tableau) -> tuple[Tableau, Perm]:
    """Le -> NEW by reverse paths whose r-labels are shifted up by one.

    The path from shifted label i starts at the edge whose own label is
    i - 1 (n for i = 1) and its landing label is used as is.
    """
    _require(t, Family.LE)
    n = t.size
    lab = t.labeling()
    shifted = _ShiftedStarts(lab, n)
    pi = _reverse_cycle_walk(t.shape, n, shifted, _cell_rule(t), lambda s: s)
    return fill_by_reading(t.shape, Family.NEW, pi), tuple(pi)


class _ShiftedStarts:
    """Relabels the southeast border of a Le tableau by label + 1 (n -> 1)."""

    def __init__(self, lab, n: int):
        self._lab = lab
        self._n = n
        self.row_label = lab.row_label
        self.col_label = lab.col_label

    def locate(self, shifted: int):
        return self._lab.locate(shifted - 1 if shifted > 1 else self._n)


def le_to_new_composed(t: Tableau) -> Tableau:
    return psi_inverse(ps.desexc_inverse(ps.cyclic_up_shift(phi_le(t))), Family.NEW)


def new_le(t: Tableau) -> Tableau:
    return new_to_le(t)


def new_le_inverse(t: Tableau) -> Tableau:
    """Le -> NEW by the direct construction, checked against the composition."""
    out = le_to_new(t)[0]
    assert out == le_to_new_composed(t)
    return out


# -- tree-like tableaux -------------------------------------------------------


def _dot_left(cells, i: int, j: int) -> bool:
    return 1 in cells[i][:j]


def _dot_weakly_above(cells, i: int, j: int) -> bool:
    return any(cells[k][j] for k in range(i + 1))


def tree_to_le(t: Tableau) -> Tableau:
    """A cell becomes 1 iff it has a dot to its left and a dot weakly above;
    then the leftmost column is removed."""
    _require(t, Family.TREE)
    c = t.cells
    rows = [
        tuple(1 if _dot_left(c, i, j) and _dot_weakly_above(c, i, j) else 0 for j in range(1, len(row)))
        for i, row in enumerate(c)
    ]
    return Tableau(Family.LE, FerrersShape(tuple(len(r) for r in rows)), tuple(rows))


def tree_to_le_by_free_dots(t: Tableau) -> Tableau:
    """Same map, via left-free and up-free dots."""
    _require(t, Family.TREE)
    c = t.cells
    out: list[list[int | None]] = [[None] * len(row) for row in c]
    for i, row in enumerate(c):
        for j, b in enumerate(row):
            if not b:
                continue
            if not _dot_left(c, i, j):
                out[i][j] = 0
                for jj in range(j):
                    out[i][jj] = 0
            if not any(c[k][j] for k in range(i)):
                out[i][j] = 1
                for k in range(i):
                    out[k][j] = 0
    rows = [tuple(1 if b is None else b for b in row[1:]) for row in out]
    return Tableau(Family.LE, FerrersShape(tuple(len(r) for r in rows)), tuple(rows))


def le_to_tree(t: Tableau) -> Tableau:
    """Prepend a column (1 on top, 0s below); the topmost 1 of each column and
    the rightmost restricted 0 of each row become dots."""
    _require(t, Family.LE)
    grid = [((1 if i == 0 else 0),) + row for i, row in enumerate(t.cells)]
    dots = [[0] * len(row) for row in grid]
    ncols = len(grid[0]) if grid else 0
    for j in range(ncols):
        for i in range(len(grid)):
            if j < len(grid[i]) and grid[i][j] == 1:
                dots[i][j] = 1
                break
    for i, row in enumerate(grid):
        for j in range(len(row) - 1, -1, -1):
            if row[j] == 0 and any(grid[k][j] == 1 for k in range(i)):
                dots[i][j] = 1
                break
    return Tableau.from_rows(Family.TREE, [tuple(r) for r in dots])


def tree_to_perm(t: Tableau) -> Perm:
    """Walk the dots of a tree-like tableau, always from the most recent
    row/column that still has an unused dot (bottommost dot in a column,
    rightmost in a row), recording each newly reached row or column."""
    _require(t, Family.TREE)
    return tuple(_tree_walk(t)[0])


def _tree_walk(t: Tableau) -> tuple[list[int], list[tuple[int, int]]]:
    lab = t.labeling()
    cells = t.cells
    n = lab.n
    dots_in_row = [[j for j, b in enumerate(row) if b] for row in cells]
    dots_in_col = [[i for i in range(len(cells)) if len(cells[i]) > j and cells[i][j]] for j in range(t.shape.ncols)]
    used: set[tuple[int, int]] = set()
    seen = {0}
    order = [0]
    edges: list[tuple[int, int]] = []
    for _ in range(n):
        j = len(order) - 1
        while True:
            kind, idx = lab.locate(order[j])
            if kind == COL:
                free = [i for i in dots_in_col[idx] if (i, idx) not in used]
                cell = (max(free), idx) if free else None
            else:
                free = [c for c in dots_in_row[idx] if (idx, c) not in used]
                cell = (idx, max(free)) if free else None
            if cell is not None:
                break
            j -= 1
            if j < 0:
                raise TableauError("tree walk ran out of dots")
        used.add(cell)
        edges.append(cell)
        r, c = lab.row_label[cell[0]], lab.col_label[cell[1]]
        v = c if r in seen else r
        if v in seen:
            raise TableauError("tree walk revisited a vertex: dots contain a cycle")
        seen.add(v)
        order.append(v)
    return order[1:], edges


def tree_to_ew_M(t: Tableau) -> Tableau:
    """EW tableau whose permutation is the tree walk of ``t``."""
    return psi_inverse(tree_to_perm(t), Family.EW)


def tree_turn_rule(t: Tableau) -> TurnRule:
    """Turn iff the cell has a dot to its left and a dot weakly above."""
    cells = t.cells
    return lambda i, j, h: _dot_left(cells, i, j) and _dot_weakly_above(cells, i, j)


def tree_to_ew_via_le(t: Tableau) -> Tableau:
    """le_to_ew run directly on the tree-like tableau with the dot turn rule.

    Reverse paths start from the Le r-labels (the tree border minus the
    bottom edge of its leftmost column); the leftmost column never turns.
    """
    _require(t, Family.TREE)
    le_shape = FerrersShape(tuple(L - 1 for L in t.shape.row_lengths))
    lab = border_labels(le_shape, Family.LE)
    n = t.size
    rule = tree_turn_rule(t)

    def land(i: int) -> int:
        kind, idx = lab.locate(i)
        start = (kind, idx + 1 if kind == COL else idx)
        ekind, eidx = trace(t.shape, start, rule, reverse=True).exit
        s = lab.row_label[eidx] if ekind == ROW else lab.col_label[eidx - 1]
        return _ell_label(s, n)

    visited = [False] * (n + 1)
    pi: list[int] = []
    for first in range(1, n + 1):
        i = first
        while not visited[i]:
            visited[i] = True
            i = land(i)
            pi.append(i)
    return fill_by_reading(t.shape, Family.EW, pi)


def tree_to_ew_via_le_composed(t: Tableau) -> Tableau:
    return le_to_ew(tree_to_le(t))[0]


def common_prefix(t: Tableau) -> int:
    """Length of the common prefix of the permutations of the two tree -> EW maps."""
    a = psi(tree_to_ew_M(t))
    b = psi(tree_to_ew_via_le(t))
    k = 0
    while k < len(a) and a[k] == b[k]:
        k += 1
    return k


def tree_from_perm(p: Sequence[int]) -> Tableau:
    """Inverse of :func:`tree_to_perm`, by search over trees of the shape."""
    p = ps.check_perm(p)
    shape = shape_from_labels({0} | ps.descent_bottoms(p), len(p), 0)
    for t in enumerate_tableaux(shape, Family.TREE):
        if tuple(_tree_walk(t)[0]) == p:
            return t
    raise ValueError(f"no tree-like tableau walks to {ps.format_perm(p)}")
