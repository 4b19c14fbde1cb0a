"""Family rules, the EW/NEW reflection, generators and structural statistics."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .core import Family, FerrersShape, ShapeError, Tableau, TableauError, border_labels


@dataclass(frozen=True)
class Violation:
    rule: str
    cells: tuple[tuple[int, int], ...]  # 0-based (row, column)
    message: str

    def __str__(self) -> str:
        return self.message


def _at(cells):
    return ", ".join(f"({i + 1},{j + 1})" for i, j in cells)


def _rectangle(t: Tableau) -> Violation | None:
    cells = t.cells
    for r1 in range(t.shape.nrows):
        for r2 in range(r1 + 1, t.shape.nrows):
            width = len(cells[r2])
            for c1 in range(width):
                for c2 in range(c1 + 1, width):
                    a, b = cells[r1][c1], cells[r1][c2]
                    c, d = cells[r2][c1], cells[r2][c2]
                    if a == d and b == c and a != b:
                        corners = ((r1, c1), (r1, c2), (r2, c1), (r2, c2))
                        return Violation(
                            "forbidden rectangle",
                            corners,
                            f"forbidden rectangle at rows {{{r1 + 1},{r2 + 1}}} "
                            f"columns {{{c1 + 1},{c2 + 1}}}",
                        )
    return None


def _column_without_one(t: Tableau) -> Violation | None:
    for j in range(t.shape.ncols):
        if 1 not in t.column(j):
            return Violation(
                "column without 1",
                tuple((i, j) for i in range(len(t.column(j)))),
                f"column {j + 1} has no 1",
            )
    return None


def find_violation(t: Tableau) -> Violation | None:
    """First broken family rule of ``t``, or None when ``t`` is legal."""
    try:
        t.shape.check_family(t.family)
    except ShapeError as exc:
        return Violation("shape", (), str(exc))
    cells = t.cells
    if t.family is Family.EW:
        for j, b in enumerate(cells[0]):
            if b != 1:
                return Violation("top row not all 1", ((0, j),), f"top row has a 0 at column {j + 1}")
        for i in range(1, len(cells)):
            if 0 not in cells[i]:
                return Violation(
                    "row without 0",
                    tuple((i, j) for j in range(len(cells[i]))),
                    f"row without 0: row {i + 1}",
                )
        return _rectangle(t)
    if t.family is Family.NEW:
        return _column_without_one(t) or _rectangle(t)
    if t.family is Family.LE:
        v = _column_without_one(t)
        if v:
            return v
        for i, row in enumerate(cells):
            for j, b in enumerate(row):
                if b == 0 and 1 in row[:j] and any(cells[k][j] for k in range(i)):
                    return Violation(
                        "Le condition",
                        ((i, j),),
                        f"0 at {_at([(i, j)])} has a 1 above it and a 1 to its left",
                    )
        return None
    # TREE
    if cells[0][0] != 1:
        return Violation("top-left dot", ((0, 0),), "top-left cell has no dot")
    for i, row in enumerate(cells):
        for j, b in enumerate(row):
            if b and (i, j) != (0, 0):
                above = any(cells[k][j] for k in range(i))
                left = 1 in row[:j]
                if above == left:
                    what = "both" if above else "neither"
                    return Violation(
                        "tree dot",
                        ((i, j),),
                        f"dot at {_at([(i, j)])} has {what} a dot above and a dot to its left",
                    )
    for i, row in enumerate(cells):
        if 1 not in row:
            return Violation("row without dot", tuple((i, j) for j in range(len(row))), f"row {i + 1} has no dot")
    for j in range(t.shape.ncols):
        if 1 not in t.column(j):
            return Violation("column without dot", (), f"column {j + 1} has no dot")
    return None


def is_valid(t: Tableau) -> bool:
    return find_violation(t) is None


def validate(t: Tableau) -> None:
    v = find_violation(t)
    if v is not None:
        raise TableauError(f"invalid {t.family} tableau: {v.message}")


# -- reflection -------------------------------------------------------------


def _transpose(cells: tuple[tuple[int, ...], ...]) -> list[list[int]]:
    width = len(cells[0]) if cells else 0
    return [[row[j] for row in cells if len(row) > j] for j in range(width)]


def reflect_complement(e: Tableau) -> Tableau:
    """EW -> NEW: transpose, swap 0/1, drop the (all-0) leftmost column."""
    if e.family is not Family.EW:
        raise TableauError("reflect_complement expects an EW tableau")
    validate(e)
    rows = [tuple(1 - b for b in col[1:]) for col in _transpose(e.cells)]
    return Tableau.from_rows(Family.NEW, rows)


def reflect_complement_inverse(n: Tableau) -> Tableau:
    """NEW -> EW, undoing :func:`reflect_complement`."""
    if n.family is not Family.NEW:
        raise TableauError("reflect_complement_inverse expects a NEW tableau")
    validate(n)
    padded = tuple((0,) + row for row in n.cells)
    rows = [tuple(1 - b for b in col) for col in _transpose(padded)]
    return Tableau.from_rows(Family.EW, rows)


# -- enumeration ------------------------------------------------------------


@lru_cache(maxsize=None)
def _rows_in_lex_order(length: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All 0/1 rows of a length in lex order, each with its column bitmask."""
    out = []
    for bits in product((0, 1), repeat=length):
        mask = 0
        for j, b in enumerate(bits):
            if b:
                mask |= 1 << j
        out.append((bits, mask))
    return tuple(out)


def _comparable(a: int, b: int, width: int) -> bool:
    m = (1 << width) - 1
    a &= m
    b &= m
    return not (a & ~b and b & ~a)


def _fillings(shape: FerrersShape, family: Family) -> Iterator[tuple[tuple[int, ...], ...]]:
    lengths = shape.row_lengths
    nrows = len(lengths)
    col_len = shape.column_lengths()
    # columns whose last cell sits in row i
    closing = [[j for j in range(shape.ncols) if col_len[j] == i + 1] for i in range(nrows)]
    chosen: list[tuple[int, ...]] = []
    masks: list[int] = []

    def rows_for(i: int):
        L = lengths[i]
        if family is Family.EW and i == 0:
            full = (1 << L) - 1
            return ((tuple([1] * L), full),)
        return _rows_in_lex_order(L)

    def ok(i: int, bits: tuple[int, ...], v: int, above: int) -> bool:
        L = lengths[i]
        if family is Family.EW:
            if i > 0 and 0 not in bits:
                return False
        if family in (Family.EW, Family.NEW):
            for a in masks:
                if not _comparable(a, v, L):
                    return False
        elif family is Family.LE:
            if v:
                low = v & -v
                left_has_one = ~((low << 1) - 1)
                zeros = ~v & ((1 << L) - 1)
                if zeros & above & left_has_one:
                    return False
        else:  # TREE
            if not v:
                return False
            if i == 0 and not v & 1:
                return False
            for j in range(L):
                if v >> j & 1 and (i, j) != (0, 0):
                    has_above = bool(above >> j & 1)
                    has_left = bool(v & ((1 << j) - 1))
                    if has_above == has_left:
                        return False
        if family is not Family.EW:
            colones = above | v
            for j in closing[i]:
                if not colones >> j & 1:
                    return False
        return True

    def rec(i: int, above: int):
        if i == nrows:
            yield tuple(chosen)
            return
        for bits, v in rows_for(i):
            if ok(i, bits, v, above):
                chosen.append(bits)
                masks.append(v)
                yield from rec(i + 1, above | v)
                chosen.pop()
                masks.pop()

    if nrows == 0:
        yield ()
        return
    yield from rec(0, 0)


def enumerate_tableaux(shape: FerrersShape, family: Family | str) -> Iterator[Tableau]:
    """Every legal filling of ``shape`` once, in row-major lexicographic order."""
    family = Family(family)
    shape.check_family(family)
    for cells in _fillings(shape, family):
        yield Tableau(family, shape, cells)


def all_fillings(shape: FerrersShape, family: Family | str) -> Iterator[Tableau]:
    """Every 0/1 filling of the shape, valid or not."""
    family = Family(family)
    lengths = shape.row_lengths
    for bits in product((0, 1), repeat=shape.ncells):
        rows, k = [], 0
        for L in lengths:
            rows.append(bits[k : k + L])
            k += L
        yield Tableau(family, shape, tuple(rows))


def enumerate_by_filter(shape: FerrersShape, family: Family | str) -> Iterator[Tableau]:
    """Brute force over all 2^cells fillings, kept when :func:`is_valid`."""
    family = Family(family)
    shape.check_family(family)
    return (t for t in all_fillings(shape, family) if is_valid(t))


def count_tableaux(shape: FerrersShape, family: Family | str) -> int:
    family = Family(family)
    shape.check_family(family)
    return sum(1 for _ in _fillings(shape, family))


def shapes_of_size(n: int, family: Family | str) -> Iterator[FerrersShape]:
    """All shapes of a given size for a family, ordered by row-label set."""
    from itertools import combinations

    family = Family(family)
    if family in (Family.EW, Family.TREE):
        # row labels {0} u S with S a subset of [n-1]; label n is always a column
        for k in range(n):
            for rows in combinations(range(1, n), k):
                row_set = (0,) + rows
                cols = [x for x in range(n + 1) if x not in row_set]
                yield FerrersShape(tuple(sum(1 for c in cols if c > r) for r in row_set))
    else:
        # label 1 is always a row
        for k in range(n):
            for rows in combinations(range(2, n + 1), k):
                row_set = (1,) + rows
                cols = [x for x in range(1, n + 1) if x not in row_set]
                yield FerrersShape(tuple(sum(1 for c in cols if c > r) for r in row_set))


def enumerate_of_size(n: int, family: Family | str) -> Iterator[Tableau]:
    for shape in shapes_of_size(n, family):
        yield from enumerate_tableaux(shape, family)


def shapes_with_cells(max_cells: int) -> Iterator[FerrersShape]:
    """Integer partitions of 1..max_cells as shapes (no empty rows)."""

    def parts(m: int, bound: int):
        if m == 0:
            yield ()
            return
        for first in range(min(m, bound), 0, -1):
            for rest in parts(m - first, first):
                yield (first,) + rest

    for m in range(1, max_cells + 1):
        for p in parts(m, m):
            yield FerrersShape(p)


# -- statistics -------------------------------------------------------------


@dataclass(frozen=True)
class StructureStats:
    all_one_columns: int
    all_zero_rows: int
    zero_containing_columns: int
    rows_containing_one: int
    is_top_justified: bool
    is_domination_free: bool
    is_zero_minimal: bool
    all_one_column_labels: frozenset[int]


def dominates(t: Tableau, lower: int, upper: int) -> bool:
    """Row ``lower`` dominates row ``upper`` (which lies above it)."""
    if upper >= lower:
        raise ValueError("the dominated row must lie above the dominating one")
    R, S = t.cells[lower], t.cells[upper]
    return not any(R[j] == 0 and S[j] == 1 for j in range(len(R)))


def structure_stats(t: Tableau) -> StructureStats:
    if t.family not in (Family.EW, Family.NEW):
        raise TableauError(f"structure_stats expects an EW or NEW tableau, got {t.family}")
    cells = t.cells
    cols = [t.column(j) for j in range(t.shape.ncols)]
    lab = border_labels(t.shape, t.family)
    one_cols = frozenset(lab.col_label[j] for j, col in enumerate(cols) if all(col))
    top_justified = not any(
        cells[i][j] == 1 and cells[i - 1][j] == 0
        for i in range(1, len(cells))
        for j in range(len(cells[i]))
    )
    dom_free = not any(
        dominates(t, lower, upper)
        for lower in range(len(cells))
        for upper in range(lower)
    )
    return StructureStats(
        all_one_columns=len(one_cols),
        all_zero_rows=sum(1 for row in cells if not any(row)),
        zero_containing_columns=sum(1 for col in cols if 0 in col),
        rows_containing_one=sum(1 for row in cells if 1 in row),
        is_top_justified=top_justified,
        is_domination_free=dom_free,
        is_zero_minimal=all(row.count(0) == 1 for row in cells[1:]),
        all_one_column_labels=one_cols,
    )
