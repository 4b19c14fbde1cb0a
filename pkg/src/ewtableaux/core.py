"""Ferrers shapes, border labels, Ferrers graphs and the tableau text format.

Rows and columns are addressed by 0-based positional indices (rows top to
bottom, columns left to right).  Labels are a derived view computed from the
shape by walking the southeast border.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence


class Family(str, Enum):
    EW = "EW"
    NEW = "NEW"
    LE = "LE"
    TREE = "TREE"

    def __str__(self) -> str:
        return self.value


ROW = "row"
COL = "col"


class ShapeError(ValueError):
    """Raised for shapes that are malformed or illegal for a family."""


class TableauError(ValueError):
    """Raised for malformed tableau text or fillings that break a family rule."""


@dataclass(frozen=True)
class FerrersShape:
    row_lengths: tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(int(x) for x in self.row_lengths)
        object.__setattr__(self, "row_lengths", lengths)
        if any(x < 0 for x in lengths):
            raise ShapeError(f"negative row length in {lengths}")
        for i in range(len(lengths) - 1):
            if lengths[i] < lengths[i + 1]:
                raise ShapeError(f"row lengths {lengths} are not weakly decreasing")

    @classmethod
    def of(cls, lengths: Iterable[int] | str) -> FerrersShape:
        if isinstance(lengths, str):
            lengths = [int(tok) for tok in lengths.replace(",", " ").split()]
        return cls(tuple(lengths))

    @property
    def nrows(self) -> int:
        return len(self.row_lengths)

    @property
    def ncols(self) -> int:
        return self.row_lengths[0] if self.row_lengths else 0

    @property
    def ncells(self) -> int:
        return sum(self.row_lengths)

    def column_lengths(self) -> tuple[int, ...]:
        return tuple(sum(1 for L in self.row_lengths if L > j) for j in range(self.ncols))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, L in enumerate(self.row_lengths):
            for j in range(L):
                yield i, j

    def has_cell(self, i: int, j: int) -> bool:
        return 0 <= i < self.nrows and 0 <= j < self.row_lengths[i]

    def size(self, family: Family | str) -> int:
        family = Family(family)
        if family in (Family.EW, Family.TREE):
            return self.nrows + self.ncols - 1
        return self.nrows + self.ncols

    def check_family(self, family: Family | str) -> None:
        family = Family(family)
        if family in (Family.EW, Family.TREE):
            if not self.row_lengths:
                raise ShapeError(f"{family} shape needs at least one row")
            if 0 in self.row_lengths:
                raise ShapeError(f"{family} shape {self.row_lengths} has an empty row")

    def __str__(self) -> str:
        return " ".join(map(str, self.row_lengths))


@dataclass(frozen=True)
class BorderLabeling:
    """Labels of the southeast border edges, from the top-right corner down.

    ``labels`` holds ``(label, kind, index)`` triples in walk order, where kind
    is ``"row"`` for a vertical edge and ``"col"`` for a horizontal one.
    """

    shape: FerrersShape
    start: int
    labels: tuple[tuple[int, str, int], ...]
    row_label: tuple[int, ...] = field(init=False, repr=False)
    col_label: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        rows = [0] * self.shape.nrows
        cols = [0] * self.shape.ncols
        for label, kind, idx in self.labels:
            if kind == ROW:
                rows[idx] = label
            else:
                cols[idx] = label
        object.__setattr__(self, "row_label", tuple(rows))
        object.__setattr__(self, "col_label", tuple(cols))

    @property
    def n(self) -> int:
        """Largest label."""
        return self.start + len(self.labels) - 1

    def locate(self, label: int) -> tuple[str, int]:
        _, kind, idx = self.labels[label - self.start]
        return kind, idx

    def row_labels(self) -> list[int]:
        return list(self.row_label)

    def column_labels(self) -> list[int]:
        return list(self.col_label)


def border_labels(shape: FerrersShape, family: Family | str) -> BorderLabeling:
    family = Family(family)
    shape.check_family(family)
    start = 0 if family in (Family.EW, Family.TREE) else 1
    out = []
    label = start
    prev = shape.ncols
    for i, length in enumerate(shape.row_lengths):
        for j in range(prev - 1, length - 1, -1):
            out.append((label, COL, j))
            label += 1
        out.append((label, ROW, i))
        label += 1
        prev = length
    for j in range(prev - 1, -1, -1):
        out.append((label, COL, j))
        label += 1
    return BorderLabeling(shape, start, tuple(out))


def shape_from_labels(row_labels: Iterable[int], n: int, start: int) -> FerrersShape:
    """Rebuild a shape from its set of row labels among ``start..n``.

    A row's length is the number of column labels larger than its own label.
    """
    rows = sorted(set(row_labels))
    cols = [x for x in range(start, n + 1) if x not in set(rows)]
    return FerrersShape(tuple(sum(1 for c in cols if c > r) for r in rows))


@dataclass(frozen=True)
class FerrersGraph:
    """Bipartite graph of a shape under the EW labeling; vertex 0 is the sink."""

    shape: FerrersShape
    labeling: BorderLabeling
    edges: frozenset[tuple[int, int]]

    @property
    def top_vertices(self) -> tuple[int, ...]:
        return self.labeling.row_label

    @property
    def bottom_vertices(self) -> tuple[int, ...]:
        return self.labeling.col_label

    @property
    def vertices(self) -> range:
        return range(0, self.labeling.n + 1)

    @property
    def sink(self) -> int:
        return 0

    def is_row(self, v: int) -> bool:
        return self.labeling.locate(v)[0] == ROW

    def edge_of_cell(self, i: int, j: int) -> tuple[int, int]:
        return self.labeling.row_label[i], self.labeling.col_label[j]

    def cell_of_edge(self, edge: tuple[int, int]) -> tuple[int, int]:
        r, c = edge
        return self.labeling.locate(r)[1], self.labeling.locate(c)[1]

    def neighbors(self, v: int) -> list[int]:
        kind, idx = self.labeling.locate(v)
        if kind == ROW:
            return [self.labeling.col_label[j] for j in range(self.shape.row_lengths[idx])]
        return [self.labeling.row_label[i] for i in range(self.shape.column_lengths()[idx])]

    def degree(self, v: int) -> int:
        kind, idx = self.labeling.locate(v)
        if kind == ROW:
            return self.shape.row_lengths[idx]
        return self.shape.column_lengths()[idx]


def ferrers_graph(shape: FerrersShape) -> FerrersGraph:
    if not shape.row_lengths or shape.ncols == 0:
        raise ShapeError("Ferrers graph of an empty shape")
    lab = border_labels(shape, Family.EW)
    edges = frozenset(
        (lab.row_label[i], lab.col_label[j]) for i, j in shape.cells()
    )
    return FerrersGraph(shape, lab, edges)


@dataclass(frozen=True)
class Tableau:
    """A 0/1 filling (or dotted filling, 1 = dot, for TREE) of a Ferrers shape."""

    family: Family
    shape: FerrersShape
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        cells = tuple(tuple(int(b) for b in row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if len(cells) != self.shape.nrows:
            raise TableauError(
                f"{len(cells)} rows of cells for a shape with {self.shape.nrows} rows"
            )
        for i, (row, length) in enumerate(zip(cells, self.shape.row_lengths)):
            if len(row) != length:
                raise TableauError(f"row {i + 1} has {len(row)} cells, shape says {length}")
            if any(b not in (0, 1) for b in row):
                raise TableauError(f"row {i + 1} has an entry other than 0/1")

    @classmethod
    def from_rows(cls, family: Family | str, rows: Sequence[Sequence[int] | str]) -> Tableau:
        parsed = []
        for row in rows:
            if isinstance(row, str):
                row = [_CHAR_TO_BIT[ch] for ch in row]
            parsed.append(tuple(row))
        shape = FerrersShape(tuple(len(r) for r in parsed))
        return cls(Family(family), shape, tuple(parsed))

    @property
    def size(self) -> int:
        return self.shape.size(self.family)

    def labeling(self) -> BorderLabeling:
        return border_labels(self.shape, self.family)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.cells[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.cells if len(row) > j)

    def rows_text(self) -> list[str]:
        chars = ".*" if self.family is Family.TREE else "01"
        return ["".join(chars[b] for b in row) for row in self.cells]

    def __str__(self) -> str:
        return serialize(self)


_CHAR_TO_BIT = {"0": 0, "1": 1, ".": 0, "*": 1}


def serialize(t: Tableau) -> str:
    """Text form: family tag, row lengths, then one line per nonempty row."""
    lines = [t.family.value, " ".join(map(str, t.shape.row_lengths))]
    lines.extend(r for r in t.rows_text() if r)
    return "\n".join(lines)


def serialize_line(t: Tableau) -> str:
    """Single-line variant of :func:`serialize` using '/' as line separator."""
    return serialize(t).replace("\n", "/")


def parse(text: str, validate: bool = True) -> Tableau:
    """Inverse of :func:`serialize`; also accepts the '/'-separated line form.

    With ``validate`` the family rules are checked and the first violation is
    raised as :class:`TableauError`.
    """
    text = text.strip()
    if "\n" not in text and "/" in text:
        text = text.replace("/", "\n")
    lines = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if len(lines) < 1:
        raise TableauError("empty tableau text")
    try:
        family = Family(lines[0])
    except ValueError:
        raise TableauError(f"unknown family tag {lines[0]!r}") from None
    try:
        shape = FerrersShape.of(lines[1] if len(lines) > 1 else "")
    except (ShapeError, ValueError) as exc:
        raise TableauError(f"bad row-length line: {exc}") from None
    body = lines[2:]
    nonempty = [L for L in shape.row_lengths if L > 0]
    if len(body) != len(nonempty):
        raise TableauError(f"expected {len(nonempty)} filling lines, got {len(body)}")
    allowed = ".*" if family is Family.TREE else "01"
    rows: list[tuple[int, ...]] = []
    it = iter(body)
    for i, length in enumerate(shape.row_lengths):
        if length == 0:
            rows.append(())
            continue
        line = next(it)
        if len(line) != length:
            raise TableauError(f"row {i + 1} has {len(line)} cells, shape says {length}")
        for j, ch in enumerate(line):
            if ch not in allowed:
                raise TableauError(f"bad character {ch!r} at row {i + 1}, column {j + 1}")
        rows.append(tuple(_CHAR_TO_BIT[ch] for ch in line))
    t = Tableau(family, shape, tuple(rows))
    if validate:
        from .tableaux import validate as _validate

        _validate(t)
    return t


def to_json(t: Tableau) -> str:
    return json.dumps({"kind": t.family.value, "rows": [list(r) for r in t.cells]})


def from_json(text: str | dict, validate: bool = True) -> Tableau:
    data = json.loads(text) if isinstance(text, str) else text
    try:
        t = Tableau.from_rows(data["kind"], data["rows"])
    except (KeyError, TypeError, ShapeError) as exc:
        raise TableauError(f"bad structured tableau: {exc}") from None
    if validate:
        from .tableaux import validate as _validate

        _validate(t)
    return t
