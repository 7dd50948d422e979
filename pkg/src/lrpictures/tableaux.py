"""Semistandard skew tableaux, their readings, and brute-force enumeration."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping

from .shapes import Cell, Partition, SkewShape, j_order_cells
from .words import TensorWord, Word

__all__ = [
    "SkewTableau",
    "validate_semistandard",
    "me_reading",
    "skew_word",
    "highest_tableau",
    "level_set",
    "p_index",
    "enumerate_ssyt",
    "DEFAULT_ENUMERATION_CELLS",
    "SKEW_TABLEAU_SCHEMA",
]

# Largest shape enumerate_ssyt will exhaust unless the caller widens it.
DEFAULT_ENUMERATION_CELLS = 12

SKEW_TABLEAU_SCHEMA = {
    "type": "object",
    "properties": {
        "outer": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "inner": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "rows": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        },
    },
    "required": ["outer", "inner", "rows"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew shape; rows[i] covers columns inner[i]+1 .. outer[i] of row i+1."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(a) for a in row) for row in self.rows)
        expected = self.shape.outer.rows
        if len(rows) != expected:
            raise ValueError(f"expected {expected} rows, got {len(rows)}")
        for i, row in enumerate(rows, start=1):
            if len(row) != self.shape.row_length(i):
                raise ValueError(
                    f"row {i} has {len(row)} entries, shape wants {self.shape.row_length(i)}"
                )
            if any(a < 1 for a in row):
                raise ValueError(f"entries must be positive, got row {row}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_entries(cls, shape: SkewShape, entries: Mapping[Cell, int]) -> "SkewTableau":
        cells = shape.cell_set()
        if set(entries) != cells:
            raise ValueError("entry map does not cover exactly the cells of the shape")
        rows = tuple(
            tuple(
                entries[Cell(i, j)]
                for j in range(shape.inner.part(i) + 1, shape.outer.part(i) + 1)
            )
            for i in range(1, shape.outer.rows + 1)
        )
        return cls(shape, rows)

    @classmethod
    def straight(cls, rows: tuple[tuple[int, ...], ...]) -> "SkewTableau":
        outer = Partition(tuple(len(r) for r in rows))
        return cls(SkewShape(outer), tuple(tuple(r) for r in rows))

    @property
    def size(self) -> int:
        return self.shape.size

    def entry(self, c: Cell) -> int:
        if not self.shape.contains_cell(c):
            raise ValueError(f"cell ({c.row}, {c.col}) outside the shape")
        return self.rows[c.row - 1][c.col - 1 - self.shape.inner.part(c.row)]

    def entries(self) -> dict[Cell, int]:
        return {c: self.entry(c) for c in j_order_cells(self.shape)}

    def content(self) -> Counter:
        return Counter(a for row in self.rows for a in row)

    def to_json(self) -> dict:
        return {
            "outer": self.shape.outer.to_json(),
            "inner": self.shape.inner.to_json(),
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, obj) -> "SkewTableau":
        shape = SkewShape(
            Partition.from_json(obj["outer"]), Partition.from_json(obj.get("inner", []))
        )
        return cls(shape, tuple(tuple(int(a) for a in row) for row in obj["rows"]))


def validate_semistandard(t: SkewTableau) -> bool:
    """Rows weakly increase left to right, columns strictly increase top to bottom."""
    shape = t.shape
    for i in range(1, shape.outer.rows + 1):
        lo, hi = shape.inner.part(i), shape.outer.part(i)
        for j in range(lo + 1, hi + 1):
            if j + 1 <= hi and t.entry(Cell(i, j)) > t.entry(Cell(i, j + 1)):
                return False
            below = Cell(i + 1, j)
            if shape.contains_cell(below) and t.entry(Cell(i, j)) >= t.entry(below):
                return False
    return True


def me_reading(t: SkewTableau, rank: int | None = None) -> TensorWord:
    """Read the entries along the J order of the shape.

    The rank defaults to the smallest value compatible with both the outer
    shape's row count and the letters present.
    """
    if not validate_semistandard(t):
        raise ValueError("tableau is not semistandard")
    letters = tuple(t.entry(c) for c in j_order_cells(t.shape))
    if rank is None:
        rank = max(t.shape.outer.rows, max(letters, default=1) - 1, 1)
    return TensorWord(rank, letters)


def skew_word(t: SkewTableau) -> Word:
    """Rows read left to right, bottom row first."""
    letters: list[int] = []
    for row in reversed(t.rows):
        letters.extend(row)
    return Word(tuple(letters))


def highest_tableau(lam: Partition) -> SkewTableau:
    """The straight tableau of shape lam whose row k is filled with k."""
    return SkewTableau(
        SkewShape(lam), tuple(tuple(i for _ in range(n)) for i, n in enumerate(lam.parts, 1))
    )


def level_set(t: SkewTableau, k: int) -> tuple[Cell, ...]:
    """Cells holding entry k, rightmost first.

    In a semistandard tableau no two such cells share a column, so the
    column-descending order is well defined and agrees with the J order.
    """
    cells = [c for c in j_order_cells(t.shape) if t.entry(c) == k]
    cells.sort(key=lambda c: -c.col)
    return tuple(cells)


def p_index(t: SkewTableau, c: Cell) -> int:
    """1-based rank of c among the cells of the same entry, counted from the right."""
    if not t.shape.contains_cell(c):
        raise ValueError(f"cell ({c.row}, {c.col}) outside the shape")
    return level_set(t, t.entry(c)).index(c) + 1


def enumerate_ssyt(
    shape: SkewShape, max_entry: int, max_cells: int | None = None
) -> Iterator[SkewTableau]:
    """All semistandard fillings with entries in 1..max_entry.

    Output order is lexicographic in the J-order reading.  Shapes with more
    than max_cells boxes (default DEFAULT_ENUMERATION_CELLS) are refused.
    """
    bound = DEFAULT_ENUMERATION_CELLS if max_cells is None else max_cells
    if shape.size > bound:
        raise ValueError(f"shape has {shape.size} cells, enumeration bound is {bound}")
    cells = j_order_cells(shape)
    index = {c: i for i, c in enumerate(cells)}
    # Predecessors in assignment order: the right neighbour bounds the value
    # from above, the one above bounds it strictly from below.
    right = [index.get(Cell(c.row, c.col + 1)) for c in cells]
    above = [index.get(Cell(c.row - 1, c.col)) if c.row > 1 else None for c in cells]
    values = [0] * len(cells)

    def rec(pos: int) -> Iterator[SkewTableau]:
        if pos == len(cells):
            yield SkewTableau.from_entries(shape, dict(zip(cells, values)))
            return
        lo = 1 if above[pos] is None else values[above[pos]] + 1
        hi = max_entry if right[pos] is None else values[right[pos]]
        for v in range(lo, hi + 1):
            values[pos] = v
            yield from rec(pos + 1)

    yield from rec(0)
