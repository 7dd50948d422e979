"""Partitions, skew diagrams, cell coordinates, and the two cell orders.

Cells use matrix coordinates: row 1 is the top row, column 1 the leftmost
column.  All values here are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Cell",
    "Partition",
    "Composition",
    "SkewShape",
    "AdditionResult",
    "leq_p",
    "leq_j",
    "j_order_cells",
    "row_lengths",
    "add_one",
    "add_sequence",
    "partitions_of",
    "partitions_in_box",
    "subpartitions",
    "PARTITION_SCHEMA",
    "CELL_SCHEMA",
    "SKEW_SHAPE_SCHEMA",
]

PARTITION_SCHEMA = {"type": "array", "items": {"type": "integer", "minimum": 0}}
CELL_SCHEMA = {
    "type": "array",
    "items": {"type": "integer", "minimum": 1},
    "minItems": 2,
    "maxItems": 2,
}
SKEW_SHAPE_SCHEMA = {
    "type": "object",
    "properties": {"outer": PARTITION_SCHEMA, "inner": PARTITION_SCHEMA},
    "required": ["outer", "inner"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class Cell:
    """One box, 1-based, rows counted downward."""

    row: int
    col: int

    def __post_init__(self) -> None:
        if self.row < 1 or self.col < 1:
            raise ValueError(f"cell coordinates are 1-based, got ({self.row}, {self.col})")

    def to_json(self) -> list[int]:
        return [self.row, self.col]

    @classmethod
    def from_json(cls, obj) -> "Cell":
        row, col = obj
        return cls(int(row), int(col))


def leq_p(a: Cell, b: Cell) -> bool:
    """Componentwise partial order: a weakly above and weakly left of b."""
    return a.row <= b.row and a.col <= b.col


def leq_j(a: Cell, b: Cell) -> bool:
    """Total order sweeping rows top to bottom, each row right to left."""
    return a.row < b.row or (a.row == b.row and a.col >= b.col)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing non-negative parts; trailing zeros are stripped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """Length of row i (1-based); rows past the end have length 0."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= other.part(i) for i in range(1, other.rows + 1))

    def cells(self) -> Iterator[Cell]:
        for i, length in enumerate(self.parts, start=1):
            for j in range(1, length + 1):
                yield Cell(i, j)

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, obj) -> "Partition":
        return cls(tuple(int(p) for p in obj))


@dataclass(frozen=True)
class Composition:
    """Non-negative integer parts in a fixed order; trailing zeros are kept."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def is_partition(self) -> bool:
        return all(self.parts[i] >= self.parts[i + 1] for i in range(len(self.parts) - 1))

    def to_partition(self) -> Partition:
        if not self.is_partition():
            raise ValueError(f"{self.parts} is not weakly decreasing")
        return Partition(self.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True)
class SkewShape:
    """The diagram outer minus inner; a straight shape has an empty inner."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner.parts} not contained in outer {self.outer.parts}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return self.inner.rows == 0

    def row_length(self, i: int) -> int:
        return self.outer.part(i) - self.inner.part(i)

    def contains_cell(self, c: Cell) -> bool:
        return self.inner.part(c.row) < c.col <= self.outer.part(c.row)

    def cell_set(self) -> frozenset[Cell]:
        return frozenset(j_order_cells(self))

    def to_json(self) -> dict:
        return {"outer": self.outer.to_json(), "inner": self.inner.to_json()}

    @classmethod
    def from_json(cls, obj) -> "SkewShape":
        return cls(Partition.from_json(obj["outer"]), Partition.from_json(obj.get("inner", [])))


def j_order_cells(shape: SkewShape) -> tuple[Cell, ...]:
    """All cells of the shape, ascending in the total order leq_j.

    Rows are visited top to bottom and each row right to left, so the k-th
    cell is the source of the k-th letter of any J-order reading.
    """
    out: list[Cell] = []
    for i in range(1, shape.outer.rows + 1):
        lo, hi = shape.inner.part(i), shape.outer.part(i)
        for j in range(hi, lo, -1):
            out.append(Cell(i, j))
    return tuple(out)


def row_lengths(shape: SkewShape) -> Composition:
    return Composition(tuple(shape.row_length(i) for i in range(1, shape.outer.rows + 1)))


def add_one(shape: Composition | Partition, i: int) -> Composition:
    """Add one box to row i; rows beyond the current length count as empty.

    The result may fail to be weakly decreasing; callers that care check
    with Composition.is_partition.
    """
    if i < 1:
        raise ValueError(f"row index must be positive, got {i}")
    parts = list(shape.parts)
    while len(parts) < i:
        parts.append(0)
    parts[i - 1] += 1
    return Composition(tuple(parts))


class AdditionResult(NamedTuple):
    result: Composition
    valid: bool
    first_failure: int | None


def add_sequence(base: Partition, word: Iterable[int]) -> AdditionResult:
    """Add boxes at the rows named by word, left to right.

    valid is True iff every intermediate stays weakly decreasing; otherwise
    first_failure is the 1-based length of the shortest failing prefix.  The
    boxes are added regardless, so the returned shape always has
    |base| + len(word) cells.
    """
    parts = list(base.parts)
    valid = True
    first_failure: int | None = None
    for k, i in enumerate(word, start=1):
        if i < 1:
            raise ValueError(f"row index must be positive, got {i}")
        while len(parts) < i:
            parts.append(0)
        parts[i - 1] += 1
        if valid and i > 1 and parts[i - 2] < parts[i - 1]:
            valid = False
            first_failure = k
    return AdditionResult(Composition(tuple(parts)), valid, first_failure)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n with parts at most max_part, largest part first."""
    if n < 0:
        return
    cap = n if max_part is None else min(max_part, n)

    def rec(remaining: int, largest: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for p in range(min(largest, remaining), 0, -1):
            yield from rec(remaining - p, p, prefix + (p,))

    if n == 0:
        yield Partition()
        return
    for parts in rec(n, cap, ()):
        yield Partition(parts)


def partitions_in_box(max_size: int, max_rows: int, max_cols: int) -> Iterator[Partition]:
    """All partitions of size at most max_size with at most max_rows rows and parts at most max_cols."""
    for n in range(max_size + 1):
        for p in partitions_of(n, max_part=max_cols):
            if p.rows <= max_rows:
                yield p


def subpartitions(nu: Partition) -> Iterator[Partition]:
    """All partitions contained in nu, in a deterministic order."""
    parts = nu.parts

    def rec(i: int, prev: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(parts):
            yield prefix
            return
        for v in range(min(prev, parts[i]), -1, -1):
            yield from rec(i + 1, v, prefix + (v,))

    if not parts:
        yield Partition()
        return
    for lam in rec(0, parts[0], ()):
        yield Partition(lam)
