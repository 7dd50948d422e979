"""Column bumping, reverse bumping, and the column-type RSK correspondence.

Insertion convention: an incoming letter bumps the topmost entry of the
column that is greater than or equal to it, and is appended at the bottom
when every entry is smaller.  This is the unique choice under which the
column bumping lemma, the plactic relation w(x -> T) ~ x.w(T), and the
bijection with lexicographic arrays all hold.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .shapes import Cell, SkewShape
from .tableaux import SkewTableau, validate_semistandard
from .words import Word

__all__ = [
    "TwoRowedArray",
    "BumpOutcome",
    "column_insert",
    "column_insert_sequence",
    "reverse_column_insert",
    "validate_lex_array",
    "rsk_forward",
    "rsk_inverse",
    "TWO_ROWED_ARRAY_SCHEMA",
]

TWO_ROWED_ARRAY_SCHEMA = {
    "type": "object",
    "properties": {
        "top": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "bottom": {"type": "array", "items": {"type": "integer", "minimum": 1}},
    },
    "required": ["top", "bottom"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class TwoRowedArray:
    """Two aligned words; lexicographic validity is checked separately."""

    top: Word
    bottom: Word

    def __post_init__(self) -> None:
        if len(self.top) != len(self.bottom):
            raise ValueError(
                f"rows have different lengths: {len(self.top)} vs {len(self.bottom)}"
            )

    def __len__(self) -> int:
        return len(self.top)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.top.letters, self.bottom.letters))

    def to_json(self) -> dict:
        return {"top": self.top.to_json(), "bottom": self.bottom.to_json()}

    @classmethod
    def from_json(cls, obj) -> "TwoRowedArray":
        return cls(Word.from_json(obj["top"]), Word.from_json(obj["bottom"]))


class BumpOutcome(NamedTuple):
    tableau: SkewTableau
    new_cell: Cell


def _to_columns(t: SkewTableau) -> list[list[int]]:
    cols: list[list[int]] = [[] for _ in range(t.shape.outer.part(1))]
    for row in t.rows:
        for j, a in enumerate(row):
            cols[j].append(a)
    return cols


def _columns_to_tableau(cols: Sequence[Sequence[int]]) -> SkewTableau:
    cols = [c for c in cols if c]
    nrows = len(cols[0]) if cols else 0
    rows = tuple(
        tuple(col[i] for col in cols if len(col) > i) for i in range(nrows)
    )
    return SkewTableau.straight(rows)


def _require_straight(t: SkewTableau) -> None:
    if not t.shape.is_straight:
        raise ValueError("straight tableau required")


def _bump(cols: list[list[int]], x: int) -> tuple[int, int]:
    """Insert x into the column list, returning the new cell (row, col), 1-based."""
    j = 0
    while True:
        if j == len(cols):
            cols.append([])
        col = cols[j]
        i = bisect_left(col, x)  # topmost entry >= x
        if i == len(col):
            col.append(x)
            return (len(col), j + 1)
        col[i], x = x, col[i]
        j += 1


def column_insert(t: SkewTableau, x: int) -> BumpOutcome:
    """Column-insert x into a straight semistandard tableau."""
    _require_straight(t)
    if x < 1:
        raise ValueError(f"letters must be positive, got {x}")
    cols = _to_columns(t)
    r, c = _bump(cols, x)
    return BumpOutcome(_columns_to_tableau(cols), Cell(r, c))


def column_insert_sequence(letters: Iterable[int]) -> tuple[SkewTableau, tuple[Cell, ...]]:
    """Insert the letters left to right into an empty tableau, tracking each new box."""
    cols: list[list[int]] = []
    boxes: list[Cell] = []
    for x in letters:
        if x < 1:
            raise ValueError(f"letters must be positive, got {x}")
        r, c = _bump(cols, x)
        boxes.append(Cell(r, c))
    return _columns_to_tableau(cols), tuple(boxes)


def _is_removable_corner(shape: SkewShape, c: Cell) -> bool:
    return (
        shape.contains_cell(c)
        and not shape.contains_cell(Cell(c.row, c.col + 1))
        and not shape.contains_cell(Cell(c.row + 1, c.col))
    )


def reverse_column_insert(t: SkewTableau, c: Cell) -> tuple[SkewTableau, int]:
    """Undo a column insertion whose new box was c; returns the ejected letter.

    Walking leftward from c's column, the carried value replaces the
    bottom-most entry less than or equal to it, and whatever leaves column 1
    is ejected.  This inverts column_insert exactly.
    """
    _require_straight(t)
    if not _is_removable_corner(t.shape, c):
        raise ValueError(f"cell ({c.row}, {c.col}) is not a removable corner")
    cols = _to_columns(t)
    carry = cols[c.col - 1].pop()
    for j in range(c.col - 2, -1, -1):
        col = cols[j]
        i = bisect_right(col, carry) - 1  # bottom-most entry <= carry
        if i < 0:
            raise ValueError("reverse bumping failed; tableau is not semistandard")
        col[i], carry = carry, col[i]
    return _columns_to_tableau(cols), carry


def validate_lex_array(w: TwoRowedArray) -> bool:
    """Top row weakly increases; bottom row weakly decreases where the top ties."""
    u, v = w.top.letters, w.bottom.letters
    for k in range(len(u) - 1):
        if u[k] > u[k + 1]:
            return False
        if u[k] == u[k + 1] and v[k] < v[k + 1]:
            return False
    return True


def rsk_forward(w: TwoRowedArray) -> tuple[SkewTableau, SkewTableau]:
    """Column-insert the bottom row, recording top entries at each new box.

    Returns (P, Q): P is the insertion tableau of the bottom row, Q the
    same-shaped recording tableau holding the top row.
    """
    if not validate_lex_array(w):
        raise ValueError("array is not in lexicographic order (of column type)")
    cols: list[list[int]] = []
    q_rows: list[list[int]] = []
    for u, v in w.pairs():
        r, c = _bump(cols, v)
        if r > len(q_rows):
            q_rows.append([])
        if len(q_rows[r - 1]) != c - 1:
            raise RuntimeError("internal: new box does not extend the recording tableau")
        q_rows[r - 1].append(u)
    p = _columns_to_tableau(cols)
    q = SkewTableau.straight(tuple(tuple(row) for row in q_rows))
    if not (validate_semistandard(p) and validate_semistandard(q)):
        raise RuntimeError("internal: RSK output failed the semistandard check")
    return p, q


def _rightmost_max(rows: Sequence[Sequence[int]]) -> Cell:
    best: tuple[int, int, int] | None = None  # (value, col, row)
    for i, row in enumerate(rows, start=1):
        for j, a in enumerate(row, start=1):
            if best is None or (a, j) > (best[0], best[1]):
                best = (a, j, i)
    assert best is not None
    return Cell(best[2], best[1])


def rsk_inverse(p: SkewTableau, q: SkewTableau) -> TwoRowedArray:
    """Invert rsk_forward.

    Repeatedly reverse-bump P from the position of the right-most maximum
    entry of Q; emitted pairs are stacked back to front so the result is
    again lexicographic.
    """
    if p.shape != q.shape:
        raise ValueError("tableaux must have the same shape")
    if not p.shape.is_straight:
        raise ValueError("straight tableaux required")
    if not (validate_semistandard(p) and validate_semistandard(q)):
        raise ValueError("tableaux must be semistandard")
    q_rows = [list(row) for row in q.rows]
    current = p
    pairs: list[tuple[int, int]] = []
    for _ in range(p.size):
        cell = _rightmost_max(q_rows)
        if cell.col != len(q_rows[cell.row - 1]):
            raise RuntimeError("internal: right-most maximum is not at the end of its row")
        u = q_rows[cell.row - 1].pop()
        while q_rows and not q_rows[-1]:
            q_rows.pop()
        current, v = reverse_column_insert(current, cell)
        pairs.append((u, v))
    pairs.reverse()
    out = TwoRowedArray(
        Word(tuple(u for u, _ in pairs)), Word(tuple(v for _, v in pairs))
    )
    if not validate_lex_array(out):
        raise RuntimeError("internal: inverse RSK produced a non-lexicographic array")
    return out
