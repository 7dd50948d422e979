"""Crystal operators on tensor words, the combinatorial R matrix, Knuth and
crystal equivalence, and Littlewood-Richardson crystal membership.

The operator convention is the signature rule: for index k, each letter k is
an opening bracket and each letter k+1 a closing one; brackets match when an
opening letter precedes a closing one.  The raising operator turns the
rightmost unmatched k+1 into k, the lowering operator turns the leftmost
unmatched k into k+1.  Equivalently, on two factors the first factor is
preferred exactly when phi(first) >= eps(second) (raising) or
phi(first) > eps(second) (lowering).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .shapes import Partition, SkewShape, add_sequence
from .tableaux import SkewTableau, enumerate_ssyt, me_reading
from .rsk import column_insert_sequence
from .words import TensorWord, Word

__all__ = [
    "LrWitness",
    "apply_crystal_op",
    "epsilon",
    "phi",
    "weight",
    "is_highest_weight",
    "combinatorial_r",
    "knuth_step",
    "equiv_check",
    "equiv_check_fast",
    "tensor_to_word",
    "word_to_tensor",
    "tensor_concat",
    "lr_membership",
    "enumerate_lr_crystal",
    "DEFAULT_BFS_LENGTH",
    "cached_ssyt",
    "LR_WITNESS_SCHEMA",
]

# Longest words equiv_check will close over by breadth-first search.
DEFAULT_BFS_LENGTH = 8

LR_WITNESS_SCHEMA = {
    "type": "object",
    "properties": {
        "member": {"type": "boolean"},
        "final": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "fail_at": {"type": "integer", "minimum": 0},
    },
    "required": ["member"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class LrWitness:
    """Outcome of a Littlewood-Richardson membership test.

    Exactly one of final_shape (on success) and failure_index (the shortest
    failing prefix, or the full length when only the target shape is wrong)
    is present.
    """

    member: bool
    final_shape: Partition | None = None
    failure_index: int | None = None

    def __post_init__(self) -> None:
        if self.member != (self.final_shape is not None) or self.member != (
            self.failure_index is None
        ):
            raise ValueError("witness fields are inconsistent with membership")

    def to_json(self) -> dict:
        out: dict = {"member": self.member}
        if self.final_shape is not None:
            out["final"] = self.final_shape.to_json()
        if self.failure_index is not None:
            out["fail_at"] = self.failure_index
        return out


def _unmatched(letters: tuple[int, ...], k: int) -> tuple[list[int], list[int]]:
    """Positions of unmatched k+1's and unmatched k's after bracket cancellation."""
    plus: list[int] = []
    minus: list[int] = []
    for i, a in enumerate(letters):
        if a == k:
            plus.append(i)
        elif a == k + 1:
            if plus:
                plus.pop()
            else:
                minus.append(i)
    return minus, plus


def _check_index(w: TensorWord, k: int) -> None:
    if not 1 <= k <= w.rank:
        raise ValueError(f"operator index {k} out of range 1..{w.rank}")


def apply_crystal_op(
    w: TensorWord, k: int, direction: Literal["raise", "lower"]
) -> TensorWord | None:
    """Apply the raising or lowering operator for index k; None when it vanishes."""
    _check_index(w, k)
    minus, plus = _unmatched(w.letters, k)
    if direction == "raise":
        if not minus:
            return None
        i, new = minus[-1], k
    elif direction == "lower":
        if not plus:
            return None
        i, new = plus[0], k + 1
    else:
        raise ValueError(f"direction must be 'raise' or 'lower', got {direction!r}")
    letters = list(w.letters)
    letters[i] = new
    return TensorWord(w.rank, tuple(letters))


def epsilon(w: TensorWord, k: int) -> int:
    """How many times the raising operator for k applies."""
    _check_index(w, k)
    return len(_unmatched(w.letters, k)[0])


def phi(w: TensorWord, k: int) -> int:
    """How many times the lowering operator for k applies."""
    _check_index(w, k)
    return len(_unmatched(w.letters, k)[1])


def weight(w: TensorWord) -> tuple[int, ...]:
    """Letter multiplicities, indexed 1 .. rank+1."""
    out = [0] * (w.rank + 1)
    for a in w.letters:
        out[a - 1] += 1
    return tuple(out)


def is_highest_weight(w: TensorWord) -> bool:
    """Every raising operator vanishes; equivalently every prefix has #k >= #(k+1)."""
    return all(epsilon(w, k) == 0 for k in range(1, w.rank + 1))


def _r_move(letters: tuple[int, ...], i: int) -> tuple[int, ...]:
    """The R matrix on the window at 0-based position i; identity when no case fits."""
    x, y, z = letters[i], letters[i + 1], letters[i + 2]
    if (y <= x < z) or (z <= x < y):
        # patterns b(a)(c) <-> b(c)(a) with a <= b < c: swap the last two
        return letters[:i + 1] + (z, y) + letters[i + 3:]
    if (y < z <= x) or (x < z <= y):
        # patterns (c)(a)b <-> (a)(c)b with a < b <= c: swap the first two
        return letters[:i] + (y, x) + letters[i + 2:]
    return letters


def combinatorial_r(w: TensorWord, pos: int) -> TensorWord:
    """Apply the combinatorial R matrix to the three factors at pos (1-based)."""
    if not 1 <= pos <= len(w.letters) - 2:
        raise ValueError(f"window {pos}..{pos + 2} out of range for length {len(w.letters)}")
    return TensorWord(w.rank, _r_move(w.letters, pos - 1))


def _knuth_moves(letters: tuple[int, ...], i: int) -> tuple[tuple[int, ...], ...]:
    """All single Knuth transformations at the 0-based window i."""
    a, b, c = letters[i], letters[i + 1], letters[i + 2]
    out: list[tuple[int, ...]] = []
    if b < a <= c:  # yxz -> yzx with x < y <= z
        out.append(letters[:i] + (a, c, b) + letters[i + 3:])
    if c < a <= b:  # yzx -> yxz
        out.append(letters[:i] + (a, c, b) + letters[i + 3:])
    if a <= c < b:  # xzy -> zxy with x <= y < z
        out.append(letters[:i] + (b, a, c) + letters[i + 3:])
    if b <= c < a:  # zxy -> xzy
        out.append(letters[:i] + (b, a, c) + letters[i + 3:])
    return tuple(out)


def knuth_step(w: Word, pos: int) -> tuple[Word, ...]:
    """Words reachable by one fundamental Knuth transformation at pos (1-based)."""
    if not 1 <= pos <= len(w.letters) - 2:
        raise ValueError(f"window {pos}..{pos + 2} out of range for length {len(w.letters)}")
    return tuple(Word(m) for m in _knuth_moves(w.letters, pos - 1))


def tensor_to_word(b: TensorWord) -> Word:
    """The word whose reversal lists b's tensor factors."""
    return Word(tuple(reversed(b.letters)))


def word_to_tensor(w: Word, rank: int | None = None) -> TensorWord:
    """Inverse of tensor_to_word; rank defaults to the smallest admissible value."""
    if rank is None:
        rank = max(max(w.letters, default=2) - 1, 1)
    return TensorWord(rank, tuple(reversed(w.letters)))


def _letters_of(x) -> tuple[int, ...]:
    if isinstance(x, (Word, TensorWord)):
        return x.letters
    return tuple(int(a) for a in x)


def equiv_check(
    x,
    y,
    mode: Literal["knuth", "crystal"] = "knuth",
    max_len: int | None = None,
) -> bool:
    """Exact equivalence by breadth-first closure.

    mode 'knuth' closes a word under the fundamental Knuth transformations;
    mode 'crystal' closes a tensor word under R at every window.  The two
    notions correspond under letter reversal (see tensor_to_word).  Words
    longer than max_len (default DEFAULT_BFS_LENGTH) are refused; use
    equiv_check_fast for those.
    """
    bound = DEFAULT_BFS_LENGTH if max_len is None else max_len
    a, b = _letters_of(x), _letters_of(y)
    if len(a) != len(b):
        raise ValueError(f"words have different lengths: {len(a)} vs {len(b)}")
    if len(a) > bound:
        raise ValueError(f"length {len(a)} exceeds the BFS bound {bound}")
    if sorted(a) != sorted(b):
        return False  # both move families permute letters
    if mode == "knuth":
        def neighbours(t: tuple[int, ...]):
            for i in range(len(t) - 2):
                yield from _knuth_moves(t, i)
    elif mode == "crystal":
        def neighbours(t: tuple[int, ...]):
            for i in range(len(t) - 2):
                m = _r_move(t, i)
                if m != t:
                    yield m
    else:
        raise ValueError(f"mode must be 'knuth' or 'crystal', got {mode!r}")
    if a == b:
        return True
    seen = {a}
    queue = deque([a])
    while queue:
        t = queue.popleft()
        for m in neighbours(t):
            if m == b:
                return True
            if m not in seen:
                seen.add(m)
                queue.append(m)
    return False


def equiv_check_fast(x, y, mode: Literal["knuth", "crystal"] = "knuth") -> bool:
    """Unbounded equivalence test via equality of column-insertion tableaux.

    A word is inserted right to left, a tensor word left to right; two
    sequences are equivalent exactly when the insertions agree.
    """
    a, b = _letters_of(x), _letters_of(y)
    if len(a) != len(b):
        raise ValueError(f"words have different lengths: {len(a)} vs {len(b)}")
    if mode == "knuth":
        a, b = tuple(reversed(a)), tuple(reversed(b))
    elif mode != "crystal":
        raise ValueError(f"mode must be 'knuth' or 'crystal', got {mode!r}")
    return column_insert_sequence(a)[0] == column_insert_sequence(b)[0]


def tensor_concat(a: TensorWord, b: TensorWord) -> TensorWord:
    return TensorWord(max(a.rank, b.rank), a.letters + b.letters)


def _resolve_rank(t: SkewTableau, lam: Partition, nu: Partition, n: int | None) -> int:
    if n is None:
        max_letter = max((a for row in t.rows for a in row), default=1)
        return max(nu.rows, t.shape.outer.rows + lam.rows, max_letter - 1, 1)
    if n < 1:
        raise ValueError(f"rank must be positive, got {n}")
    return n


def lr_membership(
    t: SkewTableau, lam: Partition, nu: Partition, n: int | None = None
) -> LrWitness:
    """Does adding boxes along t's J-order reading carry lam to nu through partitions?

    t must be a straight semistandard tableau with entries at most n+1.
    """
    if not t.shape.is_straight:
        raise ValueError("straight tableau required")
    n = _resolve_rank(t, lam, nu, n)
    reading = me_reading(t, rank=n)  # rejects non-semistandard fillings
    added = add_sequence(lam, reading.letters)
    if not added.valid:
        return LrWitness(False, None, added.first_failure)
    final = added.result.to_partition()
    if final != nu:
        return LrWitness(False, None, len(reading.letters))
    return LrWitness(True, final, None)


@lru_cache(maxsize=None)
def cached_ssyt(shape: SkewShape, max_entry: int) -> tuple[SkewTableau, ...]:
    """Memoised exhaustive enumeration; shared by the counting routines."""
    return tuple(enumerate_ssyt(shape, max_entry))


@lru_cache(maxsize=None)
def _lr_crystal_cached(
    mu: Partition, lam: Partition, nu: Partition, n: int
) -> tuple[SkewTableau, ...]:
    if lam.size + mu.size != nu.size or not nu.contains(lam):
        return ()
    return tuple(
        t
        for t in cached_ssyt(SkewShape(mu), n + 1)
        if lr_membership(t, lam, nu, n).member
    )


def enumerate_lr_crystal(
    mu: Partition, lam: Partition, nu: Partition, n: int | None = None
) -> tuple[SkewTableau, ...]:
    """All straight shape-mu tableaux whose reading is a valid lam -> nu addition.

    The count is the Littlewood-Richardson coefficient of the triple, which
    is stable in n once n reaches the row count of nu.
    """
    if n is None:
        n = max(nu.rows, mu.rows + lam.rows, 1)
    if n < 1:
        raise ValueError(f"rank must be positive, got {n}")
    return _lr_crystal_cached(mu, lam, nu, n)
