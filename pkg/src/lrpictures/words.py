"""Letter sequences: plain words and tensor words with an explicit rank."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = ["Word", "TensorWord", "WORD_SCHEMA", "TENSOR_WORD_SCHEMA"]

WORD_SCHEMA = {"type": "array", "items": {"type": "integer", "minimum": 1}}
TENSOR_WORD_SCHEMA = {
    "type": "object",
    "properties": {"rank": {"type": "integer", "minimum": 1}, "letters": WORD_SCHEMA},
    "required": ["rank", "letters"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class Word:
    """A finite sequence of positive integers."""

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(int(a) for a in self.letters)
        if any(a < 1 for a in letters):
            raise ValueError(f"letters must be positive, got {letters}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def to_json(self) -> list[int]:
        return list(self.letters)

    @classmethod
    def from_json(cls, obj) -> "Word":
        return cls(tuple(int(a) for a in obj))


@dataclass(frozen=True)
class TensorWord:
    """A sequence of letters from {1, ..., rank+1}, read as tensor factors left to right."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        letters = tuple(int(a) for a in self.letters)
        if any(not 1 <= a <= self.rank + 1 for a in letters):
            raise ValueError(f"letters must lie in 1..{self.rank + 1}, got {letters}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def to_json(self) -> dict:
        return {"rank": self.rank, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, obj) -> "TensorWord":
        return cls(int(obj["rank"]), tuple(int(a) for a in obj["letters"]))
