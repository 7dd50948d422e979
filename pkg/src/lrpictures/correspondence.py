"""The staged bijection between pictures and pairs of Littlewood-Richardson
crystal elements, through skew tableaux and lexicographic arrays.

Every stage validates that its output lands in the expected set.  Those
memberships are structural guarantees of the construction, so a failure is
raised as InternalError (a bug), never as bad user input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .crystal import cached_ssyt, enumerate_lr_crystal, lr_membership
from .pictures import Picture, enumerate_pictures, validate_picture
from .rsk import TwoRowedArray, rsk_forward, rsk_inverse, validate_lex_array
from .shapes import (
    Cell,
    Partition,
    SkewShape,
    add_sequence,
    j_order_cells,
    partitions_of,
    row_lengths,
)
from .tableaux import SkewTableau, me_reading, p_index, validate_semistandard
from .tableaux import SKEW_TABLEAU_SCHEMA
from .shapes import SKEW_SHAPE_SCHEMA
from .words import Word

__all__ = [
    "InternalError",
    "CorrespondenceContext",
    "CrystalPair",
    "s1_picture_to_skewtab",
    "s2_skewtab_to_array",
    "s3_array_to_pair",
    "c3_pair_to_array",
    "c2_array_to_skewtab",
    "c1_skewtab_to_picture",
    "in_s_set",
    "in_w_set",
    "full_s",
    "full_c",
    "enumerate_crystal_pairs",
    "lr_routes",
    "lr_coefficient",
    "CRYSTAL_PAIR_SCHEMA",
    "CONTEXT_SCHEMA",
]

CRYSTAL_PAIR_SCHEMA = {
    "type": "object",
    "properties": {"first": SKEW_TABLEAU_SCHEMA, "second": SKEW_TABLEAU_SCHEMA},
    "required": ["first", "second"],
    "additionalProperties": False,
}
CONTEXT_SCHEMA = {
    "type": "object",
    "properties": {"kappa1": SKEW_SHAPE_SCHEMA, "kappa2": SKEW_SHAPE_SCHEMA},
    "required": ["kappa1", "kappa2"],
    "additionalProperties": False,
}


class InternalError(RuntimeError):
    """A structural guarantee of the pipeline failed; indicates a bug."""


@dataclass(frozen=True)
class CorrespondenceContext:
    """Fixes the two skew shapes; their inner/outer partitions and the rank
    used for membership tests are derived."""

    kappa1: SkewShape
    kappa2: SkewShape

    def __post_init__(self) -> None:
        if self.kappa1.size != self.kappa2.size:
            raise ValueError(
                f"sizes differ: {self.kappa1.size} vs {self.kappa2.size}"
            )

    @property
    def lambda1(self) -> Partition:
        return self.kappa1.inner

    @property
    def nu1(self) -> Partition:
        return self.kappa1.outer

    @property
    def lambda2(self) -> Partition:
        return self.kappa2.inner

    @property
    def nu2(self) -> Partition:
        return self.kappa2.outer

    @property
    def size(self) -> int:
        return self.kappa1.size

    @property
    def rank(self) -> int:
        return max(self.nu1.rows, self.nu2.rows, 1)

    def to_json(self) -> dict:
        return {"kappa1": self.kappa1.to_json(), "kappa2": self.kappa2.to_json()}

    @classmethod
    def from_json(cls, obj) -> "CorrespondenceContext":
        return cls(SkewShape.from_json(obj["kappa1"]), SkewShape.from_json(obj["kappa2"]))


@dataclass(frozen=True)
class CrystalPair:
    """Two same-shaped straight tableaux; the common shape plays the role of mu."""

    first: SkewTableau
    second: SkewTableau

    def __post_init__(self) -> None:
        if not (self.first.shape.is_straight and self.second.shape.is_straight):
            raise ValueError("both tableaux must be straight")
        if self.first.shape != self.second.shape:
            raise ValueError("tableaux must share one shape")

    @property
    def mu(self) -> Partition:
        return self.first.shape.outer

    def to_json(self) -> dict:
        return {"first": self.first.to_json(), "second": self.second.to_json()}

    @classmethod
    def from_json(cls, obj) -> "CrystalPair":
        return cls(SkewTableau.from_json(obj["first"]), SkewTableau.from_json(obj["second"]))


def in_s_set(ctx: CorrespondenceContext, s: SkewTableau) -> bool:
    """Is s a Littlewood-Richardson skew tableau for this context?

    Requires shape kappa1, entry-i multiplicity equal to the i-th row length
    of kappa2, and a J-order reading that grows lambda2 into nu2 through
    partitions.
    """
    if s.shape != ctx.kappa1:
        raise ValueError("tableau shape differs from the context's first shape")
    if not validate_semistandard(s):
        return False
    counts = s.content()
    lengths = row_lengths(ctx.kappa2)
    top = max([ctx.kappa2.outer.rows, *counts.keys()], default=0)
    if any(counts.get(i, 0) != lengths.part(i) for i in range(1, top + 1)):
        return False
    added = add_sequence(ctx.lambda2, me_reading(s, rank=ctx.rank).letters)
    return added.valid and added.result.to_partition() == ctx.nu2


def in_w_set(ctx: CorrespondenceContext, w: TwoRowedArray) -> bool:
    """Is w a lexicographic array of this context, with both RSK tableaux in
    their Littlewood-Richardson crystals?"""
    if len(w) != ctx.size:
        return False
    if not validate_lex_array(w):
        return False
    for word, kappa in ((w.top, ctx.kappa1), (w.bottom, ctx.kappa2)):
        lengths = row_lengths(kappa)
        top = max([kappa.outer.rows, *word.letters], default=0)
        for i in range(1, top + 1):
            if sum(1 for a in word.letters if a == i) != lengths.part(i):
                return False
    p, q = rsk_forward(w)
    return (
        lr_membership(p, ctx.lambda2, ctx.nu2, ctx.rank).member
        and lr_membership(q, ctx.lambda1, ctx.nu1, ctx.rank).member
    )


def s1_picture_to_skewtab(ctx: CorrespondenceContext, f: Picture) -> SkewTableau:
    """Record the row coordinate of each image; the filling lands in the S set."""
    if f.domain != ctx.kappa1 or f.codomain != ctx.kappa2:
        raise ValueError("picture does not match the context's shapes")
    if not validate_picture(f):
        raise ValueError("map is not a picture")
    entries = {src: img.row for src, img in f.mapping().items()}
    s = SkewTableau.from_entries(ctx.kappa1, entries)
    if not in_s_set(ctx, s):
        raise InternalError("image of a picture left the S set")
    return s


def s2_skewtab_to_array(ctx: CorrespondenceContext, s: SkewTableau) -> TwoRowedArray:
    """Pair each reading letter with the row it was read from."""
    if not in_s_set(ctx, s):
        raise ValueError("tableau is not in the S set of this context")
    cells = j_order_cells(ctx.kappa1)
    top = Word(tuple(c.row for c in cells))
    bottom = Word(tuple(s.entry(c) for c in cells))
    w = TwoRowedArray(top, bottom)
    if not in_w_set(ctx, w):
        raise InternalError("image of an S-set tableau left the W set")
    return w


def s3_array_to_pair(ctx: CorrespondenceContext, w: TwoRowedArray) -> CrystalPair:
    """Column-insert the bottom row; the recording tableau comes first."""
    if not in_w_set(ctx, w):
        raise ValueError("array is not in the W set of this context")
    p, q = rsk_forward(w)
    return CrystalPair(first=q, second=p)


def c3_pair_to_array(ctx: CorrespondenceContext, pair: CrystalPair) -> TwoRowedArray:
    """Reverse-bump the second tableau using the first as recording tableau."""
    if not (
        lr_membership(pair.second, ctx.lambda2, ctx.nu2, ctx.rank).member
        and lr_membership(pair.first, ctx.lambda1, ctx.nu1, ctx.rank).member
    ):
        raise ValueError("pair is not in the crystal product of this context")
    w = rsk_inverse(pair.second, pair.first)
    if not in_w_set(ctx, w):
        raise InternalError("image of a crystal pair left the W set")
    return w


def c2_array_to_skewtab(ctx: CorrespondenceContext, w: TwoRowedArray) -> SkewTableau:
    """Write the bottom row onto kappa1 along the J order."""
    if not in_w_set(ctx, w):
        raise ValueError("array is not in the W set of this context")
    cells = j_order_cells(ctx.kappa1)
    s = SkewTableau.from_entries(ctx.kappa1, dict(zip(cells, w.bottom.letters)))
    if not validate_semistandard(s):
        raise InternalError("J-order fill of a W-set array is not semistandard")
    if not in_s_set(ctx, s):
        raise InternalError("image of a W-set array left the S set")
    return s


def c1_skewtab_to_picture(ctx: CorrespondenceContext, s: SkewTableau) -> Picture:
    """Send each cell to (entry, lambda2-offset + rank from the right among equal entries)."""
    if not in_s_set(ctx, s):
        raise ValueError("tableau is not in the S set of this context")
    images = []
    for c in j_order_cells(ctx.kappa1):
        k = s.entry(c)
        images.append(Cell(k, ctx.lambda2.part(k) + p_index(s, c)))
    f = Picture(ctx.kappa1, ctx.kappa2, tuple(images))
    if not validate_picture(f):
        raise InternalError("image of an S-set tableau is not a picture")
    return f


def full_s(ctx: CorrespondenceContext, f: Picture) -> CrystalPair:
    """Picture to crystal pair, through the S and W sets."""
    return s3_array_to_pair(ctx, s2_skewtab_to_array(ctx, s1_picture_to_skewtab(ctx, f)))


def full_c(ctx: CorrespondenceContext, pair: CrystalPair) -> Picture:
    """Crystal pair to picture; inverse of full_s."""
    return c1_skewtab_to_picture(ctx, c2_array_to_skewtab(ctx, c3_pair_to_array(ctx, pair)))


def enumerate_crystal_pairs(ctx: CorrespondenceContext) -> Iterator[CrystalPair]:
    """All same-shaped pairs with each side in its Littlewood-Richardson crystal."""
    for mu in partitions_of(ctx.size):
        if mu.rows > ctx.rank + 1:
            continue
        firsts = enumerate_lr_crystal(mu, ctx.lambda1, ctx.nu1, ctx.rank)
        if not firsts:
            continue
        seconds = enumerate_lr_crystal(mu, ctx.lambda2, ctx.nu2, ctx.rank)
        for t1 in firsts:
            for t2 in seconds:
                yield CrystalPair(t1, t2)


@lru_cache(maxsize=None)
def cached_pictures(kappa1: SkewShape, kappa2: SkewShape) -> tuple[Picture, ...]:
    return tuple(enumerate_pictures(kappa1, kappa2))


def lr_routes(
    lam: Partition, mu: Partition, nu: Partition, max_cells: int | None = None
) -> dict[str, int]:
    """The Littlewood-Richardson coefficient computed three independent ways.

    'crystal' filters shape-mu tableaux by the addition condition, 'pictures'
    counts pictures from straight mu to nu/lam, and 'skew_tableaux' counts
    the Littlewood-Richardson skew tableaux of that context.
    """
    if lam.size + mu.size != nu.size or not nu.contains(lam):
        return {"crystal": 0, "pictures": 0, "skew_tableaux": 0}
    n = max(nu.rows, mu.rows + lam.rows, 1)
    crystal_count = len(enumerate_lr_crystal(mu, lam, nu, n))
    domain = SkewShape(mu)
    codomain = SkewShape(nu, lam)
    picture_count = sum(1 for _ in enumerate_pictures(domain, codomain, max_cells=max_cells))
    ctx = CorrespondenceContext(domain, codomain)
    skew_count = sum(1 for t in cached_ssyt(domain, n + 1) if in_s_set(ctx, t))
    return {"crystal": crystal_count, "pictures": picture_count, "skew_tableaux": skew_count}


def lr_coefficient(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    cross_check: bool = False,
    max_cells: int | None = None,
) -> int:
    """The Littlewood-Richardson coefficient of (lam, mu, nu).

    With cross_check the three routes of lr_routes are compared and a
    disagreement raises InternalError.
    """
    if lam.size + mu.size != nu.size or not nu.contains(lam):
        return 0
    if cross_check:
        routes = lr_routes(lam, mu, nu, max_cells=max_cells)
        if len(set(routes.values())) != 1:
            raise InternalError(f"coefficient routes disagree: {routes}")
        return routes["crystal"]
    return len(enumerate_lr_crystal(mu, lam, nu))
