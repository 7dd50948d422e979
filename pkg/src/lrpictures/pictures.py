"""Pictures: bijections between skew diagrams that are PJ-standard both ways."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .shapes import Cell, SkewShape, j_order_cells, leq_j, leq_p
from .shapes import CELL_SCHEMA, SKEW_SHAPE_SCHEMA

__all__ = [
    "Picture",
    "is_pj_standard",
    "validate_picture",
    "enumerate_pictures",
    "DEFAULT_PICTURE_CELLS",
    "PICTURE_SCHEMA",
]

# Largest shapes enumerate_pictures will exhaust unless the caller widens it.
DEFAULT_PICTURE_CELLS = 8

PICTURE_SCHEMA = {
    "type": "object",
    "properties": {
        "domain": SKEW_SHAPE_SCHEMA,
        "codomain": SKEW_SHAPE_SCHEMA,
        "pairs": {
            "type": "array",
            "items": {
                "type": "array",
                "items": CELL_SCHEMA,
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
    "required": ["domain", "codomain", "pairs"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class Picture:
    """A cell map stored as the image sequence along the domain's J order."""

    domain: SkewShape
    codomain: SkewShape
    images: tuple[Cell, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.domain.size:
            raise ValueError(
                f"{len(self.images)} images for a domain of {self.domain.size} cells"
            )

    def mapping(self) -> dict[Cell, Cell]:
        return dict(zip(j_order_cells(self.domain), self.images))

    def image_of(self, c: Cell) -> Cell:
        return self.mapping()[c]

    def inverse(self) -> "Picture":
        back = {img: src for src, img in self.mapping().items()}
        if len(back) != len(self.images):
            raise ValueError("map is not injective; no inverse")
        return Picture(
            self.codomain,
            self.domain,
            tuple(back[c] for c in j_order_cells(self.codomain)),
        )

    def to_json(self) -> dict:
        return {
            "domain": self.domain.to_json(),
            "codomain": self.codomain.to_json(),
            "pairs": [
                [src.to_json(), img.to_json()]
                for src, img in zip(j_order_cells(self.domain), self.images)
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "Picture":
        domain = SkewShape.from_json(obj["domain"])
        codomain = SkewShape.from_json(obj["codomain"])
        given = {Cell.from_json(s): Cell.from_json(i) for s, i in obj["pairs"]}
        if set(given) != set(j_order_cells(domain)):
            raise ValueError("pairs do not cover exactly the domain cells")
        return cls(domain, codomain, tuple(given[c] for c in j_order_cells(domain)))


def is_pj_standard(cells: Sequence[Cell], images: Sequence[Cell]) -> bool:
    """Whenever one source cell sits weakly north-west of another, the images
    must compare in the J order."""
    if len(cells) != len(images):
        raise ValueError("cells and images must be aligned")
    n = len(cells)
    for i in range(n):
        for j in range(n):
            if i != j and leq_p(cells[i], cells[j]) and not leq_j(images[i], images[j]):
                return False
    return True


def validate_picture(p: Picture) -> bool:
    """Bijective onto the codomain, PJ-standard in both directions."""
    if len(set(p.images)) != len(p.images):
        return False
    if set(p.images) != p.codomain.cell_set():
        return False
    sources = j_order_cells(p.domain)
    if not is_pj_standard(sources, p.images):
        return False
    back = {img: src for src, img in zip(sources, p.images)}
    targets = j_order_cells(p.codomain)
    return is_pj_standard(targets, tuple(back[c] for c in targets))


def enumerate_pictures(
    kappa1: SkewShape, kappa2: SkewShape, max_cells: int | None = None
) -> Iterator[Picture]:
    """All pictures from kappa1 to kappa2, by backtracking over images.

    Images are assigned along the domain's J order and candidates tried in
    the codomain's J order, so output order is deterministic.  Pruning uses
    only constraints among already-assigned pairs, hence is exact.
    """
    bound = DEFAULT_PICTURE_CELLS if max_cells is None else max_cells
    if kappa1.size != kappa2.size:
        raise ValueError(f"sizes differ: {kappa1.size} vs {kappa2.size}")
    if kappa1.size > bound:
        raise ValueError(f"{kappa1.size} cells exceed the enumeration bound {bound}")

    domain = j_order_cells(kappa1)
    codomain = j_order_cells(kappa2)
    n = len(domain)
    images: list[Cell] = []
    used = [False] * n

    def admits(c: Cell, y: Cell) -> bool:
        # c is later than every assigned source in the J order, so the
        # inverse direction only forbids y sitting weakly north-west of a
        # used image; the forward direction is checked both ways.
        for src, img in zip(domain, images):
            if leq_p(src, c) and not leq_j(img, y):
                return False
            if leq_p(c, src) and not leq_j(y, img):
                return False
            if leq_p(y, img):
                return False
        return True

    def rec(pos: int) -> Iterator[Picture]:
        if pos == n:
            candidate = Picture(kappa1, kappa2, tuple(images))
            if validate_picture(candidate):
                yield candidate
            return
        c = domain[pos]
        for idx, y in enumerate(codomain):
            if not used[idx] and admits(c, y):
                used[idx] = True
                images.append(y)
                yield from rec(pos + 1)
                images.pop()
                used[idx] = False

    yield from rec(0)
