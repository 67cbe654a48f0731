"""Colourings, rainbow-neighbourhood checks and exact colour statistics."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ValidationError
from .graph import Graph, closed_neighbourhood


@dataclass(frozen=True)
class Colouring:
    """Surjective assignment of colours ``1..k``; ``colors[v]`` colours vertex ``v``."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 1:
            raise ValidationError(f"palette size k must be >= 1, got {self.k}")
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise ValidationError(f"colour {bad[0]} outside palette 1..{self.k}")
        unused = sorted(set(range(1, self.k + 1)) - set(self.colors))
        if unused:
            raise ValidationError(f"colouring is not surjective: colours {unused} unused with k={self.k}")

    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> "Colouring":
        """Infer ``k`` as the largest colour used."""
        return cls(max(colors, default=0), tuple(colors))

    def __len__(self):
        return len(self.colors)

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {c: [] for c in range(1, self.k + 1)}
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: dict) -> "Colouring":
        return cls(int(data["k"]), tuple(data["colors"]))


def _require_cover(g: Graph, c: Colouring) -> None:
    if len(c.colors) != g.n:
        raise ValidationError(f"colouring has {len(c.colors)} entries but graph has {g.n} vertices")


def is_proper(g: Graph, c: Colouring) -> bool:
    _require_cover(g, c)
    return all(c.colors[u] != c.colors[v] for u, v in g.edges)


def rainbow_vertices(g: Graph, c: Colouring) -> frozenset[int]:
    """Vertices whose closed neighbourhood shows every colour ``1..k``."""
    _require_cover(g, c)
    return frozenset(
        v for v in range(g.n)
        if len({c.colors[u] for u in closed_neighbourhood(g, v)}) == c.k
    )


def is_j_feasible(g: Graph, c: Colouring) -> bool:
    return is_proper(g, c) and len(rainbow_vertices(g, c)) == g.n


def is_j_star_feasible(g: Graph, c: Colouring) -> bool:
    if not is_proper(g, c):
        return False
    rainbow = rainbow_vertices(g, c)
    return all(v in rainbow for v in range(g.n) if g.degree(v) >= 2)


@dataclass(frozen=True)
class ColourDistribution:
    """Colour-class sizes in canonical order and the matching exact p.m.f.

    Canonical order: larger classes first, ties broken by the smallest vertex
    label in the class. ``pmf[i]`` is the probability of colour index ``i + 1``.
    """

    theta: tuple[int, ...]
    pmf: tuple[Fraction, ...]
    n: int

    def to_json(self) -> dict:
        return {
            "theta": list(self.theta),
            "pmf": [[p.numerator, p.denominator] for p in self.pmf],
            "mean": _pair(j_mean(self)),
            "variance": _pair(j_variance(self)),
        }


def _pair(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


def colour_distribution(g: Graph, c: Colouring) -> ColourDistribution:
    _require_cover(g, c)
    classes = sorted(c.classes().values(), key=lambda members: (-len(members), min(members)))
    theta = tuple(len(members) for members in classes)
    return ColourDistribution(theta, tuple(Fraction(t, g.n) for t in theta), g.n)


def j_mean(d: ColourDistribution) -> Fraction:
    return sum((i * p for i, p in enumerate(d.pmf, start=1)), Fraction(0))


def j_variance(d: ColourDistribution) -> Fraction:
    second = sum((i * i * p for i, p in enumerate(d.pmf, start=1)), Fraction(0))
    return second - j_mean(d) ** 2


def canonical_relabel(colors: Sequence[int]) -> tuple[int, ...]:
    """Rename colours by first occurrence along vertex labels (1, 2, 3, ...)."""
    names: dict[int, int] = {}
    return tuple(names.setdefault(x, len(names) + 1) for x in colors)
