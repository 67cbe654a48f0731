"""Closed-form J-colouring results for named families.

Colour numbers come from the known theorems. Statistics are never copied
from printed formulas: each is recomputed from a canonical J-colouring
(e.g. the period-3 pattern on a cycle, hub on its own colour for a wheel) and
then compared with the published formula, so every field carries a tag
saying whether the two agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as F

from .colouring import ColourDistribution, Colouring, colour_distribution, j_mean, j_variance
from .graph import (
    CompleteGraph,
    CompleteMultipartiteGraph,
    CycleGraph,
    FamilySpec,
    PathGraph,
    StarGraph,
    WheelGraph,
)

CONSISTENT = "paper-consistent"
DISCREPANT = "paper-discrepant"
DERIVED = "derived"


@dataclass(frozen=True)
class Provenance:
    tag: str
    paper_value: object = None

    def to_json(self):
        out = {"tag": self.tag}
        if self.tag == DISCREPANT:
            v = self.paper_value
            out["paper_value"] = [v.numerator, v.denominator] if isinstance(v, F) else v
        return out


@dataclass(frozen=True)
class ClosedFormPrediction:
    family: FamilySpec
    colourable: bool
    j_number: int | None = None
    j_star_number: int | None = None
    canonical_certificate: Colouring | None = None
    canonical_distribution: ColourDistribution | None = None
    mean: F | None = None
    variance: F | None = None
    provenance: dict[str, Provenance] = field(default_factory=dict)

    def to_json(self) -> dict:
        def pair(q):
            return None if q is None else [q.numerator, q.denominator]

        return {
            "family": self.family.kind,
            "label": self.family.label,
            "colourable": self.colourable,
            "j_number": self.j_number,
            "j_star_number": self.j_star_number,
            "certificate": list(self.canonical_certificate.colors) if self.canonical_certificate else None,
            "distribution": self.canonical_distribution.to_json() if self.canonical_distribution else None,
            "mean": pair(self.mean),
            "variance": pair(self.variance),
            "provenance": {k: v.to_json() for k, v in self.provenance.items()},
        }


def _tag(computed, printed) -> Provenance:
    return Provenance(CONSISTENT) if computed == printed else Provenance(DISCREPANT, printed)


def _with_stats(spec, j, j_star, colors, printed_mean, printed_var, provenance) -> ClosedFormPrediction:
    g = spec.generate()
    cert = Colouring(j, tuple(colors))
    dist = colour_distribution(g, cert)
    mean, var = j_mean(dist), j_variance(dist)
    provenance = dict(provenance)
    provenance["mean"] = _tag(mean, printed_mean)
    provenance["variance"] = _tag(var, printed_var)
    return ClosedFormPrediction(spec, True, j, j_star, cert, dist, mean, var, provenance)


def _path(spec: PathGraph) -> ClosedFormPrediction:
    n = spec.n
    if n == 1:
        prov = {"j_number": Provenance(DERIVED), "j_star_number": Provenance(DERIVED)}
        return _with_stats(spec, 1, 1, [1], F(1), F(0), prov)
    j_star = 3 if n >= 3 else 2
    prov = {
        "j_number": Provenance(CONSISTENT),
        "j_star_number": Provenance(CONSISTENT if n >= 3 else DERIVED),
    }
    colors = [1 + i % 2 for i in range(n)]
    if n % 2 == 0:
        printed = F(3, 2), F(1, 4)
    else:
        printed = F(3 * n - 1, 2 * n), F(n * n - 1, 4 * n * n)
    return _with_stats(spec, 2, j_star, colors, *printed, prov)


def _cycle(spec: CycleGraph) -> ClosedFormPrediction:
    n = spec.n
    prov = {"j_number": Provenance(CONSISTENT), "j_star_number": Provenance(CONSISTENT)}
    if n % 3 == 0:
        return _with_stats(spec, 3, 3, [1 + i % 3 for i in range(n)], F(1, 2), F(53, 12), prov)
    if n % 2 == 0:
        return _with_stats(spec, 2, 2, [1 + i % 2 for i in range(n)], F(3, 2), F(1, 4), prov)
    return ClosedFormPrediction(spec, False, provenance={"colourable": Provenance(CONSISTENT)})


def _complete(spec: CompleteGraph) -> ClosedFormPrediction:
    n = spec.n
    prov = {
        "j_number": Provenance(CONSISTENT),
        "j_star_number": Provenance(CONSISTENT if n >= 3 else DERIVED),
    }
    return _with_stats(spec, n, n, range(1, n + 1), F(n + 1, 2), F(n * n - 1, 12), prov)


def _wheel(spec: WheelGraph) -> ClosedFormPrediction:
    n = spec.n
    prov = {"j_number": Provenance(CONSISTENT), "j_star_number": Provenance(CONSISTENT)}
    if n % 3 == 0:
        colors = [1 + i % 3 for i in range(n)] + [4]
        printed = F(2 * n + 4, n + 1), F(2 * n * n + 14 * n, 3 * (n + 1) ** 2)
        return _with_stats(spec, 4, 4, colors, *printed, prov)
    if n % 2 == 0:
        colors = [1 + i % 2 for i in range(n)] + [3]
        printed = F(3 * n + 6, 2 * (n + 1)), F(10 * n * n + 43 * n + 30, 4 * (n + 1) ** 2)
        return _with_stats(spec, 3, 3, colors, *printed, prov)
    return ClosedFormPrediction(spec, False, provenance={"colourable": Provenance(CONSISTENT)})


def _multipartite(parts: tuple[int, ...], spec: FamilySpec) -> ClosedFormPrediction:
    l, n = len(parts), sum(parts)
    # two parts with one of size 1 is a star: the hub is the only internal
    # vertex, so the leaves may all take distinct colours
    star = l == 2 and min(parts) == 1
    prov = {
        "j_number": Provenance(CONSISTENT),
        "j_star_number": Provenance(DERIVED if star else CONSISTENT),
    }
    if isinstance(spec, CompleteMultipartiteGraph):
        colors = [i + 1 for i, block in enumerate(spec.blocks()) for _ in block]
    else:
        colors = [1] + [2] * (n - 1)
    return ClosedFormPrediction(
        spec, True, l, n if star else l, canonical_certificate=Colouring(l, tuple(colors)), provenance=prov
    )


def predict(spec: FamilySpec) -> ClosedFormPrediction:
    """Closed-form colourability, colour numbers and recomputed statistics for ``spec``."""
    if isinstance(spec, PathGraph):
        return _path(spec)
    if isinstance(spec, CycleGraph):
        return _cycle(spec)
    if isinstance(spec, CompleteGraph):
        return _complete(spec)
    if isinstance(spec, WheelGraph):
        return _wheel(spec)
    if isinstance(spec, StarGraph):
        return _multipartite((1, spec.n - 1), spec)
    if isinstance(spec, CompleteMultipartiteGraph):
        return _multipartite(spec.parts, spec)
    raise TypeError(f"no closed form for {type(spec).__name__}")
