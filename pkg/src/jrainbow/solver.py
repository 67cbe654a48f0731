"""Exact J / J* colouring numbers, with certificates and a brute-force oracle."""
from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from ._accel import USE_NUMBA
from .colouring import Colouring, is_j_feasible, is_j_star_feasible
from .errors import BudgetExceeded, ConnectivityError, ValidationError
from .graph import Graph, is_connected, min_degree

DEFAULT_BUDGET = 10 ** 8


class Mode(enum.Enum):
    J = "J"
    JSTAR = "Jstar"

    @classmethod
    def parse(cls, text: str) -> "Mode":
        key = text.strip().lower().replace("*", "star")
        for mode in cls:
            if mode.value.lower() == key:
                return mode
        raise ValidationError(f"unknown mode {text!r}; use J or Jstar")


def default_budget() -> int:
    raw = os.environ.get("JRAINBOW_BUDGET")
    if not raw:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"JRAINBOW_BUDGET must be an integer, got {raw!r}") from None


def constrained_mask(g: Graph, mode: Mode) -> np.ndarray:
    """Vertices whose closed neighbourhood must be rainbow under ``mode``."""
    if mode is Mode.J:
        return np.ones(g.n, dtype=np.bool_)
    return np.array([d >= 2 for d in g.degrees], dtype=np.bool_)


def upper_bound(g: Graph, mode: Mode) -> int:
    """Largest palette that can possibly work.

    Every constrained vertex must see all ``k`` colours in a closed
    neighbourhood of ``deg + 1`` vertices. In J* mode only internal vertices
    are constrained, so the bound is the smallest internal degree plus one,
    or ``n`` when there is no internal vertex.
    """
    if mode is Mode.J:
        return min_degree(g) + 1
    internal = [d for d in g.degrees if d >= 2]
    return min(internal) + 1 if internal else g.n


def search_order(g: Graph) -> np.ndarray:
    """Descending degree, ties by smaller label."""
    return np.array(sorted(range(g.n), key=lambda v: (-g.degree(v), v)), dtype=np.int64)


def feasibility_check(mode: Mode):
    return is_j_feasible if mode is Mode.J else is_j_star_feasible


def _require_connected(g: Graph) -> None:
    if g.n < 1:
        raise ValidationError("graph must have at least one vertex")
    if not is_connected(g):
        raise ConnectivityError("graph is disconnected; J-colourings are defined for connected graphs")


def _check_k(g: Graph, k: int) -> None:
    if not 1 <= k <= g.n:
        raise ValidationError(f"palette size k must be in 1..{g.n}, got {k}")


def find_colouring(g: Graph, k: int, mode: Mode = Mode.J) -> Colouring | None:
    """First ``k``-colouring of ``g`` satisfying ``mode`` in search order, or None."""
    _require_connected(g)
    _check_k(g, k)
    indptr, indices = g.csr
    found, colour = kernels.search_kernel(
        g.n, k, search_order(g), indptr, indices, constrained_mask(g, mode)
    )
    if not found:
        return None
    return Colouring(k, tuple(int(x) for x in colour))


@dataclass(frozen=True)
class JOutcome:
    """Result of maximising the palette. ``k`` and ``certificate`` are None when not colourable."""

    mode: Mode
    k: int | None
    certificate: Colouring | None
    bound: int
    delta_plus_one: int
    per_k: dict[int, bool] | None = field(default=None)

    @property
    def colourable(self) -> bool:
        return self.k is not None

    def to_json(self) -> dict:
        out = {
            "mode": self.mode.value,
            "status": "colourable" if self.colourable else "not_colourable",
            "k": self.k,
            "certificate": list(self.certificate.colors) if self.certificate else None,
            "per_k": [{"k": k, "feasible": f} for k, f in sorted((self.per_k or {}).items())],
            "delta_plus_one": self.delta_plus_one,
            "bound": self.bound,
        }
        return out


def j_number(
    g: Graph,
    mode: Mode = Mode.J,
    *,
    per_k: bool = False,
    workers: int = 1,
) -> JOutcome:
    """Largest feasible palette, scanning every ``k`` from the bound downwards.

    Feasibility is not monotone in ``k`` (C_9 works with 3 colours but not 2),
    so the scan never bisects. ``workers > 1`` evaluates the palettes in a
    thread pool; each per-``k`` search is deterministic, so the outcome matches
    the sequential one exactly.
    """
    _require_connected(g)
    bound = min(upper_bound(g, mode), g.n)
    ks = list(range(bound, 0, -1))
    results: dict[int, Colouring | None] = {}
    if workers > 1 and len(ks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for k, res in zip(ks, pool.map(lambda k: find_colouring(g, k, mode), ks)):
                results[k] = res
    else:
        for k in ks:
            results[k] = find_colouring(g, k, mode)
            if results[k] is not None and not per_k:
                break
    best = next((k for k in ks if results.get(k) is not None), None)
    return JOutcome(
        mode=mode,
        k=best,
        certificate=results[best] if best is not None else None,
        bound=bound,
        delta_plus_one=min_degree(g) + 1,
        per_k={k: results[k] is not None for k in sorted(results)} if per_k else None,
    )


def brute_force(
    g: Graph,
    k: int,
    mode: Mode = Mode.J,
    budget: int | None = None,
) -> Colouring | None:
    """Exhaustive oracle: first satisfying assignment among all ``k^n`` in lexicographic order."""
    _require_connected(g)
    _check_k(g, k)
    budget = default_budget() if budget is None else budget
    total = k ** g.n
    if total > budget:
        raise BudgetExceeded(k, g.n, budget)
    indptr, indices = g.csr
    mask = constrained_mask(g, mode)
    if USE_NUMBA:
        hit = kernels.enumerate_kernel(g.n, k, indptr, indices, mask, 0, total)
    else:
        hit = kernels.enumerate_numpy(g.n, k, indptr, indices, mask, 0, total)
    if hit < 0:
        return None
    return Colouring(k, tuple(int(x) for x in kernels.decode_assignment(hit, g.n, k)))


@dataclass(frozen=True)
class CrossCheckReport:
    mode: Mode
    solver: JOutcome
    oracle_k: int | None
    oracle_certificate: Colouring | None
    oracle_per_k: dict[int, bool]

    @property
    def match(self) -> bool:
        return self.solver.k == self.oracle_k and self.solver.per_k == self.oracle_per_k

    def to_json(self) -> dict:
        return {
            "mode": self.mode.value,
            "match": self.match,
            "solver": self.solver.to_json(),
            "oracle": {
                "status": "colourable" if self.oracle_k is not None else "not_colourable",
                "k": self.oracle_k,
                "certificate": list(self.oracle_certificate.colors) if self.oracle_certificate else None,
                "per_k": [{"k": k, "feasible": f} for k, f in sorted(self.oracle_per_k.items())],
            },
        }


def cross_check(g: Graph, mode: Mode = Mode.J, budget: int | None = None) -> CrossCheckReport:
    """Run the solver and the exhaustive oracle over every palette up to the bound."""
    _require_connected(g)
    budget = default_budget() if budget is None else budget
    bound = min(upper_bound(g, mode), g.n)
    if bound ** g.n > budget:
        raise BudgetExceeded(bound, g.n, budget)
    solved = j_number(g, mode, per_k=True)
    witnesses = {k: brute_force(g, k, mode, budget) for k in range(1, bound + 1)}
    best = max((k for k, c in witnesses.items() if c is not None), default=None)
    return CrossCheckReport(
        mode=mode,
        solver=solved,
        oracle_k=best,
        oracle_certificate=witnesses[best] if best is not None else None,
        oracle_per_k={k: c is not None for k, c in witnesses.items()},
    )
