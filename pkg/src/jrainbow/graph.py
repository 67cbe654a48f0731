"""Simple undirected graphs on dense 0-based labels, family generators and I/O."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import ClassVar, Iterable

import numpy as np

from .errors import ParseError, ValidationError

FORMATS = ("edge-list", "dimacs")


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    Build through :meth:`from_edges`; the constructor trusts ``adjacency``.
    """

    n: int
    adjacency: tuple[frozenset[int], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValidationError(f"vertex count n must be >= 0, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def neighbours(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Open-neighbourhood CSR arrays ``(indptr, indices)`` as int64."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(self.degrees)
        indices = np.fromiter(
            (u for v in range(self.n) for u in sorted(self.adjacency[v])),
            dtype=np.int64,
            count=int(indptr[-1]),
        )
        return indptr, indices

    @cached_property
    def edge_array(self) -> np.ndarray:
        return np.array(self.edges, dtype=np.int64).reshape(-1, 2)


def min_degree(g: Graph) -> int:
    """Minimum vertex degree; 0 for the empty graph."""
    return min(g.degrees, default=0)


def closed_neighbourhood(g: Graph, v: int) -> frozenset[int]:
    if not 0 <= v < g.n:
        raise ValidationError(f"vertex {v} outside 0..{g.n - 1}")
    return g.adjacency[v] | {v}


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


def internal_vertices(g: Graph) -> frozenset[int]:
    """Non-pendant vertices, i.e. degree >= 2."""
    return frozenset(v for v in range(g.n) if g.degree(v) >= 2)


# --- families -------------------------------------------------------------


class FamilySpec:
    """A named graph family instance. Subclasses validate their parameters."""

    kind: ClassVar[str]

    def generate(self) -> Graph:
        raise NotImplementedError

    @property
    def label(self) -> str:
        raise NotImplementedError


def _check(name: str, value: int, lo: int) -> None:
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise ValidationError(f"{name} must be an integer, got {value!r}")
    if value < lo:
        raise ValidationError(f"{name} must be >= {lo}, got {value}")


@dataclass(frozen=True)
class PathGraph(FamilySpec):
    n: int
    kind: ClassVar[str] = "path"

    def __post_init__(self):
        _check("n", self.n, 1)

    def generate(self) -> Graph:
        return Graph.from_edges(self.n, ((i, i + 1) for i in range(self.n - 1)))

    @property
    def label(self) -> str:
        return f"P_{self.n}"


@dataclass(frozen=True)
class CycleGraph(FamilySpec):
    n: int
    kind: ClassVar[str] = "cycle"

    def __post_init__(self):
        _check("n", self.n, 3)

    def generate(self) -> Graph:
        return Graph.from_edges(self.n, ((i, (i + 1) % self.n) for i in range(self.n)))

    @property
    def label(self) -> str:
        return f"C_{self.n}"


@dataclass(frozen=True)
class CompleteGraph(FamilySpec):
    n: int
    kind: ClassVar[str] = "complete"

    def __post_init__(self):
        _check("n", self.n, 1)

    def generate(self) -> Graph:
        return Graph.from_edges(self.n, ((u, v) for u in range(self.n) for v in range(u + 1, self.n)))

    @property
    def label(self) -> str:
        return f"K_{self.n}"


@dataclass(frozen=True)
class StarGraph(FamilySpec):
    """Star on ``n`` vertices in total: hub 0, leaves ``1..n-1``."""

    n: int
    kind: ClassVar[str] = "star"

    def __post_init__(self):
        _check("n", self.n, 2)

    def generate(self) -> Graph:
        return Graph.from_edges(self.n, ((0, v) for v in range(1, self.n)))

    @property
    def label(self) -> str:
        return f"K_1,{self.n - 1}"


@dataclass(frozen=True)
class WheelGraph(FamilySpec):
    """Wheel with ``n`` rim vertices ``0..n-1`` in cycle order and hub ``n``."""

    n: int
    kind: ClassVar[str] = "wheel"

    def __post_init__(self):
        _check("n", self.n, 3)

    def generate(self) -> Graph:
        rim = [(i, (i + 1) % self.n) for i in range(self.n)]
        spokes = [(i, self.n) for i in range(self.n)]
        return Graph.from_edges(self.n + 1, rim + spokes)

    @property
    def label(self) -> str:
        return f"W_{self.n + 1}"


@dataclass(frozen=True)
class CompleteMultipartiteGraph(FamilySpec):
    """Parts occupy consecutive label blocks in the given order."""

    parts: tuple[int, ...]
    kind: ClassVar[str] = "multipartite"

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) < 2:
            raise ValidationError(f"parts must have at least 2 entries, got {len(self.parts)}")
        for i, size in enumerate(self.parts):
            _check(f"parts[{i}]", size, 1)

    def blocks(self) -> list[range]:
        out, start = [], 0
        for size in self.parts:
            out.append(range(start, start + size))
            start += size
        return out

    def generate(self) -> Graph:
        blocks = self.blocks()
        edges = [
            (u, v)
            for i, a in enumerate(blocks)
            for b in blocks[i + 1:]
            for u in a
            for v in b
        ]
        return Graph.from_edges(sum(self.parts), edges)

    @property
    def label(self) -> str:
        return "K_" + ",".join(map(str, self.parts))


FAMILIES: dict[str, type[FamilySpec]] = {
    cls.kind: cls
    for cls in (PathGraph, CycleGraph, CompleteGraph, StarGraph, WheelGraph, CompleteMultipartiteGraph)
}


def family_spec(kind: str, *params: int) -> FamilySpec:
    """Build a spec from a family name and integer parameters."""
    try:
        cls = FAMILIES[kind]
    except KeyError:
        raise ValidationError(f"unknown family {kind!r}; choose from {', '.join(FAMILIES)}") from None
    if cls is CompleteMultipartiteGraph:
        return cls(tuple(params))
    if len(params) != 1:
        raise ValidationError(f"family {kind!r} takes exactly one parameter n, got {len(params)}")
    return cls(params[0])


def generate_family(spec: FamilySpec) -> Graph:
    return spec.generate()


# --- text formats ---------------------------------------------------------


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def _parse_edge_list(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two integers, got {raw.strip()!r}", lineno)
        a, b = _int(tokens[0], lineno), _int(tokens[1], lineno)
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("header counts must be non-negative", lineno)
            header = (a, b)
            continue
        edges.append((a, b))
        _check_edge(a, b, header[0], lineno)
    if header is None:
        raise ParseError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def _check_edge(u: int, v: int, n: int, lineno: int) -> None:
    if u < 0 or v < 0 or u >= n or v >= n:
        raise ValidationError(f"line {lineno}: vertex index out of range 0..{n - 1} in edge ({u}, {v})")
    if u == v:
        raise ValidationError(f"line {lineno}: self-loop at vertex {u}")


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate 'p' line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError(f"expected 'p edge n m', got {raw.strip()!r}", lineno)
            n = _int(tokens[2], lineno)
            _int(tokens[3], lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("'e' line before 'p' line", lineno)
            if len(tokens) != 3:
                raise ParseError(f"expected 'e u v', got {raw.strip()!r}", lineno)
            u, v = _int(tokens[1], lineno) - 1, _int(tokens[2], lineno) - 1
            _check_edge(u, v, n, lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    return Graph.from_edges(n, edges)


def parse_graph(text: str, format: str = "edge-list") -> Graph:
    """Parse ``edge-list`` (0-based, ``n m`` header) or ``dimacs`` (1-based ``.col``)."""
    if format == "edge-list":
        return _parse_edge_list(text)
    if format in ("dimacs", "dimacs-col"):
        return _parse_dimacs(text)
    raise ValidationError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "edge-list") -> str:
    if format == "edge-list":
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    elif format in ("dimacs", "dimacs-col"):
        lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges]
    else:
        raise ValidationError(f"unknown graph format {format!r}")
    return "\n".join(lines) + "\n"
