"""Graph data model and generators for layered ring graphs and K_{n,n}.

Vertices are labeled by 1-based (layer, index) pairs. A graph declares its
label bounds (k layers, up to n vertices per layer) and is immutable after
construction, so colorings and reports can hold references to it safely.

The central family here is the "ring graph": k layers of n vertices arranged
in a ring, with every cyclically consecutive pair of layers joined completely.
Every vertex then has degree 2n, and for n = 1 the family degenerates to the
cycle C_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .errors import ParameterError

__all__ = [
    "Vertex",
    "Edge",
    "Graph",
    "RingParams",
    "make_edge",
    "build_graph",
    "ring_graph",
    "complete_bipartite",
]


class Vertex(NamedTuple):
    """A 1-based (layer, index) vertex label. Tuple order gives the canonical
    lexicographic comparison used everywhere."""

    layer: int
    index: int


class Edge(NamedTuple):
    """An undirected edge stored with u < v so each edge has one representation."""

    u: Vertex
    v: Vertex


def make_edge(a: Vertex, b: Vertex) -> Edge:
    """Canonicalize an undirected edge. Loops are rejected."""
    if a == b:
        raise ParameterError(f"loop edge at {a} is not allowed")
    return Edge(a, b) if a < b else Edge(b, a)


@dataclass(frozen=True)
class RingParams:
    """Parameters (n, k) of the ring family: n vertices per layer, k >= 3 layers."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParameterError(f"n must be >= 1, got {self.n}")
        if self.k < 3:
            raise ParameterError(f"k must be >= 3, got {self.k}")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over (layer, index) labels.

    ``n`` and ``k`` are label bounds (indices in [1, n], layers in [1, k]),
    not a promise that every labeled vertex exists or that layers are fully
    joined; the generators below produce the specific families. Instances are
    immutable: ``vertices`` and ``edges`` are canonically sorted tuples and
    ``adjacency`` maps every vertex to its sorted incident edges.
    """

    n: int
    k: int
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    adjacency: Mapping[Vertex, tuple[Edge, ...]]

    def degree(self, v: Vertex) -> int:
        if v not in self.adjacency:
            raise KeyError(f"unknown vertex {v}")
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        if not self.vertices:
            return 0
        return max(len(inc) for inc in self.adjacency.values())

    def is_regular(self) -> bool:
        degrees = {len(inc) for inc in self.adjacency.values()}
        return len(degrees) <= 1

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        """Neighbors of v in canonical order."""
        return tuple(e.v if e.u == v else e.u for e in self.adjacency[v])

    def has_edge(self, a: Vertex, b: Vertex) -> bool:
        return make_edge(a, b) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)


def build_graph(
    n: int,
    k: int,
    vertices: Iterable[Vertex],
    edges: Iterable[tuple[Vertex, Vertex]],
) -> Graph:
    """Validate labels, canonicalize edges, and assemble an immutable Graph.

    Raises ParameterError on out-of-bounds labels, duplicate vertices,
    duplicate edges, loops, or edges touching unknown vertices.
    """
    if n < 1 or k < 1:
        raise ParameterError(f"label bounds must be positive, got n={n}, k={k}")

    vseen: set[Vertex] = set()
    for raw in vertices:
        v = Vertex(*raw)
        if not (1 <= v.layer <= k and 1 <= v.index <= n):
            raise ParameterError(f"vertex {v} outside label bounds (k={k}, n={n})")
        if v in vseen:
            raise ParameterError(f"duplicate vertex {v}")
        vseen.add(v)

    eseen: set[Edge] = set()
    for a, b in edges:
        e = make_edge(Vertex(*a), Vertex(*b))
        if e.u not in vseen or e.v not in vseen:
            raise ParameterError(f"edge {e} touches an unknown vertex")
        if e in eseen:
            raise ParameterError(f"duplicate edge {e}")
        eseen.add(e)

    vsorted = tuple(sorted(vseen))
    esorted = tuple(sorted(eseen))
    adjacency: dict[Vertex, list[Edge]] = {v: [] for v in vsorted}
    for e in esorted:
        adjacency[e.u].append(e)
        adjacency[e.v].append(e)
    adj = {v: tuple(inc) for v, inc in adjacency.items()}

    assert sum(len(inc) for inc in adj.values()) == 2 * len(esorted)
    return Graph(n=n, k=k, vertices=vsorted, edges=esorted, adjacency=adj)


def ring_graph(params: RingParams | None = None, *, n: int | None = None, k: int | None = None) -> Graph:
    """The 2n-regular graph on k layers of n vertices, consecutive layers
    (cyclically) joined completely.

    Accepts either a RingParams or explicit n=, k= keywords. The result has
    n*k vertices and n^2*k edges.
    """
    if params is None:
        if n is None or k is None:
            raise ParameterError("ring_graph needs RingParams or both n= and k=")
        params = RingParams(n, k)
    n, k = params.n, params.k

    vertices = [Vertex(layer, index) for layer in range(1, k + 1) for index in range(1, n + 1)]
    edges: list[tuple[Vertex, Vertex]] = []
    for layer in range(1, k + 1):
        nxt = 1 if layer == k else layer + 1
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                edges.append((Vertex(layer, p), Vertex(nxt, q)))
    return build_graph(n, k, vertices, edges)


def complete_bipartite(n: int) -> Graph:
    """K_{n,n} with parts stored as layers 1 and 2, every cross pair joined.

    Layer 2 plays the role the last ring layer plays inside ring_graph: the
    seed coloring in :mod:`ringcol.construct` puts its staircase on exactly
    this layer pair.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    vertices = [Vertex(layer, index) for layer in (1, 2) for index in range(1, n + 1)]
    edges = [
        (Vertex(2, p), Vertex(1, q))
        for p in range(1, n + 1)
        for q in range(1, n + 1)
    ]
    return build_graph(n, 2, vertices, edges)
