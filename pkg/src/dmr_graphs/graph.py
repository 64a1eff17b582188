#!/usr/bin/env python3
"""
Graph representation, generators and all-pairs distance data.

Vertices are dense indices 0..n-1. Generators delegate to networkx and relabel
the result in sorted node order; connectivity is only enforced when distances
are computed.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from dmr_graphs.errors import GraphValidationError
from dmr_graphs.linalg import RationalMatrix
from dmr_graphs.utils.logging import get_logger

logger = get_logger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    edges: FrozenSet[Edge]
    labels: Optional[Tuple[str, ...]] = None
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphValidationError("graph must have at least one vertex", field_name="n", actual_value=self.n)
        normalized = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphValidationError("loop edges are not allowed", field_name="edges", actual_value=(u, v))
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphValidationError(
                    "edge endpoint out of range",
                    field_name="edges",
                    expected=f"0..{self.n - 1}",
                    actual_value=(u, v),
                )
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise GraphValidationError("label table must have one entry per vertex", field_name="labels",
                                           expected=str(self.n), actual_value=len(labels))
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Edge],
        labels: Optional[Sequence[str]] = None,
        name: Optional[str] = None,
    ) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges), tuple(labels) if labels is not None else None, name)

    @classmethod
    def from_networkx(cls, g: nx.Graph, name: Optional[str] = None, keep_labels: bool = False) -> "Graph":
        """Relabel a networkx graph to 0..n-1 in sorted node order."""
        try:
            nodes = sorted(g.nodes())
        except TypeError:
            nodes = list(g.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[a], index[b]) for a, b in g.edges()]
        labels = tuple(str(node) for node in nodes) if keep_labels else None
        return cls.from_edges(len(nodes), edges, labels, name or (g.name or None))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph(name=self.name or "")
        g.add_nodes_from(range(self.n))
        g.add_edges_from(sorted(self.edges))
        return g

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Symmetric 0/1 int64 adjacency matrix (read-only)."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        a.setflags(write=False)
        return a

    @cached_property
    def adjacency_lists(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(v) for v in np.flatnonzero(row)) for row in self.adjacency)

    def neighbors(self, u: int) -> Tuple[int, ...]:
        return self.adjacency_lists[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency_lists[u])

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency_lists)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels is not None else str(u)

    def display_name(self) -> str:
        return self.name or f"graph(n={self.n}, m={self.edge_count})"


def circulant(n: int, connections: Iterable[int], name: Optional[str] = None) -> Graph:
    """
    Circulant (Cayley graph of Z_n): i ~ i +- s (mod n) for every s in connections.

    The connection set is closed under negation automatically.

    Raises:
        GraphValidationError: if n < 3, the set is empty or contains a multiple of n
    """
    if n < 3:
        raise GraphValidationError("circulant needs n >= 3", field_name="n", actual_value=n)
    offsets = set()
    for s in connections:
        r = int(s) % n
        if r == 0:
            raise GraphValidationError("connection must not be a multiple of n", field_name="connections",
                                       actual_value=s)
        offsets.update({r, (-r) % n})
    if not offsets:
        raise GraphValidationError("connection set must not be empty", field_name="connections")
    g = nx.circulant_graph(n, sorted(offsets))
    label = name or f"circulant({n},{{{','.join(str(s) for s in sorted(offsets))}}})"
    return Graph.from_networkx(g, name=label)


def cartesian_product(g: Graph, h: Graph, name: Optional[str] = None) -> Graph:
    """Cartesian product; vertex (a, b) gets index a * h.n + b."""
    product = nx.cartesian_product(g.to_networkx(), h.to_networkx())
    label = name or f"{g.display_name()} x {h.display_name()}"
    return Graph.from_networkx(product, name=label)


@dataclass(frozen=True, eq=False)
class DistanceData:
    """All-pairs hop distances of a connected graph plus derived structures."""

    graph: Graph
    dist: np.ndarray
    diameter: int
    distance_matrices: Tuple[np.ndarray, ...]
    shells: Tuple[Tuple[Tuple[int, ...], ...], ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def D(self) -> int:
        return self.diameter

    @cached_property
    def eccentricities(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.dist.max(axis=1))

    def ecc(self, u: int) -> int:
        return self.eccentricities[u]

    def shell_sizes(self, u: int) -> Tuple[int, ...]:
        """|Gamma_0(u)|..|Gamma_D(u)|, zero past the eccentricity of u."""
        return tuple(len(s) for s in self.shells[u])

    @cached_property
    def shell_sets(self) -> Tuple[Tuple[FrozenSet[int], ...], ...]:
        return tuple(tuple(frozenset(s) for s in per_vertex) for per_vertex in self.shells)

    @cached_property
    def rational_distance_matrices(self) -> Tuple[RationalMatrix, ...]:
        return tuple(RationalMatrix.from_integers(a) for a in self.distance_matrices)

    def distance_matrix(self, i: int) -> RationalMatrix:
        return self.rational_distance_matrices[i]

    @cached_property
    def adjacency(self) -> RationalMatrix:
        return self.rational_distance_matrices[1] if self.diameter >= 1 else RationalMatrix.zeros(self.n, self.n)


def compute_distances(g: Graph) -> DistanceData:
    """
    Breadth-first search from every vertex.

    Raises:
        GraphValidationError: if the graph has fewer than two vertices or is disconnected
    """
    nxg = g.to_networkx()
    if g.n < 2:
        raise GraphValidationError("graph must have at least two vertices", field_name="n",
                                   expected=">= 2", actual_value=g.n)
    if not nx.is_connected(nxg):
        components = nx.number_connected_components(nxg)
        raise GraphValidationError("graph must be connected", field_name="connectivity",
                                   expected="1 component", actual_value=components)

    n = g.n
    dist = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v, d in nx.single_source_shortest_path_length(nxg, u).items():
            dist[u, v] = d
    diameter = int(dist.max())
    if not np.array_equal(dist, dist.T):
        raise GraphValidationError("distance matrix is not symmetric", field_name="dist")
    dist.setflags(write=False)

    matrices = []
    for i in range(diameter + 1):
        a = (dist == i).astype(np.int64)
        a.setflags(write=False)
        matrices.append(a)

    shells = tuple(
        tuple(tuple(int(v) for v in np.flatnonzero(dist[u] == i)) for i in range(diameter + 1))
        for u in range(n)
    )
    logger.debug(f"Distances for {g.display_name()}: n={n}, D={diameter}")
    return DistanceData(g, dist, diameter, tuple(matrices), shells)
