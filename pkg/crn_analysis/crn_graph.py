#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Euclidean-embedded reaction graphs (E-graphs)
Exact data model plus the graph-theoretic structure built on networkx
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from .crn_vectors import Number, Vector, null_space, rank, row_space_basis, sub, vector

logger = logging.getLogger(__name__)


class Edge(NamedTuple):
    """A reaction source -> target, both given by their coordinates"""
    source: Vector
    target: Vector


RateVector = Dict[Edge, Fraction]


@dataclass(frozen=True)
class EGraph:
    """
    Directed graph whose vertices are points of Q^n.

    Vertices are identified by their coordinates, so vertex ids and
    coordinate vectors are the same thing. Vertices and edges are kept
    sorted, which makes equality and printing deterministic.
    """
    dimension: int
    vertices: Tuple[Vector, ...]
    edges: Tuple[Edge, ...]
    species: Tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def build(
        cls,
        dimension: int,
        vertices: Iterable[Sequence[Number]],
        edges: Iterable[Tuple[Sequence[Number], Sequence[Number]]],
        species: Sequence[str] = ()
    ) -> "EGraph":
        """
        Build a graph from an explicit vertex list and edge list.

        Duplicate vertices are merged with a warning. Self-loops,
        repeated edges, endpoints missing from the vertex list and
        isolated vertices are rejected.
        """
        unique: List[Vector] = []
        seen = set()
        for raw in vertices:
            v = vector(raw)
            if len(v) != dimension:
                raise ValueError(f"Vertex {raw} has length {len(v)}, expected {dimension}")
            if v in seen:
                logger.warning(f"Merging duplicate vertex {list(map(str, v))}")
                continue
            seen.add(v)
            unique.append(v)

        edge_set = set()
        for raw_source, raw_target in edges:
            e = Edge(vector(raw_source), vector(raw_target))
            if e.source not in seen or e.target not in seen:
                raise ValueError(f"Edge endpoint not among the vertices: {e}")
            if e.source == e.target:
                raise ValueError(f"Self-loop at {list(map(str, e.source))} is not allowed")
            if e in edge_set:
                raise ValueError(f"Duplicate edge {e}")
            edge_set.add(e)

        touched = {e.source for e in edge_set} | {e.target for e in edge_set}
        isolated = seen - touched
        if isolated:
            raise ValueError(f"Isolated vertices are not allowed: {sorted(isolated)}")

        if species and len(species) != dimension:
            raise ValueError(f"Got {len(species)} species names for dimension {dimension}")
        return cls(dimension, tuple(sorted(unique)), tuple(sorted(edge_set)), tuple(species))

    @classmethod
    def from_edges(
        cls,
        dimension: int,
        edges: Iterable[Tuple[Sequence[Number], Sequence[Number]]],
        species: Sequence[str] = ()
    ) -> "EGraph":
        """Build a graph whose vertex set is exactly the edge endpoints"""
        edges = [(vector(s), vector(t)) for s, t in edges]
        vertices = dict.fromkeys(v for e in edges for v in e)
        return cls.build(dimension, vertices, edges, species)

    @classmethod
    def empty(cls, dimension: int, species: Sequence[str] = ()) -> "EGraph":
        return cls(dimension, (), (), tuple(species))

    def with_species(self, species: Sequence[str]) -> "EGraph":
        return EGraph(self.dimension, self.vertices, self.edges, tuple(species))

    def species_names(self) -> Tuple[str, ...]:
        if self.species:
            return self.species
        return tuple(f"X{i + 1}" for i in range(self.dimension))

    def out_edges(self, y: Vector) -> List[Edge]:
        return [e for e in self.edges if e.source == y]

    def in_edges(self, y: Vector) -> List[Edge]:
        return [e for e in self.edges if e.target == y]

    def has_edge(self, source: Vector, target: Vector) -> bool:
        return Edge(source, target) in set(self.edges)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph


def reaction_vector(e: Edge) -> Vector:
    return sub(e.target, e.source)


def validate_rates(G: EGraph, k: Mapping[Edge, Fraction]) -> None:
    """Raise ValueError unless k is a strictly positive rate on exactly the edges of G"""
    keys = set(k)
    expected = set(G.edges)
    if keys != expected:
        missing = expected - keys
        extra = keys - expected
        raise ValueError(f"Rate vector keys do not match edges (missing {len(missing)}, extra {len(extra)})")
    for e, value in k.items():
        if value <= 0:
            raise ValueError(f"Rate on {e} must be positive, got {value}")


def source_vertices(G: EGraph) -> FrozenSet[Vector]:
    return frozenset(e.source for e in G.edges)


def _ordered(components: Iterable[Iterable[Vector]]) -> List[FrozenSet[Vector]]:
    return sorted((frozenset(c) for c in components), key=min)


def linkage_classes(G: EGraph) -> List[FrozenSet[Vector]]:
    """Weakly connected components, ordered by their smallest vertex"""
    return _ordered(nx.weakly_connected_components(G.to_networkx()))


def strong_components(G: EGraph) -> List[Tuple[FrozenSet[Vector], bool]]:
    """Strongly connected components with a terminal flag (no edge leaves the component)"""
    result = []
    for component in _ordered(nx.strongly_connected_components(G.to_networkx())):
        terminal = all(e.target in component for e in G.edges if e.source in component)
        result.append((component, terminal))
    return result


def terminal_components(G: EGraph) -> List[FrozenSet[Vector]]:
    return [c for c, terminal in strong_components(G) if terminal]


def is_weakly_reversible(G: EGraph) -> bool:
    component_of = {}
    for index, (component, _) in enumerate(strong_components(G)):
        for v in component:
            component_of[v] = index
    return all(component_of[e.source] == component_of[e.target] for e in G.edges)


def stoichiometric_subspace(G: EGraph) -> List[Vector]:
    """Exact basis of the span of the reaction vectors"""
    return row_space_basis([reaction_vector(e) for e in G.edges], G.dimension)


def stoichiometric_dimension(G: EGraph) -> int:
    return rank([reaction_vector(e) for e in G.edges], G.dimension)


def conservation_laws(G: EGraph) -> List[Vector]:
    """Basis of the vectors orthogonal to every reaction vector"""
    return null_space([reaction_vector(e) for e in G.edges], G.dimension)


def deficiency(G: EGraph) -> int:
    return len(G.vertices) - len(linkage_classes(G)) - stoichiometric_dimension(G)


def complete_graph(G: EGraph) -> EGraph:
    """All ordered pairs of distinct vertices"""
    pairs = list(itertools.permutations(G.vertices, 2))
    return EGraph.build(G.dimension, G.vertices, pairs, G.species)


def subgraph_on_edges(G: EGraph, edges: Iterable[Edge], species: Optional[Sequence[str]] = None) -> EGraph:
    """Graph spanned by a subset of edges (vertices are their endpoints)"""
    names = G.species if species is None else species
    return EGraph.from_edges(G.dimension, list(edges), names)
