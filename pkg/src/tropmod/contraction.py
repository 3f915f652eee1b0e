"""Edge contraction and the stratification poset of stable graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from tropmod.canon import CanonicalForm, canonical_form
from tropmod.graph import GraphError, WeightedGraph, genus, is_stable


def contract_edge(G: WeightedGraph, e: int) -> WeightedGraph:
    """Contract one edge, keeping every other id.

    An edge between distinct vertices merges them (the smaller vertex id
    survives) with genera added; a loop is deleted and its vertex genus
    goes up by one.
    """
    u, v = G.ends(e)
    keep, drop = min(u, v), max(u, v)
    genera = dict(G.vertices)
    if u == v:
        genera[u] += 1
    else:
        genera[keep] += genera.pop(drop)
    _, a, b = next(row for row in G.edges if row[0] == e)
    half_edges = tuple((h, keep if w == drop else w)
                       for h, w in G.half_edges if h not in (a, b))
    edges = tuple(row for row in G.edges if row[0] != e)
    return WeightedGraph(tuple(genera.items()), half_edges, edges, G.legs)


def contract_set(G: WeightedGraph, S: Iterable[int]) -> WeightedGraph:
    S = sorted(set(S))
    known = set(G.edge_ids)
    for e in S:
        if e not in known:
            raise GraphError(f"unknown edge id {e}")
    for e in S:
        G = contract_edge(G, e)
    return G


def _rank(G: WeightedGraph, S: Iterable[int]) -> int:
    """Number of vertex merges caused by contracting ``S`` (forest rank)."""
    parent = {v: v for v in G.vertex_ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    r = 0
    for e in S:
        a, b = (find(x) for x in G.ends(e))
        if a != b:
            parent[a] = b
            r += 1
    return r


def contraction_witness(fine: WeightedGraph, coarse: WeightedGraph) -> tuple[int, ...] | None:
    """An edge set of ``fine`` whose contraction is isomorphic to ``coarse``."""
    fine.require_connected()
    coarse.require_connected()
    k = fine.n_edges - coarse.n_edges
    merges = fine.n_vertices - coarse.n_vertices
    if k < 0 or merges < 0 or merges > k:
        return None
    if genus(fine) != genus(coarse) or set(fine.leg_vertex) != set(coarse.leg_vertex):
        return None
    target = canonical_form(coarse)
    for S in combinations(fine.edge_ids, k):
        if _rank(fine, S) != merges:
            continue
        if canonical_form(contract_set(fine, S)) == target:
            return S
    return None


def is_contraction_of(fine: WeightedGraph, coarse: WeightedGraph) -> bool:
    """True if contracting some set of edges of ``fine`` yields ``coarse``."""
    return contraction_witness(fine, coarse) is not None


@dataclass(frozen=True)
class Stratum:
    key: CanonicalForm
    graph: WeightedGraph

    @property
    def codim(self) -> int:
        return self.graph.n_edges


@dataclass(frozen=True)
class StrataPoset:
    """Iso-classes of stable graphs ordered by contraction.

    ``covers`` holds ``(child, parent)`` key pairs where the parent is the
    contraction of exactly one edge of the child.
    """

    genus: int
    legs: int
    elements: tuple[Stratum, ...]
    covers: tuple[tuple[CanonicalForm, CanonicalForm], ...]

    def element(self, key: CanonicalForm) -> Stratum:
        for s in self.elements:
            if s.key == key:
                return s
        raise KeyError(key)

    def order_relation(self) -> set[tuple[CanonicalForm, CanonicalForm]]:
        """Reflexive-transitive closure of the covers as (finer, coarser) pairs."""
        up: dict[CanonicalForm, set[CanonicalForm]] = {s.key: set() for s in self.elements}
        for child, parent in self.covers:
            up[child].add(parent)
        rel = set()
        for s in self.elements:
            seen = {s.key}
            stack = [s.key]
            while stack:
                for p in up[stack.pop()]:
                    if p not in seen:
                        seen.add(p)
                        stack.append(p)
            rel.update((s.key, p) for p in seen)
        return rel

    def counts_by_codim(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s in self.elements:
            out[s.codim] = out.get(s.codim, 0) + 1
        return dict(sorted(out.items()))


def single_edge_contractions(G: WeightedGraph) -> dict[CanonicalForm, int]:
    """Map canonical form of each one-edge contraction to the least edge producing it."""
    out: dict[CanonicalForm, int] = {}
    for e in G.edge_ids:
        out.setdefault(canonical_form(contract_edge(G, e)), e)
    return out


def build_strata_poset(graphs: Iterable[WeightedGraph]) -> StrataPoset:
    graphs = list(graphs)
    if not graphs:
        raise ValueError("no graphs given")
    genera = {genus(G) for G in graphs}
    if len(genera) != 1:
        raise ValueError(f"mixed genus input: {sorted(genera)}")
    leg_sets = {frozenset(G.leg_vertex) for G in graphs}
    if len(leg_sets) != 1:
        raise ValueError("mixed leg labels in input")
    if not all(is_stable(G) for G in graphs):
        raise ValueError("unstable graph in input")
    elements = sorted((Stratum(canonical_form(G), G) for G in graphs), key=lambda s: s.key)
    keys = [s.key for s in elements]
    if len(set(keys)) != len(keys):
        raise ValueError("input contains isomorphic graphs")
    present = set(keys)
    covers = sorted(
        (s.key, k)
        for s in elements
        for k in single_edge_contractions(s.graph)
        if k in present
    )
    return StrataPoset(genera.pop(), len(leg_sets.pop()), tuple(elements), tuple(covers))
