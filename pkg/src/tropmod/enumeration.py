"""Isomorph-free enumeration of stable graphs of genus g with n legs.

The search runs contraction backwards.  Starting from the single vertex of
genus g carrying all legs, each step either splits a vertex into two
joined by a new edge (genus and half-edges distributed in every way) or
trades one unit of vertex genus for a new loop.  Every stable graph with
an edge contracts to a stable graph with one edge fewer, so keeping only
stable graphs at each step still reaches every class.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from tropmod.canon import CanonicalForm, canonical_form, canonical_relabel
from tropmod.graph import WeightedGraph, is_stable

DEFAULT_MAX_COMPLEXITY = 8


class UnstableRangeError(ValueError):
    pass


class ComplexityGuardError(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationResult:
    genus: int
    legs: int
    classes: tuple[tuple[CanonicalForm, WeightedGraph], ...]
    counts_by_edges: dict[int, int] = field(default_factory=dict)

    @property
    def graphs(self) -> list[WeightedGraph]:
        return [G for _, G in self.classes]

    def __len__(self):
        return len(self.classes)


def max_complexity() -> int:
    value = os.environ.get("TMW_MAX_COMPLEXITY")
    return int(value) if value else DEFAULT_MAX_COMPLEXITY


def check_range(g: int, n: int, force: bool = False) -> None:
    if g < 0 or n < 0:
        raise UnstableRangeError("genus and leg count must be non-negative")
    if 3 * g - 3 + n < 0:
        raise UnstableRangeError("unstable range")
    if g == 0 and n < 3:
        raise UnstableRangeError("unstable range")
    cap = max_complexity()
    if not force and g + n > cap:
        raise ComplexityGuardError(f"g+n = {g + n} exceeds the guard {cap}; use force")


def _fresh(ids) -> int:
    return max(ids, default=-1) + 1


def _splits(G: WeightedGraph, v: int) -> Iterator[WeightedGraph]:
    """Graphs that contract onto G by contracting a new non-loop edge at v."""
    gv = G.genus_of[v]
    hs = G.incident[v]
    w = _fresh(G.vertex_ids)
    e = _fresh(G.edge_ids)
    a = _fresh(h for h, _ in G.half_edges)
    b = a + 1
    others = tuple((x, gx) for x, gx in G.vertices if x != v)
    for g1 in range(gv + 1):
        for k in range(len(hs) + 1):
            for moved in combinations(hs, k):
                moved = set(moved)
                half_edges = tuple((h, w if h in moved else x) for h, x in G.half_edges)
                yield WeightedGraph(
                    others + ((v, g1), (w, gv - g1)),
                    half_edges + ((a, v), (b, w)),
                    G.edges + ((e, a, b),),
                    G.legs,
                )


def _add_loop(G: WeightedGraph, v: int) -> WeightedGraph:
    e = _fresh(G.edge_ids)
    a = _fresh(h for h, _ in G.half_edges)
    genera = tuple((x, gx - 1 if x == v else gx) for x, gx in G.vertices)
    return WeightedGraph(genera, G.half_edges + ((a, v), (a + 1, v)),
                         G.edges + ((e, a, a + 1),), G.legs)


def uncontractions(G: WeightedGraph) -> Iterator[WeightedGraph]:
    """All one-edge-larger graphs contracting onto G (possibly unstable)."""
    for v, gv in G.vertices:
        yield from _splits(G, v)
        if gv > 0:
            yield _add_loop(G, v)


def enumerate_stable_graphs(g: int, n: int = 0, force: bool = False) -> EnumerationResult:
    """Every stable graph of genus ``g`` with legs labelled 1..n, up to isomorphism.

    Representatives are canonically relabelled and sorted by canonical form,
    so the output is reproducible byte for byte.
    """
    check_range(g, n, force)
    start = WeightedGraph.build([g], (), [0] * n)
    if not is_stable(start):
        return EnumerationResult(g, n, (), {})
    found: dict[CanonicalForm, WeightedGraph] = {canonical_form(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for G in frontier:
            for H in uncontractions(G):
                if not is_stable(H):
                    continue
                key = canonical_form(H)
                if key not in found:
                    found[key] = H
                    nxt.append(H)
        frontier = nxt
    classes = tuple(sorted((k, canonical_relabel(G)) for k, G in found.items()))
    result = EnumerationResult(g, n, classes)
    result.counts_by_edges.update(counts_by_codim(result))
    return result


def counts_by_codim(result: EnumerationResult) -> dict[int, int]:
    """Histogram of classes by edge count, i.e. by codimension of the stratum."""
    counts: dict[int, int] = {}
    for _, G in result.classes:
        counts[G.n_edges] = counts.get(G.n_edges, 0) + 1
    return dict(sorted(counts.items()))
