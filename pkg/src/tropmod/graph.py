"""Weighted multigraphs in half-edge form.

A graph is a set of vertices carrying a genus weight, a set of half-edges
each attached to one vertex, a pairing of half-edges into edges, and the
remaining unpaired half-edges (legs) which carry fixed marking labels.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or invalid arguments to graph operations."""


@dataclass(frozen=True)
class WeightedGraph:
    """Connected weighted multigraph with legs.

    ``vertices`` holds ``(vertex id, genus)`` pairs, ``half_edges`` holds
    ``(half-edge id, vertex id)`` pairs, ``edges`` holds
    ``(edge id, half-edge, half-edge)`` triples and ``legs`` holds
    ``(label, half-edge)`` pairs.  Every half-edge belongs to exactly one
    edge or one leg.  Instances are immutable; use :meth:`build` for the
    usual construction from an edge list.
    """

    vertices: tuple[tuple[int, int], ...]
    half_edges: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int, int], ...]
    legs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(map(tuple, self.vertices))))
        object.__setattr__(self, "half_edges", tuple(sorted(map(tuple, self.half_edges))))
        object.__setattr__(self, "edges", tuple(sorted(map(tuple, self.edges))))
        object.__setattr__(self, "legs", tuple(sorted(map(tuple, self.legs))))
        self._validate()

    def _validate(self):
        vids = [v for v, _ in self.vertices]
        if len(set(vids)) != len(vids):
            raise GraphError("duplicate vertex id")
        if not vids:
            raise GraphError("graph has no vertices")
        if any(g < 0 for _, g in self.vertices):
            raise GraphError("vertex genus must be non-negative")
        hids = [h for h, _ in self.half_edges]
        if len(set(hids)) != len(hids):
            raise GraphError("duplicate half-edge id")
        vset = set(vids)
        for h, v in self.half_edges:
            if v not in vset:
                raise GraphError(f"half-edge {h} attached to unknown vertex {v}")
        eids = [e for e, _, _ in self.edges]
        if len(set(eids)) != len(eids):
            raise GraphError("duplicate edge id")
        labels = [lab for lab, _ in self.legs]
        if len(set(labels)) != len(labels):
            raise GraphError("duplicate leg label")
        used = [h for _, a, b in self.edges for h in (a, b)] + [h for _, h in self.legs]
        if Counter(used) != Counter(hids):
            raise GraphError("every half-edge must belong to exactly one edge or leg")

    @classmethod
    def build(
        cls,
        genera: Sequence[int] | Mapping[int, int],
        edges: Sequence[tuple[int, int]] | Mapping[int, tuple[int, int]] = (),
        legs: Sequence[int] | Mapping[int, int] = (),
    ) -> "WeightedGraph":
        """Build a graph from vertex genera, edge endpoints and leg positions.

        ``genera`` is a list (vertex ids 0, 1, ...) or a mapping id -> genus.
        ``edges`` is a list of endpoint pairs (edge ids 0, 1, ...) or a
        mapping edge id -> endpoints; equal endpoints make a loop.
        ``legs`` is a list of vertex ids (labels 1, 2, ...) or a mapping
        label -> vertex id.

        >>> theta = WeightedGraph.build([0, 0], [(0, 1)] * 3)
        >>> genus(theta)
        2
        """
        if not isinstance(genera, Mapping):
            genera = dict(enumerate(genera))
        if not isinstance(edges, Mapping):
            edges = dict(enumerate(edges))
        if not isinstance(legs, Mapping):
            legs = {i + 1: v for i, v in enumerate(legs)}
        half_edges = []
        edge_rows = []
        h = 0
        for e, (u, v) in sorted(edges.items()):
            half_edges += [(h, u), (h + 1, v)]
            edge_rows.append((e, h, h + 1))
            h += 2
        leg_rows = []
        for label, v in sorted(legs.items()):
            half_edges.append((h, v))
            leg_rows.append((label, h))
            h += 1
        return cls(tuple(genera.items()), tuple(half_edges), tuple(edge_rows), tuple(leg_rows))

    # -- lookups -------------------------------------------------------------

    @cached_property
    def genus_of(self) -> dict[int, int]:
        return dict(self.vertices)

    @cached_property
    def vertex_of(self) -> dict[int, int]:
        """Map half-edge id -> incident vertex id."""
        return dict(self.half_edges)

    @cached_property
    def pairing(self) -> dict[int, int]:
        """The edge involution on paired half-edges."""
        inv = {}
        for _, a, b in self.edges:
            inv[a] = b
            inv[b] = a
        return inv

    @cached_property
    def edge_of(self) -> dict[int, int]:
        """Map paired half-edge id -> edge id."""
        out = {}
        for e, a, b in self.edges:
            out[a] = e
            out[b] = e
        return out

    @cached_property
    def leg_vertex(self) -> dict[int, int]:
        """Map leg label -> vertex carrying it."""
        return {lab: self.vertex_of[h] for lab, h in self.legs}

    @property
    def vertex_ids(self) -> list[int]:
        return [v for v, _ in self.vertices]

    @property
    def edge_ids(self) -> list[int]:
        return [e for e, _, _ in self.edges]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_legs(self) -> int:
        return len(self.legs)

    def ends(self, e: int) -> tuple[int, int]:
        """Endpoint vertices of edge ``e`` (equal for a loop)."""
        try:
            _, a, b = self._edge_rows[e]
        except KeyError:
            raise GraphError(f"unknown edge id {e}") from None
        return self.vertex_of[a], self.vertex_of[b]

    @cached_property
    def _edge_rows(self) -> dict[int, tuple[int, int, int]]:
        return {row[0]: row for row in self.edges}

    def is_loop(self, e: int) -> bool:
        u, v = self.ends(e)
        return u == v

    @cached_property
    def incident(self) -> dict[int, list[int]]:
        """Map vertex id -> sorted half-edges (legs included) at that vertex."""
        out = {v: [] for v in self.vertex_ids}
        for h, v in self.half_edges:
            out[v].append(h)
        return out

    @cached_property
    def is_connected(self) -> bool:
        adj = {v: set() for v in self.vertex_ids}
        for e in self.edge_ids:
            u, v = self.ends(e)
            adj[u].add(v)
            adj[v].add(u)
        start = self.vertex_ids[0]
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(adj)

    def require_connected(self):
        if not self.is_connected:
            raise GraphError("graph not connected")

    def __repr__(self):
        edges = {e: self.ends(e) for e in self.edge_ids}
        return (f"WeightedGraph.build({self.genus_of!r}, {edges!r}, "
                f"{self.leg_vertex!r})")


def genus(G: WeightedGraph) -> int:
    """Arithmetic genus: first Betti number plus the vertex weights."""
    G.require_connected()
    return G.n_edges - G.n_vertices + 1 + sum(G.genus_of.values())


def valence(G: WeightedGraph, v: int) -> int:
    """Number of half-edges at ``v``; loops count twice, legs count once."""
    if v not in G.genus_of:
        raise GraphError(f"unknown vertex id {v}")
    return len(G.incident[v])


def is_stable(G: WeightedGraph) -> bool:
    G.require_connected()
    for v, g in G.vertices:
        val = len(G.incident[v])
        if g == 0 and val < 3:
            return False
        if g == 1 and val < 1:
            return False
    return True


def relabel(
    G: WeightedGraph,
    vertex_map: Mapping[int, int] | None = None,
    half_edge_map: Mapping[int, int] | None = None,
    edge_map: Mapping[int, int] | None = None,
) -> WeightedGraph:
    """Rename vertex, half-edge and edge ids.  Leg labels are never renamed.

    Missing maps default to the identity.  Swapping the two half-edges of an
    edge is expressed through ``half_edge_map``.
    """
    vm = vertex_map or {v: v for v in G.vertex_ids}
    hm = half_edge_map or {h: h for h, _ in G.half_edges}
    em = edge_map or {e: e for e in G.edge_ids}
    return WeightedGraph(
        tuple((vm[v], g) for v, g in G.vertices),
        tuple((hm[h], vm[v]) for h, v in G.half_edges),
        tuple((em[e], hm[a], hm[b]) for e, a, b in G.edges),
        tuple((lab, hm[h]) for lab, h in G.legs),
    )


def edge_multiplicities(G: WeightedGraph) -> Counter:
    """Counter of unordered endpoint pairs ``(min, max)`` over all edges."""
    return Counter(tuple(sorted(G.ends(e))) for e in G.edge_ids)

