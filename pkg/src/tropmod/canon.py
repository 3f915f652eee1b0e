"""Canonical forms, isomorphisms and automorphism groups of weighted graphs.

Vertices are ordered by an individualization-refinement search: colour
vertices by (genus, leg labels, loop count), refine by the multiset of
neighbour colours with edge multiplicities, and branch on the first
non-singleton cell.  Every leaf of the search tree is a vertex ordering;
the lexicographically least encoding over all leaves is the canonical form.

Once vertices are matched, half-edges can always be matched (parallel
edges and loops are interchangeable and loops can be flipped), so the
half-edge automorphism group is the vertex automorphism group extended by
``prod m! * prod l! 2**l`` over edge bundles of size ``m`` and loop
bundles of size ``l``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterator

from tropmod.graph import WeightedGraph, edge_multiplicities

CanonicalForm = bytes


class _Search:
    """Search-tree state for one graph."""

    def __init__(self, G: WeightedGraph):
        G.require_connected()
        self.ids = G.vertex_ids
        index = {v: i for i, v in enumerate(self.ids)}
        n = len(self.ids)
        self.n = n
        loops = [0] * n
        mult = [[0] * n for _ in range(n)]
        for (u, v), m in edge_multiplicities(G).items():
            i, j = index[u], index[v]
            if i == j:
                loops[i] = m
            else:
                mult[i][j] = mult[j][i] = m
        legs = [[] for _ in range(n)]
        for lab, v in G.leg_vertex.items():
            legs[index[v]].append(lab)
        self.base = [(G.genus_of[v], tuple(sorted(legs[i])), loops[i])
                     for i, v in enumerate(self.ids)]
        self.mult = mult
        self.nbrs = [[(j, mult[i][j]) for j in range(n) if mult[i][j]] for i in range(n)]

    def _refine(self, colors: list[int]) -> list[int]:
        while True:
            sigs = [(colors[i], tuple(sorted((colors[j], m) for j, m in self.nbrs[i])))
                    for i in range(self.n)]
            rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
            new = [rank[s] for s in sigs]
            if len(rank) == len(set(colors)):
                return new
            colors = new

    def leaves(self) -> Iterator[tuple[int, ...]]:
        """Yield vertex orderings (tuples of vertex indices) at the leaves."""
        rank = {b: r for r, b in enumerate(sorted(set(self.base)))}
        start = self._refine([rank[b] for b in self.base])
        stack = [start]
        while stack:
            colors = stack.pop()
            cells: dict[int, list[int]] = {}
            for i, c in enumerate(colors):
                cells.setdefault(c, []).append(i)
            target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
            if target is None:
                yield tuple(sorted(range(self.n), key=colors.__getitem__))
                continue
            for v in reversed(cells[target]):
                split = [2 * c + (1 if c == target and i != v else 0)
                         for i, c in enumerate(colors)]
                stack.append(self._refine(split))

    def encode(self, order: tuple[int, ...]) -> tuple:
        verts = tuple(self.base[i] for i in order)
        mults = tuple(self.mult[order[a]][order[b]]
                      for a, b in combinations(range(self.n), 2))
        return verts, mults


@lru_cache(maxsize=1 << 16)
def _best(G: WeightedGraph) -> tuple[tuple, tuple[tuple[int, ...], ...], _Search]:
    """Least encoding, every leaf attaining it, and the search state."""
    s = _Search(G)
    best = None
    orders: list[tuple[int, ...]] = []
    for order in s.leaves():
        enc = s.encode(order)
        if best is None or enc < best:
            best, orders = enc, [order]
        elif enc == best:
            orders.append(order)
    return best, tuple(orders), s


def _to_bytes(enc: tuple) -> bytes:
    verts, mults = enc
    parts = [f"{g}:{'.'.join(map(str, legs))}:{loops}" for g, legs, loops in verts]
    return (";".join(parts) + "|" + ",".join(map(str, mults))).encode("ascii")


def canonical_form(G: WeightedGraph) -> CanonicalForm:
    """Byte string equal for two graphs exactly when they are isomorphic.

    >>> from tropmod.graph import WeightedGraph
    >>> a = WeightedGraph.build([1, 0], [(1, 1), (0, 1)])
    >>> b = WeightedGraph.build({5: 0, 9: 1}, {3: (9, 5), 7: (5, 5)})
    >>> canonical_form(a) == canonical_form(b)
    True
    """
    return _to_bytes(_best(G)[0])


def vertex_isomorphisms(G1: WeightedGraph, G2: WeightedGraph) -> Iterator[dict[int, int]]:
    """Yield every vertex bijection G1 -> G2 preserving genus, legs and multiplicities."""
    enc1, orders1, s1 = _best(G1)
    enc2, orders2, s2 = _best(G2)
    if enc1 != enc2:
        return
    ref = orders1[0]
    for order in orders2:
        yield {s1.ids[i]: s2.ids[j] for i, j in zip(ref, order)}


def lift(G1: WeightedGraph, G2: WeightedGraph, vmap: dict[int, int]) -> dict[int, int]:
    """Extend a vertex isomorphism to a half-edge isomorphism.

    Edges of each bundle are matched in id order; each half-edge goes to a
    half-edge at the image of its vertex.  Legs go to legs of equal label.
    """
    def bundles(G, f):
        out: dict[tuple, list[tuple[int, int]]] = {}
        for e, a, b in G.edges:
            u, v = f(G.vertex_of[a]), f(G.vertex_of[b])
            if (u, v) > (v, u):
                a, b, u, v = b, a, v, u
            out.setdefault((u, v), []).append((a, b))
        return out

    src = bundles(G1, vmap.__getitem__)
    dst = bundles(G2, lambda v: v)
    hmap = {}
    for key, pairs in src.items():
        for (a, b), (c, d) in zip(pairs, dst[key]):
            hmap[a] = c
            hmap[b] = d
    legs2 = dict(G2.legs)
    for lab, h in G1.legs:
        hmap[h] = legs2[lab]
    return hmap


def find_isomorphism(G1: WeightedGraph, G2: WeightedGraph) -> dict[int, int] | None:
    """Half-edge map G1 -> G2 witnessing an isomorphism, or None."""
    for vmap in vertex_isomorphisms(G1, G2):
        return lift(G1, G2, vmap)
    return None


def is_isomorphic(G1: WeightedGraph, G2: WeightedGraph) -> bool:
    return canonical_form(G1) == canonical_form(G2)


def canonical_relabel(G: WeightedGraph) -> WeightedGraph:
    """Isomorphic copy with vertices, edges and half-edges numbered canonically.

    Isomorphic inputs give identical outputs.
    """
    verts, mults = _best(G)[0]
    mult = dict(zip(combinations(range(len(verts)), 2), mults))
    edges = []
    for i, (_, _, loops) in enumerate(verts):
        edges += [(i, i)] * loops
        for j in range(i + 1, len(verts)):
            edges += [(i, j)] * mult[i, j]
    legs = {lab: i for i, (_, labs, _) in enumerate(verts) for lab in labs}
    return WeightedGraph.build([g for g, _, _ in verts], edges, legs)


@dataclass(frozen=True)
class AutomorphismGroup:
    """Automorphisms acting on half-edge ids.

    ``generators`` are dicts half-edge -> half-edge; together they generate
    a group of size ``order``.
    """

    order: int
    generators: tuple[dict[int, int], ...]


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[i] for i in q)


def _closure(gens: list[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _compose(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def automorphism_group(G: WeightedGraph) -> AutomorphismGroup:
    """Full automorphism group; loop flips and parallel-edge swaps are included."""
    _, orders, s = _best(G)
    ref = orders[0]
    n = s.n
    vperms = []
    for order in orders:
        p = [0] * n
        for i, j in zip(ref, order):
            p[i] = j
        vperms.append(tuple(p))

    chosen: list[tuple[int, ...]] = []
    group = {tuple(range(n))}
    for p in sorted(vperms):
        if p not in group:
            chosen.append(p)
            group = _closure(chosen, n)
    vertex_order = len(vperms)
    assert len(group) == vertex_order

    gens = []
    for p in chosen:
        vmap = {s.ids[i]: s.ids[p[i]] for i in range(n)}
        gens.append(lift(G, G, vmap))

    ident = {h: h for h, _ in G.half_edges}
    local_order = 1
    bundles: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for e, a, b in G.edges:
        u, v = G.vertex_of[a], G.vertex_of[b]
        if u > v:
            a, b, u, v = b, a, v, u
        bundles.setdefault((u, v), []).append((a, b))
    for (u, v), pairs in sorted(bundles.items()):
        m = len(pairs)
        local_order *= factorial(m)
        if u == v:
            local_order *= 2 ** m
            a, b = pairs[0]
            gens.append({**ident, a: b, b: a})
        for (a, b), (c, d) in zip(pairs, pairs[1:]):
            gens.append({**ident, a: c, c: a, b: d, d: b})
    return AutomorphismGroup(vertex_order * local_order, tuple(gens))
