"""Tropical curves, their moduli cones, and comparison with the strata poset."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from tropmod.canon import CanonicalForm, automorphism_group, canonical_form, vertex_isomorphisms
from tropmod.contraction import build_strata_poset, contract_edge, contract_set, is_contraction_of
from tropmod.enumeration import enumerate_stable_graphs
from tropmod.graph import WeightedGraph, is_stable

INF = math.inf

Length = Union[Fraction, float]


def as_length(x) -> Length:
    """Exact length from an int, Fraction, numeric string, or infinity."""
    if isinstance(x, str):
        if x.strip().lower() in ("inf", "infinity", "oo", "∞"):
            return INF
        return Fraction(x.strip())
    if isinstance(x, float):
        if math.isinf(x) and x > 0:
            return INF
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True)
class TropicalCurve:
    """A stable graph with a length in (0, inf] on every edge."""

    graph: WeightedGraph
    lengths: Mapping[int, Length] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "lengths", dict(sorted(self.lengths.items())))

    def length(self, e: int) -> Length:
        return self.lengths[e]


def make_tropical_curve(G: WeightedGraph, lengths: Mapping[int, object]) -> TropicalCurve:
    if not is_stable(G):
        raise ValueError("graph is not stable")
    lengths = {e: as_length(x) for e, x in lengths.items()}
    missing = set(G.edge_ids) - set(lengths)
    if missing:
        raise ValueError(f"missing edge lengths for edges {sorted(missing)}")
    extra = set(lengths) - set(G.edge_ids)
    if extra:
        raise ValueError(f"lengths given for unknown edges {sorted(extra)}")
    for e, x in lengths.items():
        if not x > 0:
            raise ValueError(f"edge {e} has non-positive length {x}")
    return TropicalCurve(G, lengths)


def _bundle_lengths(T: TropicalCurve, vmap=None) -> Counter:
    G = T.graph
    f = vmap.__getitem__ if vmap is not None else (lambda v: v)
    out: Counter = Counter()
    for e in G.edge_ids:
        u, v = (f(x) for x in G.ends(e))
        out[min(u, v), max(u, v), T.lengths[e]] += 1
    return out


def tropical_iso(T1: TropicalCurve, T2: TropicalCurve) -> bool:
    """True if some graph isomorphism carries one length function to the other.

    Parallel edges and loops can be permuted freely, so it suffices that
    each edge bundle receives the same multiset of lengths.
    """
    target = _bundle_lengths(T2)
    return any(_bundle_lengths(T1, vmap) == target
               for vmap in vertex_isomorphisms(T1.graph, T2.graph))


def specialize(T: TropicalCurve, S: Iterable[int]) -> TropicalCurve:
    """Limit of ``T`` as the lengths of the edges in ``S`` shrink to zero."""
    S = set(S)
    G = contract_set(T.graph, S)
    return TropicalCurve(G, {e: x for e, x in T.lengths.items() if e not in S})


@dataclass(frozen=True)
class Cone:
    key: CanonicalForm
    graph: WeightedGraph
    aut_order: int

    @property
    def dim(self) -> int:
        return self.graph.n_edges


@dataclass(frozen=True)
class Face:
    """``to`` is the face of ``source`` where the edges in ``contract`` have length zero."""

    source: CanonicalForm
    contract: tuple[int, ...]
    to: CanonicalForm


@dataclass(frozen=True)
class ConeComplex:
    genus: int
    legs: int
    cones: tuple[Cone, ...]
    faces: tuple[Face, ...]

    @property
    def dim(self) -> int:
        return 3 * self.genus - 3 + self.legs

    def cone(self, key: CanonicalForm) -> Cone:
        for c in self.cones:
            if c.key == key:
                return c
        raise KeyError(key)

    def f_vector(self) -> dict[int, int]:
        out = Counter(c.dim for c in self.cones)
        return dict(sorted(out.items()))

    def top_cones(self) -> list[Cone]:
        top = max(c.dim for c in self.cones)
        return [c for c in self.cones if c.dim == top]

    def face_relation(self) -> set[tuple[CanonicalForm, CanonicalForm]]:
        """Reflexive-transitive closure of the face links as (cone, face) pairs."""
        down: dict[CanonicalForm, set[CanonicalForm]] = {c.key: set() for c in self.cones}
        for f in self.faces:
            down[f.source].add(f.to)
        rel = set()
        for c in self.cones:
            seen = {c.key}
            stack = [c.key]
            while stack:
                for k in down[stack.pop()]:
                    if k not in seen:
                        seen.add(k)
                        stack.append(k)
            rel.update((c.key, k) for k in seen)
        return rel


def build_complex(g: int, n: int = 0, force: bool = False) -> ConeComplex:
    result = enumerate_stable_graphs(g, n, force=force)
    cones = tuple(Cone(k, G, automorphism_group(G).order) for k, G in result.classes)
    known = {c.key for c in cones}
    faces = []
    for c in cones:
        for e in c.graph.edge_ids:
            to = canonical_form(contract_edge(c.graph, e))
            if to not in known:
                raise AssertionError("enumeration is not closed under contraction")
            faces.append(Face(c.key, (e,), to))
    return ConeComplex(g, n, cones, tuple(faces))


@dataclass
class ReversalReport:
    genus: int
    legs: int
    passed: bool
    n_classes: int
    n_pairs: int
    n_covers: int
    counterexamples: list[str] = field(default_factory=list)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status}: g={self.genus} n={self.legs} classes={self.n_classes} "
                 f"pairs={self.n_pairs} covers={self.n_covers}"]
        lines += [f"  counterexample: {c}" for c in self.counterexamples]
        return "\n".join(lines)


def check_order_reversal(g: int, n: int = 0, force: bool = False) -> ReversalReport:
    """Check that cone faces and strata closures are the same order, reversed.

    For every ordered pair of classes, compares: face inclusion in the cone
    complex, the order generated by the poset covers, and a direct search
    for an edge set whose contraction gives the coarser graph.  Also checks
    cone dimension plus stratum dimension equals 3g-3+n for every class.
    """
    cx = build_complex(g, n, force=force)
    report = ReversalReport(g, n, True, len(cx.cones), 0, 0)
    if not cx.cones:
        return report
    poset = build_strata_poset(c.graph for c in cx.cones)
    faces = cx.face_relation()
    order = poset.order_relation()
    cone_covers = {(f.source, f.to) for f in cx.faces}
    report.n_covers = len(poset.covers)
    if cone_covers != set(poset.covers):
        report.passed = False
        report.counterexamples.append("cone face links differ from poset covers")
    for c in cx.cones:
        stratum = poset.element(c.key)
        stratum_dim = cx.dim - stratum.codim
        if c.dim != stratum.codim or c.dim + stratum_dim != cx.dim:
            report.passed = False
            report.counterexamples.append(f"dimension mismatch at {c.key.decode()}")
    for a in cx.cones:
        for b in cx.cones:
            report.n_pairs += 1
            in_face = (a.key, b.key) in faces
            in_order = (a.key, b.key) in order
            direct = is_contraction_of(a.graph, b.graph)
            if not in_face == in_order == direct:
                report.passed = False
                report.counterexamples.append(
                    f"{a.key.decode()} -> {b.key.decode()}: face={in_face} "
                    f"poset={in_order} contraction={direct}")
    return report

