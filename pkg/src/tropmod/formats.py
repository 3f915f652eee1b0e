"""JSON and DOT serialization for graphs, posets, complexes and models."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from tropmod.contraction import StrataPoset
from tropmod.enumeration import EnumerationResult
from tropmod.graph import GraphError, WeightedGraph
from tropmod.tropical import ConeComplex, TropicalCurve, as_length, make_tropical_curve
from tropmod.valuation import NodalModel, format_series, parse_series


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise GraphError(f"{what} must be an integer, got {x!r}")
    return x


def graph_to_json(G: WeightedGraph) -> dict[str, Any]:
    return {
        "vertices": [{"id": v, "genus": g} for v, g in G.vertices],
        "edges": [{"id": e, "ends": list(G.ends(e))} for e in G.edge_ids],
        "legs": [{"label": lab, "vertex": v} for lab, v in sorted(G.leg_vertex.items())],
    }


def graph_from_json(data: Any) -> WeightedGraph:
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    try:
        genera = {_int(v["id"], "vertex id"): _int(v["genus"], "genus")
                  for v in data["vertices"]}
        edges = {}
        for row in data.get("edges", []):
            ends = row["ends"]
            if len(ends) != 2:
                raise GraphError(f"edge {row.get('id')} must have two ends")
            edges[_int(row["id"], "edge id")] = (_int(ends[0], "vertex id"),
                                                 _int(ends[1], "vertex id"))
        legs = {_int(row["label"], "leg label"): _int(row["vertex"], "vertex id")
                for row in data.get("legs", [])}
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc!r}") from None
    if len(genera) != len(data["vertices"]):
        raise GraphError("duplicate vertex id")
    if len(edges) != len(data.get("edges", [])):
        raise GraphError("duplicate edge id")
    if len(legs) != len(data.get("legs", [])):
        raise GraphError("duplicate leg label")
    return WeightedGraph.build(genera, edges, legs)


def length_to_json(x) -> str:
    if isinstance(x, float):
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def curve_to_json(T: TropicalCurve) -> dict[str, Any]:
    out = graph_to_json(T.graph)
    out["lengths"] = {str(e): length_to_json(x) for e, x in T.lengths.items()}
    return out


def curve_from_json(data: Any) -> TropicalCurve:
    G = graph_from_json(data)
    lengths = {int(e): as_length(str(x)) for e, x in data.get("lengths", {}).items()}
    return make_tropical_curve(G, lengths)


def model_to_json(m: NodalModel) -> dict[str, Any]:
    out = graph_to_json(m.graph)
    out["node_eq"] = {str(e): format_series(f) for e, f in sorted(m.node_eq.items())}
    return out


def model_from_json(data: Any) -> NodalModel:
    G = graph_from_json(data)
    if "node_eq" not in data or not isinstance(data["node_eq"], dict):
        raise ValueError("model JSON needs a node_eq object")
    try:
        eqs = {int(e): parse_series(str(s)) for e, s in data["node_eq"].items()}
    except ValueError as exc:
        raise ValueError(f"bad node_eq entry: {exc}") from None
    return NodalModel(G, eqs)


def enumeration_to_json(r: EnumerationResult) -> dict[str, Any]:
    return {
        "genus": r.genus,
        "legs": r.legs,
        "classes": [{"key": k.hex(), "graph": graph_to_json(G)} for k, G in r.classes],
        "counts_by_edges": {str(k): v for k, v in r.counts_by_edges.items()},
    }


def poset_to_json(P: StrataPoset) -> dict[str, Any]:
    return {
        "genus": P.genus,
        "legs": P.legs,
        "elements": [{"key": s.key.hex(), "codim": s.codim, "graph": graph_to_json(s.graph)}
                     for s in P.elements],
        "covers": [[c.hex(), p.hex()] for c, p in P.covers],
    }


def complex_to_json(C: ConeComplex) -> dict[str, Any]:
    return {
        "genus": C.genus,
        "legs": C.legs,
        "dim": C.dim,
        "cones": [{"key": c.key.hex(), "dim": c.dim, "autOrder": c.aut_order,
                   "graph": graph_to_json(c.graph)} for c in C.cones],
        "faces": [{"from": f.source.hex(), "contract": list(f.contract), "to": f.to.hex()}
                  for f in C.faces],
    }


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


# -- DOT ---------------------------------------------------------------------

def describe(G: WeightedGraph) -> str:
    """Short one-line text for a graph, e.g. ``g=[0,1] 0-0 0-1``."""
    genera = ",".join(str(g) for _, g in G.vertices)
    edges = " ".join(f"{u}-{v}" for u, v in (sorted(G.ends(e)) for e in G.edge_ids))
    legs = " ".join(f"L{lab}@{v}" for lab, v in sorted(G.leg_vertex.items()))
    return " ".join(x for x in (f"g=[{genera}]", edges, legs) if x)


def _graph_body(G: WeightedGraph, prefix: str = "") -> list[str]:
    lines = [f'  {prefix}v{v} [label="v{v} (g={g})"];' for v, g in G.vertices]
    for e in G.edge_ids:
        u, v = G.ends(e)
        lines.append(f'  {prefix}v{u} -- {prefix}v{v} [label="e{e}"];')
    for lab, v in sorted(G.leg_vertex.items()):
        lines.append(f'  {prefix}leg{lab} [shape=plaintext, label="{lab}"];')
        lines.append(f"  {prefix}v{v} -- {prefix}leg{lab};")
    return lines


def graph_to_dot(G: WeightedGraph, name: str = "G") -> str:
    return "\n".join([f"graph {name} {{", *_graph_body(G), "}"]) + "\n"


def enumeration_to_dot(r: EnumerationResult) -> str:
    lines = [f"graph stable_g{r.genus}_n{r.legs} {{"]
    for i, (_, G) in enumerate(r.classes):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'  label="#{i} |E|={G.n_edges}";')
        lines += ["  " + ln for ln in _graph_body(G, prefix=f"c{i}_")]
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_dot(P: StrataPoset) -> str:
    """Hasse diagram with one rank per codimension; arrows point to contractions."""
    index = {s.key: i for i, s in enumerate(P.elements)}
    lines = [f"digraph strata_g{P.genus}_n{P.legs} {{", "  rankdir=BT;"]
    by_codim: dict[int, list[int]] = {}
    for s in P.elements:
        by_codim.setdefault(s.codim, []).append(index[s.key])
    for codim, idxs in sorted(by_codim.items()):
        lines.append("  { rank=same; " + " ".join(f"s{i};" for i in idxs) + " }")
    for i, s in enumerate(P.elements):
        lines.append(f'  s{i} [label="{describe(s.graph)}\\ncodim {s.codim}"];')
    for child, parent in P.covers:
        lines.append(f"  s{index[child]} -> s{index[parent]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
