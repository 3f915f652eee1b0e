"""Stable weighted graphs, the strata of the moduli of curves, and tropical moduli."""
from tropmod.canon import (
    AutomorphismGroup,
    CanonicalForm,
    automorphism_group,
    canonical_form,
    canonical_relabel,
    find_isomorphism,
    is_isomorphic,
)
from tropmod.contraction import (
    StrataPoset,
    build_strata_poset,
    contract_edge,
    contract_set,
    is_contraction_of,
)
from tropmod.enumeration import EnumerationResult, counts_by_codim, enumerate_stable_graphs
from tropmod.graph import GraphError, WeightedGraph, genus, is_stable, relabel, valence
from tropmod.tropical import (
    INF,
    ConeComplex,
    TropicalCurve,
    build_complex,
    check_order_reversal,
    make_tropical_curve,
    specialize,
    tropical_iso,
)
from tropmod.valuation import (
    NodalModel,
    ValuedSeries,
    add,
    in_valuation_ring,
    mul,
    parse_series,
    trop_of_model,
    val,
)
from tropmod.weierstrass import (
    SingularCurveError,
    WeierstrassCurve,
    curves_isomorphic,
    discriminant,
    j_invariant,
)

__version__ = "0.1.0"

__all__ = [
    "AutomorphismGroup",
    "CanonicalForm",
    "automorphism_group",
    "canonical_form",
    "canonical_relabel",
    "find_isomorphism",
    "is_isomorphic",
    "StrataPoset",
    "build_strata_poset",
    "contract_edge",
    "contract_set",
    "is_contraction_of",
    "EnumerationResult",
    "counts_by_codim",
    "enumerate_stable_graphs",
    "GraphError",
    "WeightedGraph",
    "genus",
    "is_stable",
    "relabel",
    "valence",
    "INF",
    "ConeComplex",
    "TropicalCurve",
    "build_complex",
    "check_order_reversal",
    "make_tropical_curve",
    "specialize",
    "tropical_iso",
    "NodalModel",
    "ValuedSeries",
    "add",
    "in_valuation_ring",
    "mul",
    "parse_series",
    "trop_of_model",
    "val",
    "SingularCurveError",
    "WeierstrassCurve",
    "curves_isomorphic",
    "discriminant",
    "j_invariant",
]
