"""Exact series in one parameter ``t`` and tropicalization of nodal models.

A :class:`ValuedSeries` is a finite sum of terms ``c * t^p`` with rational
``c`` and ``p``.  Its valuation is the least exponent present, and the
zero series has valuation infinity.  Constants have valuation 0, so the
valuation is trivial on the coefficient field.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from tropmod.graph import WeightedGraph
from tropmod.tropical import INF, TropicalCurve, make_tropical_curve


@dataclass(frozen=True)
class ValuedSeries:
    """Terms ``(exponent, coefficient)`` with strictly increasing exponents."""

    terms: tuple[tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        exps = [p for p, _ in self.terms]
        if any(a >= b for a, b in zip(exps, exps[1:])):
            raise ValueError("exponents must be strictly increasing")
        if any(c == 0 for _, c in self.terms):
            raise ValueError("zero coefficient in series")

    @classmethod
    def from_dict(cls, coeffs: Mapping) -> "ValuedSeries":
        """Build from ``{exponent: coefficient}``; zero coefficients are dropped."""
        acc: dict[Fraction, Fraction] = {}
        for p, c in coeffs.items():
            p, c = Fraction(p), Fraction(c)
            acc[p] = acc.get(p, 0) + c
        return cls(tuple((p, c) for p, c in sorted(acc.items()) if c != 0))

    @classmethod
    def parse(cls, text: str) -> "ValuedSeries":
        return parse_series(text)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ValuedSeries") -> "ValuedSeries":
        return add(self, other)

    def __mul__(self, other: "ValuedSeries") -> "ValuedSeries":
        return mul(self, other)

    def __neg__(self) -> "ValuedSeries":
        return ValuedSeries(tuple((p, -c) for p, c in self.terms))

    def __sub__(self, other: "ValuedSeries") -> "ValuedSeries":
        return add(self, -other)

    def __str__(self):
        return format_series(self)


def val(s: ValuedSeries) -> Fraction | float:
    """Least exponent of ``s``; ``math.inf`` for the zero series."""
    return s.terms[0][0] if s.terms else INF


def add(a: ValuedSeries, b: ValuedSeries) -> ValuedSeries:
    acc = dict(a.terms)
    for p, c in b.terms:
        acc[p] = acc.get(p, 0) + c
    return ValuedSeries(tuple((p, c) for p, c in sorted(acc.items()) if c != 0))


def mul(a: ValuedSeries, b: ValuedSeries) -> ValuedSeries:
    acc: dict[Fraction, Fraction] = {}
    for p, c in a.terms:
        for q, d in b.terms:
            acc[p + q] = acc.get(p + q, 0) + c * d
    return ValuedSeries(tuple((p, c) for p, c in sorted(acc.items()) if c != 0))


def in_valuation_ring(s: ValuedSeries) -> bool:
    return val(s) >= 0


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coef>\d+(?:/\d+)?)?\s*
        (?P<star>\*)?\s*
        (?P<t>t(?:\s*\^\s*(?:\(\s*(?P<pexp>[+-]?\d+(?:/\d+)?)\s*\)|(?P<exp>-?\d+)))?)?
        \s*""",
    re.VERBOSE,
)


def parse_series(text: str) -> ValuedSeries:
    """Parse sums of terms like ``"3*t^(-1/2) + t - 2/3*t^5 + 1"``.

    >>> str(parse_series("1*t^2 + 1*t^5"))
    't^2 + t^5'
    >>> val(parse_series("3*t^(-1/2) + t"))
    Fraction(-1, 2)
    """
    acc: dict[Fraction, Fraction] = {}
    pos = 0
    while pos < len(text) or pos == 0:
        m = _TERM.match(text, pos)
        coef, star, t = m.group("coef"), m.group("star"), m.group("t")
        if (coef is None and t is None) or (star and not (coef and t)) \
                or (pos > 0 and m.group("sign") is None):
            raise ValueError(f"bad series literal {text!r} at position {pos}")
        c = Fraction(coef) if coef else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        if t is None:
            p = Fraction(0)
        else:
            p = Fraction(m.group("pexp") or m.group("exp") or 1)
        acc[p] = acc.get(p, 0) + c
        pos = m.end()
    return ValuedSeries(tuple((p, c) for p, c in sorted(acc.items()) if c != 0))


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_series(s: ValuedSeries) -> str:
    if not s.terms:
        return "0"
    parts = []
    for p, c in s.terms:
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if p == 0:
            body = _fmt_frac(c)
        else:
            if p == 1:
                mono = "t"
            elif p.denominator == 1 and p > 0:
                mono = f"t^{p.numerator}"
            else:
                mono = f"t^({_fmt_frac(p)})"
            body = mono if c == 1 else f"{_fmt_frac(c)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class NodalModel:
    """Dual graph of the special fibre with a node equation ``xy = f_e`` per edge."""

    graph: WeightedGraph
    node_eq: Mapping[int, ValuedSeries] = field(hash=False)


class NotANodeError(ValueError):
    pass


def trop_of_model(m: NodalModel) -> TropicalCurve:
    """Tropical curve on the dual graph with edge lengths ``val(f_e)``."""
    lengths = {}
    for e in m.graph.edge_ids:
        if e not in m.node_eq:
            raise ValueError(f"missing node equation for edge {e}")
        v = val(m.node_eq[e])
        if v == 0:
            raise NotANodeError(f"not a node: f for edge {e} is a unit")
        if v < 0:
            raise ValueError(f"node equation for edge {e} is not in the valuation ring")
        lengths[e] = v
    extra = set(m.node_eq) - set(m.graph.edge_ids)
    if extra:
        raise ValueError(f"node equations for unknown edges {sorted(extra)}")
    return make_tropical_curve(m.graph, lengths)

