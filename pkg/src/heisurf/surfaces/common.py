"""Shared plumbing for the surface families."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..heis.group import HeisType
from ..heis.modules import eigenvalue
from ..poly.parse import parse_poly
from ..poly.ring import MultiPoly, PolyRing


@dataclass
class FamilyDescriptor:
    name: str
    heis_type: HeisType
    parameters: dict
    equations: list
    x: str = "x"
    characters: list = field(default_factory=list)

    def equation_strings(self):
        return [str(f) for f in self.equations]


def as_rational(value):
    """Accept int, Fraction or text like '3/4'; None stays None (symbolic)."""
    if value is None or isinstance(value, (int, Fraction)):
        return value
    if isinstance(value, str):
        f = Fraction(value)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"cannot use {value!r} as a rational parameter")


def build(names, text: str, params: dict) -> MultiPoly:
    """Parse text in a ring over `names` plus the symbolic parameters, then specialize.

    ``params`` maps parameter name -> rational value or None (kept symbolic).
    """
    full = PolyRing(list(names) + list(params))
    f = parse_poly(text, full)
    return specialize(f, params)


def specialize(f: MultiPoly, params: dict) -> MultiPoly:
    fixed = {k: v for k, v in params.items() if v is not None}
    if not fixed:
        return f
    g = f.substitute(fixed)
    keep = [n for n in f.ring.names if n not in fixed]
    return g.convert(PolyRing(keep, f.ring.field, f.ring.order))


def characters_of(t: HeisType, polys, x: str = "x") -> list:
    """Per polynomial: generator name -> eigenvalue (None if not an eigenvector)."""
    out = []
    for f in polys:
        out.append({g: eigenvalue(t, f, g, x=x) for g in t.generators if g != "Z"})
    return out


def cyc(i: int, n: int = 3) -> int:
    """Index arithmetic modulo n with representatives 1..n."""
    return (i - 1) % n + 1
