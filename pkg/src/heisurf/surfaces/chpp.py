"""The degree-3 family over a (1,2)-polarized abelian surface.

Equation: x1 (y1^3 + lam y1 y2^2) + x2 (y2^3 + lam y2 y1^2), bidegree 3 in y
and 1 in x, invariant under the Heisenberg group of type (1, 2).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import LambdaZero
from ..elim.resultant import sylvester_resultant
from ..exactmath.matrix import ExactMatrix, det_bareiss
from ..heis.group import HeisType
from ..poly.ring import MultiPoly, PolyRing
from .common import FamilyDescriptor, as_rational, build, characters_of

CHPP_TEXT = "x1*(y1^3 + lam*y1*y2^2) + x2*(y2^3 + lam*y2*y1^2)"
CHPP_VARS = ("y1", "y2", "x1", "x2")


def chpp_equation(lam=None) -> MultiPoly:
    return build(CHPP_VARS, CHPP_TEXT, {"lam": as_rational(lam)})


def chpp_family(lam=None) -> FamilyDescriptor:
    t = HeisType(1, 2)
    f = chpp_equation(lam)
    return FamilyDescriptor("CHPP", t, {"lam": as_rational(lam)}, [f],
                            characters=characters_of(t, [f]))


def printed_delta_matrix(lam=None) -> ExactMatrix:
    """The 4x4 matrix whose determinant is the discriminant of X' -> A'."""
    params = {"lam": as_rational(lam)}
    rows = [
        ["3*x1", "2*lam*x2", "lam*x1", "0"],
        ["0", "3*x1", "2*lam*x2", "lam*x1"],
        ["lam*x2", "2*lam*x1", "3*x2", "0"],
        ["0", "lam*x2", "2*lam*x1", "3*x2"],
    ]
    ents = [build(("x1", "x2"), s, params) for r in rows for s in r]
    return ExactMatrix(4, 4, ents, ents[0].ring)


@dataclass
class ChppDiscriminant:
    determinant: MultiPoly
    resultant: MultiPoly

    @property
    def routes_agree(self) -> bool:
        return self.determinant == self.resultant


def chpp_discriminant(lam=None) -> ChppDiscriminant:
    """Discriminant by the printed determinant and, independently, by a resultant.

    The second route dehomogenizes the two y-partials at y2 = 1 and takes
    their Sylvester resultant in y1, with both treated as formal quadratics.
    """
    det = det_bareiss(printed_delta_matrix(lam))
    f = chpp_equation(lam)
    a = f.diff("y1").substitute({"y2": 1})
    b = f.diff("y2").substitute({"y2": 1})
    res = sylvester_resultant(a, b, "y1", degrees=(2, 2))
    return ChppDiscriminant(det, res.convert(det.ring))


def swap_x(f: MultiPoly) -> MultiPoly:
    return f.substitute({"x1": f.ring.var("x2"), "x2": f.ring.var("x1")})


def _partial_matrix(lam):
    """x-coefficient matrix of (df/dy1, df/dy2): rows are partials, columns x1, x2."""
    f = chpp_equation(lam)
    rows = []
    for v in ("y1", "y2"):
        d = f.diff(v)
        rows.append([d.coeffs_in("x1").get(1, d.ring.zero), d.coeffs_in("x2").get(1, d.ring.zero)])
    ring = f.ring
    return ExactMatrix(2, 2, [c for r in rows for c in r], ring)


def singular_fiber_determinant(lam=None) -> MultiPoly:
    """(3y1^2 + lam y2^2)(3y2^2 + lam y1^2) - (2 lam y1 y2)^2, read off the partials."""
    det = det_bareiss(_partial_matrix(lam))
    keep = [n for n in det.ring.names if n not in ("x1", "x2")]
    return det.convert(PolyRing(keep))


def chpp_singular_fiber_quartic(lam=None) -> MultiPoly:
    """The quartic in z = y2/y1 whose roots give singular fibres.

    Symbolic lam: the denominator-free form lam + lam z^4 + (3 - lam^2) z^2,
    i.e. the determinant at y1 = 1 divided by 3.  Numeric lam: the monic form
    1 + z^4 + (3 - lam^2)/lam z^2, i.e. the determinant divided by 3 lam.
    """
    lam = as_rational(lam)
    if lam == 0:
        raise LambdaZero("the singular-fibre quartic needs lam != 0")
    det = singular_fiber_determinant(lam)
    q = det.substitute({"y1": 1}).rename({"y2": "z"})
    ring = PolyRing(["z"] + [n for n in q.ring.names if n not in ("y1", "z")])
    q = q.convert(ring)
    if lam is None:
        return q.exquo(ring.constant(3))
    return q.exquo(ring.constant(3 * lam))


def y_content_resultant(lam=None) -> MultiPoly:
    """Res_x1(df/dy1, df/dy2) (both partials are linear in x1)."""
    f = chpp_equation(lam)
    return sylvester_resultant(f.diff("y1"), f.diff("y2"), "x1")


def companion_resultant(lam=None) -> MultiPoly:
    """Res_y1(y1^2 + lam, lam y1^2 + 1): the dehomogenized pair y1^2+lam y2^2, y2^2+lam y1^2."""
    params = {"lam": as_rational(lam)}
    ring_names = ("y1",)
    a = build(ring_names, "y1^2 + lam", params)
    b = build(ring_names, "lam*y1^2 + 1", params)
    r = sylvester_resultant(a, b, "y1")
    keep = [n for n in r.ring.names if n != "y1"]
    return r.convert(PolyRing(keep))


def zeuthen_segre_count(d_squared: int, euler_blowup: int) -> int:
    """Number of singular fibres mu from e = -2 D^2 + mu."""
    return euler_blowup + 2 * d_squared


__all__ = [
    "CHPP_TEXT", "ChppDiscriminant", "chpp_discriminant", "chpp_equation", "chpp_family",
    "chpp_singular_fiber_quartic", "companion_resultant", "printed_delta_matrix",
    "singular_fiber_determinant", "swap_x", "y_content_resultant", "zeuthen_segre_count",
]
