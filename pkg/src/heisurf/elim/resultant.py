"""Sylvester resultants and discriminants."""

from __future__ import annotations

from ..errors import DegreeZero, ExactDivisionFailed
from ..exactmath.matrix import ExactMatrix, det_bareiss
from ..poly.ring import MultiPoly


def _dense_coeffs(f: MultiPoly, v: str, n: int):
    """Coefficients of f in v for formal degree n, highest degree first."""
    parts = f.coeffs_in(v)
    zero = f.ring.zero
    return [parts.get(k, zero) for k in range(n, -1, -1)]


def sylvester_matrix(a: MultiPoly, b: MultiPoly, v: str, degrees=None) -> ExactMatrix:
    """Sylvester matrix in v; ``degrees`` fixes formal degrees (leading zeros allowed)."""
    m, n = degrees if degrees else (a.degree(v), b.degree(v))
    if m < 1 or n < 1:
        raise DegreeZero(f"both polynomials need positive degree in {v} (got {m}, {n})")
    if a.degree(v) > m or b.degree(v) > n:
        raise ValueError("formal degree below the actual degree")
    ca, cb = _dense_coeffs(a, v, m), _dense_coeffs(b, v, n)
    size = m + n
    zero = a.ring.zero
    rows = []
    for i in range(n):
        rows.append([zero] * i + ca + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + cb + [zero] * (size - n - 1 - i))
    return ExactMatrix(size, size, [x for r in rows for x in r], a.ring)


def sylvester_resultant(a: MultiPoly, b: MultiPoly, v: str, degrees=None) -> MultiPoly:
    """Res_v(a, b) as the determinant of the Sylvester matrix."""
    return det_bareiss(sylvester_matrix(a, b, v, degrees))


def univariate_discriminant(p: MultiPoly, v: str) -> MultiPoly:
    """(-1)^(n(n-1)/2) Res_v(p, p') / lc_v(p)."""
    n = p.degree(v)
    if n < 2:
        raise DegreeZero(f"discriminant needs degree >= 2 in {v}, got {n}")
    res = sylvester_resultant(p, p.diff(v), v)
    lc = p.coeffs_in(v)[n]
    try:
        q = res.exquo(lc)
    except ExactDivisionFailed as exc:
        raise ExactDivisionFailed(f"leading coefficient does not divide the resultant: {exc}") from None
    return -q if (n * (n - 1) // 2) % 2 else q


def cubic_discriminant(a, b, c, d):
    """Discriminant of a*x^3 + b*x^2 + c*x + d."""
    return (b * b * c * c - 4 * a * c ** 3 - 4 * b ** 3 * d
            - 27 * a * a * d * d + 18 * a * b * c * d)
