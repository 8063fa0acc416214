"""The degree-4 determinantal family over a (1,3)-polarized abelian surface.

S' is cut out by the 2x2 minors of

    M = [ s1                 s3                 s2               ]
        [ lam y1^2 + mu y2y3  lam y3^2 + mu y1y2  lam y2^2 + mu y1y3 ]

with lam = 1 for the family itself.  Writing the minors in lexicographic
column order gives [F2, -F3, F1] where

    F1 = s3 (lam y2^2 + mu y1y3) - s2 (lam y3^2 + mu y1y2)
    F2 = s1 (lam y3^2 + mu y1y2) - s3 (lam y1^2 + mu y2y3)
    F3 = s2 (lam y1^2 + mu y2y3) - s1 (lam y2^2 + mu y1y3)

The coordinates s1, s2, s3 play the role of the basis x1, x2, x3 of V.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from ..elim.resultant import cubic_discriminant
from ..errors import ExactDivisionFailed
from ..exactmath.matrix import ExactMatrix, det_bareiss, minors
from ..heis.group import HeisType
from ..heis.modules import act
from ..poly.ring import MultiPoly, PolyRing
from .common import FamilyDescriptor, as_rational, build, characters_of

Y = ("y1", "y2", "y3")
S = ("s1", "s2", "s3")
SYM2_BASIS = ("y1^2", "y1*y2", "y1*y3", "y2^2", "y2*y3", "y3^2")

F_TEXT = (
    "s3*(lam*y2^2 + mu*y1*y3) - s2*(lam*y3^2 + mu*y1*y2)",
    "s1*(lam*y3^2 + mu*y1*y2) - s3*(lam*y1^2 + mu*y2*y3)",
    "s2*(lam*y1^2 + mu*y2*y3) - s1*(lam*y2^2 + mu*y1*y3)",
)
M_TEXT = (
    ("s1", "s3", "s2"),
    ("lam*y1^2 + mu*y2*y3", "lam*y3^2 + mu*y1*y2", "lam*y2^2 + mu*y1*y3"),
)
# minors of M in lex column order, as (sign, index into F1..F3)
MINOR_DICTIONARY = ((1, 1), (-1, 2), (1, 0))


def _params(lam, mu):
    return {"lam": as_rational(lam), "mu": as_rational(mu)}


def pp4_equations(mu=None, lam=1) -> list:
    p = _params(lam, mu)
    return [build(Y + S, t, p) for t in F_TEXT]


def pp4_matrix(mu=None, lam=1) -> ExactMatrix:
    p = _params(lam, mu)
    ents = [build(Y + S, t, p) for row in M_TEXT for t in row]
    return ExactMatrix(2, 3, ents, ents[0].ring)


def pp4_minors(mu=None, lam=1) -> list:
    return minors(pp4_matrix(mu, lam), 2)


def pp4_family(mu=None) -> FamilyDescriptor:
    t = HeisType(1, 3)
    eqs = pp4_equations(mu)
    return FamilyDescriptor("PP4", t, {"mu": as_rational(mu), "lam": 1}, eqs, x="s",
                            characters=characters_of(t, eqs, x="s"))


def pp4_equivariance(mu=None):
    """Images of (F1, F2, F3) under the generators, lifted to QQ(zeta_3).

    Returns (C-eigenvalues or None per equation, T images, lifted equations).
    """
    t = HeisType(1, 3)
    eqs = pp4_equations(mu)
    lifted = [act(t, t.identity(), f, x="s") for f in eqs]
    c_imgs = [act(t, "C", f, x="s") for f in eqs]
    t_imgs = [act(t, "T", f, x="s") for f in eqs]
    eig = []
    for f, g in zip(lifted, c_imgs):
        lm = f.leading_monomial()
        c = t.field.div(g.coeff(lm), f.coeff(lm))
        eig.append(c if g == f * c else None)
    return eig, t_imgs, lifted


# ---------------------------------------------------------------- branch locus

PENCIL_VARS = ("s", "t")


def printed_pencil_matrix(mu=None) -> ExactMatrix:
    p = {"mu": as_rational(mu)}
    rows = (
        ("s2*t - s3*s", "1/2*mu*s1*s", "-1/2*mu*s1*t"),
        ("1/2*mu*s1*s", "-s1*t", "1/2*mu*(s2*t - s3*s)"),
        ("-1/2*mu*s1*t", "1/2*mu*(s2*t - s3*s)", "s1*s"),
    )
    ents = [build(PENCIL_VARS + S, x, p) for r in rows for x in r]
    return ExactMatrix(3, 3, ents, ents[0].ring)


def quadratic_form_matrix(q: MultiPoly, variables) -> list:
    """Symmetric matrix of a quadratic form in ``variables`` (entries in the other variables)."""
    ring = q.ring
    idx = [ring.var_index(v) for v in variables]
    n = len(idx)
    mat = [[ring.zero] * n for _ in range(n)]
    for e, c in q.terms.items():
        degs = [e[i] for i in idx]
        if sum(degs) != 2:
            raise ValueError(f"{q} is not quadratic in {variables}")
        rest = list(e)
        for i in idx:
            rest[i] = 0
        mono = ring.monomial(rest, c)
        hits = [k for k, d in enumerate(degs) for _ in range(d)]
        a, b = hits
        if a == b:
            mat[a][a] = mat[a][a] + mono
        else:
            half = mono * Fraction(1, 2)
            mat[a][b] = mat[a][b] + half
            mat[b][a] = mat[b][a] + half
    return mat


def pencil_matrix(i: int, j: int, mu=None) -> ExactMatrix:
    """Symmetric matrix of s*F_i + t*F_j in (y1, y2, y3), entries in (s, t, s1, s2, s3[, mu])."""
    src = [build(PENCIL_VARS + Y + S, t, _params(1, mu)) for t in F_TEXT]
    ring = src[0].ring
    q = ring.var("s") * src[i] + ring.var("t") * src[j]
    mat = quadratic_form_matrix(q, Y)
    keep = PolyRing([n for n in ring.names if n not in Y])
    ents = [x.convert(keep) for r in mat for x in r]
    return ExactMatrix(3, 3, ents, keep)


def pencil_poly(mu=None, chart: int = 1) -> MultiPoly:
    """p(s, t) = det of the conic-pencil matrix on the chart s_chart != 0.

    Chart 1 uses the pencil (F2, F3), chart 2 uses (F3, F1), chart 3 (F1, F2).
    """
    if chart == 1:
        return det_bareiss(printed_pencil_matrix(mu))
    i, j = {2: (2, 0), 3: (0, 1)}[chart]
    return det_bareiss(pencil_matrix(i, j, mu))


def pencil_coefficients(p: MultiPoly) -> tuple:
    """(a, b, c, d) with p = a s^3 + b s^2 t + c s t^2 + d t^3."""
    ring = PolyRing([n for n in p.ring.names if n not in PENCIL_VARS])
    out = []
    for k in (3, 2, 1, 0):
        cs = p.coeffs_in("s").get(k, p.ring.zero)
        ct = cs.coeffs_in("t").get(3 - k, p.ring.zero)
        out.append(ct.convert(ring))
    return tuple(out)


PRINTED_PENCIL_COEFFS = (
    "1/4*mu^2*(s3^3 - s1^3)",
    "1/4*mu^3*s1^2*s3 - 3/4*mu^2*s2*s3^2 + s1^2*s3",
    "-1/4*mu^3*s1^2*s2 + 3/4*mu^2*s2^2*s3 - s1^2*s2",
    "1/4*mu^2*(s1^3 - s2^3)",
)

# the printed sextic, with the middle term written over s1^3 s3^3 (see FLAGGED_TERM)
PRINTED_SEXTIC_PARTS = {
    "s1^6 + s2^6 + s3^6": "-27*mu^8",
    "s1^3*s2^3 + s1^3*s3^3 + s2^3*s3^3": "mu^2*(-4*mu^9 + 6*mu^6 - 192*mu^3 - 256)",
    "s1*s2*s3*(s1^3 + s2^3 + s3^3)": "mu^4*(18*mu^6 + 144*mu^3 + 288)",
    "s1^2*s2^2*s3^2": "mu^12 - 92*mu^9 - 336*mu^6 + 256*mu^3 + 256",
}
# as printed, the middle bracket reads s1^3 s2^3 + s1 s3 + s2^3 s3^3
FLAGGED_TERM = ("s1*s3", "s1^3*s3^3")


def printed_sextic(mu=None, as_printed: bool = False) -> MultiPoly:
    parts = []
    for mono, coeff in PRINTED_SEXTIC_PARTS.items():
        if as_printed and FLAGGED_TERM[1] in mono:
            mono = mono.replace(FLAGGED_TERM[1], FLAGGED_TERM[0])
        parts.append(f"({coeff})*({mono})")
    return build(S, " + ".join(parts), {"mu": as_rational(mu)})


@dataclass
class BranchLocus:
    sextic: MultiPoly
    raw_discriminant: MultiPoly
    scale: int
    chart: int
    coefficients: tuple = field(default_factory=tuple)


def pp4_branch_locus(mu=None, chart: int = 1) -> BranchLocus:
    """Branch sextic from the discriminant of p(s, t) on the given chart.

    The discriminant is divided exactly by s_chart^6; the four coefficients
    of p carry a factor 1/4 each, so the quotient is the sextic over 256 and
    is rescaled by 256 to clear denominators.
    """
    p = pencil_poly(mu, chart)
    a, b, c, d = pencil_coefficients(p)
    disc = cubic_discriminant(a, b, c, d)
    ring = disc.ring
    sv = ring.var(S[chart - 1])
    try:
        q = disc.exquo(sv ** 6)
    except ExactDivisionFailed as exc:
        raise ExactDivisionFailed(f"discriminant not divisible by {S[chart - 1]}^6: {exc}") from None
    return BranchLocus(q * 256, disc, 256, chart, (a, b, c, d))


def cyclic_s(f: MultiPoly) -> MultiPoly:
    """s1 -> s2 -> s3 -> s1."""
    r = f.ring
    return f.substitute({"s1": r.var("s2"), "s2": r.var("s3"), "s3": r.var("s1")})


def sextic_parts(sextic: MultiPoly) -> dict:
    """Coefficient (a polynomial in mu) of each symmetric monomial group of the sextic."""
    ring = sextic.ring
    param_ring = PolyRing([n for n in ring.names if n not in S]) if ring.nvars > 3 else None
    out = {}
    for mono in PRINTED_SEXTIC_PARTS:
        probe = build(S, mono, {})
        lead = max(probe.terms, key=lambda e: e)
        exps = dict(zip(S, lead))
        c = sextic
        for v in S:
            c = c.coeffs_in(v).get(exps[v], ring.zero)
        out[mono] = c.convert(param_ring) if param_ring else c.constant_coeff()
    return out


def flagged_term_report(sextic: MultiPoly) -> dict:
    """Coefficients of the computed sextic on s1 s3 (printed) and s1^3 s3^3 (expected)."""
    ring = sextic.ring

    def coeff(mono):
        e = build(S, mono, {})
        lead = next(iter(e.terms))
        c = sextic
        for v, k in zip(S, lead):
            c = c.coeffs_in(v).get(k, ring.zero)
        return c

    return {m: coeff(m) for m in FLAGGED_TERM}


def penegini_polizzi_roundtrip(sextic: MultiPoly) -> bool:
    """Rewrite the sextic in (X, Y, Z, a) via s = (X, Y, Z), mu = -a, divide by -27, map back.

    This only confirms that the coordinate dictionary is invertible on the
    computed sextic; the external equation itself is not reproduced here.
    """
    names = list(sextic.ring.names)
    big = PolyRing(names + ["X", "Y", "Z", "a", "c"])
    v = big.var
    f = sextic.convert(big)
    theirs = f.substitute({"s1": v("X"), "s2": v("Y"), "s3": v("Z"), "mu": -v("a")}) * Fraction(-1, 27)
    back = theirs.substitute({"X": v("s1"), "Y": v("s2"), "Z": v("s3"), "a": -v("mu"), "c": 1}) * -27
    return back == f


# ---------------------------------------------------------------- gamma

WEDGE_PAIRS = tuple(combinations(range(6), 2))


def _sym2_coords(F: MultiPoly) -> list:
    ring = F.ring
    out = []
    for mono in SYM2_BASIS:
        e = next(iter(ring(mono).terms))
        c = F
        for v, k in zip(Y, e[:3]):
            c = c.coeffs_in(v).get(k, ring.zero)
        out.append(c)
    return out


def wedge(F: MultiPoly, G: MultiPoly) -> list:
    a, b = _sym2_coords(F), _sym2_coords(G)
    return [a[i] * b[j] - a[j] * b[i] for i, j in WEDGE_PAIRS]


def wedge_label(k: int) -> str:
    i, j = WEDGE_PAIRS[k]
    return f"{SYM2_BASIS[i]}^{SYM2_BASIS[j]}"


def pp4_gamma(lam=None, mu=None) -> list:
    """The 15 Pluecker components: (F1 ^ F2) / s3 in the lex wedge basis."""
    eqs = pp4_equations(mu, lam)
    s3 = eqs[0].ring.var("s3")
    out = []
    for c in wedge(eqs[0], eqs[1]):
        out.append(c.exquo(s3))
    keep = PolyRing([n for n in eqs[0].ring.names if n not in Y])
    return [c.convert(keep) for c in out]


PRINTED_GAMMA = (
    "-lam*mu*s2", "lam*mu*s3", "lam^2*s3", "0", "-lam^2*s2",
    "-mu^2*s1", "-lam*mu*s1", "mu^2*s2", "0", "0",
    "-mu^2*s3", "lam*mu*s1", "-lam*mu*s3", "lam^2*s1", "-lam*mu*s2",
)
DICTIONARY_SLOTS = {"a": 0, "b": 1, "c": 2, "d": 3, "e": 5}
PRINTED_DICTIONARY = {"a": "-lam*mu", "b": "lam*mu", "c": "lam^2", "d": "0", "e": "-mu^2"}


def printed_gamma(lam=None, mu=None) -> list:
    return [build(S, g, _params(lam, mu)) for g in PRINTED_GAMMA]


def gamma_dictionary(gamma: list) -> dict:
    """Read (a, b, c, d, e) off the gamma components by stripping the s-variable."""
    out = {}
    for name, k in DICTIONARY_SLOTS.items():
        comp = gamma[k]
        ring = comp.ring
        coeff = ring.zero
        for v in S:
            part = comp.coeffs_in(v).get(1)
            if part is not None:
                coeff = part
                break
        out[name] = coeff.convert(PolyRing([n for n in ring.names if n not in S]))
    return out


__all__ = [
    "BranchLocus", "FLAGGED_TERM", "MINOR_DICTIONARY", "PRINTED_DICTIONARY", "PRINTED_GAMMA",
    "PRINTED_PENCIL_COEFFS", "PRINTED_SEXTIC_PARTS", "cyclic_s", "flagged_term_report",
    "gamma_dictionary", "pencil_coefficients", "pencil_matrix", "pencil_poly",
    "penegini_polizzi_roundtrip", "pp4_branch_locus", "pp4_equations", "pp4_equivariance",
    "pp4_family", "pp4_gamma", "pp4_matrix", "pp4_minors", "printed_gamma",
    "printed_pencil_matrix", "printed_sextic", "quadratic_form_matrix", "sextic_parts", "wedge",
    "wedge_label",
]
