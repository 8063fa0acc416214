"""The d = delta = 4 family: a Heisenberg-invariant pencil of quadrics in P^3.

C = {Q1 = Q2 = 0} with Q1 = y1^2 + y3^2 + 2 lam y2y4 and Q2 = y2^2 + y4^2 + 2 lam y1y3,
and S' is cut out in P(V) x A' by Q1, Q2 and sum y_j x_j.  This module also
holds the rational map beta and the Jacobian rank probe for the octic system.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path

from ..elim.groebner import EmptinessCertificate, is_projectively_empty
from ..elim.idealfile import read_ideal_file
from ..elim.probe import DEFAULT_PRIME, ProbeResult, compile_mod, probe_rank
from ..errors import DegreeMismatch, FileError
from ..exactmath.matrix import ExactMatrix, minors
from ..heis.group import HeisType
from ..heis.modules import GradedModule, act, action_matrix_on_span, eigenspace_basis, eigenvalue
from ..poly.parse import serialize
from ..poly.ring import MultiPoly, PolyRing, jacobian
from .common import FamilyDescriptor, as_rational, build

Y = ("y1", "y2", "y3", "y4")
X = ("x1", "x2", "x3", "x4")
C = ("c0", "c1", "c2", "c3")
OCTIC_VARS = C + X

Q_TEXT = ("y1^2 + y3^2 + 2*lam*y2*y4", "y2^2 + y4^2 + 2*lam*y1*y3")
PAIRING_TEXT = "y1*x1 + y2*x2 + y3*x3 + y4*x4"
BETA0_TEXT = ("y1^2*y3", "-y2^2*y4", "y1*y3^2", "-y2*y4^2")
BETA1_TEXT = ("-y2*y3*y4", "y1*y3*y4", "-y1*y2*y4", "y1*y2*y3")
CPRIME_TEXT = "(y1^2 + y3^2)*y1*y3 - (y2^2 + y4^2)*y2*y4"
DOT_BETA_TEXT = "y1^3*y3 - y2^3*y4 + y1*y3^3 - y2*y4^3"


def _lam(lam):
    return {"lam": as_rational(lam)}


def quartic_q(lam=None) -> tuple:
    return tuple(build(Y, t, _lam(lam)) for t in Q_TEXT)


def quartic4_family(lam=None) -> FamilyDescriptor:
    t = HeisType(1, 4)
    lam = as_rational(lam)
    eqs = [build(Y + X, PAIRING_TEXT, {})] + [build(Y + X, q, _lam(lam)) for q in Q_TEXT]
    chars = []
    for f in eqs:
        chars.append({g: eigenvalue(t, f, g) for g in ("T", "C")})
    return FamilyDescriptor("QUARTIC4", t, {"lam": lam}, eqs, characters=chars)


def pencil_character(t: HeisType) -> dict:
    """T^2 -> 1, C -> 1: the character of y1^2 + y3^2 and y2 y4."""
    return {t.power(t.gen("T"), 2): 1, "C": 1}


def quartic4_eigenspace():
    """The Sym^2(V^*) eigenspace for T^2 -> 1, C -> 1 and the module it lives in."""
    t = HeisType(1, 4)
    mod = GradedModule(t, 2, 0)
    return eigenspace_basis(t, mod, pencil_character(t)), mod


def pencil_is_stable(lam=None) -> bool:
    """span(Q1, Q2) is carried to itself by both generators."""
    t = HeisType(1, 4)
    qs = list(quartic_q(lam))
    return all(action_matrix_on_span(t, g, qs) is not None for g in ("T", "C"))


def translation_swaps_pencil(lam=None) -> bool:
    """T carries Q1 to Q2 (and back)."""
    t = HeisType(1, 4)
    q1, q2 = quartic_q(lam)
    l1, l2 = (act(t, t.identity(), q) for q in (q1, q2))
    return act(t, "T", q1) == l2 and act(t, "T", q2) == l1


def curve_singular_ideal(lam) -> list:
    """Q1, Q2 and the 2x2 minors of their Jacobian (numeric lam)."""
    qs = list(quartic_q(as_rational(lam)))
    rows = jacobian(qs, Y)
    jac = ExactMatrix(2, 4, [e for r in rows for e in r], qs[0].ring)
    return qs + [m for m in minors(jac, 2) if not m.is_zero()]


def curve_smoothness(lam) -> EmptinessCertificate:
    """C is smooth iff Q1, Q2 and the Jacobian minors have no common projective zero."""
    return is_projectively_empty(curve_singular_ideal(lam), Y)


# ---------------------------------------------------------------- beta

@dataclass
class BetaMap:
    beta0: list
    beta1: list
    beta_tilde: list
    ring: PolyRing

    def beta(self, lam=None) -> list:
        if lam is None:
            lam_v = self.ring.var("lam")
            return [a + lam_v * b for a, b in zip(self.beta0, self.beta1)]
        return [a + b * as_rational(lam) for a, b in zip(self.beta0, self.beta1)]


def beta_map() -> BetaMap:
    ring = PolyRing(list(Y) + ["lam"])
    b0 = [ring(t) for t in BETA0_TEXT]
    b1 = [ring(t) for t in BETA1_TEXT]
    y2y4, s13 = ring("2*y2*y4"), ring("y1^2 + y3^2")
    tilde = [y2y4 * a - s13 * b for a, b in zip(b0, b1)]
    return BetaMap(b0, b1, tilde, ring)


def cprime_quartic(ring: PolyRing | None = None) -> MultiPoly:
    ring = ring or PolyRing(list(Y))
    return ring(CPRIME_TEXT)


@dataclass
class BetaIdentities:
    lam_part: MultiPoly
    dot_free: MultiPoly
    matches_printed: bool
    matches_cprime: bool
    identity_ii: bool

    @property
    def ok(self) -> bool:
        return self.lam_part.is_zero() and self.matches_printed and self.matches_cprime and self.identity_ii


def beta_identities() -> BetaIdentities:
    """(i) y . beta(y, lam) is lam-free and equals the C' quartic; (ii) 2y2y4 beta - beta~ = Q1 beta1."""
    bm = beta_map()
    ring = bm.ring
    ys = [ring.var(v) for v in Y]
    dot = sum((y * b for y, b in zip(ys, bm.beta(None))), ring.zero)
    parts = dot.coeffs_in("lam")
    lam_part = dot - parts.get(0, ring.zero)
    free = parts.get(0, ring.zero)
    q1 = ring(Q_TEXT[0])
    two = ring("2*y2*y4")
    lhs = [two * b - bt for b, bt in zip(bm.beta(None), bm.beta_tilde)]
    rhs = [q1 * b for b in bm.beta1]
    return BetaIdentities(lam_part, free, free == ring(DOT_BETA_TEXT),
                          free == cprime_quartic(ring), lhs == rhs)


# ---------------------------------------------------------------- rank probe

@dataclass
class Star3Report:
    probe: ProbeResult
    octic: str
    prime: int
    samples: int
    seed: object
    claim_verified: bool = field(init=False)

    def __post_init__(self):
        self.claim_verified = self.probe.max_rank == 3


def load_octic(path) -> MultiPoly:
    """Read F(c, x) from a file with 'vars: c0 c1 c2 c3 x1 x2 x3 x4' and one polynomial."""
    ring, polys = read_ideal_file(path)
    if tuple(ring.names) != OCTIC_VARS:
        raise FileError(f"{path}: expected variables {' '.join(OCTIC_VARS)}, got {' '.join(ring.names)}")
    if len(polys) != 1:
        raise FileError(f"{path}: expected exactly one polynomial, got {len(polys)}")
    F = polys[0]
    weights = [0] * 4 + [1] * 4
    homog, deg = F.is_homogeneous(weights)
    if F.is_zero() or not homog or deg != 8:
        raise DegreeMismatch(f"{path}: F must be homogeneous of degree 8 in x (got {deg if homog else 'mixed'})")
    return F


class _Star3Jacobian:
    """Jacobian of (F, p(grad F), F(c, beta~(grad F))) w.r.t. x, evaluated mod p by the chain rule."""

    def __init__(self, F: MultiPoly, p: int):
        self.p = p
        grad = [F.diff(v) for v in X]
        self.grad = [compile_mod(g, p) for g in grad]
        self.hess = [[compile_mod(g.diff(v), p) for v in X] for g in grad]
        yring = PolyRing(list(Y))
        cp = cprime_quartic(yring)
        self.dp = [compile_mod(cp.diff(v), p) for v in Y]
        bt = [b.convert(yring) for b in beta_map().beta_tilde]
        self.bt = [compile_mod(b, p) for b in bt]
        self.jbt = [[compile_mod(b.diff(v), p) for v in Y] for b in bt]

    def __call__(self, point):
        p = self.p
        c = point[:4]
        g = [h.eval(point) for h in self.grad]
        H = [[h.eval(point) for h in row] for row in self.hess]
        dp = [h.eval(g) for h in self.dp]
        b = [h.eval(g) for h in self.bt]
        Jb = [[h.eval(g) for h in row] for row in self.jbt]
        gF_at_b = [h.eval(c + b) for h in self.grad]
        # d/dx F(c, beta~(g(x))) = gradF(c, beta~) . J_beta~(g) . H
        u = [sum(gF_at_b[i] * Jb[i][k] for i in range(4)) % p for k in range(4)]
        row2 = [sum(dp[k] * H[k][j] for k in range(4)) % p for j in range(4)]
        row3 = [sum(u[k] * H[k][j] for k in range(4)) % p for j in range(4)]
        return [g, row2, row3]


def star3_rank_probe(octic_file, p: int = DEFAULT_PRIME, samples: int = 20, seed=0) -> Star3Report:
    """Generic Jacobian rank of the octic triple at seeded random points of GF(p)^8."""
    F = load_octic(octic_file)
    jac = _Star3Jacobian(F, p)
    res = probe_rank(jac, OCTIC_VARS, p, samples, seed, max_rank=3)
    return Star3Report(res, str(Path(octic_file)), p, samples, seed)


def star3_rank_at(F: MultiPoly, point, p: int = DEFAULT_PRIME) -> list:
    """The 3x4 Jacobian at one point (c0..c3, x1..x4), for testing the chain rule."""
    return _Star3Jacobian(F, p)(list(point))


def synthetic_octic(seed=0) -> MultiPoly:
    """A dense octic in x whose coefficients are random linear forms in c."""
    ring = PolyRing(list(OCTIC_VARS))
    rng = random.Random(f"octic:{seed}")
    terms = {}
    for a in range(9):
        for b in range(9 - a):
            for cc in range(9 - a - b):
                d = 8 - a - b - cc
                for i in range(4):
                    coeff = rng.randint(-9, 9)
                    if coeff:
                        e = [0] * 8
                        e[i] = 1
                        e[4:] = [a, b, cc, d]
                        terms[tuple(e)] = coeff
    return MultiPoly(ring, terms)


def octic_file_text(F: MultiPoly) -> str:
    return "vars: " + " ".join(OCTIC_VARS) + "\n" + serialize(F) + "\n"


__all__ = [
    "BetaIdentities", "BetaMap", "OCTIC_VARS", "Star3Report", "beta_identities", "beta_map",
    "cprime_quartic", "curve_singular_ideal", "curve_smoothness", "load_octic", "octic_file_text",
    "pencil_character", "pencil_is_stable", "quartic4_eigenspace", "quartic4_family", "quartic_q",
    "star3_rank_at", "star3_rank_probe", "synthetic_octic", "translation_swaps_pencil",
]
