"""The delta = d = 3 families: the Hesse pencil, its dual sextic and AC3.

Indices of y are taken modulo 3 with representatives 1, 2, 3.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from ..elim.groebner import EmptinessCertificate, groebner, is_projectively_empty
from ..elim.probe import DEFAULT_PRIME, compile_mod
from ..exactmath.matrix import ExactMatrix, rank
from ..heis.group import HeisType
from ..heis.modules import GradedModule, eigenspace_basis, eigenvalue
from ..heis.relations import involution_bindings
from ..poly.ring import MultiPoly, PolyRing
from .common import FamilyDescriptor, as_rational, build, characters_of, cyc

Y = ("y1", "y2", "y3")
X = ("x1", "x2", "x3")

HESSE_TEXT = "y1^3 + y2^3 + y3^3 + 6*m*y1*y2*y3"
HESSE3_TEXT = "y1^3 + y2^3 + y3^3 + lam*y1*y2*y3"
AC3_TEXT = "y1^2*y2 + y2^2*y3 + y3^2*y1"
AC3_MINUS_TEXT = "y1^2*y3 + y2^2*y1 + y3^2*y2"
PAIRING_TEXT = "y1*x1 + y2*x2 + y3*x3"
# the pair sum runs over unordered pairs i < j
DUAL_SEXTIC_TEXT = (
    "x1^6 + x2^6 + x3^6 + 2*(-16*m^3 - 1)*(x1^3*x2^3 + x1^3*x3^3 + x2^3*x3^3)"
    " - 24*m^2*x1*x2*x3*(x1^3 + x2^3 + x3^3) + 6*m*(-8*m^3 - 4)*x1^2*x2^2*x3^2"
)


def _m(m):
    return {"m": as_rational(m)}


def hesse_cubic(m=None) -> MultiPoly:
    """f_m = sum y_j^3 + 6 m y1 y2 y3."""
    return build(Y, HESSE_TEXT, _m(m))


def hesse_q(m=None) -> tuple:
    """q_j = y_j^2 + 2 m y_{j+1} y_{j-1}."""
    out = []
    for j in (1, 2, 3):
        out.append(build(Y, f"y{j}^2 + 2*m*y{cyc(j + 1)}*y{cyc(j - 1)}", _m(m)))
    return tuple(out)


def hesse_gradient_identity(m=None) -> bool:
    """3 q_j = df_m/dy_j for j = 1, 2, 3."""
    f = hesse_cubic(m)
    return all(f.diff(v) == q * 3 for v, q in zip(Y, hesse_q(m)))


def hesse_smoothness(m) -> EmptinessCertificate:
    """f_m is smooth iff its gradient ideal has no projective zero (numeric m)."""
    f = hesse_cubic(as_rational(m))
    return is_projectively_empty([f.diff(v) for v in Y], Y)


def is_singular_member(m) -> bool:
    """The closed-form criterion (2m)^3 = -1."""
    return (2 * as_rational(m)) ** 3 == -1


def hesse_dual_sextic(m=None) -> MultiPoly:
    return build(X, DUAL_SEXTIC_TEXT, _m(m))


def cyclic_x(f: MultiPoly) -> MultiPoly:
    r = f.ring
    return f.substitute({"x1": r.var("x2"), "x2": r.var("x3"), "x3": r.var("x1")})


def dual_pullback(m) -> tuple:
    """(B_m(grad f_m(y)), f_m) in the ring of y (numeric m)."""
    m = as_rational(m)
    f = hesse_cubic(m)
    grad = [f.diff(v) for v in Y]
    B = hesse_dual_sextic(m)
    ring = f.ring
    pulled = B.convert(PolyRing(list(X) + list(ring.names))).substitute(
        {x: g.convert(PolyRing(list(X) + list(ring.names))) for x, g in zip(X, grad)})
    return pulled.convert(ring), f


def dual_membership(m) -> bool:
    """B_m(grad f_m) reduces to 0 modulo a Groebner basis of (f_m)."""
    pulled, f = dual_pullback(m)
    return groebner([f]).reduce(pulled).is_zero()


@dataclass
class SampledDuality:
    points: list = field(default_factory=list)
    failures: int = 0
    prime: int = DEFAULT_PRIME
    seed: int = 0

    @property
    def ok(self) -> bool:
        return bool(self.points) and self.failures == 0


def _cubic_roots_mod(c3: int, c2: int, c1: int, c0: int, p: int) -> np.ndarray:
    z = np.arange(p, dtype=np.int64)
    v = (((c3 * z + c2) % p * z + c1) % p * z + c0) % p
    return np.nonzero(v == 0)[0]


def sampled_duality(samples: int = 100, p: int = DEFAULT_PRIME, seed=0) -> SampledDuality:
    """B_m(grad f_m(y)) = 0 at random GF(p) points of random members f_m = 0.

    Each sample draws m, y1, y2 and then picks a root y3 of f_m(y1, y2, y3)
    found by evaluating the cubic on all of GF(p).
    """
    f = hesse_cubic()  # ring y1 y2 y3 m
    B = hesse_dual_sextic()  # ring x1 x2 x3 m
    grad = [compile_mod(f.diff(v), p) for v in Y]
    Bc = compile_mod(B, p)
    out = SampledDuality(prime=p, seed=seed)
    i = 0
    while len(out.points) < samples:
        rng = random.Random(f"{seed}:{i}")
        i += 1
        m, y1, y2 = (rng.randrange(p) for _ in range(3))
        # f_m as a cubic in y3: y3^3 + 6 m y1 y2 y3 + (y1^3 + y2^3)
        roots = _cubic_roots_mod(1, 0, 6 * m * y1 * y2 % p, (y1 ** 3 + y2 ** 3) % p, p)
        if len(roots) == 0:
            continue
        y3 = int(roots[rng.randrange(len(roots))])
        pt = [y1, y2, y3, m]
        g = [h.eval(pt) for h in grad]
        if Bc.eval(g + [m]) != 0:
            out.failures += 1
        out.points.append((m, y1, y2, y3))
    return out


# ---------------------------------------------------------------- families

def hesse_lambda_dictionary() -> bool:
    """Sum y^3 + lam y1y2y3 at lam = 6m is f_m."""
    ring = PolyRing(list(Y) + ["lam", "m"])
    g = ring(HESSE3_TEXT).substitute({"lam": ring("6*m")})
    return g.convert(PolyRing(list(Y) + ["m"])) == hesse_cubic()


def hesse3_family(lam=None) -> FamilyDescriptor:
    t = HeisType(1, 3)
    lam = as_rational(lam)
    eqs = [build(Y + X, PAIRING_TEXT, {}), build(Y + X, HESSE3_TEXT, {"lam": lam})]
    return FamilyDescriptor("HESSE3", t, {"lam": lam}, eqs, characters=characters_of(t, eqs))


def ac3_cubic() -> MultiPoly:
    return build(Y, AC3_TEXT, {})


def ac3_family() -> FamilyDescriptor:
    t = HeisType(1, 3)
    eqs = [build(Y + X, PAIRING_TEXT, {}), build(Y + X, AC3_TEXT, {})]
    return FamilyDescriptor("AC3", t, {}, eqs, characters=characters_of(t, eqs))


def ac3_smoothness() -> EmptinessCertificate:
    f = ac3_cubic()
    return is_projectively_empty([f.diff(v) for v in Y], Y)


# ---------------------------------------------------------------- delta = 3 cubics

DELTA3_CUBICS = (
    ("y1^3 + y2^3 + y3^3", "1"),
    ("y1*y2*y3", "1"),
    (AC3_TEXT, "eps^2"),
    (AC3_MINUS_TEXT, "eps"),
)


def delta3_invariant_cubics():
    """The T-invariant subspace of Sym^3(V^*) and the C-eigenvalue of each named cubic.

    Returns (echelon basis of the subspace, named cubics, their C-eigenvalues).
    """
    t = HeisType(1, 3)
    mod = GradedModule(t, 3, 0)
    basis = eigenspace_basis(t, mod, {"T": 1})
    named = [build(Y, txt, {}) for txt, _ in DELTA3_CUBICS]
    eig = [eigenvalue(t, f, "C") for f in named]
    return basis, named, eig


def expected_delta3_eigenvalues() -> list:
    t = HeisType(1, 3)
    eps = t.root(1)
    return [t.field.one, t.field.one, eps ** 2, eps]


def span_equal(a, b, module: GradedModule) -> bool:
    """Whether two lists of polynomials span the same subspace of the module."""
    F = module.ring.field
    va = [module.vector(f) for f in a]
    vb = [module.vector(f) for f in b]
    n = module.dim

    def rk(vs):
        if not vs:
            return 0
        return rank(ExactMatrix(len(vs), n, [x for v in vs for x in v], F))

    r = rk(va)
    return r == rk(vb) == rk(va + vb)


def pairing_component():
    """Trivial-character eigenspace of V^* (x) V for type (1, 3)."""
    t = HeisType(1, 3)
    mod = GradedModule(t, 1, 1)
    chars = {"T": 1, "C": 1}
    return eigenspace_basis(t, mod, chars), mod


def iota_swaps_cubics() -> bool:
    """The involution e_h -> e_{-h} exchanges sum y_i^2 y_{i+1} and sum y_i^2 y_{i-1}."""
    t = HeisType(1, 3)
    a, b = build(Y, AC3_TEXT, {}), build(Y, AC3_MINUS_TEXT, {})
    bind = involution_bindings(t, a.ring)
    return a.substitute(bind) == b and b.substitute(bind) == a


def is_eigen_family(fam: FamilyDescriptor) -> bool:
    """Every equation has an eigenvalue for every non-central generator."""
    return all(v is not None for ch in fam.characters for v in ch.values())


__all__ = [
    "AC3_TEXT", "DELTA3_CUBICS", "DUAL_SEXTIC_TEXT", "SampledDuality", "ac3_cubic", "ac3_family",
    "ac3_smoothness", "cyclic_x", "delta3_invariant_cubics", "dual_membership", "dual_pullback",
    "expected_delta3_eigenvalues", "hesse3_family", "hesse_cubic", "hesse_dual_sextic",
    "hesse_gradient_identity", "hesse_lambda_dictionary", "hesse_q", "hesse_smoothness",
    "iota_swaps_cubics", "is_eigen_family", "is_singular_member", "pairing_component",
    "sampled_duality", "span_equal",
]
