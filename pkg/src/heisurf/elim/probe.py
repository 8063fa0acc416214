"""Randomized Jacobian rank probes over GF(p) (Schwartz-Zippel style).

Sample i draws its point from ``random.Random(f"{seed}:{i}")``, so the
sequence of points does not depend on how many samples are requested and
the observed maximum rank is monotone in the sample count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from ..errors import BadPrime, RingMismatch
from ..exactmath.scalars import PrimeField, PrimeFieldElement, is_prime
from ..kernels import ModPoly, rank_mod
from ..poly.ring import MultiPoly

DEFAULT_PRIME = 10007


@dataclass
class ProbeResult:
    max_rank: int
    witness: dict
    samples_used: int
    ranks: list = field(default_factory=list)
    prime: int = DEFAULT_PRIME
    seed: int = 0


def _check_prime(p: int):
    if p < 2 or p >= 2**31 or not is_prime(p):
        raise BadPrime(f"{p} is not a usable prime (need a prime below 2**31)")


def _coeff_mod(c, p: int) -> int:
    if isinstance(c, PrimeFieldElement):
        if c.p != p:
            raise RingMismatch(f"GF({c.p}) coefficient in a GF({p}) probe")
        return c.value
    if isinstance(c, int):
        return c % p
    if isinstance(c, Fraction):
        if c.denominator % p == 0:
            raise BadPrime(f"{p} divides the denominator of coefficient {c}")
        return c.numerator * pow(c.denominator, -1, p) % p
    raise RingMismatch(f"coefficient {c!r} cannot be reduced mod {p}")


def compile_mod(f: MultiPoly, p: int) -> ModPoly:
    """Reduce f mod p into a kernel evaluator over all ring variables."""
    exps = list(f.terms)
    coeffs = [_coeff_mod(f.terms[e], p) for e in exps]
    if not exps:
        exps = [(0,) * f.ring.nvars]
        coeffs = [0]
    return ModPoly(exps, coeffs, p)


def probe_rank(jacobian_at: Callable[[list], list], names: Sequence[str], p: int,
               samples: int, seed, max_rank: int | None = None) -> ProbeResult:
    """Evaluate a Jacobian callable at seeded random points and keep the best rank."""
    _check_prime(p)
    if samples < 1:
        raise ValueError("need at least one sample")
    best, witness, ranks = -1, {}, []
    for i in range(samples):
        rng = random.Random(f"{seed}:{i}")
        point = [rng.randrange(p) for _ in names]
        r = rank_mod(jacobian_at(point), p)
        ranks.append(r)
        if r > best:
            best, witness = r, dict(zip(names, point))
        if max_rank is not None and best >= max_rank:
            break
    return ProbeResult(best, witness, len(ranks), ranks, p, seed)


def _compiled_jacobian(system: Sequence[MultiPoly], wrt: Sequence[str], p: int):
    ring = system[0].ring
    for f in system:
        if f.ring != ring:
            raise RingMismatch("probe system mixes rings")
    for v in wrt:
        ring.var_index(v)
    table = [[compile_mod(f.diff(v), p) for v in wrt] for f in system]
    return ring, table


def random_rank_probe(system: Sequence[MultiPoly], wrt: Sequence[str], p: int = DEFAULT_PRIME,
                      samples: int = 20, seed=0) -> ProbeResult:
    """Maximum Jacobian rank of ``system`` w.r.t. ``wrt`` over random GF(p) points.

    Every ring variable is randomized; the search stops early once the rank
    reaches min(len(system), len(wrt)).
    """
    _check_prime(p)
    if not system:
        return ProbeResult(0, {}, 0, [], p, seed)
    ring, table = _compiled_jacobian(system, wrt, p)

    def jac(point):
        return [[m.eval(point) for m in row] for row in table]

    return probe_rank(jac, ring.names, p, samples, seed, min(len(system), len(wrt)))


def jacobian_rank_at(system: Sequence[MultiPoly], wrt: Sequence[str], point: Mapping,
                     p: int = DEFAULT_PRIME) -> int:
    """Jacobian rank at one explicit point (unbound variables are taken as 0)."""
    _check_prime(p)
    if not system:
        return 0
    ring, table = _compiled_jacobian(system, wrt, p)
    field = PrimeField(p)
    pt = [field.convert(point.get(n, 0)).value for n in ring.names]
    return rank_mod([[m.eval(pt) for m in row] for row in table], p)
