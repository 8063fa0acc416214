"""Buchberger's algorithm and projective emptiness certificates.

Pairs are selected by the normal strategy (smallest lcm degree, ties broken
lexicographically on the pair indices).  The product criterion and the chain
criterion discard useless pairs.  Everything is deterministic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import HeisurfError, ResourceLimit, UnknownVariable
from ..poly.ring import MultiPoly, PolyRing

DEFAULT_PAIR_LIMIT = 100_000


def pair_limit() -> int:
    env = os.environ.get("HEISURF_PAIR_LIMIT")
    return int(env) if env else DEFAULT_PAIR_LIMIT


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass
class IdealBasis:
    generators: list
    order: str = "grevlex"

    def __post_init__(self):
        gens = [g for g in self.generators if not g.is_zero()]
        rings = {g.ring for g in gens}
        if len(rings) > 1:
            raise HeisurfError("ideal generators live in different rings")
        self.generators = gens

    @property
    def ring(self) -> PolyRing | None:
        return self.generators[0].ring if self.generators else None


def normal_form(f: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
    """Full reduction of f modulo the basis (remainder of multivariate division)."""
    if f.is_zero() or not basis:
        return f
    ring = f.ring
    key = ring.key
    field_ = ring.field
    lead = [(g.leading_monomial(), g.leading_coeff(), list(g.terms.items())) for g in basis]
    p = dict(f.terms)
    r = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for glm, glc, gterms in lead:
            if _divides(glm, lm):
                d = tuple(x - y for x, y in zip(lm, glm))
                q = field_.div(c, glc)
                for e, gc in gterms:
                    m = tuple(x + y for x, y in zip(e, d))
                    v = p.get(m, 0) - q * gc
                    if v == 0:
                        p.pop(m, None)
                    else:
                        p[m] = v
                break
        else:
            r[lm] = c
            del p[lm]
    return MultiPoly(ring, r)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    ring = f.ring
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = _lcm(lf, lg)
    mf = ring.monomial(tuple(a - b for a, b in zip(l, lf)), ring.field.div(1, f.leading_coeff()))
    mg = ring.monomial(tuple(a - b for a, b in zip(l, lg)), ring.field.div(1, g.leading_coeff()))
    return mf * f - mg * g


class GroebnerBasis:
    """A reduced Groebner basis; construction re-checks the S-pair criterion."""

    def __init__(self, basis: Sequence[MultiPoly], order: str, check: bool = True):
        self.basis = list(basis)
        self.order = order
        if check:
            for i in range(len(self.basis)):
                for j in range(i + 1, len(self.basis)):
                    s = s_polynomial(self.basis[i], self.basis[j])
                    if not normal_form(s, self.basis).is_zero():
                        raise HeisurfError(f"S-pair ({i}, {j}) does not reduce to zero")

    @property
    def ring(self):
        return self.basis[0].ring if self.basis else None

    def reduce(self, f: MultiPoly) -> MultiPoly:
        return normal_form(f, self.basis)

    def contains(self, f: MultiPoly) -> bool:
        return self.reduce(f).is_zero()

    def leading_monomials(self):
        return [g.leading_monomial() for g in self.basis]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.basis))}])"


def groebner(ideal: IdealBasis | Sequence[MultiPoly], limit: int | None = None) -> GroebnerBasis:
    if not isinstance(ideal, IdealBasis):
        ideal = IdealBasis(list(ideal))
    limit = pair_limit() if limit is None else limit
    gens = ideal.generators
    if not gens:
        return GroebnerBasis([], ideal.order)
    ring = gens[0].ring
    if ring.order != ideal.order:
        ring = ring.with_order(ideal.order)
        gens = [g.convert(ring) for g in gens]

    G: list = []
    pairs: set = set()
    created = 0

    def add(h):
        nonlocal created
        G.append(h.monic())
        k = len(G) - 1
        for i in range(k):
            pairs.add((i, k))
            created += 1
        if created > limit:
            raise ResourceLimit(f"Buchberger pair queue exceeded {limit} pairs")

    for g in gens:
        h = normal_form(g, G)
        if not h.is_zero():
            add(h)

    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(_lcm(G[ij[0]].leading_monomial(),
                                                   G[ij[1]].leading_monomial())), ij))
        pairs.discard((i, j))
        li, lj = G[i].leading_monomial(), G[j].leading_monomial()
        if _coprime(li, lj):
            continue
        l = _lcm(li, lj)
        chain = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if not _divides(G[k].leading_monomial(), l):
                continue
            a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
            if a not in pairs and b not in pairs:
                chain = True
                break
        if chain:
            continue
        h = normal_form(s_polynomial(G[i], G[j]), G)
        if not h.is_zero():
            add(h)

    reduced = _reduce_basis(G)
    gb = GroebnerBasis(reduced, ideal.order)
    for g in gens:
        if not gb.contains(g):
            raise HeisurfError(f"generator {g} is not in the computed ideal")
    return gb


def _reduce_basis(G):
    # drop elements whose leading monomial is divisible by another one
    keep = []
    for i, g in enumerate(G):
        lm = g.leading_monomial()
        redundant = False
        for j, h in enumerate(G):
            if i == j:
                continue
            hm = h.leading_monomial()
            if _divides(hm, lm) and (hm != lm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        out.append(normal_form(g, others).monic())
    key = out[0].ring.key if out else None
    out.sort(key=lambda g: key(g.leading_monomial()))
    return out


@dataclass
class EmptinessCertificate:
    empty: bool
    exponents: dict = field(default_factory=dict)
    basis: GroebnerBasis | None = None

    def __bool__(self):
        return self.empty


def is_projectively_empty(ideal: IdealBasis | Sequence[MultiPoly], variables: Sequence[str],
                          limit: int | None = None) -> EmptinessCertificate:
    """Decide whether homogeneous generators have no common zero in projective space.

    The certificate holds, for each variable v, the least k with v^k in the ideal.
    """
    if not isinstance(ideal, IdealBasis):
        ideal = IdealBasis(list(ideal))
    variables = list(variables)
    src = ideal.ring
    if src is None:
        return EmptinessCertificate(False, {})
    for v in variables:
        src.var_index(v)
    ring = PolyRing(variables, src.field, ideal.order)
    gens = []
    for g in ideal.generators:
        extra = set(g.variables()) - set(variables)
        if extra:
            raise UnknownVariable(sorted(extra)[0])
        gens.append(g.convert(ring))
    gb = groebner(IdealBasis(gens, ideal.order), limit)
    lms = gb.leading_monomials()
    firsts = []
    for i in range(len(variables)):
        pure = [lm[i] for lm in lms if sum(lm) == lm[i]]
        if not pure:
            return EmptinessCertificate(False, {}, gb)
        firsts.append(min(pure))
    # standard monomials have degree <= sum(first - 1), so higher powers lie in I
    cap = sum(f - 1 for f in firsts) + 1
    exps = {}
    for i, v in enumerate(variables):
        k = firsts[i]
        while k <= cap:
            e = [0] * len(variables)
            e[i] = k
            if gb.contains(ring.monomial(e)):
                break
            k += 1
        exps[v] = k
    return EmptinessCertificate(True, exps, gb)
