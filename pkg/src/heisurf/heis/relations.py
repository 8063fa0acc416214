"""Group relation checks for the Schroedinger representation."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..exactmath.matrix import ExactMatrix, mul
from .group import HeisType


@dataclass
class RelationReport:
    heis_type: tuple
    passed: bool
    commutators: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)


def _scalar_str(c):
    return str(c) if not hasattr(c, "c") else repr(c)


def verify_group_relations(t: HeisType) -> RelationReport:
    """Commutators of translation/character generator pairs and generator orders.

    For every translation T_a and character M_b the matrix commutator must be
    zeta^<b,a> times the identity, and rho(g)^ord(g) must be the identity.
    """
    rep = RelationReport((t.d1, t.d2), True)
    inv = {}
    mats = {}
    for name, g in t.generators.items():
        mats[name] = t.matrix(g)
        inv[name] = t.matrix(t.inv(g))
        if not mul(mats[name], inv[name]).is_identity():
            rep.failures.append(f"{name} inverse")
    for tn in t.translations():
        for cn in t.characters():
            a, b = t.gen(tn).a, t.gen(cn).b
            comm = mul(mul(mats[tn], mats[cn]), mul(inv[tn], inv[cn]))
            expected = t.root(t.pairing(b, a))
            val = comm.scalar_value()
            rep.commutators[f"{tn},{cn}"] = val
            if val is None or val != t.field.convert(expected):
                rep.failures.append(f"commutator {tn},{cn}")
    # translations commute among themselves, as do characters
    for group in (t.translations(), t.characters()):
        for i, p in enumerate(group):
            for q in group[i + 1:]:
                if mul(mats[p], mats[q]) != mul(mats[q], mats[p]):
                    rep.failures.append(f"{p},{q} do not commute")
    for name, g in t.generators.items():
        k = t.order(g)
        pw = ExactMatrix.identity(t.delta, t.field)
        for _ in range(k):
            pw = mul(pw, mats[name])
        if not pw.is_identity():
            rep.failures.append(f"{name}^{k} is not the identity")
    rep.passed = not rep.failures
    return rep


def gamma_delta2(t: HeisType) -> ExactMatrix:
    """g1 g2 g1 g2 for type (1, 2) with g1 the sign change and g2 the swap."""
    g1, g2 = t.matrix(t.gen("C")), t.matrix(t.gen("T"))
    return mul(mul(g1, g2), mul(g1, g2))


def involution_matrix(t: HeisType) -> ExactMatrix:
    """The basis permutation e_h -> e_{-h}."""
    d, F = t.delta, t.field
    ent = [F.zero] * (d * d)
    for h in t.points:
        j = t.index[h]
        i = t.index[((-h[0]) % t.d1, (-h[1]) % t.d2)]
        ent[i * d + j] = F.one
    return ExactMatrix(d, d, ent, F)


def involution_normalizes(t: HeisType) -> bool:
    """iota g iota^-1 = g^-1 for every non-central generator."""
    iota = involution_matrix(t)
    for name, g in t.generators.items():
        if name == "Z":
            continue
        lhs = mul(mul(iota, t.matrix(g)), iota)
        if lhs != t.matrix(t.inv(g)):
            return False
    return True


def involution_bindings(t: HeisType, ring, y: str = "y", x: str = "x") -> dict:
    """Variable substitution for e_h -> e_{-h} on both x and y (a permutation)."""
    bind = {}
    for prefix in (x, y):
        names = t.var_names(prefix)
        if not all(n in ring.index for n in names):
            continue
        for h in t.points:
            src = names[t.index[h]]
            dst = names[t.index[((-h[0]) % t.d1, (-h[1]) % t.d2)]]
            bind[src] = ring.var(dst)
    return bind
