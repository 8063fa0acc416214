"""Numerical invariants of the surfaces S' and S = S'/G.

Chern data of E' = V^* (x) O(D) come from c(E') = (1 + D)^delta with
D^2 = 2 delta, so c1(E')^2 = delta^2 D^2 and c2(E') = C(delta, 2) D^2.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

from ..errors import UnknownFamily


@dataclass(frozen=True)
class NumericInvariants:
    family: str
    d: int
    delta: int
    K2_S: int
    K2_Sprime: int
    chi: int
    chi_Sprime: int
    p_g: int
    q: int
    c2_F: int | None = None

    def as_dict(self) -> dict:
        return asdict(self)

    def consistent(self) -> bool:
        return self.K2_Sprime == self.delta ** 2 * self.K2_S and self.chi_Sprime == self.delta ** 2 * self.chi


# name -> (d, delta, p_g = q)
FAMILIES = {
    "CHPP": (3, 2, 2),
    "AC3": (3, 3, 2),
    "HESSE3": (3, 3, 3),
    "PP4": (4, 3, 2),
    "QUARTIC4": (4, 4, 3),
}


def chern_e_prime(delta: int) -> tuple:
    """(c1(E')^2, c2(E')) as intersection numbers on A'."""
    d2 = 2 * delta
    return delta ** 2 * d2, comb(delta, 2) * d2


def k2_triple_cover(delta: int) -> int:
    """K^2 of S' in P(E') for a triple cover: 2 c1^2 - 3 c2 = delta^2 (delta + 3)."""
    c1sq, c2 = chern_e_prime(delta)
    return 2 * c1sq - 3 * c2


def k2_quadric_pencil(delta: int) -> int:
    """S' = 2H . 2H . (H + D) in P^3 x A' with K_{S'} = (H + D)|S'.

    K^2 = 4 H^2 (H + D)^3 and only H^3 D^2 = D^2 survives, so K^2 = 12 D^2.
    """
    return 12 * 2 * delta


def c2_of_f(delta: int, k2_s: int) -> int:
    """c2(F) = delta^2 K_S^2 - 2 c1(E')^2 + 4 c2(E') for the rank two bundle of a quadruple cover."""
    c1sq, c2 = chern_e_prime(delta)
    return delta ** 2 * k2_s - 2 * c1sq + 4 * c2


def numeric_invariants(family: str) -> NumericInvariants:
    key = family.upper()
    if key not in FAMILIES:
        raise UnknownFamily(family)
    d, delta, pg = FAMILIES[key]
    g = delta ** 2
    c2f = None
    if d == 3:
        k2p = k2_triple_cover(delta)
    elif key == "PP4":
        k2p = g * 6
        c2f = c2_of_f(delta, 6)
    else:
        k2p = k2_quadric_pencil(delta)
        c2f = c2_of_f(delta, 6)
    if k2p % g:
        raise ValueError(f"K^2 of S' is not divisible by |G| for {key}")
    return NumericInvariants(key, d, delta, k2p // g, k2p, 1, g, pg, pg, c2f)


__all__ = ["FAMILIES", "NumericInvariants", "c2_of_f", "chern_e_prime", "k2_quadric_pencil",
           "k2_triple_cover", "numeric_invariants"]
