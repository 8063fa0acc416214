"""Finite Heisenberg groups and their Schroedinger representations.

For H = Z/d1 x Z/d2 (d1 | d2) and n = d2, an element is a triple (k, a, b)
standing for zeta^k T_a M_b, where on the basis e_h of V = C^H

    T_a e_h = e_{h-a},    M_b e_h = zeta^<b,h> e_h,
    <b,h> = (n/d1) b1 h1 + b2 h2  (mod n).

Hence M_b T_a = zeta^-<b,a> T_a M_b and the product of two triples is
(k + k' - <b,a'>, a + a', b + b').  Basis vectors are ordered
lexicographically in (h1, h2) and named x1..x_delta; the dual basis is
y1..y_delta.

Generator names: for d1 = 1 the translation T (a = 1) and the character C
(b = 1); otherwise T1, T2, C1, C2 for the two factors.  Z is the central
zeta.  For the printed delta = 2 and delta = 3 matrices, the correspondence
is g1 = C, g2 = T when delta = 2 and g1 = T, g2 = C when delta = 3
(see :func:`named_generators`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..errors import BoundExceeded
from ..exactmath.matrix import ExactMatrix
from ..exactmath.scalars import QQ, Cyclotomic, CyclotomicField

DEFAULT_BOUND = 12


def _field_for(n: int):
    return QQ if n <= 2 else CyclotomicField(n)


@dataclass(frozen=True)
class HeisElement:
    k: int
    a: tuple
    b: tuple


class HeisType:
    """Heis(Z/d1 x Z/d2) with its Schroedinger representation."""

    def __init__(self, d1: int, d2: int, bound: int = DEFAULT_BOUND):
        if d1 < 1 or d2 < 1 or d2 % d1:
            raise ValueError(f"need positive d1 | d2, got ({d1}, {d2})")
        if d1 * d2 > bound:
            raise BoundExceeded(f"delta = {d1 * d2} exceeds the bound {bound}")
        self.d1, self.d2 = d1, d2
        self.delta = d1 * d2
        self.n = d2
        self.field = _field_for(self.n)
        self.points = [(h1, h2) for h1 in range(d1) for h2 in range(d2)]
        self.index = {h: i for i, h in enumerate(self.points)}

    def __repr__(self):
        return f"HeisType({self.d1}, {self.d2})"

    def __eq__(self, other):
        return isinstance(other, HeisType) and (self.d1, self.d2) == (other.d1, other.d2)

    def __hash__(self):
        return hash((self.d1, self.d2))

    # -- scalars ------------------------------------------------------------

    def root(self, k: int):
        """zeta_n^k in the representation field."""
        n = self.n
        k %= n
        if n == 1:
            return 1
        if n == 2:
            return -1 if k else 1
        return Cyclotomic.zeta(n, k)

    def pairing(self, b, h) -> int:
        return ((self.n // self.d1) * b[0] * h[0] + b[1] * h[1]) % self.n

    # -- group law ----------------------------------------------------------

    def element(self, k=0, a=(0, 0), b=(0, 0)) -> HeisElement:
        a = (a[0] % self.d1, a[1] % self.d2)
        b = (b[0] % self.d1, b[1] % self.d2)
        return HeisElement(k % self.n, a, b)

    def identity(self) -> HeisElement:
        return self.element()

    def mul(self, g: HeisElement, h: HeisElement) -> HeisElement:
        k = g.k + h.k - self.pairing(g.b, h.a)
        return self.element(k, (g.a[0] + h.a[0], g.a[1] + h.a[1]), (g.b[0] + h.b[0], g.b[1] + h.b[1]))

    def inv(self, g: HeisElement) -> HeisElement:
        return self.element(-g.k - self.pairing(g.b, g.a), (-g.a[0], -g.a[1]), (-g.b[0], -g.b[1]))

    def power(self, g: HeisElement, e: int) -> HeisElement:
        if e < 0:
            g, e = self.inv(g), -e
        out = self.identity()
        for _ in range(e):
            out = self.mul(out, g)
        return out

    def word(self, *gs) -> HeisElement:
        out = self.identity()
        for g in gs:
            out = self.mul(out, self.gen(g) if isinstance(g, str) else g)
        return out

    def commutator(self, g, h) -> HeisElement:
        return self.word(g, h, self.inv(g), self.inv(h))

    def order(self, g: HeisElement) -> int:
        e, cur = 1, g
        while cur != self.identity():
            cur = self.mul(cur, g)
            e += 1
        return e

    @cached_property
    def generators(self) -> dict:
        if self.d1 == 1:
            gens = {"T": self.element(a=(0, 1)), "C": self.element(b=(0, 1))}
        else:
            gens = {"T1": self.element(a=(1, 0)), "T2": self.element(a=(0, 1)),
                    "C1": self.element(b=(1, 0)), "C2": self.element(b=(0, 1))}
        gens["Z"] = self.element(k=1)
        return gens

    def gen(self, name: str) -> HeisElement:
        try:
            return self.generators[name]
        except KeyError:
            raise KeyError(f"{self!r} has no generator {name!r}") from None

    def translations(self):
        return [n for n in self.generators if n.startswith("T")]

    def characters(self):
        return [n for n in self.generators if n.startswith("C")]

    def abelian_elements(self):
        """All T_a M_b (scalar part 0), i.e. lifts of the elements of H x H^*."""
        return [self.element(0, a, b) for a in self.points for b in self.points]

    # -- matrices -----------------------------------------------------------

    def matrix(self, g: HeisElement) -> ExactMatrix:
        d, F = self.delta, self.field
        ent = [F.zero] * (d * d)
        for h in self.points:
            col = self.index[h]
            row = self.index[((h[0] - g.a[0]) % self.d1, (h[1] - g.a[1]) % self.d2)]
            ent[row * d + col] = F.convert(self.root(g.k + self.pairing(g.b, h)))
        return ExactMatrix(d, d, ent, F)

    def dual_matrix(self, g: HeisElement) -> ExactMatrix:
        """Inverse transpose, i.e. the action on the dual basis."""
        return self.matrix(self.inv(g)).transpose()

    def var_names(self, prefix: str):
        return [f"{prefix}{i + 1}" for i in range(self.delta)]


def schrodinger_rep(t: HeisType) -> dict:
    """Generator name -> matrix on V."""
    return {name: t.matrix(g) for name, g in t.generators.items()}


def dual_rep(t: HeisType) -> dict:
    """Generator name -> matrix on the dual space."""
    return {name: t.dual_matrix(g) for name, g in t.generators.items()}


def named_generators(t: HeisType) -> dict:
    """The named generators g1, g2 of the printed delta = 2 and delta = 3 conventions."""
    if (t.d1, t.d2) == (1, 2):
        return {"g1": t.gen("C"), "g2": t.gen("T")}
    if (t.d1, t.d2) == (1, 3):
        return {"g1": t.gen("T"), "g2": t.gen("C")}
    raise KeyError(f"no printed generator convention for {t!r}")
