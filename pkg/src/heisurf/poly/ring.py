"""Sparse multivariate polynomials with named variables.

A polynomial is a dict from exponent tuples to nonzero coefficients, attached
to a :class:`PolyRing` that fixes the variable names, the coefficient field
and the monomial order.  Polynomials are treated as immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import ExactDivisionFailed, RingMismatch, UnboundVariable, UnknownVariable
from ..exactmath.scalars import QQ


def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e):
    return e


ORDERS = {"grevlex": grevlex_key, "lex": lex_key}


class PolyRing:
    """Variable table, coefficient field and monomial order."""

    def __init__(self, names, field=QQ, order: str = "grevlex"):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        self.names = names
        self.nvars = len(names)
        self.field = field
        self.order = order
        self.key = ORDERS[order]
        self.index = {n: i for i, n in enumerate(names)}
        self._zero_exp = (0,) * self.nvars
        self._is_qq = field == QQ

    def __repr__(self):
        return f"PolyRing({' '.join(self.names)!r}, {self.field!r}, {self.order!r})"

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.field == other.field and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    # -- construction -----------------------------------------------------

    @property
    def zero(self):
        return MultiPoly(self, {})

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.convert(c)
        return MultiPoly(self, {self._zero_exp: c} if c != 0 else {})

    def var(self, name: str) -> "MultiPoly":
        i = self.var_index(name)
        e = [0] * self.nvars
        e[i] = 1
        return MultiPoly(self, {tuple(e): self.field.convert(1)})

    def gens(self):
        return [self.var(n) for n in self.names]

    def var_index(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownVariable(name) from None

    def monomial(self, exps, coeff=1):
        c = self.field.convert(coeff)
        return MultiPoly(self, {tuple(exps): c} if c != 0 else {})

    def from_dict(self, terms: Mapping):
        conv = self.field.convert
        return MultiPoly(self, {tuple(e): conv(c) for e, c in terms.items()})

    def __call__(self, obj):
        if isinstance(obj, MultiPoly):
            if obj.ring != self:
                raise RingMismatch(f"{obj.ring!r} is not {self!r}")
            return obj
        if isinstance(obj, str):
            from .parse import parse_poly
            return parse_poly(obj, self)
        return self.constant(obj)

    def with_order(self, order: str) -> "PolyRing":
        return PolyRing(self.names, self.field, order)

    def with_field(self, field) -> "PolyRing":
        return PolyRing(self.names, field, self.order)

    # -- domain protocol used by ExactMatrix --------------------------------

    def convert(self, x):
        return self(x)

    def is_zero(self, a):
        return a.is_zero() if isinstance(a, MultiPoly) else a == 0

    def exquo(self, a, b):
        return self(a).exquo(self(b))

    def div(self, a, b):
        return self.exquo(a, b)


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class MultiPoly:
    __slots__ = ("ring", "terms", "_lm", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        if ring._is_qq:
            self.terms = {e: _norm(c) for e, c in terms.items() if c != 0}
        else:
            self.terms = {e: c for e, c in terms.items() if c != 0}
        self._lm = None
        self._hash = None

    # -- coercion -----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        try:
            return self.ring.constant(other)
        except RingMismatch:
            raise
        except Exception:
            return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        t = dict(self.terms)
        for e, c in o.terms.items():
            s = t.get(e)
            t[e] = c if s is None else s + c
        return MultiPoly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        t = dict(self.terms)
        for e, c in o.terms.items():
            s = t.get(e)
            t[e] = -c if s is None else s - c
        return MultiPoly(self.ring, t)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                c = self.ring.field.convert(other)
            except RingMismatch:
                raise
            except Exception:
                return NotImplemented
            return MultiPoly(self.ring, {e: a * c for e, a in self.terms.items()})
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
        if len(self.terms) > len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        t = {}
        get = t.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                s = get(e)
                t[e] = ca * cb if s is None else s + ca * cb
        return MultiPoly(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return self.exquo(other)
        inv = self.ring.field.div(1, other)
        return self * inv

    def exquo(self, g: "MultiPoly") -> "MultiPoly":
        """Exact quotient self / g; raises ExactDivisionFailed if g does not divide."""
        g = self._lift(g)
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        key = self.ring.key
        field = self.ring.field
        glm = g.leading_monomial()
        glc = g.terms[glm]
        gterms = list(g.terms.items())
        rem = dict(self.terms)
        q = {}
        while rem:
            lm = max(rem, key=key)
            lc = rem[lm]
            d = tuple(a - b for a, b in zip(lm, glm))
            if any(x < 0 for x in d):
                raise ExactDivisionFailed("divisor does not divide the dividend")
            c = field.div(lc, glc)
            q[d] = c
            for e, gc in gterms:
                m = tuple(x + y for x, y in zip(e, d))
                v = rem.get(m, 0) - c * gc
                if v == 0:
                    rem.pop(m, None)
                else:
                    rem[m] = v
        return MultiPoly(self.ring, q)

    def divides(self, f: "MultiPoly") -> bool:
        try:
            f.exquo(self)
            return True
        except ExactDivisionFailed:
            return False

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            o = self.ring.constant(other)
        except Exception:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_coeff())
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.convert(0))

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.convert(0))

    def leading_monomial(self):
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.key)
        return self._lm

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, var: str | None = None) -> int:
        if var is None:
            return self.total_degree()
        i = self.ring.var_index(var)
        return max((e[i] for e in self.terms), default=-1)

    def variables(self) -> list:
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return [n for n, u in zip(self.ring.names, used) if u]

    def __len__(self):
        return len(self.terms)

    def monic(self):
        lc = self.leading_coeff()
        inv = self.ring.field.div(1, lc)
        return MultiPoly(self.ring, {e: c * inv for e, c in self.terms.items()})

    # -- calculus and substitution -------------------------------------------

    def diff(self, var: str) -> "MultiPoly":
        i = self.ring.var_index(var)
        t = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                t[ne] = c * k
        return MultiPoly(self.ring, t)

    partial_derivative = diff

    def substitute(self, bindings: Mapping) -> "MultiPoly":
        """Simultaneous substitution var -> polynomial (or scalar), fully expanded."""
        ring = self.ring
        idx = {}
        for name, val in bindings.items():
            i = ring.var_index(name)
            idx[i] = val if isinstance(val, MultiPoly) else ring.constant(val)
            if idx[i].ring != ring:
                raise RingMismatch(f"binding for {name} lives in {idx[i].ring!r}")
        if not idx:
            return self
        powers = {i: [ring.one] for i in idx}

        def power(i, k):
            lst = powers[i]
            while len(lst) <= k:
                lst.append(lst[-1] * idx[i])
            return lst[k]

        # group terms by the exponents of the substituted variables
        groups: dict = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            rest = tuple(0 if i in idx else x for i, x in enumerate(e))
            groups.setdefault(key, {})[rest] = c
        out = ring.zero
        order = list(idx)
        for key, rest in groups.items():
            part = MultiPoly(ring, rest)
            for i, k in zip(order, key):
                if k:
                    part = part * power(i, k)
            out = out + part
        return out

    def evaluate(self, point: Mapping):
        """Value at a point binding (at least) every variable that occurs in f."""
        field = self.ring.field
        vals = {}
        for name in self.variables():
            if name not in point:
                raise UnboundVariable(name)
            vals[self.ring.index[name]] = field.convert(point[name])
        for name in point:
            self.ring.var_index(name)
        total = field.convert(0)
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v = v * vals[i] ** k
            total = total + v
        return total

    def is_homogeneous(self, weights=None):
        """(True, degree) if every term has the same weighted degree, else (False, None).

        ``weights`` is a mapping name -> int (missing names weigh 0) or a
        sequence aligned with the ring variables; default is all ones.
        """
        w = _weights(self.ring, weights)
        degs = {sum(a * b for a, b in zip(e, w)) for e in self.terms}
        if not degs:
            return True, None
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    def coeffs_in(self, var: str) -> dict:
        """Map k -> coefficient of var^k (a polynomial free of var)."""
        i = self.ring.var_index(var)
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            out.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: MultiPoly(self.ring, t) for k, t in out.items()}

    def convert(self, ring: PolyRing) -> "MultiPoly":
        """Explicit change of ring, matching variables by name."""
        if ring == self.ring:
            return self
        pos = []
        for i, name in enumerate(self.ring.names):
            pos.append(ring.index.get(name))
        t = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    j = pos[i]
                    if j is None:
                        raise UnknownVariable(self.ring.names[i])
                    ne[j] = k
            ne = tuple(ne)
            c = ring.field.convert(c)
            t[ne] = t[ne] + c if ne in t else c
        return MultiPoly(ring, t)

    def rename(self, mapping: Mapping) -> "MultiPoly":
        """Same polynomial with variables renamed (and the ring renamed with them)."""
        for name in mapping:
            self.ring.var_index(name)
        names = [mapping.get(n, n) for n in self.ring.names]
        ring = PolyRing(names, self.ring.field, self.ring.order)
        return MultiPoly(ring, dict(self.terms))

    def drop_unused(self, keep: Sequence[str] = ()) -> "MultiPoly":
        """Convert into the ring of the variables that occur (plus ``keep``), in ring order."""
        used = set(self.variables()) | set(keep)
        names = [n for n in self.ring.names if n in used]
        return self.convert(PolyRing(names, self.ring.field, self.ring.order))

    def map_coeffs(self, fn, ring: PolyRing | None = None) -> "MultiPoly":
        ring = ring or self.ring
        return MultiPoly(ring, {e: fn(c) for e, c in self.terms.items()})

    def content_denominator(self) -> int:
        """LCM of the coefficient denominators (rationals only)."""
        from math import lcm
        d = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                d = lcm(d, c.denominator)
        return d

    # -- text ----------------------------------------------------------------

    def __str__(self):
        from .parse import serialize
        return serialize(self)

    def __repr__(self):
        return f"MultiPoly({self})"


def _weights(ring: PolyRing, weights) -> list:
    if weights is None:
        return [1] * ring.nvars
    if isinstance(weights, Mapping):
        for name in weights:
            ring.var_index(name)
        return [weights.get(n, 0) for n in ring.names]
    w = list(weights)
    if len(w) != ring.nvars:
        raise ValueError("weight vector length does not match the ring")
    return w


def poly_ring(names: str | Sequence[str], field=QQ, order: str = "grevlex"):
    """Ring plus its generators, in declaration order."""
    ring = PolyRing(names, field, order)
    return (ring, *ring.gens())


def jacobian(polys: Iterable[MultiPoly], wrt: Sequence[str]):
    return [[f.diff(v) for v in wrt] for f in polys]
