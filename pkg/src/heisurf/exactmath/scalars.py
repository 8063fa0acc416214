"""Exact scalar fields: the rationals, prime fields and cyclotomic fields.

Rationals are plain ``int``/``fractions.Fraction`` values; a Fraction with
denominator 1 is demoted to ``int`` wherever the field produces it, which
keeps integer-heavy polynomial arithmetic fast.  Prime field and cyclotomic
elements are small immutable classes with operator overloading.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..errors import BadPrime, RingMismatch

_PRIME_CHECK_LIMIT = 2**32


def _q(x):
    """Normalize a rational: Fraction with unit denominator becomes int."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def _is_rational(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------- rationals


class RationalField:
    """The field QQ.  Elements are ints or Fractions."""

    characteristic = 0
    zero = 0
    one = 1
    order = 1  # as a cyclotomic field, QQ = QQ(zeta_1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def convert(self, x):
        if _is_rational(x):
            return _q(x)
        if isinstance(x, Cyclotomic) and x.is_rational():
            return x.rational_part()
        raise RingMismatch(f"cannot interpret {x!r} as a rational")

    def is_zero(self, a):
        return a == 0

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        if type(a) is int and type(b) is int:
            if a % b == 0:
                return a // b
            return Fraction(a, b)
        return _q(Fraction(a) / Fraction(b))

    exquo = div

    def inv(self, a):
        return self.div(1, a)

    def zeta(self, n: int):
        if n == 1:
            return 1
        if n == 2:
            return -1
        raise RingMismatch(f"zeta({n}) is not rational")

    def from_fraction(self, f: Fraction):
        return _q(f)


QQ = RationalField()


# ------------------------------------------------------------- prime fields


class PrimeFieldElement:
    """Element of GF(p), stored as its representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise RingMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise BadPrime(f"{self.p} divides the denominator of {other}")
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldElement(pow(self.value, k, self.p), self.p)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * PrimeFieldElement(o, self.p).inverse()

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.p}"


class PrimeField:
    _checked: set = set()

    def __init__(self, p: int):
        if p not in PrimeField._checked:
            if p < _PRIME_CHECK_LIMIT and not is_prime(p):
                raise BadPrime(f"{p} is not prime")
            PrimeField._checked.add(p)
        self.p = p
        self.characteristic = p
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def convert(self, x):
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise RingMismatch(f"GF({x.p}) element in GF({self.p})")
            return x
        if isinstance(x, int):
            return PrimeFieldElement(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise BadPrime(f"{self.p} divides the denominator of {x}")
            return PrimeFieldElement(x.numerator * pow(x.denominator, -1, self.p), self.p)
        raise RingMismatch(f"cannot interpret {x!r} in GF({self.p})")

    def is_zero(self, a):
        return a == 0

    def div(self, a, b):
        return self.convert(a) * self.convert(b).inverse()

    exquo = div

    def inv(self, a):
        return self.convert(a).inverse()

    def zeta(self, n: int):
        if n == 1:
            return self.one
        if n == 2:
            return -self.one
        raise RingMismatch(f"zeta({n}) is not available in GF({self.p})")


# -------------------------------------------------------- cyclotomic fields


def _upoly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _upoly_divmod(a, b):
    """Quotient and remainder of univariate rational polynomials (low-first lists)."""
    a = _upoly_trim(a)
    b = _upoly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b):
        k = len(a) - len(b)
        c = QQ.div(a[-1], lb)
        q[k] = c
        for i, bi in enumerate(b):
            a[i + k] = _q(a[i + k] - c * bi)
        a = _upoly_trim(a)
    return _upoly_trim(q), a


def _upoly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _upoly_trim([_q(x) for x in out])


def _upoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _upoly_trim([_q(x - y) for x, y in zip(a, b)])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, r = _upoly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not r
    return tuple(int(c) for c in num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple:
    """Reductions of z^k modulo Phi_n for 0 <= k < n."""
    phi = euler_phi(n)
    cp = cyclotomic_polynomial(n)
    table = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        table.append(tuple(cur))
        # multiply by z and reduce the overflow coefficient using the monic Phi_n
        top = cur[-1] if phi else 0
        nxt = [0] + cur[:-1] if phi else []
        for i in range(phi):
            nxt[i] -= top * cp[i]
        cur = nxt
    return tuple(table)


def cyclo_reduce(n: int, raw) -> "Cyclotomic":
    """Canonical representative of a rational polynomial in z modulo Phi_n.

    ``raw`` lists coefficients lowest degree first.  Exponents are folded
    with z^n = 1 before the table lookup.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    phi = euler_phi(n)
    folded = [0] * n
    for k, c in enumerate(raw):
        if c:
            folded[k % n] += c
    table = _power_table(n)
    out = [0] * phi
    for k, c in enumerate(folded):
        if c:
            row = table[k]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return Cyclotomic(n, tuple(_q(x) for x in out))


class Cyclotomic:
    """Element of QQ(zeta_n) as coefficients in the power basis 1, z, ..., z^(phi-1)."""

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, coeffs):
        self.n = n
        self.c = tuple(coeffs)
        self._hash = None

    @classmethod
    def from_rational(cls, n, r):
        phi = euler_phi(n)
        return cls(n, (_q(r),) + (0,) * (phi - 1))

    @classmethod
    def zeta(cls, n, k=1):
        raw = [0] * (k % n) + [1]
        return cyclo_reduce(n, raw)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.n != self.n:
                raise RingMismatch(f"QQ(zeta_{self.n}) vs QQ(zeta_{other.n})")
            return other
        if _is_rational(other):
            return Cyclotomic.from_rational(self.n, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclotomic(self.n, tuple(_q(a + b) for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclotomic(self.n, tuple(_q(a - b) for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if _is_rational(other):
            return Cyclotomic(self.n, tuple(_q(a * other) for a in self.c))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        raw = [0] * (2 * len(self.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(o.c):
                if b:
                    raw[i + j] += a * b
        return cyclo_reduce(self.n, raw)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.from_rational(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        # extended Euclid in QQ[z] against Phi_n
        r0, r1 = list(cyclotomic_polynomial(self.n)), _upoly_trim(self.c)
        s0, s1 = [], [1]
        while len(r1) > 1:
            q, r = _upoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _upoly_sub(s0, _upoly_mul(q, s1))
        const = r1[0]
        inv = [QQ.div(x, const) for x in s1]
        return cyclo_reduce(self.n, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def is_zero(self):
        return not any(self.c)

    def is_rational(self):
        return not any(self.c[1:])

    def rational_part(self):
        return self.c[0]

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.n == other.n and self.c == other.c
        if _is_rational(other):
            return self.is_rational() and self.c[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.c[0]) if self.is_rational() else hash((self.n, self.c))
        return self._hash

    def __repr__(self):
        parts = []
        for k, a in enumerate(self.c):
            if a:
                parts.append(f"{a}" if k == 0 else f"{a}*z^{k}")
        return f"Cyclotomic({self.n}: {' + '.join(parts) or '0'})"


class CyclotomicField:
    """QQ(zeta_n) with elements stored modulo the n-th cyclotomic polynomial."""

    characteristic = 0

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("cyclotomic order must be positive")
        self.n = n
        self.order = n
        self.degree = euler_phi(n)
        self.zero = Cyclotomic.from_rational(n, 0)
        self.one = Cyclotomic.from_rational(n, 1)
        self.gen = Cyclotomic.zeta(n)

    def __repr__(self):
        return f"QQ(zeta_{self.n})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self):
        return hash(("QQzeta", self.n))

    def convert(self, x):
        if isinstance(x, Cyclotomic):
            if x.n == self.n:
                return x
            raise RingMismatch(f"QQ(zeta_{x.n}) element in {self!r}")
        if _is_rational(x):
            return Cyclotomic.from_rational(self.n, x)
        raise RingMismatch(f"cannot interpret {x!r} in {self!r}")

    def is_zero(self, a):
        return a.is_zero() if isinstance(a, Cyclotomic) else a == 0

    def div(self, a, b):
        return self.convert(a) * self.convert(b).inverse()

    exquo = div

    def inv(self, a):
        return self.convert(a).inverse()

    def zeta(self, m: int, k: int = 1):
        """zeta_m^k as an element of this field, when zeta_m lies in it."""
        n = self.n
        if n % m == 0:
            return Cyclotomic.zeta(n, (n // m) * k)
        if n % 2 == 1 and (2 * n) % m == 0:
            # zeta_{2n} = -zeta_n^((n+1)/2)
            e = (2 * n // m) * k
            z2n = -Cyclotomic.zeta(n, (n + 1) // 2)
            return z2n**e
        raise RingMismatch(f"zeta({m}) is not in {self!r}")

    def root_of_unity(self, k: int):
        return Cyclotomic.zeta(self.n, k)


def field_from_spec(text: str):
    """Parse 'QQ', 'GF(p)' or 'QQ(zeta(n))' into a field object."""
    t = text.replace(" ", "")
    if t in ("QQ", "Q"):
        return QQ
    if t.startswith("GF(") and t.endswith(")"):
        return PrimeField(int(t[3:-1]))
    for prefix in ("QQ(zeta(", "QQ(zeta_"):
        if t.startswith(prefix):
            inner = t[len(prefix):].rstrip(")")
            return CyclotomicField(int(inner))
    raise ValueError(f"unknown field {text!r}")


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b
