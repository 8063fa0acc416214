"""Text grammar for polynomials and the canonical serializer.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := int ('/' uint)? | 'zeta(' uint ')' | var | '(' expr ')'

Whitespace is insignificant.  Serialization lists terms in descending
grevlex order regardless of the ring order, so the text of a polynomial
does not depend on how it was computed.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import PolySyntaxError, UnknownVariable
from ..exactmath.scalars import Cyclotomic, PrimeFieldElement
from .ring import MultiPoly, PolyRing, grevlex_key

_TOKEN = re.compile(r"\s*(?:(\d+)|([^\W\d]\w*)|(.))", re.UNICODE)


def _tokenize(text: str):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            toks.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            toks.append(("op", ch, start))
        pos = m.end()
    toks.append(("end", "", len(text.rstrip()) if text.strip() else 0))
    return toks


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[1] != value or t[0] == "end":
            raise PolySyntaxError(f"expected {value!r}, found {t[1] or 'end of input'!r}", t[2])
        return t

    def parse(self) -> MultiPoly:
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty polynomial", 0)
        f = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise PolySyntaxError(f"unexpected {t[1]!r}", t[2])
        return f

    def expr(self) -> MultiPoly:
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if t[1] == "+" else acc - rhs
            else:
                return acc

    def term(self) -> MultiPoly:
        acc = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> MultiPoly:
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                raise PolySyntaxError("exponent must be a non-negative integer", e[2])
            base = base ** int(e[1])
        return base

    def atom(self) -> MultiPoly:
        t = self.take()
        kind, val, off = t
        ring = self.ring
        if kind == "int":
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                d = self.take()
                if d[0] != "int":
                    raise PolySyntaxError("denominator must be an unsigned integer", d[2])
                if int(d[1]) == 0:
                    raise PolySyntaxError("zero denominator", d[2])
                return ring.constant(Fraction(int(val), int(d[1])))
            return ring.constant(int(val))
        if kind == "name":
            if val == "zeta" and self.peek()[1] == "(" and "zeta" not in ring.index:
                self.take()
                k = self.take()
                if k[0] != "int":
                    raise PolySyntaxError("zeta order must be an unsigned integer", k[2])
                self.expect(")")
                zeta = getattr(ring.field, "zeta", None)
                try:
                    return ring.constant(zeta(int(k[1])))
                except Exception as exc:
                    raise PolySyntaxError(f"zeta({k[1]}) unavailable: {exc}", off) from None
            if val not in ring.index:
                raise UnknownVariable(val)
            return ring.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise PolySyntaxError(f"unexpected {val or 'end of input'!r}", off)


def parse_poly(text: str, ring: PolyRing) -> MultiPoly:
    return _Parser(text, ring).parse()


# ------------------------------------------------------------------ output


def _monomial_text(names, e):
    parts = []
    for n, k in zip(names, e):
        if k == 1:
            parts.append(n)
        elif k > 1:
            parts.append(f"{n}^{k}")
    return "*".join(parts)


def _scalar_pieces(c, field):
    """Split a coefficient into signed rational pieces with an optional zeta factor."""
    if isinstance(c, Cyclotomic):
        out = []
        for k, a in enumerate(c.c):
            if a == 0:
                continue
            zf = "" if k == 0 else (f"zeta({c.n})" if k == 1 else f"zeta({c.n})^{k}")
            out.append((a, zf))
        return out
    if isinstance(c, PrimeFieldElement):
        return [(c.value, "")]
    return [(c, "")]


def _rat_text(a):
    if isinstance(a, Fraction):
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"
    return str(a)


def serialize(f: MultiPoly) -> str:
    if f.is_zero():
        return "0"
    names = f.ring.names
    pieces = []
    for e, c in sorted(f.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True):
        mono = _monomial_text(names, e)
        for a, zf in _scalar_pieces(c, f.ring.field):
            neg = a < 0
            mag = -a if neg else a
            factors = [x for x in (zf, mono) if x]
            if mag == 1 and factors:
                body = "*".join(factors)
            else:
                body = "*".join([_rat_text(mag)] + factors)
            pieces.append((neg, body))
    out = []
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
