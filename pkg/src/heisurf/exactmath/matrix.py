"""Dense exact matrices over a field or a polynomial ring.

A *domain* here is any object exposing ``zero``, ``one``, ``is_zero(a)`` and
``exquo(a, b)`` (exact division).  Fields additionally provide ``div``.
Elements are combined with the ordinary Python operators.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable, Sequence

from ..errors import NonSquare, OrderTooLarge
from .scalars import QQ


class ExactMatrix:
    __slots__ = ("rows", "cols", "entries", "domain")

    def __init__(self, rows: int, cols: int, entries: Sequence, domain=QQ):
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)
        self.domain = domain

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], domain=QQ):
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("matrix needs at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = [domain.convert(x) if hasattr(domain, "convert") else x for r in rows for x in r]
        return cls(len(rows), ncols, flat, domain)

    @classmethod
    def identity(cls, n: int, domain=QQ):
        e = [domain.one if i == j else domain.zero for i in range(n) for j in range(n)]
        return cls(n, n, e, domain)

    @classmethod
    def zeros(cls, rows: int, cols: int, domain=QQ):
        return cls(rows, cols, [domain.zero] * (rows * cols), domain)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def tolist(self):
        return [self.row(i) for i in range(self.rows)]

    def map(self, fn: Callable, domain=None):
        return ExactMatrix(self.rows, self.cols, [fn(x) for x in self.entries], domain or self.domain)

    def transpose(self):
        e = [self[i, j] for j in range(self.cols) for i in range(self.rows)]
        return ExactMatrix(self.cols, self.rows, e, self.domain)

    T = property(transpose)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other):
        _same_shape(self, other)
        return ExactMatrix(self.rows, self.cols,
                           [a + b for a, b in zip(self.entries, other.entries)], self.domain)

    def __sub__(self, other):
        _same_shape(self, other)
        return ExactMatrix(self.rows, self.cols,
                           [a - b for a, b in zip(self.entries, other.entries)], self.domain)

    def scale(self, c):
        return ExactMatrix(self.rows, self.cols, [c * a for a in self.entries], self.domain)

    def __matmul__(self, other):
        return mul(self, other)

    def is_identity(self):
        return self == ExactMatrix.identity(self.rows, self.domain) if self.rows == self.cols else False

    def scalar_value(self):
        """Return c if the matrix equals c*Id, otherwise None."""
        if self.rows != self.cols:
            return None
        c = self[0, 0]
        for i in range(self.rows):
            for j in range(self.cols):
                x = self[i, j]
                if i == j:
                    if x != c:
                        return None
                elif not self.domain.is_zero(x):
                    return None
        return c

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, {self.tolist()!r})"


def _same_shape(a, b):
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError(f"shape mismatch {a.rows}x{a.cols} vs {b.rows}x{b.cols}")


def mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    zero = a.domain.zero
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for j in range(b.cols):
            acc = zero
            for k, x in enumerate(arow):
                y = b.entries[k * b.cols + j]
                if not a.domain.is_zero(x) and not a.domain.is_zero(y):
                    acc = acc + x * y
            out.append(acc)
    return ExactMatrix(a.rows, b.cols, out, a.domain)


def det_bareiss(m: ExactMatrix):
    """Fraction-free determinant; every division is exact in an integral domain."""
    if m.rows != m.cols:
        raise NonSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    dom = m.domain
    a = m.tolist()
    sign = 1
    prev = dom.one
    for k in range(n - 1):
        if dom.is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not dom.is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return dom.zero
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = dom.exquo(num, prev)
            a[i][k] = dom.zero
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_cofactor(m: ExactMatrix):
    """Laplace expansion along the first row (an independent route for small sizes)."""
    if m.rows != m.cols:
        raise NonSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    return _laplace(m.tolist(), m.domain)


def _laplace(a, dom):
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = dom.zero
    for j in range(n):
        if dom.is_zero(a[0][j]):
            continue
        sub = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _laplace(sub, dom)
        total = total + term if j % 2 == 0 else total - term
    return total


def rref(m: ExactMatrix):
    """Reduced row echelon form over a field.  Returns (matrix, pivot columns)."""
    dom = m.domain
    a = m.tolist()
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if not dom.is_zero(a[i][c])), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = dom.div(dom.one, a[r][c])
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and not dom.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    flat = [x for row in a for x in row]
    return ExactMatrix(m.rows, m.cols, flat, dom), pivots


def rank(m: ExactMatrix) -> int:
    return len(rref(m)[1])


def nullspace(m: ExactMatrix) -> list:
    """Basis of the right kernel, one vector per free column, in RREF normal form."""
    red, pivots = rref(m)
    dom = m.domain
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [dom.zero] * m.cols
        v[f] = dom.one
        for i, pc in enumerate(pivots):
            v[pc] = -red[i, f]
        basis.append(v)
    return basis


def inverse(m: ExactMatrix) -> ExactMatrix:
    if m.rows != m.cols:
        raise NonSquare(f"inverse of a {m.rows}x{m.cols} matrix")
    n = m.rows
    dom = m.domain
    aug = []
    for i in range(n):
        aug.extend(m.row(i) + [dom.one if i == j else dom.zero for j in range(n)])
    red, pivots = rref(ExactMatrix(n, 2 * n, aug, dom))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return ExactMatrix(n, n, [red[i, n + j] for i in range(n) for j in range(n)], dom)


def submatrix(m: ExactMatrix, rows: Sequence[int], cols: Sequence[int]) -> ExactMatrix:
    return ExactMatrix(len(rows), len(cols), [m[i, j] for i in rows for j in cols], m.domain)


def minors(m: ExactMatrix, k: int) -> list:
    """All k x k minors, row-set major then column-set, both in lex order."""
    if k < 1 or k > min(m.rows, m.cols):
        raise OrderTooLarge(f"order {k} minors of a {m.rows}x{m.cols} matrix")
    out = []
    for rs in combinations(range(m.rows), k):
        for cs in combinations(range(m.cols), k):
            out.append(det_bareiss(submatrix(m, rs, cs)))
    return out


def transpose(m: ExactMatrix) -> ExactMatrix:
    return m.transpose()
