"""Pure-Python GF(p) kernels: sparse polynomial evaluation and matrix rank."""

from __future__ import annotations


class ModPoly:
    """A polynomial with integer coefficients reduced mod p, ready for fast evaluation."""

    def __init__(self, exps, coeffs, p: int):
        if p >= 2**31:
            raise ValueError("modulus must be below 2**31")
        self.p = p
        self.nvars = len(exps[0]) if exps else 0
        self.exps = [tuple(e) for e in exps]
        self.coeffs = [c % p for c in coeffs]
        self.maxdeg = [max((e[i] for e in self.exps), default=0) for i in range(self.nvars)]

    def eval(self, point) -> int:
        p = self.p
        pows = []
        for i, x in enumerate(point[:self.nvars]):
            x %= p
            row = [1]
            for _ in range(self.maxdeg[i]):
                row.append(row[-1] * x % p)
            pows.append(row)
        total = 0
        for e, c in zip(self.exps, self.coeffs):
            v = c
            for i, k in enumerate(e):
                if k:
                    v = v * pows[i][k] % p
            total += v
        return total % p


def rank_mod(rows, p: int) -> int:
    a = [[x % p for x in r] for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        prow = [x * inv % p for x in a[r]]
        a[r] = prow
        for i in range(r + 1, nrows):
            f = a[i][c]
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], prow)]
        r += 1
        if r == nrows:
            break
    return r
