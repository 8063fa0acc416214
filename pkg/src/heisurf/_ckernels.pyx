# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled GF(p) kernels with the same API as heisurf._pykernels."""

from libc.stdint cimport int64_t


cdef int64_t _inv(int64_t a, int64_t p):
    cdef int64_t t = 0, nt = 1, r = p, nr = a % p, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef class ModPoly:
    cdef public int64_t p
    cdef public int nvars
    cdef int nterms
    cdef int64_t[:, :] _exps
    cdef int64_t[:] _coeffs
    cdef public list maxdeg

    def __init__(self, exps, coeffs, p):
        import numpy as np
        if p >= 2**31:
            raise ValueError("modulus must be below 2**31")
        self.p = p
        self.nterms = len(exps)
        self.nvars = len(exps[0]) if exps else 0
        self._exps = np.asarray(exps, dtype=np.int64).reshape(self.nterms, self.nvars)
        self._coeffs = np.asarray([c % p for c in coeffs], dtype=np.int64).reshape(self.nterms)
        self.maxdeg = [max([e[i] for e in exps] or [0]) for i in range(self.nvars)]

    def eval(self, point):
        import numpy as np
        cdef int i, j, t, k
        cdef int64_t p = self.p, x, v, total = 0
        cdef int width = max(self.maxdeg or [0]) + 1
        pw = np.ones((self.nvars, width), dtype=np.int64)
        cdef int64_t[:, :] pows = pw
        for i in range(self.nvars):
            x = point[i] % p
            for j in range(1, self.maxdeg[i] + 1):
                pows[i, j] = pows[i, j - 1] * x % p
        for t in range(self.nterms):
            v = self._coeffs[t]
            for i in range(self.nvars):
                k = self._exps[t, i]
                if k:
                    v = v * pows[i, k] % p
            total += v
            if total >= p:
                total -= p
        return int(total)


def rank_mod(rows, p):
    import numpy as np
    if not rows:
        return 0
    arr = np.asarray([[x % p for x in row] for row in rows], dtype=np.int64)
    cdef int64_t[:, :] a = arr
    cdef int nrows = arr.shape[0], ncols = arr.shape[1]
    cdef int r = 0, c, i, j, piv
    cdef int64_t inv, f, tmp, pp = p
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv(a[r, c], pp)
        for j in range(ncols):
            a[r, j] = a[r, j] * inv % pp
        for i in range(r + 1, nrows):
            f = a[i, c]
            if f != 0:
                for j in range(ncols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % pp
                    if a[i, j] < 0:
                        a[i, j] += pp
        r += 1
        if r == nrows:
            break
    return r
