"""Induced actions on Sym^d(V^*) (x) Sym^e(V) and character eigenspaces.

A group element acts on polynomials by the linear substitution
x_j -> sum_i rho(g)[i, j] x_i and y_j -> sum_i rho^*(g)[i, j] y_i.  This is
a left action, so the matrix of g*h is the product of the matrices.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Mapping, Sequence

from ..exactmath.matrix import ExactMatrix, nullspace, rref
from ..poly.ring import MultiPoly, PolyRing, grevlex_key
from .group import HeisElement, HeisType


def _exponents(nvars: int, deg: int):
    """Exponent vectors of degree deg, descending grevlex."""
    out = []
    for combo in combinations_with_replacement(range(nvars), deg):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grevlex_key, reverse=True)
    return out


class GradedModule:
    """Monomial basis of Sym^d(V^*) (x) Sym^e(V) in the variables y.. and x..."""

    def __init__(self, t: HeisType, d: int, e: int, y: str = "y", x: str = "x", extra=()):
        self.t, self.d, self.e = t, d, e
        self.ynames = t.var_names(y)
        self.xnames = t.var_names(x)
        self.ring = PolyRing(self.ynames + self.xnames + list(extra), t.field)
        k = len(extra)
        self.exps = [a + b + (0,) * k for a in _exponents(t.delta, d) for b in _exponents(t.delta, e)]
        self.position = {ex: i for i, ex in enumerate(self.exps)}

    @property
    def dim(self) -> int:
        return len(self.exps)

    def basis(self):
        return [self.ring.monomial(ex) for ex in self.exps]

    def vector(self, f: MultiPoly) -> list:
        """Coordinates of f (which must lie in the module) in the monomial basis."""
        f = self.lift(f)
        F = self.ring.field
        v = [F.zero] * self.dim
        for ex, c in f.terms.items():
            try:
                v[self.position[ex]] = c
            except KeyError:
                raise ValueError(f"{f} is not in Sym^{self.d} (x) Sym^{self.e}") from None
        return v

    def poly(self, vec: Sequence) -> MultiPoly:
        return MultiPoly(self.ring, {ex: c for ex, c in zip(self.exps, vec)})

    def lift(self, f: MultiPoly) -> MultiPoly:
        return f if f.ring == self.ring else f.convert(self.ring)

    def __repr__(self):
        return f"GradedModule({self.t!r}, d={self.d}, e={self.e}, dim={self.dim})"


def _resolve(t: HeisType, g) -> HeisElement:
    return t.gen(g) if isinstance(g, str) else g


def substitution(t: HeisType, g, ring: PolyRing, y: str = "y", x: str = "x") -> dict:
    """The variable images of g, restricted to the y/x variables present in ring."""
    g = _resolve(t, g)
    rho, rho_d = t.matrix(g), t.dual_matrix(g)
    bind = {}
    for names, m in ((t.var_names(x), rho), (t.var_names(y), rho_d)):
        if not all(n in ring.index for n in names):
            continue
        for j, nj in enumerate(names):
            img = ring.zero
            for i, ni in enumerate(names):
                c = m[i, j]
                if c != 0:
                    img = img + ring.var(ni) * c
            bind[nj] = img
    return bind


def act(t: HeisType, g, f: MultiPoly, y: str = "y", x: str = "x") -> MultiPoly:
    """g . f for a polynomial in any ring that contains the y/x variables.

    Polynomials over QQ are lifted to the representation field first.
    """
    ring = f.ring
    if ring.field != t.field:
        ring = ring.with_field(t.field)
        f = f.convert(ring)
    return f.substitute(substitution(t, g, ring, y, x))


def induced_action(t: HeisType, module: GradedModule, g) -> ExactMatrix:
    bind = substitution(t, g, module.ring)
    F = module.ring.field
    n = module.dim
    ent = [F.zero] * (n * n)
    for j, m in enumerate(module.basis()):
        img = m.substitute(bind)
        for ex, c in img.terms.items():
            ent[module.position[ex] * n + j] = c
    return ExactMatrix(n, n, ent, F)


def _character_items(t: HeisType, character: Mapping):
    items = []
    for g, val in character.items():
        items.append((_resolve(t, g), t.field.convert(val)))
    return items


def eigenspace_basis(t: HeisType, module: GradedModule, character: Mapping) -> list:
    """Basis of the joint eigenspace {f : g.f = chi(g) f for every listed g}.

    ``character`` maps generator names or HeisElements to roots of unity.
    The returned polynomials are the rows of a reduced echelon basis, so
    the result is canonical for the subspace.
    """
    n = module.dim
    F = module.ring.field
    rows = []
    for g, val in _character_items(t, character):
        m = induced_action(t, module, g)
        for i in range(n):
            rows.append([m[i, j] - (val if i == j else F.zero) for j in range(n)])
    if not rows:
        vecs = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    else:
        stacked = ExactMatrix(len(rows), n, [x for r in rows for x in r], F)
        vecs = nullspace(stacked)
    if not vecs:
        return []
    red, piv = rref(ExactMatrix(len(vecs), n, [x for v in vecs for x in v], F))
    return [module.poly(red.row(i)) for i in range(len(piv))]


def character_projector(t: HeisType, module: GradedModule, chi) -> ExactMatrix:
    """(1/|G|) sum over T_a M_b of chi(g)^-1 rho(g), with chi a function of HeisElement.

    Meaningful when the centre acts trivially on the module.
    """
    F = module.ring.field
    n = module.dim
    total = ExactMatrix.zeros(n, n, F)
    elems = t.abelian_elements()
    for g in elems:
        c = F.div(F.one, F.convert(chi(g)))
        total = total + induced_action(t, module, g).scale(c)
    return total.scale(F.div(F.one, len(elems)))


def all_characters(t: HeisType) -> list:
    """Every character of H x H^*, as a dict on the non-central generators.

    A character sends each translation/character generator of order m to an
    m-th root of unity; there are delta^2 of them.
    """
    gens = [g for g in t.generators if g != "Z"]
    orders = [t.order(t.gen(g)) for g in gens]
    out = [{}]
    for name, m in zip(gens, orders):
        step = t.n // m
        out = [dict(c, **{name: t.root(step * j)}) for c in out for j in range(m)]
    return out


def character_value(t: HeisType, character: Mapping, g: HeisElement):
    """Evaluate a generator-level character on T_a M_b (scalar part ignored)."""
    F = t.field
    val = F.one
    if t.d1 == 1:
        parts = [("T", g.a[1]), ("C", g.b[1])]
    else:
        parts = [("T1", g.a[0]), ("T2", g.a[1]), ("C1", g.b[0]), ("C2", g.b[1])]
    for name, e in parts:
        val = val * F.convert(character[name]) ** e
    return val


def is_eigenvector(t: HeisType, f: MultiPoly, g, value, y: str = "y", x: str = "x") -> bool:
    img = act(t, g, f, y, x)
    return img == act(t, t.identity(), f, y, x) * t.field.convert(value)


def eigenvalue(t: HeisType, f: MultiPoly, g, y: str = "y", x: str = "x"):
    """The scalar c with g.f = c f, or None if f is not an eigenvector of g."""
    base = act(t, t.identity(), f, y, x)
    img = act(t, g, f, y, x)
    if base.is_zero():
        return None
    lm = base.leading_monomial()
    c = t.field.div(img.coeff(lm), base.coeff(lm))
    return c if img == base * c else None


def action_matrix_on_span(t: HeisType, g, polys: Sequence[MultiPoly], y: str = "y", x: str = "x"):
    """Matrix of g on span(polys) when that span is g-stable, else None.

    Column j holds the coordinates of g.polys[j].
    """
    base = [act(t, t.identity(), f, y, x) for f in polys]
    imgs = [act(t, g, f, y, x) for f in polys]
    ring = base[0].ring
    F = ring.field
    monos = sorted({e for f in base + imgs for e in f.terms}, key=ring.key, reverse=True)
    k = len(polys)
    # solve base * X = imgs column by column through an augmented RREF
    cols = k + k
    ent = []
    for e in monos:
        ent.extend([f.coeff(e) for f in base] + [h.coeff(e) for h in imgs])
    red, piv = rref(ExactMatrix(len(monos), cols, ent, F))
    if any(p >= k for p in piv) or len(piv) < k:
        return None
    return ExactMatrix(k, k, [red[i, k + j] for i in range(k) for j in range(k)], F)


__all__ = [
    "GradedModule", "act", "action_matrix_on_span", "all_characters", "character_projector",
    "character_value", "eigenspace_basis", "eigenvalue", "induced_action", "is_eigenvector",
    "substitution",
]
