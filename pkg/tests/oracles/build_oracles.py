"""Independent sympy oracles, frozen to frozen.json.

Nothing here imports heisurf.  Regenerate with:
    python3 tests/oracles/build_oracles.py
"""

import itertools
import json
from pathlib import Path

import sympy as sp

lam, mu, m, z, s, t = sp.symbols("lam mu m z s t")
x1, x2, x3, x4 = sp.symbols("x1 x2 x3 x4")
y1, y2, y3, y4 = sp.symbols("y1 y2 y3 y4")
s1, s2, s3 = sp.symbols("s1 s2 s3")


def ex(e):
    return str(sp.expand(e))


def empty_projective(gens, ys):
    """No common zero in P^n: every affine chart y_k = 1, y_<k = 0 has Groebner basis [1]."""
    for k in range(len(ys)):
        sub = {ys[i]: 0 for i in range(k)}
        sub[ys[k]] = 1
        eqs = [sp.expand(g.subs(sub)) for g in gens]
        eqs = [e for e in eqs if e != 0]
        rest = ys[k + 1:]
        if not eqs:
            return False
        if not rest:
            if all(e == 0 for e in eqs):
                return False
            continue
        gb = sp.groebner(eqs, *rest, order="grevlex")
        if list(gb.exprs) != [1]:
            return False
    return True


def group_closure(gens):
    seen = [sp.eye(gens[0].shape[0])]
    frontier = list(seen)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = sp.simplify(a * g)
                if not any(sp.simplify(b - c) == sp.zeros(*b.shape) for c in seen):
                    seen.append(b)
                    new.append(b)
        frontier = new
    return seen


def act(mat, f, xs, ys):
    """x_j -> sum_i M[i,j] x_i, y_j -> sum_i (M^-T)[i,j] y_i."""
    dual = mat.inv().T
    sub = {}
    for j in range(len(xs)):
        sub[xs[j]] = sum(mat[i, j] * xs[i] for i in range(len(xs)))
        sub[ys[j]] = sum(dual[i, j] * ys[i] for i in range(len(ys)))
    return sp.expand(f.subs(sub, simultaneous=True))


def main():
    out = {}

    # scalars and discriminants
    out["cyclo_n6_z3"] = str(sp.rem(z ** 3, sp.cyclotomic_poly(6, z), z))
    out["cubic_disc_x3_minus_x"] = str(sp.discriminant(x1 ** 3 - x1, x1))
    q = lam + lam * z ** 4 + (3 - lam ** 2) * z ** 2
    dq = sp.factor(sp.discriminant(q, z))
    out["chpp_quartic_disc"] = str(dq)
    out["chpp_quartic_disc_roots"] = sorted(str(r) for r in sp.solve(dq, lam))

    # CHPP
    f = x1 * (y1 ** 3 + lam * y1 * y2 ** 2) + x2 * (y2 ** 3 + lam * y2 * y1 ** 2)
    M = sp.Matrix([[3 * x1, 2 * lam * x2, lam * x1, 0], [0, 3 * x1, 2 * lam * x2, lam * x1],
                   [lam * x2, 2 * lam * x1, 3 * x2, 0], [0, lam * x2, 2 * lam * x1, 3 * x2]])
    out["chpp_det"] = ex(M.det())
    a = sp.diff(f, y1).subs(y2, 1)
    b = sp.diff(f, y2).subs(y2, 1)
    out["chpp_res_y1"] = ex(sp.resultant(a, b, y1))
    out["chpp_res_x1"] = str(sp.factor(sp.resultant(sp.diff(f, y1), sp.diff(f, y2), x1)))
    out["chpp_companion"] = str(sp.factor(sp.resultant(y1 ** 2 + lam, lam * y1 ** 2 + 1, y1)))

    g1 = sp.diag(1, -1)
    g2 = sp.Matrix([[0, 1], [1, 0]])
    G = group_closure([g1, g2])
    mons = [y1 ** i * y2 ** (3 - i) * xv for i in range(4) for xv in (x1, x2)]
    proj = set()
    for mono in mons:
        avg = sp.expand(sum(act(g, mono, [x1, x2], [y1, y2]) for g in G) / len(G))
        if avg != 0:
            proj.add(ex(avg))
    out["chpp_group_order"] = len(G)
    out["chpp_trivial_projections"] = sorted(proj)

    # delta = 3
    eps = sp.exp(2 * sp.pi * sp.I / 3)
    T3 = sp.Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    C3 = sp.diag(1, eps, eps ** 2)
    comm = sp.simplify(T3 * C3 * T3.inv() * C3.inv())
    k = next(k for k in range(3) if sp.simplify(comm - eps ** k * sp.eye(3)) == sp.zeros(3, 3))
    out["heis13_commutator_power"] = k
    out["heis12_gamma"] = str(sp.simplify((g1 * g2 * g1 * g2)[0, 0]))
    cubics = set()
    for e in itertools.product(range(4), repeat=3):
        if sum(e) != 3:
            continue
        mono = y1 ** e[0] * y2 ** e[1] * y3 ** e[2]
        orbit = [mono, mono.subs({y1: y2, y2: y3, y3: y1}, simultaneous=True),
                 mono.subs({y1: y3, y2: y1, y3: y2}, simultaneous=True)]
        cubics.add(ex(sum(orbit) / 3))
    out["delta3_T_projections"] = sorted(cubics)

    # PP4
    A = sp.Matrix([[s2 * t - s3 * s, mu * s1 * s / 2, -mu * s1 * t / 2],
                   [mu * s1 * s / 2, -s1 * t, mu * (s2 * t - s3 * s) / 2],
                   [-mu * s1 * t / 2, mu * (s2 * t - s3 * s) / 2, s1 * s]])
    P = sp.Poly(sp.expand(A.det()), s, t)
    ca, cb, cc, cd = (P.coeff_monomial(mm) for mm in (s ** 3, s ** 2 * t, s * t ** 2, t ** 3))
    out["pp4_pencil"] = [ex(c) for c in (ca, cb, cc, cd)]
    D = sp.expand(cb ** 2 * cc ** 2 - 4 * ca * cc ** 3 - 4 * cb ** 3 * cd - 27 * ca ** 2 * cd ** 2 + 18 * ca * cb * cc * cd)
    quo, rem = sp.div(D, s1 ** 6, s1, s2, s3, mu)
    assert rem == 0
    sextic = sp.Poly(sp.expand(256 * quo), s1, s2, s3)
    out["pp4_sextic_terms"] = {str(sp.Mul(*[v ** k for v, k in zip((s1, s2, s3), mono)])): ex(c)
                               for mono, c in sextic.terms()}
    F1 = s3 * (lam * y2 ** 2 + mu * y1 * y3) - s2 * (lam * y3 ** 2 + mu * y1 * y2)
    F2 = s1 * (lam * y3 ** 2 + mu * y1 * y2) - s3 * (lam * y1 ** 2 + mu * y2 * y3)
    basis = [y1 ** 2, y1 * y2, y1 * y3, y2 ** 2, y2 * y3, y3 ** 2]

    def coords(F):
        Pp = sp.Poly(sp.expand(F), y1, y2, y3)
        return [Pp.coeff_monomial(bb) for bb in basis]

    u, v = coords(F1), coords(F2)
    out["pp4_gamma"] = [ex(sp.cancel((u[i] * v[j] - u[j] * v[i]) / s3))
                        for i, j in itertools.combinations(range(6), 2)]

    # Hesse
    fm = y1 ** 3 + y2 ** 3 + y3 ** 3 + 6 * m * y1 * y2 * y3
    X = [x1, x2, x3]
    Bm = (sum(xx ** 6 for xx in X) + 2 * (-16 * m ** 3 - 1) * (x1 ** 3 * x2 ** 3 + x1 ** 3 * x3 ** 3 + x2 ** 3 * x3 ** 3)
          - 24 * m ** 2 * x1 * x2 * x3 * sum(xx ** 3 for xx in X) + 6 * m * (-8 * m ** 3 - 4) * x1 ** 2 * x2 ** 2 * x3 ** 2)
    member = {}
    for mv in (0, 1, 2, -1):
        grad = [sp.diff(fm, yy).subs(m, mv) for yy in (y1, y2, y3)]
        e = sp.expand(Bm.subs(m, mv).subs(dict(zip(X, grad)), simultaneous=True))
        _, r = sp.reduced(e, [fm.subs(m, mv)], y1, y2, y3)
        member[str(mv)] = r == 0
    out["hesse_dual_membership"] = member
    smooth = {}
    for mv in (sp.Integer(0), sp.Integer(1), sp.Rational(-1, 2)):
        fmv = fm.subs(m, mv)
        smooth[str(mv)] = empty_projective([sp.diff(fmv, yy) for yy in (y1, y2, y3)], [y1, y2, y3])
    out["hesse_smooth"] = smooth
    ac3 = y1 ** 2 * y2 + y2 ** 2 * y3 + y3 ** 2 * y1
    out["ac3_smooth"] = empty_projective([sp.diff(ac3, yy) for yy in (y1, y2, y3)], [y1, y2, y3])

    # quartic family
    Y4 = [y1, y2, y3, y4]
    q4 = {}
    for lv in (2, 0):
        Q1 = y1 ** 2 + y3 ** 2 + 2 * lv * y2 * y4
        Q2 = y2 ** 2 + y4 ** 2 + 2 * lv * y1 * y3
        J = sp.Matrix([[sp.diff(Q, yy) for yy in Y4] for Q in (Q1, Q2)])
        mins = [J[:, [i, j]].det() for i, j in itertools.combinations(range(4), 2)]
        q4[str(lv)] = empty_projective([Q1, Q2] + mins, Y4)
    out["quartic4_smooth"] = q4
    b0 = [y1 ** 2 * y3, -y2 ** 2 * y4, y1 * y3 ** 2, -y2 * y4 ** 2]
    b1 = [-y2 * y3 * y4, y1 * y3 * y4, -y1 * y2 * y4, y1 * y2 * y3]
    dot = sp.expand(sum(yy * (p0 + lam * p1) for yy, p0, p1 in zip(Y4, b0, b1)))
    out["beta_dot"] = ex(dot)
    Q1s = y1 ** 2 + y3 ** 2 + 2 * lam * y2 * y4
    tilde = [2 * y2 * y4 * p0 - (y1 ** 2 + y3 ** 2) * p1 for p0, p1 in zip(b0, b1)]
    out["beta_identity_ii"] = all(
        sp.expand(2 * y2 * y4 * (p0 + lam * p1) - tt - Q1s * p1) == 0 for p0, p1, tt in zip(b0, b1, tilde))
    out["beta_tilde"] = [ex(tt) for tt in tilde]

    path = Path(__file__).with_name("frozen.json")
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
