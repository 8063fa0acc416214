from fractions import Fraction

import pytest
import sympy as sp

from heisurf import surfaces as sf
from heisurf.elim import univariate_discriminant
from heisurf.errors import DegreeMismatch, FileError, LambdaZero, UnknownFamily
from heisurf.heis import GradedModule, HeisType, eigenspace_basis
from heisurf.poly import PolyRing

from helpers import FIXTURES, oracle, sym_equal, to_sympy

lam_s = sp.Symbol("lam")
XS = ["x1", "x2", "x3", "x4"]


class TestChpp:
    def test_determinant_matches_oracle(self):
        d = sf.chpp_discriminant()
        assert sym_equal(d.determinant, oracle()["chpp_det"])
        assert sym_equal(d.resultant, oracle()["chpp_res_y1"])
        assert d.routes_agree

    @pytest.mark.parametrize("lam", [0, 1, -2, Fraction(1, 3)])
    def test_specialized_routes(self, lam):
        d = sf.chpp_discriminant(lam)
        assert d.routes_agree
        expr = sp.sympify(oracle()["chpp_det"]).subs(lam_s, sp.Rational(str(lam)))
        assert sym_equal(d.determinant, expr)

    def test_x1_resultant(self):
        assert sym_equal(sf.y_content_resultant(), oracle()["chpp_res_x1"])

    def test_companion(self):
        r = sf.companion_resultant()
        assert sym_equal(r, oracle()["chpp_companion"])

    def test_quartic_discriminant(self):
        q = sf.chpp_singular_fiber_quartic()
        dq = univariate_discriminant(q, "z")
        assert sym_equal(dq, oracle()["chpp_quartic_disc"])
        roots = sp.solve(to_sympy(dq), lam_s)
        assert sorted(str(r) for r in roots) == oracle()["chpp_quartic_disc_roots"]

    def test_quartic_numeric_is_monic(self):
        q = sf.chpp_singular_fiber_quartic(2)
        assert q == q.ring("z^4 - 1/2*z^2 + 1")

    def test_quartic_needs_nonzero_lambda(self):
        with pytest.raises(LambdaZero):
            sf.chpp_singular_fiber_quartic(0)

    def test_trivial_eigenspace(self):
        t = HeisType(1, 2)
        mod = GradedModule(t, 3, 1)
        basis = eigenspace_basis(t, mod, {"T": 1, "C": 1})
        want = [mod.ring(s.replace("**", "^").replace("/2", "")) for s in oracle()["chpp_trivial_projections"]]
        assert sf.span_equal(basis, want, mod)
        assert sf.chpp_family().characters == [{"T": 1, "C": 1}]

    def test_group_order(self):
        t = HeisType(1, 2)
        mats = {t.matrix(g).tolist().__repr__() for g in t.abelian_elements()}
        mats |= {t.matrix(t.mul(t.element(k=1), g)).tolist().__repr__() for g in t.abelian_elements()}
        assert len(mats) == oracle()["chpp_group_order"]

    def test_singular_fibre_count(self):
        assert sf.zeuthen_segre_count(4, 4) == 12


class TestPP4:
    def test_pencil_coefficients(self):
        co = sf.pencil_coefficients(sf.pencil_poly())
        for c, want in zip(co, oracle()["pp4_pencil"]):
            assert sym_equal(c, want)

    def test_sextic_terms(self):
        sextic = sf.pp4_branch_locus().sextic
        expr = sp.Poly(to_sympy(sextic), *sp.symbols("s1 s2 s3"))
        terms = {str(sp.Mul(*[v ** e for v, e in zip(expr.gens, m)])): c for m, c in expr.terms()}
        assert len(expr.terms()) == len(oracle()["pp4_sextic_terms"])
        for mono, want in oracle()["pp4_sextic_terms"].items():
            assert sp.expand(terms[mono] - sp.sympify(want)) == 0

    def test_sextic_matches_printed_and_charts(self):
        b = sf.pp4_branch_locus().sextic
        assert b == sf.printed_sextic()
        assert b == sf.cyclic_s(b)
        assert all(sf.pp4_branch_locus(chart=c).sextic == b for c in (2, 3))

    def test_flagged_term(self):
        rep = sf.flagged_term_report(sf.pp4_branch_locus().sextic)
        printed, corrected = sf.FLAGGED_TERM
        assert rep[printed].is_zero()
        assert not rep[corrected].is_zero()

    def test_numeric_mu(self):
        b = sf.pp4_branch_locus(2).sextic
        sym = to_sympy(sf.pp4_branch_locus().sextic).subs(sp.Symbol("mu"), 2)
        assert sym_equal(b, sym)

    def test_gamma(self):
        got = sf.pp4_gamma()
        assert len(got) == 15
        for g, want in zip(got, oracle()["pp4_gamma"]):
            assert sym_equal(g, want)
        assert sf.gamma_dictionary(got)["e"] == got[0].ring("-mu^2").convert(sf.gamma_dictionary(got)["e"].ring)

    def test_minors(self):
        eqs = sf.pp4_equations()
        assert sf.pp4_minors() == [eqs[k] * sign for sign, k in sf.MINOR_DICTIONARY]

    def test_roundtrip(self):
        assert sf.penegini_polizzi_roundtrip(sf.pp4_branch_locus().sextic)


class TestHesse:
    @pytest.mark.parametrize("m", ["0", "1", "-1/2"])
    def test_smoothness(self, m):
        cert = sf.hesse_smoothness(m)
        assert bool(cert) == oracle()["hesse_smooth"][m]
        assert bool(cert) != sf.is_singular_member(m)

    @pytest.mark.parametrize("m", [0, 1, 2, -1])
    def test_dual_membership(self, m):
        assert sf.dual_membership(m) == oracle()["hesse_dual_membership"][str(m)]

    def test_sampled_duality(self):
        r = sf.sampled_duality(100, 10007, 0)
        assert r.ok and len(r.points) == 100
        assert sf.sampled_duality(100, 10007, 0).points == r.points

    def test_gradient_identity(self):
        assert sf.hesse_gradient_identity()
        assert sf.hesse_lambda_dictionary()

    def test_ac3(self):
        assert bool(sf.ac3_smoothness()) == oracle()["ac3_smooth"]
        assert sf.is_eigen_family(sf.ac3_family())
        assert sf.is_eigen_family(sf.hesse3_family())
        assert sf.iota_swaps_cubics()

    def test_delta3_cubics(self):
        basis, named, eig = sf.delta3_invariant_cubics()
        mod = GradedModule(HeisType(1, 3), 3, 0)
        assert sf.span_equal(basis, named, mod)
        assert eig == sf.expected_delta3_eigenvalues()


class TestQuartic4:
    def test_eigenspace(self):
        basis, mod = sf.quartic4_eigenspace()
        assert basis == [mod.ring("y1^2 + y3^2"), mod.ring("y2*y4")]
        assert sf.pencil_is_stable()
        assert sf.translation_swaps_pencil()

    @pytest.mark.parametrize("lam", ["2", "0"])
    def test_smoothness(self, lam):
        assert bool(sf.curve_smoothness(lam)) == oracle()["quartic4_smooth"][lam]

    def test_singular_at_one(self):
        assert not sf.curve_smoothness(1)

    def test_beta(self):
        bi = sf.beta_identities()
        assert bi.ok
        assert sym_equal(bi.dot_free, oracle()["beta_dot"])
        assert bi.identity_ii == oracle()["beta_identity_ii"]
        for b, want in zip(sf.beta_map().beta_tilde, oracle()["beta_tilde"]):
            assert sym_equal(b, want)

    def test_probe_synthetic(self):
        r = sf.star3_rank_probe(FIXTURES / "octic_synthetic.txt", 10007, 20, 0)
        assert r.claim_verified and r.probe.max_rank == 3

    def test_probe_degenerate(self):
        r = sf.star3_rank_probe(FIXTURES / "octic_x1_8.txt", 10007, 5, 0)
        assert r.probe.max_rank == 1 and not r.claim_verified

    def test_chain_rule(self):
        # rows 1 and 2 against a direct finite computation on a small octic
        ring = PolyRing(list(sf.OCTIC_VARS))
        F = ring("c0*x1^8 + c1*x2^8 + x1^4*x3^4 + x4^8")
        pt = [1, 2, 3, 4, 5, 6, 7, 8]
        p = 10007
        rows = sf.star3_rank_at(F, pt, p)
        env = dict(zip(sf.OCTIC_VARS, pt))
        grad = [F.diff(v) for v in XS]
        assert rows[0] == [int(g.evaluate(env)) % p for g in grad]
        yr = PolyRing(["y1", "y2", "y3", "y4"])
        cp = sf.cprime_quartic(yr)
        sub = {y: g for y, g in zip(["y1", "y2", "y3", "y4"], [g.convert(ring) for g in grad])}
        comp = cp.convert(PolyRing(list(sf.OCTIC_VARS) + ["y1", "y2", "y3", "y4"]))
        comp = comp.substitute({k: v.convert(comp.ring) for k, v in sub.items()})
        want = [int(comp.diff(v).evaluate(env)) % p for v in XS]
        assert rows[1] == want

    def test_load_errors(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("vars: x1 x2\nx1\n")
        with pytest.raises(FileError):
            sf.load_octic(bad)
        deg = tmp_path / "deg.txt"
        deg.write_text("vars: c0 c1 c2 c3 x1 x2 x3 x4\nx1^7\n")
        with pytest.raises(DegreeMismatch):
            sf.load_octic(deg)


class TestInvariants:
    @pytest.mark.parametrize("name,k2,pg", [("CHPP", 5, 2), ("AC3", 6, 2), ("HESSE3", 6, 3),
                                            ("PP4", 6, 2), ("QUARTIC4", 6, 3)])
    def test_values(self, name, k2, pg):
        inv = sf.numeric_invariants(name)
        assert inv.K2_S == k2 and inv.p_g == inv.q == pg and inv.chi == 1
        assert inv.consistent()
        assert inv.K2_Sprime == inv.delta ** 2 * k2

    def test_c2f(self):
        assert sf.numeric_invariants("PP4").c2_F == 18
        assert sf.numeric_invariants("QUARTIC4").c2_F == 32
        assert sf.numeric_invariants("QUARTIC4").K2_Sprime == 96
        assert sf.numeric_invariants("CHPP").K2_Sprime == 20

    def test_unknown(self):
        with pytest.raises(UnknownFamily):
            sf.numeric_invariants("K3")
        with pytest.raises(UnknownFamily):
            sf.family("nope")
