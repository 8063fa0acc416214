import random
from itertools import combinations

import pytest
import sympy as sp

from heisurf.elim import (IdealBasis, groebner, is_projectively_empty, jacobian_rank_at,
                          normal_form, parse_ideal_text, random_rank_probe, read_ideal_file,
                          s_polynomial, sylvester_resultant, univariate_discriminant,
                          cubic_discriminant)
from heisurf.errors import BadPrime, DegreeZero, FileError, ResourceLimit, UnknownVariable
from heisurf.exactmath import PrimeField
from heisurf.poly import MultiPoly, PolyRing

from helpers import oracle, sym_equal, to_sympy

R = PolyRing(["x", "y", "z", "a", "b", "c", "d"])


class TestResultant:
    def test_linear(self):
        assert sylvester_resultant(R("x - a"), R("x - b"), "x") == R("a - b")

    def test_common_root_vanishes(self):
        assert sylvester_resultant(R("x^2 - 1"), R("x - 1"), "x").is_zero()

    def test_matches_sympy(self):
        f, g = R("x^3 + a*x + b"), R("x^2*y - c")
        r = sylvester_resultant(f, g, "x")
        X, A, B, C, Y = sp.symbols("x a b c y")
        assert sp.expand(to_sympy(r) - sp.resultant(X**3 + A*X + B, X**2*Y - C, X)) == 0

    def test_common_factor(self):
        rng = random.Random(5)
        S = PolyRing(["x", "y"])
        for _ in range(50):
            x, y = S("x"), S("y")
            h = x + y * rng.randint(-5, 5) + rng.randint(-5, 5)
            f = h * (x * x + y * rng.randint(-5, 5))
            g = h * (x - rng.randint(1, 5))
            assert sylvester_resultant(f, g, "x").is_zero()

    def test_formal_degrees(self):
        # with formal degree 2 for a*x^2 + x the leading coefficient factors out
        f, g = R("a*x^2 + x + 1"), R("x - 2")
        full = sylvester_resultant(f, g, "x", degrees=(2, 1))
        assert full == R("4*a + 3")


class TestDiscriminant:
    def test_x3_minus_x(self):
        d = univariate_discriminant(R("x^3 - x"), "x")
        assert d.constant_coeff() == int(oracle()["cubic_disc_x3_minus_x"])

    def test_quadratic(self):
        assert univariate_discriminant(R("a*x^2 + b*x + c"), "x") == R("b^2 - 4*a*c")

    def test_generic_cubic(self):
        d = univariate_discriminant(R("a*x^3 + b*x^2 + c*x + d"), "x")
        assert d == cubic_discriminant(R("a"), R("b"), R("c"), R("d"))

    def test_random_cubics(self):
        rng = random.Random(7)
        S = PolyRing(["x"])
        for _ in range(50):
            co = [rng.randint(1, 9)] + [rng.randint(-9, 9) for _ in range(3)]
            x = S("x")
            f = x ** 3 * co[0] + x ** 2 * co[1] + x * co[2] + co[3]
            assert univariate_discriminant(f, "x").constant_coeff() == cubic_discriminant(*co)

    def test_degree_too_low(self):
        with pytest.raises(DegreeZero):
            univariate_discriminant(R("x + 1"), "x")

    @pytest.mark.parametrize("p", [5, 7, 11, 13, 31, 101])
    def test_zero_iff_repeated_root(self, p):
        # over GF(p) with split polynomials a repeated root is visible by brute force
        F = PrimeField(p)
        S = PolyRing(["x"], F)
        rng = random.Random(p)
        for _ in range(40):
            roots = [rng.randrange(p) for _ in range(rng.randint(2, 4))]
            f = S.one
            for r in roots:
                f = f * (S("x") - r)
            disc = univariate_discriminant(f, "x")
            repeated = len(set(roots)) < len(roots)
            assert disc.is_zero() == repeated


class TestGroebner:
    def test_s_pairs_reduce_to_zero(self):
        S = PolyRing(["x", "y", "z"])
        gb = groebner([S("x^2 - y"), S("x*y - z"), S("y^2 - x*z")])
        g = list(gb)
        for f, h in combinations(g, 2):
            assert normal_form(s_polynomial(f, h), g).is_zero()

    def test_reduced_and_monic(self):
        S = PolyRing(["x", "y"])
        gb = groebner([S("x^2 + y"), S("x*y - 1")])
        for g in gb:
            assert g.leading_coeff() == 1
        lms = gb.leading_monomials()
        for i, m in enumerate(lms):
            for j, n in enumerate(lms):
                assert i == j or not all(a <= b for a, b in zip(m, n))

    def test_lex_elimination(self):
        S = PolyRing(["x", "y"])
        gb = groebner(IdealBasis([S("x^2 - y"), S("x - 2")], "lex"))
        assert gb.contains(S("y - 4"))

    def test_unit_ideal(self):
        S = PolyRing(["x"])
        assert groebner([S("x"), S("x + 1")]).is_unit()

    def test_resource_limit(self, monkeypatch):
        monkeypatch.setenv("HEISURF_PAIR_LIMIT", "1")
        S = PolyRing(["x", "y", "z"])
        with pytest.raises(ResourceLimit):
            groebner([S("x^2 - y"), S("x*y - z"), S("y^2 - x*z"), S("z^2 - x")])


class TestEmptiness:
    def test_coordinates(self):
        S = PolyRing(["x", "y"])
        cert = is_projectively_empty([S("x"), S("y")], ["x", "y"])
        assert cert and cert.exponents == {"x": 1, "y": 1}

    def test_not_empty(self):
        S = PolyRing(["x", "y"])
        assert not is_projectively_empty([S("x*y")], ["x", "y"])

    def test_fermat_gradient(self):
        S = PolyRing(["x", "y", "z"])
        cert = is_projectively_empty([S("x^2"), S("y^2"), S("z^2")], ["x", "y", "z"])
        assert cert.exponents == {"x": 2, "y": 2, "z": 2}

    def test_least_power(self):
        S = PolyRing(["x", "y"])
        cert = is_projectively_empty([S("x^2 - y^2"), S("x*y")], ["x", "y"])
        assert cert.exponents == {"x": 3, "y": 3}

    def test_extra_variable(self):
        S = PolyRing(["x", "y", "t"])
        with pytest.raises(UnknownVariable):
            is_projectively_empty([S("x - t")], ["x", "y"])


class TestProbe:
    def test_examples(self):
        S = PolyRing(["x", "y"])
        assert random_rank_probe([S("x"), S("y")], ["x", "y"]).max_rank == 2
        assert random_rank_probe([S("x + y"), S("2*x + 2*y")], ["x", "y"]).max_rank == 1
        assert random_rank_probe([S("x*y")], ["x", "y"]).max_rank == 1

    def test_rank_at_origin(self):
        S = PolyRing(["x", "y"])
        assert jacobian_rank_at([S("x^2"), S("y^2")], ["x", "y"], {"x": 0, "y": 0}) == 0
        assert jacobian_rank_at([S("x^2"), S("y^2")], ["x", "y"], {"x": 1, "y": 1}) == 2

    def test_deterministic(self):
        S = PolyRing(["x", "y", "z"])
        sys_ = [S("x*y*z - 1"), S("x^2 + y^2 - z^3")]
        a = random_rank_probe(sys_, ["x", "y", "z"], 10007, 5, 42)
        b = random_rank_probe(sys_, ["x", "y", "z"], 10007, 5, 42)
        assert a == b

    def test_monotone_in_samples(self):
        # a system that is rank deficient at most points: rank only grows with samples
        S = PolyRing(["x", "y"])
        sys_ = [S("x^3*y^3"), S("x^3*y^3 + x")]
        prev = -1
        for n in range(1, 8):
            r = random_rank_probe(sys_, ["x", "y"], 7, n, 3)
            assert r.ranks[: len(r.ranks)] == random_rank_probe(sys_, ["x", "y"], 7, 8, 3).ranks[: len(r.ranks)]
            assert r.max_rank >= prev
            prev = r.max_rank

    @pytest.mark.parametrize("p", [1, 4, 10008, 2**31 + 11])
    def test_bad_prime(self, p):
        S = PolyRing(["x"])
        with pytest.raises(BadPrime):
            random_rank_probe([S("x")], ["x"], p)


class TestIdealFile:
    def test_parse(self):
        ring, polys = parse_ideal_text("# c\nvars: x y\nfield: GF(7)\nx + 8*y  # tail\n")
        assert list(ring.names) == ["x", "y"] and polys == [ring("x + y")]

    def test_missing_vars(self):
        with pytest.raises(FileError):
            parse_ideal_text("x + y\n")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileError):
            read_ideal_file(tmp_path / "nope.txt")
