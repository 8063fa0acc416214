"""The reproduction suite: every explicit computation as a named check."""

from __future__ import annotations

import fnmatch
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .. import __version__
from ..elim.groebner import groebner, s_polynomial
from ..elim.probe import DEFAULT_PRIME
from ..exactmath.matrix import ExactMatrix, det_bareiss, det_cofactor
from ..heis.group import HeisType
from ..heis.modules import GradedModule, eigenspace_basis
from ..heis.relations import gamma_delta2, involution_normalizes, verify_group_relations
from ..poly.parse import parse_poly, serialize
from ..poly.ring import MultiPoly, PolyRing
from .. import surfaces as sf
from .report import Check, VerificationReport


class Skip(Exception):
    """Raised by a check that cannot run with the given inputs."""


@dataclass
class Outcome:
    ok: bool
    expected: str | None = None
    actual: str | None = None
    detail: str = ""


@dataclass
class SuiteContext:
    seed: int = 0
    prime: int = DEFAULT_PRIME
    octic: str | None = None


@dataclass(frozen=True)
class CheckSpec:
    id: str
    anchor: str
    fn: Callable[[SuiteContext], Outcome]


REGISTRY: list = []


def check(cid: str, anchor: str):
    def deco(fn):
        REGISTRY.append(CheckSpec(cid, anchor, fn))
        return fn
    return deco


def s(x) -> str:
    if isinstance(x, MultiPoly):
        return serialize(x)
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(s(v) for v in x) + "]"
    return str(x)


def scalar(field, c) -> str:
    return serialize(PolyRing([], field).constant(c))


def same(expected, actual, detail: str = "") -> Outcome:
    return Outcome(expected == actual, s(expected), s(actual), detail)


def data_file(name: str) -> str:
    return str(resources.files("heisurf") / "data" / name)


# ---------------------------------------------------------------- heis

HEIS_TYPES = [(d1, d2) for d2 in range(1, 9) for d1 in range(1, d2 + 1) if d2 % d1 == 0 and d1 * d2 <= 8]


def _relations_check(d1, d2):
    def fn(ctx):
        rep = verify_group_relations(HeisType(d1, d2))
        t = HeisType(d1, d2)
        comms = {k: scalar(t.field, v) if v is not None else "None" for k, v in rep.commutators.items()}
        return Outcome(rep.passed, "all relations", "all relations" if rep.passed else "; ".join(rep.failures),
                       detail=str(comms))
    return fn


for _d1, _d2 in HEIS_TYPES:
    check(f"heis.relations.{_d1}x{_d2}", "Heisenberg group, central extension")(_relations_check(_d1, _d2))


@check("heis.gamma.delta2", "delta = 2: g1 g2 g1 g2 acts by -1")
def _gamma(ctx):
    g = gamma_delta2(HeisType(1, 2))
    return same("-1", str(g.scalar_value()))


@check("heis.commutator.delta3", "delta = 3 commutator")
def _comm3(ctx):
    t = HeisType(1, 3)
    c = t.commutator(t.gen("T"), t.gen("C"))
    val = t.matrix(c).scalar_value()
    return Outcome(val is not None and val in (t.root(1), t.root(2)), "zeta(3)^(+-1)", scalar(t.field, val))


@check("heis.pairing.trivial", "unique invariant sum x_j y_j")
def _pairing(ctx):
    bad = []
    for d1, d2 in ((1, 2), (1, 3), (1, 4), (2, 2)):
        t = HeisType(d1, d2)
        mod = GradedModule(t, 1, 1)
        chars = {g: 1 for g in t.generators if g != "Z"}
        basis = eigenspace_basis(t, mod, chars)
        want = mod.ring(" + ".join(f"y{i}*x{i}" for i in range(1, t.delta + 1)))
        if basis != [want]:
            bad.append(f"{d1}x{d2}: {s(basis)}")
    return Outcome(not bad, "sum y_j*x_j", "sum y_j*x_j" if not bad else "; ".join(bad))


@check("heis.involution.normalizes", "involution iota from the extended Heisenberg group")
def _iota(ctx):
    ok = all(involution_normalizes(HeisType(1, n)) for n in (2, 3, 4))
    return Outcome(ok and sf.iota_swaps_cubics(), "normalizes; swaps the two cubics",
                   "normalizes; swaps the two cubics" if ok else "fails")


# ---------------------------------------------------------------- CHPP

@check("chpp.eigenspace.trivial", "CHPP invariant family derivation")
def _chpp_space(ctx):
    t = HeisType(1, 2)
    mod = GradedModule(t, 3, 1)
    basis = eigenspace_basis(t, mod, {"T": 1, "C": 1})
    want = [mod.ring("y1^3*x1 + y2^3*x2"), mod.ring("y1*y2^2*x1 + y1^2*y2*x2")]
    return Outcome(len(basis) == 2 and sf.span_equal(basis, want, mod), s(want), s(basis))


@check("chpp.family.invariant", "CHPP equation is G-invariant")
def _chpp_inv(ctx):
    fam = sf.chpp_family()
    return same("[{'T': 1, 'C': 1}]", str(fam.characters))


@check("chpp.partial.y1", "CHPP partial derivative in y1")
def _chpp_partial(ctx):
    f = sf.chpp_equation()
    return same(f.ring("x1*(3*y1^2 + lam*y2^2) + x2*(2*lam*y1*y2)"), f.diff("y1"))


@check("chpp.disc.routes", "CHPP discriminant: determinant equals resultant")
def _chpp_routes(ctx):
    d = sf.chpp_discriminant()
    return Outcome(d.routes_agree, s(d.determinant), s(d.resultant))


@check("chpp.disc.lambda0", "CHPP discriminant at lambda = 0")
def _chpp_l0(ctx):
    d = sf.chpp_discriminant(0)
    want = d.determinant.ring("81*x1^2*x2^2")
    return Outcome(d.determinant == want and d.resultant == want, s(want), s(d.determinant))


@check("chpp.disc.symmetry", "CHPP discriminant symmetric in x1, x2")
def _chpp_sym(ctx):
    det = sf.chpp_discriminant().determinant
    return same(det, sf.swap_x(det))


@check("chpp.quartic.derived", "CHPP singular-fibre quartic")
def _chpp_quartic(ctx):
    q = sf.chpp_singular_fiber_quartic()
    return same(q.ring("lam + lam*z^4 + (3 - lam^2)*z^2"), q)


@check("chpp.quartic.even", "CHPP quartic roots come in opposite pairs")
def _chpp_even(ctx):
    q = sf.chpp_singular_fiber_quartic()
    return same(q, q.substitute({"z": -q.ring.var("z")}))


@check("chpp.companion.resultant", "CHPP common root only for lambda = +-1")
def _chpp_comp(ctx):
    r = sf.companion_resultant()
    want = r.ring("(1 - lam^2)^2")
    return Outcome(r == want or r == -want, s(want), s(r))


@check("chpp.zeuthen_segre", "CHPP: mu = 12 singular fibres")
def _zs(ctx):
    return same(12, sf.zeuthen_segre_count(4, 4))


# ---------------------------------------------------------------- PP4

@check("pp4.minors", "PP4 equations as 2x2 minors")
def _pp4_minors(ctx):
    eqs = sf.pp4_equations()
    want = [eqs[k] * sign for sign, k in sf.MINOR_DICTIONARY]
    return same(want, sf.pp4_minors())


@check("pp4.equivariance.C", "PP4 lemma: eigenvalues 1, eps^2, eps")
def _pp4_c(ctx):
    t = HeisType(1, 3)
    eig, _, _ = sf.pp4_equivariance()
    want = [t.field.one, t.root(2), t.root(1)]
    return Outcome(eig == want, s([scalar(t.field, v) for v in want]),
                   s([scalar(t.field, v) if v is not None else "None" for v in eig]))


@check("pp4.equivariance.T", "PP4 lemma: F1, F2, F3 cyclically permuted")
def _pp4_t(ctx):
    _, imgs, lifted = sf.pp4_equivariance()
    perm = [next((i for i, f in enumerate(lifted) if f == g), None) for g in imgs]
    return Outcome(sorted(p for p in perm if p is not None) == [0, 1, 2], "a cyclic permutation", str(perm))


@check("pp4.pencil.coefficients", "PP4 conic pencil p(s, t)")
def _pp4_pencil(ctx):
    co = sf.pencil_coefficients(sf.pencil_poly())
    want = [parse_poly(t, c.ring) for c, t in zip(co, sf.PRINTED_PENCIL_COEFFS)]
    return same(want, list(co))


@check("pp4.branch.sextic", "PP4 branch locus equation")
def _pp4_sextic(ctx):
    b = sf.pp4_branch_locus()
    return same(sf.printed_sextic(), b.sextic)


@check("pp4.branch.parts", "PP4 branch locus coefficients")
def _pp4_parts(ctx):
    parts = sf.sextic_parts(sf.pp4_branch_locus().sextic)
    exp, act = [], []
    for mono, coeff in sf.PRINTED_SEXTIC_PARTS.items():
        e = parse_poly(coeff, parts[mono].ring)
        exp.append(f"{mono}: {s(e)}")
        act.append(f"{mono}: {s(parts[mono])}")
    return same(exp, act)


@check("pp4.branch.misprint", "PP4 branch locus middle term")
def _pp4_flag(ctx):
    sextic = sf.pp4_branch_locus().sextic
    rep = sf.flagged_term_report(sextic)
    printed, corrected = sf.FLAGGED_TERM
    as_printed = sf.printed_sextic(as_printed=True)
    ok = rep[printed].is_zero() and not rep[corrected].is_zero() and as_printed != sextic
    return Outcome(ok, f"{printed}: 0; {corrected}: nonzero",
                   f"{printed}: {s(rep[printed])}; {corrected}: {s(rep[corrected])}",
                   detail=f"the printed {printed} term is not in the computed sextic; read as {corrected}")


@check("pp4.branch.cyclic", "PP4 branch locus cyclic invariance")
def _pp4_cyc(ctx):
    b = sf.pp4_branch_locus().sextic
    return same(b, sf.cyclic_s(b))


@check("pp4.branch.charts", "PP4 branch locus from the other charts")
def _pp4_charts(ctx):
    b = sf.pp4_branch_locus().sextic
    others = [sf.pp4_branch_locus(chart=c).sextic for c in (2, 3)]
    return Outcome(all(o == b for o in others), s(b), s(others[0]) if others[0] != b else s(others[1]))


@check("pp4.penegini_polizzi", "PP4 Penegini-Polizzi substitution")
def _pp4_pp(ctx):
    ok = sf.penegini_polizzi_roundtrip(sf.pp4_branch_locus().sextic)
    return Outcome(ok, "round trip", "round trip" if ok else "mismatch")


@check("pp4.gamma", "PP4 gamma components")
def _pp4_gamma(ctx):
    return same(sf.printed_gamma(), sf.pp4_gamma())


@check("pp4.gamma.dictionary", "PP4 gamma dictionary a, b, c, d, e")
def _pp4_dict(ctx):
    got = sf.gamma_dictionary(sf.pp4_gamma())
    return same({k: v for k, v in sf.PRINTED_DICTIONARY.items()}, {k: s(v) for k, v in got.items()})


# ---------------------------------------------------------------- Hesse / AC3

@check("hesse.gradient", "Hesse pencil: 3 q_j = df_m/dy_j")
def _hesse_grad(ctx):
    ok = sf.hesse_gradient_identity()
    return Outcome(ok, "identity", "identity" if ok else "mismatch")


def _hesse_smooth(m, want):
    def fn(ctx):
        cert = sf.hesse_smoothness(m)
        verdict = "smooth" if cert else "singular"
        agree = (not cert) == sf.is_singular_member(m)
        return Outcome(verdict == want and agree, want, verdict, detail=str(cert.exponents))
    return fn


for _m, _want in (("0", "smooth"), ("1", "smooth"), ("-1/2", "singular")):
    check(f"hesse.smooth.m={_m}", "Hesse pencil singular iff (2m)^3 = -1")(_hesse_smooth(_m, _want))


@check("hesse.dual.groebner", "dual sextic B_m membership")
def _hesse_dual(ctx):
    res = {m: sf.dual_membership(m) for m in (0, 1, 2, -1)}
    return Outcome(all(res.values()), "all reduce to 0", str(res))


@check("hesse.dual.sampled", "dual sextic B_m at random curve points")
def _hesse_sampled(ctx):
    r = sf.sampled_duality(100, ctx.prime, ctx.seed)
    return Outcome(r.ok, "100 points, 0 failures", f"{len(r.points)} points, {r.failures} failures")


@check("hesse.dual.cyclic", "dual sextic cyclic symmetry")
def _hesse_cyc(ctx):
    b = sf.hesse_dual_sextic()
    return same(b, sf.cyclic_x(b))


@check("hesse.lambda_dictionary", "Hesse family lambda = 6m")
def _hesse_lam(ctx):
    ok = sf.hesse_lambda_dictionary()
    return Outcome(ok, "lam = 6*m", "lam = 6*m" if ok else "mismatch")


@check("delta3.cubics.span", "delta = 3 invariant cubics")
def _d3_span(ctx):
    basis, named, _ = sf.delta3_invariant_cubics()
    mod = GradedModule(HeisType(1, 3), 3, 0)
    return Outcome(len(basis) == 4 and sf.span_equal(basis, named, mod), s(named), s(basis))


@check("delta3.cubics.eigenvalues", "delta = 3 cubics: eigenvalues 1, 1, eps^2, eps")
def _d3_eig(ctx):
    t = HeisType(1, 3)
    _, _, eig = sf.delta3_invariant_cubics()
    want = sf.expected_delta3_eigenvalues()
    fmt = lambda vs: [scalar(t.field, v) if v is not None else "None" for v in vs]  # noqa: E731
    return same(fmt(want), fmt(eig))


@check("delta3.pairing", "delta = 3: sum y_j x_j is the only invariant")
def _d3_pair(ctx):
    basis, mod = sf.pairing_component()
    return same([mod.ring("y1*x1 + y2*x2 + y3*x3")], basis)


@check("ac3.smooth", "AC3 cubic gradient cannot vanish")
def _ac3(ctx):
    cert = sf.ac3_smoothness()
    return Outcome(bool(cert), "projectively empty", "projectively empty" if cert else "not empty",
                   detail=str(cert.exponents))


@check("ac3.family.eigen", "AC3 equations carry a character")
def _ac3_eig(ctx):
    return Outcome(sf.is_eigen_family(sf.ac3_family()) and sf.is_eigen_family(sf.hesse3_family()),
                   "eigenvectors", "eigenvectors")


# ---------------------------------------------------------------- quartic family

@check("quartic4.eigenspace", "quartic family: Heisenberg-invariant pencil")
def _q4_space(ctx):
    basis, mod = sf.quartic4_eigenspace()
    want = [mod.ring("y1^2 + y3^2"), mod.ring("y2*y4")]
    ok = basis == want and sf.pencil_is_stable() and sf.translation_swaps_pencil()
    return Outcome(ok, s(want), s(basis))


@check("quartic4.smooth.lambda=2", "quartic family: C smooth")
def _q4_smooth(ctx):
    cert = sf.curve_smoothness(2)
    return Outcome(bool(cert), "smooth", "smooth" if cert else "singular", detail=str(cert.exponents))


@check("quartic4.singular.lambda=0", "quartic family: lambda != 0, +-1, +-i")
def _q4_sing(ctx):
    cert = sf.curve_smoothness(0)
    return Outcome(not cert, "singular", "smooth" if cert else "singular")


@check("quartic4.beta.dot", "beta map: y . beta is the C' quartic")
def _q4_beta_i(ctx):
    bi = sf.beta_identities()
    ok = bi.lam_part.is_zero() and bi.matches_printed and bi.matches_cprime
    return Outcome(ok, s(sf.cprime_quartic(bi.dot_free.ring)), s(bi.dot_free))


@check("quartic4.beta.tilde", "beta map: degree 5 rewriting")
def _q4_beta_ii(ctx):
    ok = sf.beta_identities().identity_ii
    return Outcome(ok, "2*y2*y4*beta - beta~ = Q1*beta1", "holds" if ok else "fails")


@check("quartic4.star3.synthetic", "octic system rank probe")
def _q4_probe(ctx):
    r = sf.star3_rank_probe(data_file("octic_synthetic.txt"), ctx.prime, 20, ctx.seed)
    return Outcome(r.claim_verified, "3", str(r.probe.max_rank), detail=f"witness {r.probe.witness}")


@check("quartic4.star3.degenerate", "octic system rank probe, degenerate input")
def _q4_degenerate(ctx):
    r = sf.star3_rank_probe(data_file("octic_x1_8.txt"), ctx.prime, 20, ctx.seed)
    return Outcome(r.probe.max_rank <= 2 and not r.claim_verified, "<= 2, unverified",
                   f"{r.probe.max_rank}, {'verified' if r.claim_verified else 'unverified'}")


@check("quartic4.star3.external", "octic system rank probe, external octic")
def _q4_external(ctx):
    if not ctx.octic:
        raise Skip("no octic file given (use --octic)")
    r = sf.star3_rank_probe(ctx.octic, ctx.prime, 20, ctx.seed)
    return Outcome(r.claim_verified, "3", str(r.probe.max_rank), detail=f"witness {r.probe.witness}")


# ---------------------------------------------------------------- invariants

INVARIANT_TABLE = {
    "CHPP": {"K2_S": 5, "K2_Sprime": 20, "chi": 1, "c2_F": None},
    "PP4": {"K2_S": 6, "K2_Sprime": 54, "chi": 1, "c2_F": 18},
    "AC3": {"K2_S": 6, "K2_Sprime": 54, "chi": 1, "c2_F": None},
    "HESSE3": {"K2_S": 6, "K2_Sprime": 54, "chi": 1, "c2_F": None},
    "QUARTIC4": {"K2_S": 6, "K2_Sprime": 96, "chi": 1, "c2_F": 32},
}


def _inv_check(name):
    def fn(ctx):
        inv = sf.numeric_invariants(name)
        got = {k: getattr(inv, k) for k in INVARIANT_TABLE[name]}
        return Outcome(got == INVARIANT_TABLE[name] and inv.consistent(), str(INVARIANT_TABLE[name]), str(got))
    return fn


for _name in INVARIANT_TABLE:
    check(f"invariants.{_name.lower()}", "numerical invariants K^2, chi")(_inv_check(_name))


@check("invariants.k2_delta_plus_3", "K^2_S = delta + 3 for d = 3")
def _k2(ctx):
    got = {d: sf.k2_triple_cover(d) // d ** 2 for d in range(2, 9)}
    return same({d: d + 3 for d in range(2, 9)}, got)


# ---------------------------------------------------------------- infrastructure

def _suite_polys() -> list:
    out = [sf.chpp_equation(), sf.chpp_discriminant().determinant, sf.chpp_singular_fiber_quartic()]
    out += sf.pp4_equations() + [sf.pp4_branch_locus().sextic] + sf.pp4_gamma()
    out += [sf.hesse_cubic(), sf.hesse_dual_sextic(), sf.ac3_cubic()] + list(sf.hesse_q())
    out += list(sf.quartic_q()) + sf.beta_map().beta_tilde
    out += sf.pp4_family().equations + sf.quartic4_family().equations
    return out


@check("infra.roundtrip", "parse and serialize round trip")
def _roundtrip(ctx):
    bad = [f for f in _suite_polys() if parse_poly(serialize(f), f.ring) != f]
    return Outcome(not bad, "0 mismatches", f"{len(bad)} mismatches")


@check("infra.groebner.spairs", "Groebner bases: S-polynomials reduce to 0")
def _spairs(ctx):
    ideals = [[f.diff(v) for v in ("y1", "y2", "y3")] for f in (sf.ac3_cubic(), sf.hesse_cubic(1))]
    ideals.append(sf.curve_singular_ideal(2))
    bad = 0
    for gens in ideals:
        gb = groebner(gens)
        basis = list(gb)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                if not gb.reduce(s_polynomial(basis[i], basis[j])).is_zero():
                    bad += 1
        bad += sum(not gb.reduce(g).is_zero() for g in gens)
    return Outcome(bad == 0, "0 nonzero remainders", f"{bad} nonzero remainders")


@check("infra.det.bareiss", "Bareiss determinant equals cofactor expansion")
def _det(ctx):
    import random

    rng = random.Random(f"{ctx.seed}:det")
    bad = 0
    for k in range(200):
        n = 1 + k % 4
        m = ExactMatrix.from_rows([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        bad += det_bareiss(m) != det_cofactor(m)
    return Outcome(bad == 0, "200 agreements", f"{200 - bad} agreements")


# ---------------------------------------------------------------- runner

def select(pattern: str | None) -> list:
    if not pattern:
        return list(REGISTRY)
    return [c for c in REGISTRY if fnmatch.fnmatchcase(c.id, pattern)]


def run_one(spec: CheckSpec, ctx: SuiteContext, timings: bool) -> Check:
    t0 = time.perf_counter()
    try:
        out = spec.fn(ctx)
        status = "pass" if out.ok else "fail"
        chk = Check(spec.id, spec.anchor, status, out.expected, out.actual, 0, out.detail)
    except Skip as exc:
        chk = Check(spec.id, spec.anchor, "skipped", None, None, 0, str(exc))
    except Exception as exc:  # child errors become fail entries
        chk = Check(spec.id, spec.anchor, "fail", None, None, 0, f"{type(exc).__name__}: {exc}")
    if timings:
        chk.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return chk


def run_suite(pattern: str | None = None, seed: int = 0, prime: int = DEFAULT_PRIME, octic: str | None = None,
              jobs: int = 4, timings: bool = False) -> VerificationReport:
    """Run the matching checks in a worker pool; the report is sorted by id."""
    ctx = SuiteContext(seed, prime, octic)
    specs = select(pattern)
    if jobs <= 1 or len(specs) <= 1:
        results = [run_one(sp, ctx, timings) for sp in specs]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda sp: run_one(sp, ctx, timings), specs))
    return VerificationReport(results, seed, prime, __version__)


__all__ = ["CheckSpec", "Outcome", "REGISTRY", "Skip", "SuiteContext", "run_one", "run_suite", "select"]
