"""Command-line entry point."""

from __future__ import annotations

import argparse
import json
import sys

from .. import __version__
from ..elim.groebner import IdealBasis, groebner, is_projectively_empty
from ..elim.idealfile import read_ideal_file
from ..elim.probe import DEFAULT_PRIME
from ..errors import HeisurfError
from ..exactmath.matrix import ExactMatrix
from ..heis.group import HeisType, dual_rep, schrodinger_rep
from ..heis.modules import GradedModule, eigenspace_basis
from ..poly.parse import parse_poly, serialize
from ..poly.ring import PolyRing
from .. import surfaces as sf
from .report import emit_report
from .suite import run_suite


def _pair(text: str) -> tuple:
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers 'a,b', got {text!r}") from None
    return a, b


def _matrix_text(m: ExactMatrix, field) -> str:
    ring = PolyRing([], field)
    cells = [[serialize(ring.constant(m[i, j])) for j in range(m.cols)] for i in range(m.rows)]
    width = max(len(c) for r in cells for c in r)
    return "\n".join("  [" + "  ".join(c.rjust(width) for c in r) + "]" for r in cells)


def _out(args, text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------- commands

def cmd_verify(args) -> int:
    report = run_suite(args.filter, args.seed, args.prime, args.octic, args.jobs, args.timings)
    if args.json:
        emit_report(report, "json", args.json)
    if args.json != "-":
        emit_report(report, "text")
        print(report.summary())
    return report.exit_code


def cmd_chpp_disc(args) -> int:
    d = sf.chpp_discriminant(args.lam)
    _out(args, f"discriminant: {serialize(d.determinant)}\nresultant route agrees: {'yes' if d.routes_agree else 'no'}")
    return 0 if d.routes_agree else 1


def cmd_pp4_branch(args) -> int:
    mu = None if args.symbolic or args.mu is None else args.mu
    b = sf.pp4_branch_locus(mu, args.chart)
    _out(args, serialize(b.sextic))
    return 0


def cmd_heis_rep(args) -> int:
    t = HeisType(*args.type)
    lines = [f"Heis type {t.d1},{t.d2}: delta = {t.delta}, field = {t.field}"]
    for title, rep in (("V", schrodinger_rep(t)), ("dual", dual_rep(t))):
        for name, m in rep.items():
            lines.append(f"{title} {name}:")
            lines.append(_matrix_text(m, t.field))
    _out(args, "\n".join(lines))
    return 0


def _parse_character(text: str | None, t: HeisType) -> dict:
    if not text:
        return {g: 1 for g in t.generators if g != "Z"}
    ring = PolyRing([], t.field)
    out = {}
    for part in text.split(","):
        name, _, val = part.partition("=")
        name = name.strip()
        t.gen(name)
        out[name] = parse_poly(val, ring).constant_coeff()
    return out


def cmd_invariants(args) -> int:
    fam = sf.family(args.family)
    if args.numeric:
        inv = sf.numeric_invariants(args.family)
        _out(args, json.dumps(inv.as_dict(), sort_keys=True))
        return 0
    t = fam.heis_type
    d, e = args.degrees
    mod = GradedModule(t, d, e, x=fam.x)
    chi = _parse_character(args.character, t)
    basis = eigenspace_basis(t, mod, chi)
    lines = [f"{fam.name}: type {t.d1},{t.d2}, Sym^{d} (x) Sym^{e}, dim {mod.dim}, eigenspace dim {len(basis)}"]
    lines += [serialize(f) for f in basis]
    _out(args, "\n".join(lines))
    return 0


def cmd_groebner(args) -> int:
    _, polys = read_ideal_file(args.ideal, args.order)
    gb = groebner(IdealBasis(polys, args.order))
    _out(args, "\n".join(serialize(g) for g in gb) if len(gb) else "0")
    return 0


def cmd_probe(args) -> int:
    r = sf.star3_rank_probe(args.octic, args.prime, args.samples, args.seed)
    p = r.probe
    _out(args, "\n".join([
        f"max rank: {p.max_rank} (samples used {p.samples_used}, prime {p.prime}, seed {p.seed})",
        f"witness: {json.dumps(p.witness, sort_keys=True)}",
        f"claim verified: {'yes' if r.claim_verified else 'no'}",
    ]))
    return 0 if r.claim_verified else 1


def cmd_smooth(args) -> int:
    _, polys = read_ideal_file(args.ideal)
    cert = is_projectively_empty(polys, args.projective.replace(",", " ").split())
    if cert:
        _out(args, "empty: yes\ncertificate: " + json.dumps(cert.exponents, sort_keys=True))
    else:
        _out(args, "empty: no")
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="heisurf", description="Exact computations for Heisenberg-invariant surfaces.")
    ap.add_argument("--version", action="version", version=f"heisurf {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the reproduction suite")
    v.add_argument("--filter", help="glob on check ids, e.g. 'chpp.*'")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    v.add_argument("--json", metavar="PATH", help="also write the JSON report ('-' for stdout only)")
    v.add_argument("--octic", metavar="FILE", help="external octic F(c, x) for the rank probe")
    v.add_argument("--jobs", type=int, default=4)
    v.add_argument("--timings", action="store_true", help="record elapsed_ms (breaks byte-identical output)")
    v.set_defaults(fn=cmd_verify)

    c = sub.add_parser("chpp", help="CHPP family computations")
    csub = c.add_subparsers(dest="what", required=True)
    cd = csub.add_parser("disc", help="discriminant of the projection")
    cd.add_argument("--lambda", dest="lam", help="rational value (default symbolic)")
    cd.set_defaults(fn=cmd_chpp_disc)

    p = sub.add_parser("pp4", help="PP4 family computations")
    psub = p.add_subparsers(dest="what", required=True)
    pb = psub.add_parser("branch-locus", help="branch sextic")
    g = pb.add_mutually_exclusive_group()
    g.add_argument("--mu", help="rational value")
    g.add_argument("--symbolic", action="store_true", help="keep mu symbolic (default)")
    pb.add_argument("--chart", type=int, choices=(1, 2, 3), default=1)
    pb.set_defaults(fn=cmd_pp4_branch)

    h = sub.add_parser("heis", help="Heisenberg group data")
    hsub = h.add_subparsers(dest="what", required=True)
    hr = hsub.add_parser("rep", help="Schroedinger and dual representation matrices")
    hr.add_argument("--type", type=_pair, required=True, metavar="D1,D2")
    hr.set_defaults(fn=cmd_heis_rep)

    i = sub.add_parser("invariants", help="character eigenspaces or numeric invariants of a family")
    i.add_argument("--family", required=True, choices=sf.FAMILY_NAMES, type=str.upper)
    i.add_argument("--degrees", type=_pair, default=(1, 1), metavar="D,E")
    i.add_argument("--character", metavar="CHI", help="e.g. 'T=1,C=zeta(3)^2' (default trivial)")
    i.add_argument("--numeric", action="store_true", help="print K^2, chi, p_g, q instead")
    i.set_defaults(fn=cmd_invariants)

    gb = sub.add_parser("groebner", help="reduced Groebner basis of an ideal file")
    gb.add_argument("--ideal", required=True, metavar="FILE")
    gb.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    gb.set_defaults(fn=cmd_groebner)

    pr = sub.add_parser("probe-rank", help="Jacobian rank probe of the octic system")
    pr.add_argument("--octic", required=True, metavar="FILE")
    pr.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    pr.add_argument("--samples", type=int, default=20)
    pr.add_argument("--seed", type=int, default=0)
    pr.set_defaults(fn=cmd_probe)

    sm = sub.add_parser("smooth", help="projective emptiness certificate")
    sm.add_argument("--ideal", required=True, metavar="FILE")
    sm.add_argument("--projective", required=True, metavar="VARS", help="e.g. 'y1,y2,y3'")
    sm.set_defaults(fn=cmd_smooth)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (HeisurfError, KeyError, ValueError) as exc:
        print(f"heisurf: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
