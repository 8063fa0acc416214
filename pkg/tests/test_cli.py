import json
import subprocess
import sys

import pytest

from heisurf.cli.main import main
from heisurf.cli.report import Check, VerificationReport, emit_report, load_report
from heisurf.cli.suite import REGISTRY, run_suite, select
from heisurf.errors import FileError

from helpers import FIXTURES


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestVerify:
    def test_full_suite_passes(self, capsys, tmp_path):
        path = tmp_path / "r.json"
        code, out, _ = run(capsys, "verify", "--json", str(path))
        assert code == 0
        rep = load_report(path)
        counts = rep.counts()
        assert counts["fail"] == 0 and counts["skipped"] == 1
        assert "quartic4.star3.external" in {c.id for c in rep.checks if c.status == "skipped"}
        assert out.splitlines()[-1] == rep.summary()

    def test_filter(self, capsys):
        code, out, _ = run(capsys, "verify", "--filter", "chpp.*")
        lines = [ln for ln in out.splitlines() if ln.startswith(("PASS", "FAIL", "SKIPPED"))]
        assert code == 0 and len(lines) == 10
        assert all(ln.startswith("PASS chpp.") for ln in lines)

    def test_empty_filter(self, capsys):
        code, out, _ = run(capsys, "verify", "--filter", "nothing.*", "--json", "-")
        assert code == 0
        assert json.loads(out)["checks"] == []

    def test_byte_identical(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "verify", "--json", str(a), "--seed", "3")
        run(capsys, "verify", "--json", str(b), "--seed", "3", "--jobs", "1")
        assert a.read_bytes() == b.read_bytes()

    def test_external_octic(self, capsys):
        code, out, _ = run(capsys, "verify", "--filter", "quartic4.star3.*",
                           "--octic", str(FIXTURES / "octic_synthetic.txt"))
        assert code == 0 and "SKIPPED" not in out

    def test_external_octic_degenerate_fails(self, capsys):
        code, out, _ = run(capsys, "verify", "--filter", "quartic4.star3.external",
                           "--octic", str(FIXTURES / "octic_x1_8.txt"))
        assert code == 1 and out.startswith("FAIL")

    def test_ids_unique_and_anchored(self):
        ids = [c.id for c in REGISTRY]
        assert len(ids) == len(set(ids))
        assert all(c.anchor for c in REGISTRY)
        assert len(select("pp4.*")) == 12


class TestReport:
    def test_exit_code_and_roundtrip(self, tmp_path):
        rep = VerificationReport([Check("b", "x", "pass"), Check("a", "y", "fail", "1", "2")], 5, 7)
        assert [c.id for c in rep.checks] == ["a", "b"]
        assert rep.exit_code == 1
        again = VerificationReport.from_json(rep.to_json())
        assert again.to_json() == rep.to_json()
        path = tmp_path / "r.json"
        emit_report(rep, "json", path)
        assert load_report(path).to_dict() == rep.to_dict()

    def test_duplicate_ids(self):
        with pytest.raises(ValueError):
            VerificationReport([Check("a", "x", "pass"), Check("a", "x", "pass")])

    def test_bad_status(self):
        with pytest.raises(ValueError):
            Check("a", "x", "maybe")

    def test_unwritable(self, tmp_path):
        with pytest.raises(FileError):
            emit_report(VerificationReport(), "json", tmp_path / "missing" / "r.json")

    def test_schema(self):
        with pytest.raises(ValueError):
            VerificationReport.from_dict({"schema": 99})

    def test_timings_off_by_default(self):
        rep = run_suite("heis.*", 0, 10007)
        assert all(c.elapsed_ms == 0 for c in rep.checks)


class TestSubcommands:
    def test_chpp_disc(self, capsys):
        code, out, _ = run(capsys, "chpp", "disc", "--lambda", "0")
        assert code == 0
        assert out == "discriminant: 81*x1^2*x2^2\nresultant route agrees: yes\n"

    def test_pp4_branch(self, capsys):
        code, out, _ = run(capsys, "pp4", "branch-locus", "--mu", "1")
        assert code == 0 and out.startswith("-27*s1^6")
        code, sym, _ = run(capsys, "pp4", "branch-locus", "--symbolic", "--chart", "2")
        assert code == 0 and "mu^12" in sym

    def test_heis_rep(self, capsys):
        code, out, _ = run(capsys, "heis", "rep", "--type", "1,3")
        assert code == 0 and "zeta(3)" in out and "dual C:" in out

    def test_heis_rep_bad_type(self, capsys):
        code, _, err = run(capsys, "heis", "rep", "--type", "2,3")
        assert code == 2 and err.startswith("heisurf: error:")

    def test_invariants(self, capsys):
        code, out, _ = run(capsys, "invariants", "--family", "chpp", "--degrees", "3,1")
        assert code == 0
        assert out.splitlines()[1:] == ["y1^3*x1 + y2^3*x2", "y1*y2^2*x1 + y1^2*y2*x2"]

    def test_invariants_character(self, capsys):
        code, out, _ = run(capsys, "invariants", "--family", "HESSE3", "--degrees", "3,0",
                           "--character", "T=1,C=zeta(3)^2")
        assert code == 0 and "eigenspace dim 1" in out

    def test_invariants_numeric(self, capsys):
        code, out, _ = run(capsys, "invariants", "--family", "PP4", "--numeric")
        data = json.loads(out)
        assert code == 0 and data["K2_S"] == 6 and data["c2_F"] == 18

    def test_groebner_and_smooth(self, capsys, tmp_path):
        f = tmp_path / "i.txt"
        f.write_text("vars: x y\nx^2 - y^2\nx*y\n")
        code, out, _ = run(capsys, "groebner", "--ideal", str(f))
        assert code == 0 and set(out.splitlines()) == {"x^2 - y^2", "x*y", "y^3"}
        code, out, _ = run(capsys, "smooth", "--ideal", str(f), "--projective", "x,y")
        assert code == 0 and out == 'empty: yes\ncertificate: {"x": 3, "y": 3}\n'

    def test_probe_rank(self, capsys):
        code, out, _ = run(capsys, "probe-rank", "--octic", str(FIXTURES / "octic_synthetic.txt"))
        assert code == 0 and "claim verified: yes" in out
        code, out, _ = run(capsys, "probe-rank", "--octic", str(FIXTURES / "octic_x1_8.txt"), "--samples", "3")
        assert code == 1 and "claim verified: no" in out

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "groebner", "--ideal", str(tmp_path / "none.txt"))
        assert code == 2 and "cannot read" in err

    def test_bad_prime(self, capsys):
        code, _, err = run(capsys, "probe-rank", "--octic", str(FIXTURES / "octic_x1_8.txt"), "--prime", "10")
        assert code == 2 and "prime" in err

    def test_module_entry_point(self):
        out = subprocess.run([sys.executable, "-m", "heisurf", "chpp", "disc", "--lambda", "0"],
                             capture_output=True, text=True)
        assert out.returncode == 0 and out.stdout.startswith("discriminant: 81*x1^2*x2^2")
