"""Verification reports: records, text and JSON emission, and loading."""

from __future__ import annotations

import json
import sys
from dataclasses import asdict, dataclass, field

from .. import __version__
from ..errors import FileError

SCHEMA = 1
STATUSES = ("pass", "fail", "skipped")


@dataclass
class Check:
    id: str
    paper_anchor: str
    status: str
    expected: str | None = None
    actual: str | None = None
    elapsed_ms: int = 0
    detail: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)
    seed: int = 0
    prime: int = 10007
    version: str = __version__

    def __post_init__(self):
        ids = [c.id for c in self.checks]
        if len(ids) != len(set(ids)):
            raise ValueError("check ids must be unique")
        self.checks = sorted(self.checks, key=lambda c: c.id)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def counts(self) -> dict:
        return {s: sum(c.status == s for c in self.checks) for s in STATUSES}

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "checks": [asdict(c) for c in self.checks],
            "suite": {"seed": self.seed, "prime": self.prime, "version": self.version},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status.upper()} {c.id} [{c.paper_anchor}]"
            if c.status == "fail" and c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        return "\n".join(lines) + ("\n" if lines else "")

    def summary(self) -> str:
        n = self.counts()
        return f"{len(self.checks)} checks: {n['pass']} passed, {n['fail']} failed, {n['skipped']} skipped"

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        suite = data.get("suite", {})
        checks = [Check(**c) for c in data.get("checks", [])]
        return cls(checks, suite.get("seed", 0), suite.get("prime", 10007), suite.get("version", __version__))

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


def emit_report(report: VerificationReport, fmt: str = "text", path=None):
    """Write the report as text or JSON to path, or to stdout when path is None or '-'."""
    if fmt not in ("text", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    out = report.to_json() if fmt == "json" else report.to_text()
    if path is None or str(path) == "-":
        sys.stdout.write(out)
        return
    try:
        with open(path, "w") as fh:
            fh.write(out)
    except OSError as exc:
        raise FileError(f"cannot write {path}: {exc.strerror or exc}") from None


def load_report(path) -> VerificationReport:
    try:
        with open(path) as fh:
            return VerificationReport.from_json(fh.read())
    except OSError as exc:
        raise FileError(f"cannot read {path}: {exc.strerror or exc}") from None


__all__ = ["Check", "SCHEMA", "VerificationReport", "emit_report", "load_report"]
