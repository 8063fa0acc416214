"""Reader for ideal and polynomial files.

Format: a first non-comment line ``vars: x1 x2 ...``, optionally a line
``field: QQ | GF(p) | QQ(zeta(n))``, then one polynomial per line.  Text
after '#' is ignored.
"""

from __future__ import annotations

from pathlib import Path

from ..errors import FileError, PolySyntaxError
from ..exactmath.scalars import QQ, field_from_spec
from ..poly.parse import parse_poly
from ..poly.ring import PolyRing


def parse_ideal_text(text: str, order: str = "grevlex"):
    names = None
    field = QQ
    polys_src = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if names is None:
            if not line.startswith("vars:"):
                raise FileError(f"line {lineno}: expected 'vars:' declaration")
            names = line[5:].split()
            if not names:
                raise FileError(f"line {lineno}: empty variable list")
            continue
        if line.startswith("field:") and not polys_src:
            try:
                field = field_from_spec(line[6:].strip())
            except ValueError as exc:
                raise FileError(f"line {lineno}: {exc}") from None
            continue
        polys_src.append((lineno, line))
    if names is None:
        raise FileError("missing 'vars:' declaration")
    ring = PolyRing(names, field, order)
    polys = []
    for lineno, line in polys_src:
        try:
            polys.append(parse_poly(line, ring))
        except PolySyntaxError as exc:
            raise PolySyntaxError(f"line {lineno}: {exc.message}", exc.offset) from None
    return ring, polys


def read_ideal_file(path, order: str = "grevlex"):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FileError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_ideal_text(text, order)
