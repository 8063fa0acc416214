"""Shared test helpers: frozen oracles and sympy conversion."""

import json
import re
from functools import lru_cache
from pathlib import Path

import sympy as sp

from heisurf.poly import serialize

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"


@lru_cache(maxsize=None)
def oracle() -> dict:
    return json.loads((HERE / "oracles" / "frozen.json").read_text())


def to_sympy(f):
    """A rational MultiPoly (or its serialization) as a sympy expression."""
    text = f if isinstance(f, str) else serialize(f)
    return sp.sympify(re.sub(r"\^", "**", text))


def sym_equal(f, expr) -> bool:
    if isinstance(expr, str):
        expr = sp.sympify(expr)
    return sp.expand(to_sympy(f) - expr) == 0

# criterion number -> "PASS ..." / "FAIL ..." line, filled by the acceptance tests
ACCEPTANCE: dict = {}
