"""The surface families: CHPP, PP4, HESSE3/AC3 and QUARTIC4, plus numeric invariants."""

from .chpp import *  # noqa: F401,F403
from .common import FamilyDescriptor, as_rational, build, characters_of, cyc, specialize
from .hesse import *  # noqa: F401,F403
from .invariants import *  # noqa: F401,F403
from .pp4 import *  # noqa: F401,F403
from .quartic4 import *  # noqa: F401,F403

FAMILY_NAMES = ("CHPP", "PP4", "HESSE3", "AC3", "QUARTIC4")


def family(name: str, **params) -> FamilyDescriptor:
    """Build a family descriptor by name; parameters default to symbolic."""
    from ..errors import UnknownFamily

    key = name.upper()
    if key == "CHPP":
        return chpp_family(params.get("lam"))
    if key == "PP4":
        return pp4_family(params.get("mu"))
    if key == "HESSE3":
        return hesse3_family(params.get("lam"))
    if key == "AC3":
        return ac3_family()
    if key == "QUARTIC4":
        return quartic4_family(params.get("lam"))
    raise UnknownFamily(name)
