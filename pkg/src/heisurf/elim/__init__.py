"""Resultants, discriminants, Groebner bases and rank probes."""

from .groebner import (EmptinessCertificate, GroebnerBasis, IdealBasis, groebner,
                       is_projectively_empty, normal_form, s_polynomial)
from .idealfile import parse_ideal_text, read_ideal_file
from .probe import (DEFAULT_PRIME, ProbeResult, compile_mod, jacobian_rank_at, probe_rank,
                    random_rank_probe)
from .resultant import (cubic_discriminant, sylvester_matrix, sylvester_resultant,
                        univariate_discriminant)

__all__ = [
    "EmptinessCertificate", "GroebnerBasis", "IdealBasis", "groebner", "is_projectively_empty",
    "normal_form", "s_polynomial", "parse_ideal_text", "read_ideal_file", "DEFAULT_PRIME",
    "ProbeResult", "compile_mod", "jacobian_rank_at", "probe_rank", "random_rank_probe",
    "cubic_discriminant", "sylvester_matrix", "sylvester_resultant", "univariate_discriminant",
]
