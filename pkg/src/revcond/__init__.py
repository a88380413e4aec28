"""Back-and-forth construction of non-automorphic condensations of countable posets."""

from .certificate import Certificate, CertificateFormatError
from .condensation import (
    BadWitness,
    PartialCondensation,
    find_bad_witness,
    is_extension,
    verify_partial_condensation,
)
from .engine import (
    ClosureOperator,
    check_closure_laws,
    run_generic,
    verify_certificate,
)
from .order import FinitePoset, levels, linear_extension
from .strategies import default_seed, make_strategy, product_lift, subset_lift
from .structures import get_structure

__all__ = [
    "BadWitness",
    "Certificate",
    "CertificateFormatError",
    "ClosureOperator",
    "FinitePoset",
    "PartialCondensation",
    "check_closure_laws",
    "default_seed",
    "find_bad_witness",
    "get_structure",
    "is_extension",
    "levels",
    "linear_extension",
    "make_strategy",
    "product_lift",
    "run_generic",
    "subset_lift",
    "verify_certificate",
    "verify_partial_condensation",
]
