from .arithmetic import Divisibility, IntegerLine
from .base import CAPABILITIES, Structure, SuccessorResult
from .functions import FinSupport, FnOmega
from .planes import HalfPlane, QxQ, ZxZ
from .product import Product
from .random_poset import RandomPoset, RandomPosetState, rp_leq, rp_witness
from .registry import (
    RUN_STRATEGIES,
    STRUCTURE_IDS,
    check_compatible,
    get_structure,
    listed_structures,
)
from .sets import FiniteSets, LevelRestricted, SizeSet

__all__ = [
    "CAPABILITIES",
    "Divisibility",
    "FinSupport",
    "FiniteSets",
    "FnOmega",
    "HalfPlane",
    "IntegerLine",
    "LevelRestricted",
    "Product",
    "QxQ",
    "RUN_STRATEGIES",
    "RandomPoset",
    "RandomPosetState",
    "STRUCTURE_IDS",
    "SizeSet",
    "Structure",
    "SuccessorResult",
    "ZxZ",
    "check_compatible",
    "get_structure",
    "listed_structures",
    "rp_leq",
    "rp_witness",
]
