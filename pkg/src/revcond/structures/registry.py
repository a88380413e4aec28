"""Structure ids, construction from id strings, and the strategy table."""
from __future__ import annotations

from .arithmetic import Divisibility, IntegerLine
from .base import Structure
from .functions import FinSupport, FnOmega
from .planes import HalfPlane, QxQ, ZxZ
from .product import Product
from .random_poset import RandomPoset
from .sets import FiniteSets, LevelRestricted
from ..errors import IncompatibleError, ParseError

_SIMPLE = {
    "divisibility": Divisibility,
    "finite-sets": FiniteSets,
    "fn-omega": FnOmega,
    "fin-support": FinSupport,
    "half-plane": HalfPlane,
    "zxz": ZxZ,
    "qxq": QxQ,
    "random-poset": RandomPoset,
    "z": IntegerLine,
}

STRUCTURE_IDS = (
    "divisibility",
    "finite-sets",
    "level-restricted(A)",
    "fn-omega",
    "fin-support",
    "half-plane",
    "zxz",
    "qxq",
    "random-poset",
)

RUN_STRATEGIES = ("well-founded", "rooted-directed", "convex", "universal")
TRANSFERS = ("product-lift", "subset-lift")


def _split_args(body: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in body:
        depth += (ch == "(") - (ch == ")")
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    return out + [cur]


def get_structure(sid: str) -> Structure:
    if sid in _SIMPLE:
        return _SIMPLE[sid]()
    if sid.startswith("level-restricted(") and sid.endswith(")"):
        try:
            return LevelRestricted(sid[len("level-restricted("):-1])
        except ValueError as exc:
            raise ParseError(f"bad size set in {sid!r}: {exc}") from None
    if sid.startswith("product(") and sid.endswith(")"):
        return Product([get_structure(s) for s in _split_args(sid[len("product("):-1])])
    raise ParseError(f"unknown structure {sid!r}")


def listed_structures() -> list[Structure]:
    """One instance per listed id (level-restricted with its default parameter)."""
    return [
        get_structure("level-restricted(all)" if s == "level-restricted(A)" else s)
        for s in STRUCTURE_IDS
    ]


def transfers_for(structure: Structure) -> list[str]:
    # any non-reversible poset can be the first factor of a product
    out = ["product-lift"]
    if structure.id == "finite-sets":
        out.append("subset-lift")
    return out


def check_compatible(structure: Structure, strategy: str) -> None:
    if strategy not in RUN_STRATEGIES:
        raise IncompatibleError(f"unknown strategy {strategy!r}")
    if strategy not in structure.strategies:
        ok = ", ".join(structure.strategies) or "none"
        raise IncompatibleError(
            f"{structure.id} does not support {strategy} (supported: {ok})"
        )
