from ..errors import IncompatibleError
from ..structures.registry import check_compatible
from .base import SeedSpec, StepResult, Strategy
from .convex import Convex
from .lifts import SUBSETS, Subset, product_lift, subset_lift
from .universal import Universal
from .wellfounded import RootedDirected, WellFounded

STRATEGIES = {
    cls.id: cls for cls in (WellFounded, RootedDirected, Convex, Universal)
}


def make_strategy(structure, strategy_id: str, seed_spec: SeedSpec = None) -> Strategy:
    check_compatible(structure, strategy_id)
    if strategy_id not in STRATEGIES:
        raise IncompatibleError(f"unknown strategy {strategy_id!r}")
    return STRATEGIES[strategy_id](structure, seed_spec)


def default_seed(structure, strategy_id: str):
    return make_strategy(structure, strategy_id).seed


__all__ = [
    "Convex",
    "RootedDirected",
    "STRATEGIES",
    "SUBSETS",
    "SeedSpec",
    "StepResult",
    "Strategy",
    "Subset",
    "Universal",
    "WellFounded",
    "default_seed",
    "make_strategy",
    "product_lift",
    "subset_lift",
]
