"""Strategy contract: a bad seed plus (bf1)/(bf2) extension procedures."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..condensation import (
    PartialCondensation,
    find_bad_witness,
    verify_partial_condensation,
)
from ..errors import ParseError, PreconditionError, SeedError
from ..structures.registry import check_compatible

SeedSpec = Mapping[str, str] | str | None  # named encodings, or "default"


@dataclass
class StepResult:
    added: list
    bounds: dict | None = None  # encoded, as stored in certificates
    region: dict | None = None


class Strategy:
    id = "abstract"
    invariant = "none"
    seed_names: tuple = ()

    def __init__(self, structure, seed_spec: SeedSpec = None):
        check_compatible(structure, self.id)
        self.structure = structure
        self.choices = self._resolve(seed_spec)
        self.seed = PartialCondensation(structure, self.seed_pairs(self.choices))
        self._validate_seed()
        self.start(self.seed)

    # -- subclass hooks --------------------------------------------------
    def default_choices(self) -> dict:
        raise NotImplementedError

    def seed_pairs(self, c: dict) -> list:
        raise NotImplementedError

    def start(self, seed: PartialCondensation) -> None:
        """Initialize per-run state (bounds) from the validated seed."""

    def invariant_failures(self, m: PartialCondensation) -> list[str]:
        return []

    def extend_dom(self, phi: PartialCondensation, a) -> StepResult:
        raise NotImplementedError

    def extend_ran(self, phi: PartialCondensation, b) -> StepResult:
        raise NotImplementedError

    def before_step(self) -> None:
        pass

    def bounds(self) -> dict | None:
        return None

    def extras(self) -> dict:
        return {}

    # -- seeds ----------------------------------------------------------
    def _resolve(self, spec: SeedSpec) -> dict:
        c = self.default_choices()
        if spec is None or spec == "default":
            return c
        if isinstance(spec, str):
            raise SeedError(f"seed spec must be 'default' or a mapping, got {spec!r}")
        unknown = set(spec) - set(self.seed_names)
        if unknown:
            raise SeedError(f"{self.id} seed takes {', '.join(self.seed_names)}; "
                            f"unknown: {', '.join(sorted(unknown))}")
        for name, enc in spec.items():
            try:
                c[name] = self.structure.parse(enc)
            except ParseError as exc:
                raise SeedError(f"seed element {name}: {exc}") from None
        return c

    def _validate_seed(self) -> None:
        seed = self.seed
        if len(set(seed.dom)) != len(seed.pairs):
            raise SeedError("seed is not a function")
        bad = verify_partial_condensation(seed)
        if bad:
            raise SeedError("seed is not a partial condensation: " + bad[0].message)
        if find_bad_witness(seed) is None:
            raise SeedError("seed is a partial isomorphism, not bad")
        fails = self.invariant_failures(seed)
        if fails:
            raise SeedError(f"seed breaks {self.invariant}: {fails[0]}")

    # -- helpers --------------------------------------------------------
    def require_new_dom(self, phi, a):
        if a in phi.dom:
            raise PreconditionError(f"{self.structure.encode(a)} is already in dom")

    def require_new_ran(self, phi, b):
        if b in phi.ran:
            raise PreconditionError(f"{self.structure.encode(b)} is already in ran")
