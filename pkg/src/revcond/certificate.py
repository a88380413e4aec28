"""Certificate JSON: a replayable transcript of one run.

Certificates hold encoded strings only; verification parses them against a
freshly built structure and never touches the strategy that produced them.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .condensation import BadWitness, PartialCondensation
from .errors import ParseError
from .structures.random_poset import RandomPoset, RandomPosetState
from .structures.registry import get_structure

REQUIRED = ("structure", "strategy", "invariant", "seed", "steps", "final",
            "bad_witness", "coverage")
STEP_KINDS = ("dom", "ran")


class CertificateFormatError(ParseError):
    """The file is not a certificate (bad JSON or schema)."""


@dataclass
class Certificate:
    structure: str
    strategy: str
    invariant: str
    seed: list
    steps: list
    final: list
    bad_witness: dict
    coverage: dict
    bounds: dict | None = None
    extras: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "structure": self.structure,
            "strategy": self.strategy,
            "invariant": self.invariant,
            "seed": self.seed,
            "steps": self.steps,
            "final": self.final,
            "bad_witness": self.bad_witness,
        }
        if self.bounds is not None:
            out["bounds"] = self.bounds
        out["coverage"] = self.coverage
        out.update(self.extras)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, separators=(",", ":")) + "\n"

    def write(self, path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def from_json(cls, data) -> "Certificate":
        if not isinstance(data, dict):
            raise CertificateFormatError("certificate must be a JSON object")
        missing = [k for k in REQUIRED if k not in data]
        if missing:
            raise CertificateFormatError(f"missing keys: {', '.join(missing)}")
        for key in ("structure", "strategy", "invariant"):
            if not isinstance(data[key], str):
                raise CertificateFormatError(f"{key} must be a string")
        for key in ("seed", "final"):
            _check_pairs(data[key], key)
        if not isinstance(data["steps"], list):
            raise CertificateFormatError("steps must be a list")
        for i, st in enumerate(data["steps"]):
            if not isinstance(st, dict) or not {"kind", "target", "added"} <= set(st):
                raise CertificateFormatError(f"step {i}: needs kind, target, added")
            if not isinstance(st["target"], str) or not isinstance(st["kind"], str):
                raise CertificateFormatError(f"step {i}: kind and target must be strings")
            _check_pairs(st["added"], f"step {i} added")
        bw = data["bad_witness"]
        if not isinstance(bw, dict) or set(bw) != {"x1", "x2", "y1", "y2"}:
            raise CertificateFormatError("bad_witness needs exactly x1, x2, y1, y2")
        cov = data["coverage"]
        if not isinstance(cov, dict) or not all(
            isinstance(cov.get(k), int) for k in ("dom_prefix", "ran_prefix")
        ):
            raise CertificateFormatError("coverage needs integer dom_prefix, ran_prefix")
        extras = {k: v for k, v in data.items() if k not in REQUIRED and k != "bounds"}
        return cls(
            data["structure"], data["strategy"], data["invariant"], data["seed"],
            data["steps"], data["final"], bw, cov, data.get("bounds"), extras,
        )

    @classmethod
    def loads(cls, text: str) -> "Certificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CertificateFormatError(f"not JSON: {exc}") from None
        return cls.from_json(data)

    @classmethod
    def read(cls, path) -> "Certificate":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            raise CertificateFormatError(f"not UTF-8: {exc}") from None
        return cls.loads(text)

    def final_map(self, structure=None) -> PartialCondensation:
        s = structure or self.build_structure()
        return PartialCondensation.from_json(s, self.final)

    def seed_map(self, structure=None) -> PartialCondensation:
        s = structure or self.build_structure()
        return PartialCondensation.from_json(s, self.seed)

    def witness(self, structure=None) -> BadWitness:
        return BadWitness.from_json(structure or self.build_structure(), self.bad_witness)

    def build_structure(self):
        """A fresh structure for parsing; random posets come from the dump."""
        if self.structure == RandomPoset.id:
            if "poset" not in self.extras:
                raise CertificateFormatError("random-poset certificate lacks its poset dump")
            try:
                state = RandomPosetState.from_json(self.extras["poset"])
            except (KeyError, TypeError, ValueError) as exc:
                raise CertificateFormatError(f"bad poset dump: {exc}") from None
            return RandomPoset(state=state, frozen=True)
        try:
            return get_structure(self.structure)
        except ParseError as exc:
            raise CertificateFormatError(str(exc)) from None


def _check_pairs(value, what):
    if not isinstance(value, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(e, str) for e in p)
        for p in value
    ):
        raise CertificateFormatError(f"{what} must be a list of [x, y] string pairs")
