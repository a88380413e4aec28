"""Common interface of the countable posets."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterable, Iterator

from ..errors import CapabilityError, ParseError

LOCALLY_FINITE_BELOW = "locally-finite-below"
ROOTED = "rooted"
DIRECTED = "directed"
DOWNWARD_DIRECTED = "downward-directed"
HAS_MIN_SET = "has-min-set"
SELF_EMBEDDING_ABOVE = "self-embedding-above"
INTERVAL_EMBEDDINGS = "interval-embeddings"
EXTENSION_AXIOMS = "extension-axioms"

CAPABILITIES = (
    LOCALLY_FINITE_BELOW,
    ROOTED,
    DIRECTED,
    DOWNWARD_DIRECTED,
    HAS_MIN_SET,
    SELF_EMBEDDING_ABOVE,
    INTERVAL_EMBEDDINGS,
    EXTENSION_AXIOMS,
)


@dataclass(frozen=True)
class SuccessorResult:
    """Immediate successors found among the first ``budget`` elements.

    ``exact``: the set equals Is(p) restricted to the scanned window.
    ``truncated``: Is(p) may have members outside the window.
    """

    elements: frozenset
    exact: bool
    truncated: bool


class Structure:
    """A countable poset with a computable enumeration.

    Elements are plain hashable Python values; ``encode``/``parse`` convert to
    the canonical string grammar. Witness operations a structure does not
    support raise :class:`CapabilityError`.
    """

    id = "abstract"
    capabilities: frozenset = frozenset()
    strategies: tuple = ()
    summary = ""

    # -- mandatory ---------------------------------------------------------
    def leq(self, x, y) -> bool:
        raise NotImplementedError

    def enumerate(self, n: int):
        raise NotImplementedError

    def index_of(self, x) -> int:
        raise NotImplementedError

    def encode(self, x) -> str:
        raise NotImplementedError

    def _parse(self, s: str):
        raise NotImplementedError

    # -- derived -----------------------------------------------------------
    def parse(self, s: str):
        if not isinstance(s, str):
            raise ParseError(f"{self.id}: expected a string, got {type(s).__name__}")
        try:
            x = self._parse(s)
        except ParseError:
            raise
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise ParseError(f"{self.id}: cannot parse {s!r}: {exc}") from None
        if self.encode(x) != s:
            raise ParseError(f"{self.id}: {s!r} is not canonical (expected {self.encode(x)!r})")
        return x

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def has(self, cap: str) -> bool:
        return cap in self.capabilities

    def require(self, cap: str, op: str) -> None:
        if cap not in self.capabilities:
            raise CapabilityError(f"{self.id} lacks {cap} (needed by {op})")

    def elements(self) -> Iterator:
        for n in count():
            yield self.enumerate(n)

    def sort_key(self, x):
        return self.index_of(x)

    def sorted(self, xs: Iterable) -> list:
        return sorted(xs, key=self.index_of)

    # -- optional witness operations ---------------------------------------
    root = None

    def principal_ideal(self, p) -> frozenset:
        raise CapabilityError(f"{self.id} has infinite principal ideals")

    def layer_one(self) -> Iterator:
        """Canonical infinite minimal layer in index order: Is(root), or Min(P)."""
        raise CapabilityError(f"{self.id} has no canonical minimal layer")

    def fresh_min_avoiding(self, avoid) -> object:
        avoid = set(avoid)
        for x in self.layer_one():
            if x not in avoid:
                return x
        raise AssertionError("minimal layer is infinite")

    def upper_bound(self, S) -> object:
        raise CapabilityError(f"{self.id} is not directed")

    def strict_upper_bound(self, S) -> object:
        raise CapabilityError(f"{self.id} is not directed")

    def step_up(self, x) -> object:
        """Canonical element strictly above ``x``."""
        return self.strict_upper_bound([x])

    def increasing_chain_above(self, p, avoid, k: int) -> list:
        self.require(DIRECTED, "increasing_chain_above")
        avoid = set(avoid)
        out, cur = [], p
        while len(out) < k:
            cur = self.step_up(cur)
            while cur in avoid:
                cur = self.step_up(cur)
            out.append(cur)
        return out

    def embed_ideal_above(self, a, p) -> dict:
        raise CapabilityError(f"{self.id} lacks {SELF_EMBEDDING_ABOVE}")

    def interval_embed(self, p, q, direction, r):
        raise CapabilityError(f"{self.id} lacks {INTERVAL_EMBEDDINGS}")

    def incomparable_to_box(self, p, q):
        raise CapabilityError(f"{self.id} lacks {INTERVAL_EMBEDDINGS}")

    def exact_covers(self, p):
        """Finite set of all immediate successors, or None if infinite/unknown."""
        return None

    def immediate_successors(self, p, budget: int) -> SuccessorResult:
        covers = self.exact_covers(p)
        if covers is not None:
            found = frozenset(q for q in covers if self.index_of(q) < budget)
            return SuccessorResult(found, True, len(found) < len(covers))
        if not self.has(LOCALLY_FINITE_BELOW):
            raise CapabilityError(f"{self.id}: no exact successor search")
        found = frozenset(
            q for q in map(self.enumerate, range(budget)) if self._is_cover(p, q)
        )
        # Is(p) is infinite for every structure here that lacks exact_covers
        return SuccessorResult(found, True, True)

    def _is_cover(self, p, q) -> bool:
        if not self.lt(p, q):
            return False
        return not any(self.lt(p, r) and r != q for r in self.principal_ideal(q))

    def least_cover(self, p):
        covers = self.exact_covers(p)
        if covers is not None:
            return min(covers, key=self.index_of)
        self.require(LOCALLY_FINITE_BELOW, "least_cover")
        for q in self.elements():
            if self._is_cover(p, q):
                return q

    def describe(self) -> dict:
        return {
            "id": self.id,
            "capabilities": sorted(self.capabilities),
            "strategies": list(self.strategies),
            "instantiates": self.summary,
        }


def join_encoded(parts) -> str:
    return "(" + ",".join(parts) + ")"


def split_top(s: str, open_ch: str = "(", close_ch: str = ")") -> list[str]:
    """Split ``(a,b,...)`` at top-level commas, respecting nested brackets."""
    if not (s.startswith(open_ch) and s.endswith(close_ch)):
        raise ParseError(f"expected {open_ch}...{close_ch}: {s!r}")
    body, parts, depth, cur = s[1:-1], [], 0, []
    for ch in body:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts
