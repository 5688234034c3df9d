"""The forcing poset of finite anti-cliques, ordered by reverse inclusion.

Two conditions have a common extension iff their union is an anti-clique,
and then the union is the largest one; every linkedness test below reduces
to anti-clique tests on unions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .branch_space import Branch
from .errors import BadArity, KindMismatch, NotAntiClique
from .hypergraph import HypergraphKind, is_anti_clique


@dataclass(frozen=True)
class Condition:
    kind: HypergraphKind
    elements: frozenset[Branch] = frozenset()

    def __post_init__(self):
        elements = frozenset(self.elements)
        object.__setattr__(self, "elements", elements)
        if not is_anti_clique(self.kind, elements):
            raise NotAntiClique(f"{sorted(elements)} contains a {self.kind} edge")

    @classmethod
    def of(cls, kind: HypergraphKind, *supports) -> "Condition":
        return cls(kind, frozenset(Branch(kind.tree, tuple(s)) for s in supports))

    def ordered(self) -> tuple[Branch, ...]:
        return tuple(sorted(self.elements))

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"Condition({self.kind}, {[list(b.support) for b in self.ordered()]})"

    def to_json(self):
        return {"kind": self.kind.to_json(), "elements": [b.to_json() for b in self.ordered()]}

    @classmethod
    def from_json(cls, data) -> "Condition":
        kind = HypergraphKind.parse(data["kind"])
        return cls.of(kind, *data["elements"])


def _common_kind(conditions) -> HypergraphKind | None:
    kinds = {c.kind for c in conditions}
    if len(kinds) > 1:
        raise KindMismatch(f"mixed condition kinds: {sorted(map(str, kinds))}")
    return kinds.pop() if kinds else None


def union_elements(conditions: Iterable[Condition]) -> frozenset[Branch]:
    out: set[Branch] = set()
    for c in conditions:
        out |= c.elements
    return frozenset(out)


def leq(q: Condition, p: Condition) -> bool:
    """``q`` is stronger than ``p``."""
    _common_kind((q, p))
    return p.elements <= q.elements


def compatible(p: Condition, q: Condition) -> bool:
    kind = _common_kind((p, q))
    return is_anti_clique(kind, p.elements | q.elements)


def common_extension(p: Condition, q: Condition) -> Condition | None:
    if not compatible(p, q):
        return None
    return Condition(p.kind, p.elements | q.elements)


def is_n_linked(family: Iterable[Condition], n: int) -> bool:
    """Every ``n``-element subfamily has an anti-clique union (vacuous below ``n``)."""
    if n < 2:
        raise BadArity(f"n-linkedness needs n >= 2, got {n}")
    family = list(dict.fromkeys(family))
    kind = _common_kind(family)
    if len(family) < n:
        return True
    if is_anti_clique(kind, union_elements(family)):
        return True
    return all(is_anti_clique(kind, union_elements(sub)) for sub in combinations(family, n))


def is_centred(family: Iterable[Condition]) -> bool:
    family = list(family)
    kind = _common_kind(family)
    if not family:
        return True
    return is_anti_clique(kind, union_elements(family))


def is_antichain(family: Iterable[Condition]) -> bool:
    family = list(dict.fromkeys(family))
    _common_kind(family)
    return all(not compatible(p, q) for p, q in combinations(family, 2))
