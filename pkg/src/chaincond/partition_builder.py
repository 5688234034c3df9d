"""Separator tuples: the countable partition of the condition poset.

A condition ``p = {x_0, ..., x_k}`` is cut at a level ``l`` chosen so that
every tuple ``(y_0, ..., y_k)`` with ``x_i|l`` below ``y_i`` is again an
anti-clique.  The tuple of cut prefixes is the class key; conditions with
the same key form one class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .branch_space import Branch, DenseSequence, Node, meet_length
from .condition_poset import Condition
from .errors import EmptyCondition, KindMismatch
from .hypergraph import HypergraphKind


class CaseTag(enum.Enum):
    SINGLETON = "singleton"
    CASE1 = "case1"  # some meet is not a dense node
    CASE2 = "case2"  # all meets dense, not all equal
    CASE3 = "case3"  # one common dense meet; tails differ somewhere


@dataclass(frozen=True)
class SeparatorKey:
    kind: HypergraphKind
    nodes: tuple[Node, ...]
    min_len: int = 1

    def __post_init__(self):
        nodes = tuple(self.nodes)
        object.__setattr__(self, "nodes", nodes)
        if not nodes:
            raise ValueError("a key needs at least one node")
        lengths = {len(t) for t in nodes}
        if len(lengths) != 1:
            raise ValueError("key nodes must share one length")
        if lengths.pop() < max(self.min_len, 1):
            raise ValueError("key nodes shorter than min_len")
        if len(set(nodes)) != len(nodes):
            raise ValueError("key nodes must be distinct")
        for t in nodes:
            if t.kind != self.kind.tree:
                raise KindMismatch(f"{t} is not a node of {self.kind.tree}")

    @property
    def length(self) -> int:
        return len(self.nodes[0])

    def __len__(self):
        return len(self.nodes)

    def to_json(self):
        return {"kind": self.kind.to_json(), "nodes": [t.to_json() for t in self.nodes], "min_len": self.min_len}

    @classmethod
    def from_json(cls, data) -> "SeparatorKey":
        kind = HypergraphKind.parse(data["kind"])
        nodes = tuple(Node(kind.tree, tuple(w)) for w in data["nodes"])
        return cls(kind, nodes, int(data.get("min_len", 1)))


def _first_difference_after(x: Branch, y: Branch, start: int) -> int | None:
    width = max(len(x.support), len(y.support))
    for i in range(start + 1, width):
        if x[i] != y[i]:
            return i
    return None


def classify(p: Condition) -> CaseTag:
    xs = p.ordered()
    if len(xs) <= 1:
        return CaseTag.SINGLETON
    dense = DenseSequence(p.kind.tree)
    meets = set()
    for a, b in combinations(xs, 2):
        m = meet_length(a, b)
        if not dense.contains(a.entries(m)):
            return CaseTag.CASE1
        meets.add(m)
    # one dense node per level, so equal meet lengths mean equal meets
    if len(meets) > 1:
        return CaseTag.CASE2
    return CaseTag.CASE3


def cut_level(p: Condition) -> int:
    """A level that keeps every pair of ``p`` out of any common edge.

    For a pair whose meet is not dense, one step past the meet suffices.
    For a pair with a dense meet, one step past the first later index
    where the two differ; pairs with a dense meet and equal tails only
    need the meet itself kept.
    """
    xs = p.ordered()
    if len(xs) <= 1:
        return 1
    dense = DenseSequence(p.kind.tree)
    level = 0
    for a, b in combinations(xs, 2):
        m = meet_length(a, b)
        cut = m + 1
        if dense.contains(a.entries(m)):
            diff = _first_difference_after(a, b, m)
            if diff is not None:
                cut = diff + 1
        level = max(level, cut)
    return level


def separator(p: Condition, min_len: int = 1) -> SeparatorKey:
    if not p.elements:
        raise EmptyCondition("the empty condition has no separator")
    if min_len < 1:
        raise ValueError("min_len must be >= 1")
    level = max(cut_level(p), min_len)
    return SeparatorKey(p.kind, tuple(x.prefix(level) for x in p.ordered()), min_len)


def class_key(p: Condition, min_len: int = 1) -> SeparatorKey:
    return separator(p, min_len)


def match_nodes(q: Condition, key: SeparatorKey) -> dict[int, Branch] | None:
    """Node index -> element of ``q`` extending it, if ``q`` is in the class."""
    if q.kind != key.kind:
        raise KindMismatch(f"{q.kind} vs {key.kind}")
    if len(q) != len(key.nodes):
        return None
    where = {t.word: i for i, t in enumerate(key.nodes)}
    matched: dict[int, Branch] = {}
    for y in q.elements:
        i = where.get(y.entries(key.length))
        if i is None or i in matched:
            return None
        matched[i] = y
    return matched


def member_of(q: Condition, key: SeparatorKey) -> bool:
    return match_nodes(q, key) is not None
