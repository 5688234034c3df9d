"""Edge predicates and generators for H_n, H0_inf and H1_inf.

Every edge is a bundle ``{d ^ i ^ x}`` over a dense anchor ``d``: members
agree below ``|d|``, take pairwise distinct entries at ``|d|`` and share the
tail ``x`` afterwards.  The anti-clique test groups branches by
``(anchor level, tail)`` and inspects the entry sets of each group, which
finds every edge without looking at subsets.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .branch_space import OMEGA, Branch, DenseSequence, Node, TreeKind, concat_branch, meet_length
from .errors import KindMismatch, NotAClique


@dataclass(frozen=True)
class HypergraphKind:
    family: str  # "hn", "h0inf" or "h1inf"
    n: int | None = None

    def __post_init__(self):
        if self.family == "hn":
            if self.n is None or self.n < 2:
                raise ValueError("H_n needs n >= 2")
        elif self.family in ("h0inf", "h1inf"):
            if self.n is not None:
                raise ValueError(f"{self.family} takes no parameter")
        else:
            raise ValueError(f"unknown hypergraph family {self.family!r}")

    @classmethod
    def hn(cls, n: int) -> "HypergraphKind":
        return cls("hn", n)

    @property
    def tree(self) -> TreeKind:
        return TreeKind(self.n) if self.family == "hn" else OMEGA

    @classmethod
    def parse(cls, text: str) -> "HypergraphKind":
        text = text.strip().lower()
        if text in ("h0inf", "h1inf"):
            return cls(text)
        if text.startswith("hn:"):
            return cls.hn(int(text[3:]))
        if text.startswith("h") and text[1:].isdigit():
            return cls.hn(int(text[1:]))
        raise ValueError(f"bad hypergraph kind {text!r} (expected hn:N, h0inf or h1inf)")

    def __str__(self):
        return f"hn:{self.n}" if self.family == "hn" else self.family

    def to_json(self):
        return str(self)

    @classmethod
    def from_json(cls, data) -> "HypergraphKind":
        return cls.parse(data)


H0INF = HypergraphKind("h0inf")
H1INF = HypergraphKind("h1inf")


@dataclass(frozen=True)
class Edge:
    kind: HypergraphKind
    anchor: Node
    tail: tuple[int, ...]
    members: frozenset[Branch]

    def to_json(self):
        return {
            "kind": self.kind.to_json(),
            "anchor": self.anchor.to_json(),
            "tail": list(self.tail),
            "members": [b.to_json() for b in sorted(self.members)],
        }

    @classmethod
    def from_json(cls, data) -> "Edge":
        kind = HypergraphKind.parse(data["kind"])
        tree = kind.tree
        return cls(
            kind,
            Node(tree, tuple(data["anchor"])),
            tuple(data["tail"]),
            frozenset(Branch(tree, tuple(m)) for m in data["members"]),
        )


def _check_members(kind: HypergraphKind, branches) -> list[Branch]:
    members = list(dict.fromkeys(branches))
    tree = kind.tree
    for b in members:
        if b.kind != tree:
            raise KindMismatch(f"{b} lives on {b.kind}, {kind} needs {tree}")
    return members


def _entry_sets_ok(kind: HypergraphKind, level: int, entries: set[int], size: int) -> bool:
    if kind.family == "hn":
        return size == kind.n and entries == set(range(kind.n))
    if kind.family == "h0inf":
        return level >= 2 and entries == set(range(level))
    return size == 2 and level >= 2 and all(e < level for e in entries)


def is_edge(kind: HypergraphKind, s: Iterable[Branch]) -> bool:
    members = _check_members(kind, s)
    if len(members) < 2:
        return False
    if kind.family == "hn" and len(members) != kind.n:
        return False
    if kind.family == "h1inf" and len(members) != 2:
        return False
    width = max(len(b.support) for b in members)
    level = None
    for i in range(width):
        column = {b[i] for b in members}
        if level is None:
            if len(column) == 1:
                continue
            if len(column) != len(members):
                return False  # pairwise meets differ
            level = i
            entries = column
        elif len(column) != 1:
            return False  # no common tail
    if level is None:
        return False
    dense = DenseSequence(kind.tree)
    if not dense.contains(members[0].entries(level)):
        return False
    return _entry_sets_ok(kind, level, entries, len(members))


def _groups(kind: HypergraphKind, members: list[Branch]) -> dict:
    """Map ``(level, tail)`` to ``{entry: branch}`` for branches whose
    prefix below ``level`` is the dense node there."""
    dense = DenseSequence(kind.tree)
    width = max((len(b.support) for b in members), default=0)
    groups: dict = defaultdict(dict)
    for b in members:
        for level in range(width):
            if dense.word(level) == b.entries(level):
                groups[(level, b.support[level + 1 :])][b[level]] = b
    return groups


def edges_among(kind: HypergraphKind, branches: Iterable[Branch]) -> Iterator[Edge]:
    """Every edge contained in the given branch set."""
    members = _check_members(kind, branches)
    if len(members) < 2:
        return
    dense = DenseSequence(kind.tree)
    for (level, tail), by_entry in _groups(kind, members).items():
        if len(by_entry) < 2:
            continue
        anchor = dense.node(level)
        if kind.family == "hn":
            if len(by_entry) == kind.n:
                yield Edge(kind, anchor, tail, frozenset(by_entry.values()))
        elif kind.family == "h0inf":
            if level >= 2 and all(i in by_entry for i in range(level)):
                yield Edge(kind, anchor, tail, frozenset(by_entry[i] for i in range(level)))
        else:
            low = sorted(e for e in by_entry if e < level)
            for i, j in combinations(low, 2):
                yield Edge(kind, anchor, tail, frozenset((by_entry[i], by_entry[j])))


def find_edge(kind: HypergraphKind, s: Iterable[Branch]) -> Edge | None:
    return next(edges_among(kind, s), None)


def is_anti_clique(kind: HypergraphKind, s: Iterable[Branch]) -> bool:
    return find_edge(kind, s) is None


def _entry_choices(kind: HypergraphKind, level: int) -> list[tuple[int, ...]]:
    if kind.family == "hn":
        return [tuple(range(kind.n))]
    if level < 2:
        return []
    if kind.family == "h0inf":
        return [tuple(range(level))]
    return list(combinations(range(level), 2))


def _trim(word: tuple[int, ...]) -> tuple[int, ...]:
    end = len(word)
    while end and word[end - 1] == 0:
        end -= 1
    return word[:end]


def edges_within(kind: HypergraphKind, depth: int, anchor_levels: Iterable[int]) -> Iterator[Edge]:
    """Edges anchored at the given dense levels whose members have support
    inside indices ``< depth``."""
    tree = kind.tree
    dense = DenseSequence(tree)
    for level in sorted(set(anchor_levels)):
        if level >= depth:
            continue
        d = dense.node(level)
        for tail in tree.words(depth - level - 1, start=level + 1):
            for entries in _entry_choices(kind, level):
                members = frozenset(concat_branch(d, i, tail) for i in entries)
                yield Edge(kind, d, _trim(tail), members)


def meet_anchor_clique_bound(x: Branch, clique: Iterable[Branch]) -> int:
    """Length of the common anchor of an H1_inf clique containing ``x``.

    Every such clique is ``{d ^ i ^ tail : i in I}`` for one dense ``d``
    and ``I`` inside ``range(|d|)``, so its size is at most ``|d|``.
    """
    members = _check_members(H1INF, [x, *clique])
    if len(members) < 2:
        raise NotAClique("a clique bound needs at least two members")
    for a, b in combinations(members, 2):
        if not is_edge(H1INF, (a, b)):
            raise NotAClique(f"{a} and {b} are not adjacent")
    lengths = {meet_length(x, y) for y in members if y != x}
    if len(lengths) != 1:
        raise AssertionError(f"clique without a common anchor: {members}")
    return lengths.pop()
