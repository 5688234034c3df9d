"""Nodes and finitely supported branches of the trees ``n^{<w}`` and T_inf.

A branch is stored by its support: the entries up to the last nonzero one.
Every entry past the support is zero.  The growing-arity tree T_inf allows
entry ``k`` at index ``k`` at most, so level ``k`` has ``k + 1`` children.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import EntryOutOfRange, EqualBranches, KindMismatch


@dataclass(frozen=True)
class TreeKind:
    """``TreeKind(n)`` is the constant-arity tree; ``TreeKind()`` is T_inf."""

    arity: int | None = None

    def __post_init__(self):
        if self.arity is not None and self.arity < 2:
            raise ValueError(f"arity must be >= 2, got {self.arity}")

    @property
    def is_omega(self) -> bool:
        return self.arity is None

    def branching(self, level: int) -> int:
        """Number of legal entries at index ``level``."""
        return level + 1 if self.arity is None else self.arity

    def level_size(self, length: int) -> int:
        """Number of nodes of the given length."""
        if self.arity is None:
            return math.factorial(length)
        return self.arity**length

    def check_entry(self, index: int, value: int) -> None:
        if not 0 <= value < self.branching(index):
            raise EntryOutOfRange(f"entry {value} is illegal at index {index} of {self}")

    def words(self, length: int, start: int = 0) -> Iterator[tuple[int, ...]]:
        """All legal entry sequences for indices ``start .. start+length-1``, in lex order."""
        if length <= 0:
            yield ()
            return
        radices = [self.branching(start + j) for j in range(length)]
        word = [0] * length
        while True:
            yield tuple(word)
            j = length - 1
            while j >= 0:
                word[j] += 1
                if word[j] < radices[j]:
                    break
                word[j] = 0
                j -= 1
            if j < 0:
                return

    def to_json(self):
        return "omega" if self.arity is None else {"arity": self.arity}

    @classmethod
    def from_json(cls, data) -> "TreeKind":
        if data == "omega":
            return OMEGA
        if isinstance(data, dict) and "arity" in data:
            return cls(int(data["arity"]))
        raise ValueError(f"bad tree kind: {data!r}")

    def __str__(self):
        return "T_inf" if self.arity is None else f"T_{self.arity}"


OMEGA = TreeKind()


def arity(n: int) -> TreeKind:
    return TreeKind(n)


@dataclass(frozen=True)
class Node:
    kind: TreeKind
    word: tuple[int, ...] = ()

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, "word", word)
        for i, v in enumerate(word):
            self.kind.check_entry(i, v)

    def __len__(self):
        return len(self.word)

    def __getitem__(self, i):
        return self.word[i]

    def is_prefix_of(self, other: "Node") -> bool:
        return len(self.word) <= len(other.word) and other.word[: len(self.word)] == self.word

    def to_json(self):
        return list(self.word)

    def __repr__(self):
        return f"Node({list(self.word)})"


@dataclass(frozen=True)
class Branch:
    """Infinite branch ``x`` with ``x(i) = support[i]`` and zeros afterwards.

    Trailing zeros are stripped on construction, so equality of branches is
    equality of supports.
    """

    kind: TreeKind
    support: tuple[int, ...] = ()

    def __post_init__(self):
        s = [int(v) for v in self.support]
        while s and s[-1] == 0:
            s.pop()
        for i, v in enumerate(s):
            self.kind.check_entry(i, v)
        object.__setattr__(self, "support", tuple(s))

    def __getitem__(self, i: int) -> int:
        s = self.support
        return s[i] if i < len(s) else 0

    def __lt__(self, other: "Branch"):
        return self.support < other.support

    def prefix(self, length: int) -> Node:
        s = self.support
        if length <= len(s):
            return Node(self.kind, s[:length])
        return Node(self.kind, s + (0,) * (length - len(s)))

    def entries(self, length: int) -> tuple[int, ...]:
        """First ``length`` entries as a plain tuple (no validation)."""
        s = self.support
        if length <= len(s):
            return s[:length]
        return s + (0,) * (length - len(s))

    def to_json(self):
        return list(self.support)

    def __repr__(self):
        return f"Branch({list(self.support)})"


def _same_kind(a, b):
    if a.kind != b.kind:
        raise KindMismatch(f"{a.kind} vs {b.kind}")


def meet_length(x: Branch, y: Branch) -> int:
    """Length of the longest common prefix; requires ``x != y``."""
    a, b = x.support, y.support
    if a == b:
        raise EqualBranches(f"{x} equals {y}")
    n = min(len(a), len(b))
    i = 0
    while i < n and a[i] == b[i]:
        i += 1
    if i == n:
        # the shorter support is all zeros from here on
        longer = a if len(a) > len(b) else b
        while longer[i] == 0:
            i += 1
    return i


def delta(x: Branch, y: Branch) -> Node:
    """Longest common initial segment of two distinct branches."""
    _same_kind(x, y)
    return x.prefix(meet_length(x, y))


def extends(y: Branch, t: Node) -> bool:
    _same_kind(y, t)
    return y.entries(len(t.word)) == t.word


def concat_branch(d: Node, i: int, tail: Sequence[int] | Branch) -> Branch:
    """The branch ``d ^ i ^ tail`` in canonical form.

    ``tail`` entries are checked against the absolute index they land on,
    so a T_inf tail need not be a legal branch on its own.
    """
    kind = d.kind
    if isinstance(tail, Branch):
        _same_kind(d, tail)
        tail = tail.support
    base = len(d.word)
    kind.check_entry(base, i)
    for j, v in enumerate(tail):
        kind.check_entry(base + 1 + j, v)
    return Branch(kind, d.word + (i,) + tuple(tail))


# -- dense sets --------------------------------------------------------------


def node_index(kind: TreeKind, word: Sequence[int]) -> int:
    """Position of ``word`` in the length-lex enumeration of all nodes."""
    word = tuple(word)
    offset = sum(kind.level_size(k) for k in range(len(word)))
    value = 0
    for j, v in enumerate(word):
        kind.check_entry(j, v)
        value = value * kind.branching(j) + v
    return offset + value


def nth_node_word(kind: TreeKind, index: int) -> tuple[int, ...]:
    """Inverse of :func:`node_index`."""
    if index < 0:
        raise ValueError("index must be >= 0")
    length = 0
    while index >= kind.level_size(length):
        index -= kind.level_size(length)
        length += 1
    digits = [0] * length
    for j in range(length - 1, -1, -1):
        r = kind.branching(j)
        digits[j] = index % r
        index //= r
    return tuple(digits)


@lru_cache(maxsize=None)
def _dense_word(kind: TreeKind, level: int) -> tuple[int, ...]:
    s = nth_node_word(kind, level)
    return s + (0,) * (level - len(s))


@dataclass(frozen=True)
class DenseSequence:
    """One node per level: the ``k``-th node of the length-lex enumeration,
    padded with zeros to length ``k``.  Density holds because node ``s``
    is extended by the dense node at level ``node_index(s)``."""

    kind: TreeKind

    def word(self, level: int) -> tuple[int, ...]:
        if level < 0:
            raise ValueError("level must be >= 0")
        return _dense_word(self.kind, level)

    def node(self, level: int) -> Node:
        return Node(self.kind, self.word(level))

    def contains(self, t: Node | Sequence[int]) -> bool:
        w = t.word if isinstance(t, Node) else tuple(t)
        return _dense_word(self.kind, len(w)) == w

    def extension_level(self, t: Node) -> int:
        """Least level whose dense node end-extends ``t``."""
        bound = node_index(self.kind, t.word)
        for level in range(len(t.word), bound + 1):
            if _dense_word(self.kind, level)[: len(t.word)] == t.word:
                return level
        raise AssertionError("dense enumeration failed to extend node")  # unreachable


def dense_node(d: DenseSequence, k: int) -> Node:
    return d.node(k)


def is_dense_node(d: DenseSequence, t: Node) -> bool:
    _same_kind(d, t)
    return d.contains(t)


def branches_within(kind: TreeKind, depth: int) -> Iterator[Branch]:
    """Every branch whose support lies inside indices ``< depth``."""
    for w in kind.words(depth):
        yield Branch(kind, w)


def extensions_within(t: Node, depth: int) -> list[Branch]:
    """Branches end-extending ``t`` with support inside indices ``< depth``."""
    k = len(t.word)
    if k >= depth:
        b = Branch(t.kind, t.word)
        return [b] if len(b.support) <= depth else []
    return [Branch(t.kind, t.word + w) for w in t.kind.words(depth - k, start=k)]
