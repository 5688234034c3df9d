"""Monochromatic edges and cliques against prefix-determined colourings.

A colouring that only reads the first ``D`` coordinates is constant on
every basic open set of a depth-``D`` node.  Each dense node at a level
``>= D`` anchors edges whose members share that node's depth-``D``
prefix, so those edges are monochromatic.  This is the finite, exact
stand-in for the category argument; it says nothing about colourings that
are not prefix-determined.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable

from .branch_space import OMEGA, Branch, DenseSequence, Node, TreeKind, concat_branch
from .condition_poset import Condition, is_centred, is_n_linked
from .errors import KindMismatch
from .hypergraph import H0INF, H1INF, HypergraphKind, is_edge


@dataclass(frozen=True)
class PrefixColoring:
    kind: TreeKind
    depth: int
    palette_size: int
    assign: Callable[[tuple[int, ...]], int] = field(compare=False)
    seed: int | None = None

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        if self.palette_size < 1:
            raise ValueError("palette_size must be >= 1")

    def color(self, x: Branch) -> int:
        if x.kind != self.kind:
            raise KindMismatch(f"{x} is not a branch of {self.kind}")
        c = self.assign(x.entries(self.depth))
        if not 0 <= c < self.palette_size:
            raise ValueError(f"colour {c} outside palette of size {self.palette_size}")
        return c

    @classmethod
    def seeded(cls, kind: TreeKind, depth: int, palette_size: int, seed: int) -> "PrefixColoring":
        """Pseudo-random table, drawn lazily and reproducibly per prefix."""

        def assign(word: tuple[int, ...]) -> int:
            return random.Random(f"{seed}:{kind}:{word}").randrange(palette_size)

        return cls(kind, depth, palette_size, assign, seed)

    @classmethod
    def from_table(cls, data: dict) -> "PrefixColoring":
        """Load ``{"kind", "depth", "palette_size", "table": {"0,1": c}}``."""
        kind = TreeKind.from_json(data["kind"])
        depth = int(data["depth"])
        table = {}
        for word, c in data["table"].items():
            w = tuple(int(v) for v in word.split(",")) if word else ()
            if len(w) != depth:
                raise ValueError(f"table word {word!r} does not have length {depth}")
            table[w] = int(c)
        palette = int(data.get("palette_size", max(table.values(), default=0) + 1))

        def assign(word: tuple[int, ...]) -> int:
            try:
                return table[word]
            except KeyError:
                raise ValueError(f"colour table has no entry for {list(word)}") from None

        return cls(kind, depth, palette, assign)

    @classmethod
    def load(cls, path) -> "PrefixColoring":
        with open(path) as fh:
            return cls.from_table(json.load(fh))


@dataclass(frozen=True)
class MonochromeWitness:
    members: frozenset[Branch]
    color: int
    anchor: Node

    def to_json(self):
        return {
            "members": [b.to_json() for b in sorted(self.members)],
            "color": self.color,
            "anchor": self.anchor.to_json(),
        }


def _witness(c: PrefixColoring, d: Node, count: int) -> MonochromeWitness:
    members = [concat_branch(d, i, ()) for i in range(count)]
    colors = {c.color(x) for x in members}
    if len(colors) != 1:
        raise AssertionError(f"coloring is not prefix-determined at depth {c.depth}")
    return MonochromeWitness(frozenset(members), colors.pop(), d)


def find_mono_edge(c: PrefixColoring, kind: HypergraphKind) -> MonochromeWitness:
    if kind.family == "h1inf":
        raise KindMismatch("use find_mono_clique for h1inf")
    if kind.tree != c.kind:
        raise KindMismatch(f"{kind} lives on {kind.tree}, coloring on {c.kind}")
    level = max(c.depth, 2)
    d = DenseSequence(kind.tree).node(level)
    w = _witness(c, d, kind.n if kind.family == "hn" else level)
    if not is_edge(kind, w.members):
        raise AssertionError(f"constructed set {sorted(w.members)} is not a {kind} edge")
    return w


def find_mono_clique(c: PrefixColoring, m: int) -> MonochromeWitness:
    """``m`` pairwise H1_inf-adjacent branches of one colour."""
    if c.kind != OMEGA:
        raise KindMismatch("cliques live on T_inf")
    if m < 2:
        raise ValueError("clique size must be >= 2")
    d = DenseSequence(OMEGA).node(max(c.depth, m))
    w = _witness(c, d, m)
    members = sorted(w.members)
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if not is_edge(H1INF, (a, b)):
                raise AssertionError(f"{a}, {b} not adjacent")
    return w


def refute_centred_class(c: PrefixColoring) -> list[Condition]:
    """Singleton conditions of one colour forming an H0_inf edge.

    The family is ``(|edge| - 1)``-linked (proper subsets of an edge are
    anti-cliques) but not centred.
    """
    w = find_mono_edge(c, H0INF)
    family = [Condition(H0INF, frozenset([x])) for x in sorted(w.members)]
    if is_centred(family):
        raise AssertionError("edge family unexpectedly centred")
    if len(family) > 2 and not is_n_linked(family, len(family) - 1):
        raise AssertionError("edge family not (|edge|-1)-linked")
    return family
