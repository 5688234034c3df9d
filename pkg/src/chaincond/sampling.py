"""Seeded generators of branches, anti-cliques and class keys."""

from __future__ import annotations

import random

from .branch_space import Branch, DenseSequence, TreeKind
from .condition_poset import Condition
from .hypergraph import HypergraphKind, is_anti_clique
from .partition_builder import SeparatorKey, class_key


def random_branch(rng: random.Random, tree: TreeKind, max_support: int) -> Branch:
    length = rng.randint(0, max_support)
    return Branch(tree, tuple(rng.randrange(tree.branching(i)) for i in range(length)))


def _near_edge_members(rng: random.Random, kind: HypergraphKind, size: int, max_support: int) -> list[Branch]:
    """Branches splitting at one dense node with mostly shared tails, so
    the common-meet case and near-edges show up often."""
    tree = kind.tree
    level = rng.randrange(max(1, max_support))
    d = DenseSequence(tree).word(level)
    base = [rng.randrange(tree.branching(i)) for i in range(level + 1, max_support)]
    entries = rng.sample(range(tree.branching(level)), min(size, tree.branching(level)))
    out = []
    for e in entries:
        tail = list(base)
        if tail and rng.random() < 0.6:
            i = rng.randrange(len(tail))
            tail[i] = rng.randrange(tree.branching(level + 1 + i))
        out.append(Branch(tree, d + (e,) + tuple(tail)))
    return out


def random_anticlique(rng: random.Random, kind: HypergraphKind, size: int, max_support: int = 8) -> Condition:
    """A condition with ``size`` elements of support length ``<= max_support``."""
    tree = kind.tree
    while True:
        style = rng.random()
        if style < 0.4:
            members = [random_branch(rng, tree, max_support) for _ in range(size)]
        elif style < 0.8:
            members = _near_edge_members(rng, kind, size, max_support)
        else:
            members = _near_edge_members(rng, kind, size - 1, max_support)
            members.append(random_branch(rng, tree, max_support))
        if len(set(members)) == size and is_anti_clique(kind, members):
            return Condition(kind, frozenset(members))


def sample_keys(rng: random.Random, kind: HypergraphKind, sizes, count: int,
                max_support: int = 6, min_len: int = 1, max_key_length: int | None = None) -> list[SeparatorKey]:
    """Distinct class keys of conditions with sizes drawn from ``sizes``."""
    keys: dict[SeparatorKey, None] = {}
    attempts = 0
    while len(keys) < count:
        attempts += 1
        if attempts > 200 * count:
            raise RuntimeError(f"could not sample {count} distinct keys")
        p = random_anticlique(rng, kind, rng.choice(list(sizes)), max_support)
        key = class_key(p, min_len)
        if max_key_length is None or key.length <= max_key_length:
            keys[key] = None
    return list(keys)
