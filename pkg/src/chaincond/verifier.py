"""Exhaustive desk-scale checks of the partition classes.

Class members at a given depth are the anti-clique tuples ``(y_0..y_k)``
with ``y_i`` extending the ``i``-th key node and support inside indices
``< depth``.  The checks here either enumerate them outright or, where the
product is large, reason over the edges living inside the union of all
member elements, which is equivalent and exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import NamedTuple, Sequence

from .branch_space import Branch, DenseSequence, concat_branch, extensions_within
from .cliques import max_clique
from .condition_poset import Condition, compatible, is_antichain, union_elements
from .errors import BadArity, DepthTooSmall, KindMismatch
from .hypergraph import H1INF, Edge, edges_among, find_edge, is_anti_clique, meet_anchor_clique_bound
from .partition_builder import SeparatorKey, member_of


@dataclass(frozen=True)
class RamseyBound:
    colors: int
    value: int


def ramsey_upper(k: int) -> RamseyBound:
    """Upper bound on the ``k``-colour Ramsey number for triangles.

    ``U(1) = 3`` and ``U(k) = k (U(k-1) - 1) + 2``, the usual pigeonhole
    recursion on the neighbourhood of one vertex.
    """
    if k < 1:
        raise BadArity(f"need at least one colour, got {k}")
    value = 3
    for c in range(2, k + 1):
        value = c * (value - 1) + 2
    return RamseyBound(k, value)


def triangle_free_two_colourings(vertices: int) -> int:
    """Count 2-colourings of K_v with no monochromatic triangle."""
    pairs = list(combinations(range(vertices), 2))
    index = {e: i for i, e in enumerate(pairs)}
    triangles = [
        (1 << index[(a, b)]) | (1 << index[(a, c)]) | (1 << index[(b, c)])
        for a, b, c in combinations(range(vertices), 3)
    ]
    full = (1 << len(pairs)) - 1
    count = 0
    for colouring in range(1 << len(pairs)):
        other = full ^ colouring
        if not any((colouring & t) == t or (other & t) == t for t in triangles):
            count += 1
    return count


def certify_r33() -> bool:
    """R(3,3) = 6: K_5 has a triangle-free 2-colouring, K_6 has none."""
    return triangle_free_two_colourings(5) > 0 and triangle_free_two_colourings(6) == 0


def max_antichain(conditions: Sequence[Condition]) -> tuple[int, list[Condition]]:
    """Largest pairwise incompatible subfamily (max clique of incompatibility)."""
    conditions = list(conditions)
    n = len(conditions)
    adj = [0] * n
    for i, j in combinations(range(n), 2):
        if not compatible(conditions[i], conditions[j]):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    best = max_clique(adj)
    witness = [conditions[i] for i in best]
    return len(witness), witness


# -- class enumeration -------------------------------------------------------


def node_extensions(key: SeparatorKey, depth: int) -> list[list[Branch]]:
    return [extensions_within(t, depth) for t in key.nodes]


def class_members(key: SeparatorKey, depth: int) -> list[Condition]:
    """Every class member whose elements have support inside indices ``< depth``."""
    out = []
    for combo in product(*node_extensions(key, depth)):
        if is_anti_clique(key.kind, combo):
            out.append(Condition(key.kind, frozenset(combo)))
    return out


def claim_violation(key: SeparatorKey, depth: int) -> Edge | None:
    """An edge inside some extension tuple of the key, or ``None``.

    Such an edge takes at most one member per key node; conversely any edge
    of that shape completes to a full extension tuple.  So scanning the
    edges of the union of all extensions covers every tuple.
    """
    per_node = node_extensions(key, depth)
    owner = {}
    for i, exts in enumerate(per_node):
        for y in exts:
            owner[y] = i
    for edge in edges_among(key.kind, owner):
        if len({owner[y] for y in edge.members}) == len(edge.members):
            return edge
    return None


def claim_violation_bruteforce(key: SeparatorKey, depth: int) -> tuple[Branch, ...] | None:
    for combo in product(*node_extensions(key, depth)):
        if not is_anti_clique(key.kind, combo):
            return combo
    return None


@dataclass
class AntichainReport:
    class_key: SeparatorKey
    corpus_size: int
    max_antichain_found: int
    bound: int
    witness: list[Condition] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.max_antichain_found < self.bound

    def to_json(self):
        return {
            "class_key": self.class_key.to_json(),
            "corpus_size": self.corpus_size,
            "max_antichain_found": self.max_antichain_found,
            "bound": self.bound,
            "holds": self.holds,
            "witness": [c.to_json() for c in self.witness],
        }


def check_class_antichain_bound(key: SeparatorKey, depth: int) -> AntichainReport:
    if key.kind.family != "hn" or key.kind.n != 2:
        raise KindMismatch("the antichain bound is stated for H_2 classes")
    corpus = class_members(key, depth)
    if not corpus:
        raise DepthTooSmall(f"no member of the class fits below depth {depth}")
    size, witness = max_antichain(corpus)
    return AntichainReport(key, len(corpus), size, ramsey_upper(len(key.nodes)).value, witness)


# -- linkedness --------------------------------------------------------------


def _complete(key: SeparatorKey, per_node, fixed: dict[int, Branch]) -> Condition | None:
    choices = [[fixed[i]] if i in fixed else exts for i, exts in enumerate(per_node)]
    for combo in product(*choices):
        if is_anti_clique(key.kind, combo):
            return Condition(key.kind, frozenset(combo))
    return None


def _assignments(owners: list[int], blocks: int):
    """Ways to put edge members into ``blocks`` labelled blocks with no two
    members of the same key node sharing a block (first-use order)."""

    def rec(i, used, labels):
        if i == len(owners):
            yield list(labels)
            return
        for b in range(min(used + 1, blocks)):
            if any(labels[j] == b and owners[j] == owners[i] for j in range(i)):
                continue
            labels.append(b)
            yield from rec(i + 1, max(used, b + 1), labels)
            labels.pop()

    yield from rec(0, 0, [])


def linked_violation(key: SeparatorKey, size: int, depth: int) -> list[Condition] | None:
    """Up to ``size`` class members (supports ``< depth``) whose union
    contains an edge, or ``None`` when every ``size``-subfamily is centred.

    A violating family exists iff some edge among the members' elements can
    be split into at most ``size`` blocks, each block using distinct key
    nodes and completing to a class member.
    """
    if size < 1:
        raise BadArity("size must be >= 1")
    per_node = node_extensions(key, depth)
    if not all(per_node) or _complete(key, per_node, {}) is None:
        raise DepthTooSmall(f"no member of the class fits below depth {depth}")
    owner = {}
    for i, exts in enumerate(per_node):
        for y in exts:
            owner[y] = i
    for edge in edges_among(key.kind, owner):
        members = sorted(edge.members)
        owners = [owner[y] for y in members]
        need = max(owners.count(i) for i in set(owners))
        if need > size:
            continue
        for labels in _assignments(owners, size):
            family = []
            for b in range(max(labels) + 1):
                fixed = {owners[j]: members[j] for j in range(len(members)) if labels[j] == b}
                member = _complete(key, per_node, fixed)
                if member is None:
                    break
                family.append(member)
            else:
                return family
    return None


def linked_violation_bruteforce(key: SeparatorKey, size: int, depth: int) -> list[Condition] | None:
    members = class_members(key, depth)
    if not members:
        raise DepthTooSmall(f"no member of the class fits below depth {depth}")
    for r in range(1, size + 1):
        for family in combinations(members, r):
            if not is_anti_clique(key.kind, union_elements(family)):
                return list(family)
    return None


def check_class_linked(key: SeparatorKey, n: int, depth: int) -> bool:
    """Every ``(n-1)``-element set of class members is centred."""
    if n < 3:
        raise BadArity("linkedness classes are checked for n >= 3")
    return linked_violation(key, n - 1, depth) is None


def linked_counterexample(key: SeparatorKey, n: int) -> tuple[list[Condition], Edge]:
    """``n`` members of the class whose union contains an ``H_n`` edge.

    Take the first dense node ``d`` extending the first key node and let the
    ``i``-th member hold ``d ^ i ^ 0...`` plus the bare key nodes elsewhere.
    """
    kind = key.kind
    if kind.family != "hn" or kind.n != n:
        raise KindMismatch(f"counterexamples to {n}-linkedness are built over hn:{n}")
    tree = kind.tree
    dense = DenseSequence(tree)
    t0 = key.nodes[0]
    d = dense.node(dense.extension_level(t0))
    rest = [Branch(tree, t.word) for t in key.nodes[1:]]
    family = [Condition(kind, frozenset([concat_branch(d, i, ()), *rest])) for i in range(n)]
    assert all(member_of(q, key) for q in family)
    edge = find_edge(kind, union_elements(family))
    assert edge is not None
    return family, edge


# -- H1_inf cliques ----------------------------------------------------------


class H1CliqueReport(NamedTuple):
    max_clique: int
    anchor_len: int
    witness: tuple[Branch, ...]
    witness_anchor_len: int

    @property
    def holds(self) -> bool:
        within = self.max_clique <= 1 or self.max_clique <= self.witness_anchor_len
        return within and self.max_clique <= self.anchor_len


def check_h1_no_unbounded_clique(key: SeparatorKey, depth: int) -> H1CliqueReport:
    """Largest H1_inf clique among branches extending the key nodes.

    ``anchor_len`` is the longest dense anchor that fits below ``depth``
    (``depth - 1``): a clique anchored at ``d`` has at most ``|d|``
    members and a nonzero entry at index ``|d|``.
    """
    if key.kind != H1INF:
        raise KindMismatch("clique bounds are checked over h1inf")
    branches = sorted({y for t in key.nodes for y in extensions_within(t, depth)})
    if depth < 2 or not branches:
        raise DepthTooSmall(f"no anchored clique fits below depth {depth}")
    index = {y: i for i, y in enumerate(branches)}
    adj = [0] * len(branches)
    for edge in edges_among(H1INF, branches):
        a, b = (index[y] for y in edge.members)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    clique = tuple(branches[i] for i in max_clique(adj))
    anchor = meet_anchor_clique_bound(clique[0], clique[1:]) if len(clique) > 1 else 0
    return H1CliqueReport(len(clique), depth - 1, clique, anchor)


def antichain_witness_valid(report: AntichainReport) -> bool:
    return len(report.witness) == report.max_antichain_found and is_antichain(report.witness)
