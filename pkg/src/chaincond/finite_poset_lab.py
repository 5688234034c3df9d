"""Finite partial orders and hypergraphs as brute-force oracles.

Elements are ``0 .. m-1``.  A poset is stored as down-sets: bit ``z`` of
``down[x]`` is set iff ``z <= x``.  Two elements are compatible iff their
down-sets meet, and a set has a common lower bound iff the AND of its
down-sets is nonzero.

On finite posets every countable chain condition is trivial (singleton
parts are centred), so the content here is the exact minimal number of
parts for each condition and the amplification step that turns
``n``-bounded antichains into linkedness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import prod
from typing import Iterable, Iterator, Sequence

from .cliques import has_clique, max_clique
from .errors import IndexOutOfRange, InvalidConfiguration, NotAPartialOrder, TooLarge


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class FinitePoset:
    size: int
    down: tuple[int, ...]
    labels: tuple | None = field(default=None, compare=False)

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[Sequence[int]], labels=None) -> "FinitePoset":
        """Order from ``(a, b)`` pairs meaning ``a <= b``; closes reflexively
        and transitively and rejects cycles."""
        down = [1 << x for x in range(size)]
        for a, b in pairs:
            a, b = int(a), int(b)
            if not (0 <= a < size and 0 <= b < size):
                raise IndexOutOfRange(f"pair ({a}, {b}) outside 0..{size - 1}")
            down[b] |= 1 << a
        for k in range(size):
            for x in range(size):
                if down[x] >> k & 1:
                    down[x] |= down[k]
        for x in range(size):
            for y in range(x + 1, size):
                if down[x] >> y & 1 and down[y] >> x & 1:
                    raise NotAPartialOrder(f"{x} <= {y} <= {x}")
        return cls(size, tuple(down), tuple(labels) if labels is not None else None)

    @classmethod
    def chain(cls, size: int) -> "FinitePoset":
        return cls.from_pairs(size, [(i, i + 1) for i in range(size - 1)])

    @classmethod
    def antichain(cls, size: int) -> "FinitePoset":
        return cls.from_pairs(size, [])

    def check(self, x: int) -> None:
        if not 0 <= x < self.size:
            raise IndexOutOfRange(f"element {x} outside 0..{self.size - 1}")

    def leq(self, a: int, b: int) -> bool:
        self.check(a)
        self.check(b)
        return bool(self.down[b] >> a & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for b in range(self.size) for a in _bits(self.down[b]) if a != b]

    def is_partial_order(self) -> bool:
        """Brute-force O(m^3) axiom check, independent of the construction."""
        m = self.size
        le = [[self.down[b] >> a & 1 for b in range(m)] for a in range(m)]
        for a in range(m):
            if not le[a][a]:
                return False
            for b in range(m):
                if a != b and le[a][b] and le[b][a]:
                    return False
                for c in range(m):
                    if le[a][b] and le[b][c] and not le[a][c]:
                        return False
        return True

    def incompatibility(self) -> list[int]:
        adj = [0] * self.size
        for x, y in combinations(range(self.size), 2):
            if not self.down[x] & self.down[y]:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
        return adj

    def to_json(self):
        return {"size": self.size, "leq": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, data) -> "FinitePoset":
        return cls.from_pairs(int(data["size"]), data.get("leq", []))


def compatible_fp(P: FinitePoset, x: int, y: int) -> bool:
    P.check(x)
    P.check(y)
    return bool(P.down[x] & P.down[y])


# -- chain conditions on parts -----------------------------------------------


@dataclass(frozen=True)
class ChainCondition:
    """``linked``, ``centred``, ``nlinked:n`` or ``antichain-lt:n``.

    ``nlinked:n`` asks every ``n`` elements, repetitions allowed, to have a
    common lower bound; so parts smaller than ``n`` must be centred.
    """

    name: str
    n: int | None = None

    def __post_init__(self):
        if self.name in ("linked", "centred"):
            if self.n is not None:
                raise ValueError(f"{self.name} takes no parameter")
        elif self.name == "nlinked":
            if self.n is None or self.n < 2:
                raise ValueError("nlinked needs n >= 2")
        elif self.name == "antichain-lt":
            if self.n is None or self.n < 2:
                raise ValueError("antichain-lt needs n >= 2")
        else:
            raise ValueError(f"unknown chain condition {self.name!r}")

    @classmethod
    def parse(cls, text: str) -> "ChainCondition":
        name, _, arg = text.strip().lower().partition(":")
        if name == "centered":
            name = "centred"
        return cls(name, int(arg) if arg else None)

    def __str__(self):
        return self.name if self.n is None else f"{self.name}:{self.n}"


LINKED = ChainCondition("linked")
CENTRED = ChainCondition("centred")


def nlinked(n: int) -> ChainCondition:
    return ChainCondition("nlinked", n)


def antichain_lt(n: int) -> ChainCondition:
    return ChainCondition("antichain-lt", n)


class _PartChecker:
    """Memoised validity of a part (a bitmask); all conditions are
    hereditary, so a part is valid iff it is valid without its top element
    and every small subset through the top element is fine."""

    def __init__(self, P: FinitePoset, cond: ChainCondition):
        self.P = P
        self.cond = cond
        self.incompat = P.incompatibility()
        self.memo: dict[int, bool] = {0: True}

    def __call__(self, mask: int) -> bool:
        got = self.memo.get(mask)
        if got is None:
            top = mask.bit_length() - 1
            rest = mask ^ (1 << top)
            got = self(rest) and self._with_top(top, rest)
            self.memo[mask] = got
        return got

    def _with_top(self, v: int, rest: int) -> bool:
        down = self.P.down
        name, n = self.cond.name, self.cond.n
        if name == "linked" or (name == "nlinked" and n == 2):
            return not self.incompat[v] & rest
        if name == "antichain-lt":
            return has_clique(self.incompat, n - 1, rest & self.incompat[v]) is None
        if name == "centred":
            acc = down[v]
            for x in _bits(rest):
                acc &= down[x]
            return acc != 0
        others = list(_bits(rest))
        for r in range(1, min(n - 1, len(others)) + 1):
            for sub in combinations(others, r):
                acc = down[v]
                for x in sub:
                    acc &= down[x]
                if not acc:
                    return False
        return True


@dataclass(frozen=True)
class PartitionCertificate:
    labels: tuple[int, ...]
    condition: ChainCondition
    part_keys: dict | None = field(default=None, compare=False)

    @property
    def parts(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for x, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(x)
        return out

    def to_json(self):
        return {"condition": str(self.condition), "labels": list(self.labels)}


def part_satisfies(P: FinitePoset, part: Iterable[int], cond: ChainCondition) -> bool:
    """Direct check of one part, without memoisation or incremental tricks."""
    part = sorted(set(part))
    down = P.down
    if cond.name == "linked":
        return all(compatible_fp(P, a, b) for a, b in combinations(part, 2))
    if cond.name == "centred":
        acc = -1
        for x in part:
            acc &= down[x]
        return not part or acc != 0
    if cond.name == "nlinked":
        for r in range(2, min(cond.n, len(part)) + 1):
            for sub in combinations(part, r):
                acc = -1
                for x in sub:
                    acc &= down[x]
                if not acc:
                    return False
        return True
    adj = P.incompatibility()
    within = sum(1 << x for x in part)
    return len(max_clique(adj, within)) < cond.n


def check_partition(P: FinitePoset, cert: PartitionCertificate) -> bool:
    if len(cert.labels) != P.size:
        return False
    return all(part_satisfies(P, part, cert.condition) for part in cert.parts.values())


DEFAULT_LIMITS = {"centred": 12, "nlinked": 12, "linked": 16, "antichain-lt": 16}


def _lower_bound(P: FinitePoset, cond: ChainCondition) -> int:
    omega = len(max_clique(P.incompatibility()))
    if cond.name == "antichain-lt":
        return -(-omega // (cond.n - 1))
    return omega


def min_parts(P: FinitePoset, cond: ChainCondition, limit: int | None = None) -> tuple[int, PartitionCertificate]:
    """Exact least number of parts each satisfying ``cond``.

    Iterative deepening on the part count from a clique lower bound, with
    backtracking over part assignments (new parts opened in order only).
    """
    limit = DEFAULT_LIMITS[cond.name] if limit is None else limit
    m = P.size
    if m > limit:
        raise TooLarge(f"{m} elements exceeds the limit {limit} for {cond}")
    if m == 0:
        return 0, PartitionCertificate((), cond)
    valid = _PartChecker(P, cond)
    degree = [bin(a).count("1") for a in valid.incompat]
    order = sorted(range(m), key=lambda x: (-degree[x], x))

    def attempt(k: int) -> list[int] | None:
        parts = [0] * k
        labels = [0] * m

        def rec(i: int, used: int) -> bool:
            if i == m:
                return True
            x = order[i]
            bit = 1 << x
            for j in range(min(used + 1, k)):
                if valid(parts[j] | bit):
                    parts[j] |= bit
                    labels[x] = j
                    if rec(i + 1, max(used, j + 1)):
                        return True
                    parts[j] &= ~bit
            return False

        return labels if rec(0, 0) else None

    for k in range(max(1, _lower_bound(P, cond)), m + 1):
        labels = attempt(k)
        if labels is not None:
            return k, PartitionCertificate(tuple(labels), cond)
    raise AssertionError("singleton parts always satisfy every condition")  # unreachable


# -- Galvin-Hajnal amplification ---------------------------------------------


@dataclass(frozen=True)
class GHConfiguration:
    """``p`` is an antichain of size ``n-1`` inside class ``k``; row ``i`` of
    ``q`` is an antichain of size ``n-1`` and ``r[i][j]`` lies below both
    ``p[i]`` and ``q[i][j]`` in class ``l``."""

    n: int
    k: int
    l: int
    p: tuple[int, ...]
    q: tuple[tuple[int, ...], ...]
    r: tuple[tuple[int, ...], ...]

    def validate(self, P: FinitePoset, labels: Sequence[int] | None = None) -> None:
        s = self.n - 1
        if self.n < 2:
            raise InvalidConfiguration("n must be >= 2")
        if len(self.p) != s:
            raise InvalidConfiguration(f"p-list has {len(self.p)} elements, need {s}")
        for a, b in combinations(self.p, 2):
            if compatible_fp(P, a, b):
                raise InvalidConfiguration(f"p-list elements {a} and {b} are compatible")
        if len(self.q) != s or any(len(row) != s for row in self.q):
            raise InvalidConfiguration(f"q-lists must form a {s}x{s} array")
        for i, row in enumerate(self.q):
            for a, b in combinations(row, 2):
                if compatible_fp(P, a, b):
                    raise InvalidConfiguration(f"q-list {i}: elements {a} and {b} are compatible")
        if len(self.r) != s or any(len(row) != s for row in self.r):
            raise InvalidConfiguration(f"r-matrix must be {s}x{s}")
        for i in range(s):
            for j in range(s):
                r = self.r[i][j]
                if not P.leq(r, self.p[i]):
                    raise InvalidConfiguration(f"r[{i}][{j}] = {r} is not below p[{i}] = {self.p[i]}")
                if not P.leq(r, self.q[i][j]):
                    raise InvalidConfiguration(f"r[{i}][{j}] = {r} is not below q[{i}][{j}] = {self.q[i][j]}")
        if labels is not None:
            for x in (*self.p, *(y for row in self.q for y in row)):
                if labels[x] != self.k:
                    raise InvalidConfiguration(f"element {x} is not in class {self.k}")
            for row in self.r:
                for x in row:
                    if labels[x] != self.l:
                        raise InvalidConfiguration(f"element {x} is not in class {self.l}")

    def to_json(self):
        return {"n": self.n, "k": self.k, "l": self.l, "p": list(self.p),
                "q": [list(r) for r in self.q], "r": [list(r) for r in self.r]}


def gh_amplify(P: FinitePoset, cfg: GHConfiguration, labels: Sequence[int] | None = None) -> list[int]:
    """The ``(n-1)^2`` elements ``r[i][j]``, verified pairwise incompatible.

    Rows are separated by the incompatible ``p[i]``, columns within a row
    by the incompatible ``q[i][j]``.  For ``n > 2`` this antichain is larger
    than ``n`` and sits in one class, which no partition witnessing
    antichains of size ``< n`` allows.
    """
    cfg.validate(P, labels)
    flat = [x for row in cfg.r for x in row]
    for a, b in combinations(flat, 2):
        if a == b or compatible_fp(P, a, b):
            raise InvalidConfiguration(f"amplified elements {a} and {b} are compatible")
    if cfg.n > 2 and not (cfg.n - 1) ** 2 > cfg.n:
        raise AssertionError("amplification failed to exceed n")
    return flat


def _antichain(P: FinitePoset, adj: list[int], among: Iterable[int], size: int) -> list[int] | None:
    within = sum(1 << x for x in set(among))
    return has_clique(adj, size, within)


def gh_find_configuration(P: FinitePoset, partition: PartitionCertificate, n: int) -> GHConfiguration | None:
    """Search classes ``k, l`` for the configuration used by the amplifier.

    ``R_l(p)`` is the set of ``q`` in class ``k`` sharing a lower bound with
    ``p`` inside class ``l``; we need ``n-1`` incompatible ``p`` in class
    ``k`` whose ``R_l(p)`` each hold an ``(n-1)``-antichain.
    """
    if n < 2 or P.size == 0:
        return None
    s = n - 1
    adj = P.incompatibility()
    classes = partition.parts
    masks = {lab: sum(1 << x for x in xs) for lab, xs in classes.items()}
    for k in sorted(classes):
        for l in sorted(classes):
            rows = {}
            for p in classes[k]:
                reach = [q for q in classes[k] if P.down[p] & P.down[q] & masks[l]]
                found = _antichain(P, adj, reach, s)
                if found is not None:
                    rows[p] = found
            ps = _antichain(P, adj, rows, s)
            if ps is None:
                continue
            q = tuple(tuple(rows[p]) for p in ps)
            r = tuple(
                tuple((P.down[p] & P.down[qq] & masks[l]).bit_length() - 1 for qq in row)
                for p, row in zip(ps, q)
            )
            return GHConfiguration(n, k, l, tuple(ps), q, r)
    return None


def gh_example_poset() -> tuple[FinitePoset, GHConfiguration]:
    """Ten elements ``p1 p2 q11 q12 q21 q22 r11 r12 r21 r22``; each ``r_ij``
    is minimal and lies below exactly ``p_i`` and ``q_ij``."""
    names = ["p1", "p2", "q11", "q12", "q21", "q22", "r11", "r12", "r21", "r22"]
    at = {name: i for i, name in enumerate(names)}
    pairs = []
    for i in (1, 2):
        for j in (1, 2):
            pairs.append((at[f"r{i}{j}"], at[f"p{i}"]))
            pairs.append((at[f"r{i}{j}"], at[f"q{i}{j}"]))
    P = FinitePoset.from_pairs(10, pairs, labels=names)
    cfg = GHConfiguration(
        3, 0, 0,
        (at["p1"], at["p2"]),
        ((at["q11"], at["q12"]), (at["q21"], at["q22"])),
        ((at["r11"], at["r12"]), (at["r21"], at["r22"])),
    )
    return P, cfg


# -- generators ----------------------------------------------------------------


def random_poset(rng: random.Random, size: int, density: float | None = None) -> FinitePoset:
    """Reflexive-transitive closure of a random DAG on ``0 .. size-1``."""
    p = rng.uniform(0.1, 0.5) if density is None else density
    perm = list(range(size))
    rng.shuffle(perm)
    pairs = [(perm[a], perm[b]) for a, b in combinations(range(size), 2) if rng.random() < p]
    return FinitePoset.from_pairs(size, pairs)


def random_two_layer_poset(rng: random.Random, size: int) -> FinitePoset:
    """Minimal elements each placed below two random maximal ones.

    Such posets have many incompatible pairs with shared lower bounds, so
    amplifier configurations turn up far more often than in DAG closures.
    """
    if size < 2:
        return FinitePoset.from_pairs(size, [])
    low = rng.randint(max(1, size // 3), max(1, size - 2))
    pairs = [(r, t) for r in range(low) for t in rng.sample(range(low, size), min(size - low, 2))]
    return FinitePoset.from_pairs(size, pairs)


def naturally_labelled_posets(size: int) -> Iterator[FinitePoset]:
    """Every poset on ``0 .. size-1`` whose order extends the integer order
    (``x`` below ``y`` forces ``x < y``).  Each isomorphism type appears at
    least once."""

    def rec(down: list[int]):
        m = len(down)
        if m == size:
            yield FinitePoset(size, tuple(down))
            return
        # the strict down-set of the new element is any down-closed subset
        for ideal in range(1 << m):
            if all(down[x] & ~ideal == 0 for x in _bits(ideal)):
                yield from rec(down + [ideal | (1 << m)])

    yield from rec([])


def poset_catalog(max_size: int) -> Iterator[FinitePoset]:
    for m in range(max_size + 1):
        yield from naturally_labelled_posets(m)


# -- anti-clique posets of finite hypergraphs ----------------------------------


@dataclass(frozen=True)
class FiniteHypergraph:
    vertices: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        edges = tuple(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if len(e) < 2:
                raise ValueError(f"edge {sorted(e)} has fewer than two vertices")
            if not all(0 <= v < self.vertices for v in e):
                raise ValueError(f"edge {sorted(e)} uses a vertex outside 0..{self.vertices - 1}")

    def edge_masks(self) -> list[int]:
        return [sum(1 << v for v in e) for e in self.edges]

    def is_anti_clique(self, vs: Iterable[int]) -> bool:
        mask = sum(1 << v for v in set(vs))
        return all(e & mask != e for e in self.edge_masks())

    def anti_cliques(self, vertices: Iterable[int] | None = None) -> list[frozenset[int]]:
        """Anti-cliques inside ``vertices`` (default: all), by size then lex."""
        vs = sorted(range(self.vertices) if vertices is None else set(vertices))
        masks = self.edge_masks()
        out = []
        for r in range(len(vs) + 1):
            for sub in combinations(vs, r):
                m = sum(1 << v for v in sub)
                if all(e & m != e for e in masks):
                    out.append(frozenset(sub))
        return out

    def components(self) -> list[list[int]]:
        parent = list(range(self.vertices))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.edges:
            vs = sorted(e)
            for v in vs[1:]:
                parent[find(v)] = find(vs[0])
        groups: dict[int, list[int]] = {}
        for v in range(self.vertices):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def to_json(self):
        return {"vertices": self.vertices, "edges": [sorted(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data) -> "FiniteHypergraph":
        return cls(int(data["vertices"]), tuple(frozenset(int(v) for v in e) for e in data["edges"]))


MAX_HYPERGRAPH_VERTICES = 12


def condition_poset_of(H: FiniteHypergraph, limit: int = MAX_HYPERGRAPH_VERTICES) -> FinitePoset:
    """Anti-cliques of ``H`` under reverse inclusion; ``labels`` holds the sets."""
    if H.vertices > limit:
        raise TooLarge(f"{H.vertices} vertices exceeds the limit {limit}")
    sets = H.anti_cliques()
    masks = [sum(1 << v for v in s) for s in sets]
    down = []
    for x in masks:
        acc = 0
        for i, z in enumerate(masks):
            if z & x == x:
                acc |= 1 << i
        down.append(acc)
    return FinitePoset(len(sets), tuple(down), tuple(sets))


MAX_CHOICE_FUNCTIONS = 10**7


def sigma_centred_partition(H: FiniteHypergraph) -> tuple[FinitePoset, PartitionCertificate]:
    """Parts indexed by choice functions picking one anti-clique per component.

    A condition goes to the least choice function (components in order,
    anti-cliques by size then lex, so the empty set first) that agrees with
    its trace on every component where the trace is nonempty.  A part's
    union is the union of its function's choices, an anti-clique because
    no edge crosses components.
    """
    P = condition_poset_of(H)
    comps = H.components()
    menus = [H.anti_cliques(c) for c in comps]
    if prod(len(m) for m in menus) > MAX_CHOICE_FUNCTIONS:
        raise TooLarge("too many choice functions")
    where = [{s: i for i, s in enumerate(m)} for m in menus]
    comp_of = {v: ci for ci, c in enumerate(comps) for v in c}
    labels = []
    keys: dict[int, tuple] = {}
    for cond in P.labels:
        traces = [set() for _ in comps]
        for v in cond:
            traces[comp_of[v]].add(v)
        choice = tuple(where[ci][frozenset(t)] if t else 0 for ci, t in enumerate(traces))
        index = 0
        for ci, c in enumerate(choice):
            index = index * len(menus[ci]) + c
        labels.append(index)
        keys[index] = tuple(sorted(menus[ci][c]) for ci, c in enumerate(choice))
    return P, PartitionCertificate(tuple(labels), CENTRED, keys)


def random_hypergraph(rng: random.Random, max_components: int = 4, max_vertices: int = 10) -> FiniteHypergraph:
    """Disjoint union of small random connected hypergraphs."""
    n_comp = rng.randint(1, max_components)
    sizes = []
    budget = max_vertices
    for c in range(n_comp):
        left = n_comp - c - 1
        if budget - left < 1:
            break
        s = rng.randint(1, min(4, budget - left))
        sizes.append(s)
        budget -= s
    edges = []
    start = 0
    for s in sizes:
        vs = list(range(start, start + s))
        # a spanning path of random edges keeps the block connected
        for a, b in zip(vs, vs[1:]):
            extra = [v for v in vs if v not in (a, b) and rng.random() < 0.3]
            edges.append(frozenset([a, b, *extra]))
        for _ in range(rng.randint(0, 2)):
            if s >= 2:
                edges.append(frozenset(rng.sample(vs, rng.randint(2, s))))
        start += s
    return FiniteHypergraph(start, tuple(dict.fromkeys(edges)))
