import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from chaincond.branch_space import OMEGA, Branch, DenseSequence, arity
from chaincond.condition_poset import is_centred
from chaincond.errors import KindMismatch
from chaincond.hypergraph import H0INF, H1INF, HypergraphKind, is_edge
from chaincond.prefix_adversary import PrefixColoring, find_mono_clique, find_mono_edge, refute_centred_class

H2, H3 = HypergraphKind.hn(2), HypergraphKind.hn(3)


class CountingColoring:
    """Wraps an assign map and records every word it is asked about."""

    def __init__(self, palette):
        self.palette = palette
        self.calls = []

    def __call__(self, word):
        self.calls.append(word)
        return hash(word) % self.palette


def supports(w):
    return sorted(b.support for b in w.members)


def test_constant_colouring_hn2():
    c = PrefixColoring.seeded(arity(2), 0, 1, 0)
    w = find_mono_edge(c, H2)
    assert w.anchor.word == (1, 0)
    assert supports(w) == [(1,), (1, 0, 1)]


def test_identity_colouring_depth_two():
    words = sorted(arity(2).words(2))
    c = PrefixColoring(arity(2), 2, 4, lambda wd: words.index(wd))
    w = find_mono_edge(c, H2)
    assert w.anchor.word == (1, 0)
    assert {b.prefix(2).word for b in w.members} == {(1, 0)}


def test_h0_edge_at_level_three():
    c = PrefixColoring.seeded(OMEGA, 3, 5, 1)
    w = find_mono_edge(c, H0INF)
    assert len(w.anchor) == 3 and len(w.members) == 3
    assert w.anchor == DenseSequence(OMEGA).node(3)


@pytest.mark.parametrize("depth, m, level", [(1, 3, 3), (0, 2, 2), (5, 10, 10)])
def test_clique_examples(depth, m, level):
    c = PrefixColoring.seeded(OMEGA, depth, 3, 9)
    w = find_mono_clique(c, m)
    assert len(w.members) == m and len(w.anchor) == level


def test_refute_examples():
    for depth, size in ((0, 2), (2, 2)):
        fam = refute_centred_class(PrefixColoring.seeded(OMEGA, depth, 2, 4))
        assert len(fam) == size and not is_centred(fam)
        assert all(is_centred(fam[:i] + fam[i + 1:]) for i in range(len(fam)))


def test_kind_errors():
    c = PrefixColoring.seeded(arity(2), 1, 2, 0)
    with pytest.raises(KindMismatch):
        find_mono_edge(c, H3)
    with pytest.raises(KindMismatch):
        find_mono_edge(PrefixColoring.seeded(OMEGA, 1, 2, 0), H1INF)
    with pytest.raises(KindMismatch):
        find_mono_clique(c, 3)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([H2, H3, H0INF]), st.integers(0, 6), st.integers(1, 8), st.integers(0, 10**9))
def test_universality_edges(kind, depth, palette, seed):
    c = PrefixColoring.seeded(kind.tree, depth, palette, seed)
    w = find_mono_edge(c, kind)
    assert is_edge(kind, w.members)
    assert {c.color(x) for x in w.members} == {w.color}


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 6), st.integers(1, 8), st.integers(0, 10**9), st.integers(2, 12))
def test_universality_and_growth_cliques(depth, palette, seed, m):
    c = PrefixColoring.seeded(OMEGA, depth, palette, seed)
    w = find_mono_clique(c, m)
    members = sorted(w.members)
    assert len(members) == m
    assert all(is_edge(H1INF, (a, b)) for i, a in enumerate(members) for b in members[i + 1:])
    assert {c.color(x) for x in members} == {w.color}


@pytest.mark.parametrize("depth", [0, 3, 6])
def test_adversary_only_queries_witness_prefixes(depth):
    assign = CountingColoring(5)
    c = PrefixColoring(OMEGA, depth, 5, assign)
    w = find_mono_clique(c, 7)
    assert set(assign.calls) == {x.entries(depth) for x in w.members}
    assert len(assign.calls) == 7

    assign = CountingColoring(5)
    c = PrefixColoring(arity(3), depth, 5, assign)
    w = find_mono_edge(c, H3)
    assert len(assign.calls) == 3
    assert set(assign.calls) == {x.entries(depth) for x in w.members}


def test_assign_replay_is_pure():
    c = PrefixColoring.seeded(arity(2), 4, 6, 42)
    again = PrefixColoring.seeded(arity(2), 4, 6, 42)
    for w in arity(2).words(6):
        x = Branch(arity(2), w)
        assert c.color(x) == again.color(x)
        assert c.color(x) == c.color(Branch(arity(2), w[:4]))


def test_table_colouring(tmp_path):
    table = {",".join(map(str, w)): sum(w) % 2 for w in arity(2).words(2)}
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"kind": {"arity": 2}, "depth": 2, "palette_size": 2, "table": table}))
    c = PrefixColoring.load(path)
    w = find_mono_edge(c, H2)
    assert is_edge(H2, w.members)
    with pytest.raises(ValueError):
        PrefixColoring.from_table({"kind": {"arity": 2}, "depth": 2, "table": {"0": 1}})


def test_witness_json():
    w = find_mono_clique(PrefixColoring.seeded(OMEGA, 0, 1, 0), 2)
    data = w.to_json()
    assert data["color"] == 0 and len(data["members"]) == 2 and data["anchor"] == [0, 0]
