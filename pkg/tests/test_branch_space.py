import pytest
from hypothesis import given, strategies as st

from chaincond.branch_space import (
    OMEGA,
    Branch,
    DenseSequence,
    Node,
    TreeKind,
    arity,
    branches_within,
    concat_branch,
    delta,
    dense_node,
    extends,
    extensions_within,
    is_dense_node,
    meet_length,
    node_index,
    nth_node_word,
)
from chaincond.errors import EntryOutOfRange, EqualBranches, KindMismatch
from oracles import arity_branching, dense_words, omega_branching

T2, T3 = arity(2), arity(3)


@st.composite
def supports(draw, kind=T2, max_len=8):
    length = draw(st.integers(0, max_len))
    return tuple(draw(st.integers(0, kind.branching(i) - 1)) for i in range(length))


def kinds():
    return st.sampled_from([T2, T3, OMEGA])


@st.composite
def branch_pairs(draw):
    kind = draw(kinds())
    a = Branch(kind, draw(supports(kind)))
    b = Branch(kind, draw(supports(kind)))
    if a == b:
        b = Branch(kind, a.support + (0,) * 3 + (1,))
    return a, b


def test_canonical_form_strips_trailing_zeros():
    assert Branch(T2, (1, 0, 0)).support == (1,)
    assert Branch(T2, (0, 0)) == Branch(T2, ())
    assert Branch(T2, (1,))[7] == 0


def test_entry_bounds():
    with pytest.raises(EntryOutOfRange):
        Branch(T2, (2,))
    with pytest.raises(EntryOutOfRange):
        Node(OMEGA, (1,))  # level 0 of T_inf has a single child
    Node(OMEGA, (0, 1, 2))
    with pytest.raises(ValueError):
        TreeKind(1)


def test_delta_examples():
    assert delta(Branch(OMEGA, (0, 1)), Branch(OMEGA, (0, 1, 1))).word == (0, 1)
    assert delta(Branch(T2, ()), Branch(T2, (1,))).word == ()
    with pytest.raises(EqualBranches):
        delta(Branch(T2, (1,)), Branch(T2, (1,)))
    with pytest.raises(KindMismatch):
        delta(Branch(T2, (1,)), Branch(T3, (1,)))


def test_meet_past_shorter_support():
    # the shorter support runs out while the longer one still has zeros
    assert meet_length(Branch(T2, (1, 0, 1)), Branch(T2, (1, 0, 1, 0, 1, 1))) == 4


def test_dense_examples():
    d = DenseSequence(T2)
    assert [d.word(k) for k in range(6)] == [(), (0,), (1, 0), (0, 0, 0), (0, 1, 0, 0), (1, 0, 0, 0, 0)]
    assert is_dense_node(d, Node(T2, (1, 0)))
    assert not is_dense_node(d, Node(T2, (1,)))
    assert is_dense_node(d, Node(T2, ()))
    assert dense_node(DenseSequence(OMEGA), 3).word == (0, 1, 0)


def test_dense_matches_oracle():
    for kind, br in ((T2, arity_branching(2)), (T3, arity_branching(3)), (OMEGA, omega_branching)):
        assert [DenseSequence(kind).word(k) for k in range(60)] == dense_words(br, 60)


def test_exactly_one_node_per_level():
    for kind in (T2, T3, OMEGA):
        d = DenseSequence(kind)
        assert all(len(d.word(k)) == k for k in range(65))


@pytest.mark.parametrize("kind", [T2, T3])
def test_density_up_to_length_six(kind):
    d = DenseSequence(kind)
    for length in range(7):
        for w in kind.words(length):
            level = d.extension_level(Node(kind, w))
            assert level <= node_index(kind, w)
            assert d.word(level)[:length] == w


def test_concat_examples():
    d = Node(T2, (1, 0))
    assert concat_branch(d, 1, ()).support == (1, 0, 1)
    assert concat_branch(d, 0, ()).support == (1,)
    with pytest.raises(EntryOutOfRange):
        concat_branch(Node(T2, ()), 5, ())


def test_extends_examples():
    y = Branch(T2, (0, 1))
    assert extends(y, Node(T2, (0, 1)))
    assert extends(y, Node(T2, (0, 1, 0)))
    assert not extends(Branch(T2, (1,)), Node(T2, (0, 1)))


@given(kinds().flatmap(lambda k: st.tuples(st.just(k), supports(k, 5), st.integers(0, 20), supports(k, 5))))
def test_concat_round_trip(args):
    kind, word, i, tail_seed = args
    d = Node(kind, word)
    base = len(word)
    i %= kind.branching(base)
    tail = tuple(v % kind.branching(base + 1 + j) for j, v in enumerate(tail_seed))
    b = concat_branch(d, i, tail)
    width = base + 1 + len(tail) + 3
    full = word + (i,) + tail
    assert b.entries(width) == full + (0,) * (width - len(full))


@given(branch_pairs())
def test_delta_properties(pair):
    x, y = pair
    t = delta(x, y)
    assert t == delta(y, x)
    assert extends(x, t) and extends(y, t)
    assert x[len(t)] != y[len(t)]


@given(kinds(), st.integers(0, 300))
def test_node_index_round_trip(kind, k):
    w = nth_node_word(kind, k)
    assert node_index(kind, w) == k


def test_enumeration_sizes():
    assert len(list(branches_within(T2, 8))) == 256
    assert len(list(branches_within(OMEGA, 4))) == 24
    assert len(extensions_within(Node(T2, (0, 1)), 4)) == 4
    assert extensions_within(Node(T2, (0, 1, 0)), 2) == [Branch(T2, (0, 1))]


def test_json_shapes():
    assert T2.to_json() == {"arity": 2}
    assert OMEGA.to_json() == "omega"
    assert TreeKind.from_json({"arity": 3}) == T3
    assert Branch(T2, (1, 0, 1, 0)).to_json() == [1, 0, 1]
