import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from chaincond.errors import IndexOutOfRange, InvalidConfiguration, NotAPartialOrder, TooLarge
from chaincond.finite_poset_lab import (
    CENTRED,
    LINKED,
    ChainCondition,
    FiniteHypergraph,
    FinitePoset,
    GHConfiguration,
    PartitionCertificate,
    antichain_lt,
    check_partition,
    compatible_fp,
    condition_poset_of,
    gh_amplify,
    gh_example_poset,
    gh_find_configuration,
    min_parts,
    naturally_labelled_posets,
    nlinked,
    part_satisfies,
    poset_catalog,
    random_hypergraph,
    random_poset,
    random_two_layer_poset,
    sigma_centred_partition,
)
from oracles import min_parts_oracle


def three_atoms():
    # a, b, c on top; ab, ac, bc each below exactly two of them
    a, b, c, ab, ac, bc = range(6)
    return FinitePoset.from_pairs(6, [(ab, a), (ab, b), (ac, a), (ac, c), (bc, b), (bc, c)])


def lower_bound_exists(P, xs):
    return any(all(P.leq(z, x) for x in xs) for z in range(P.size))


def oracle_ok(P, cond):
    """Part predicates straight from the definitions, on explicit leq."""

    def ok(part):
        if cond.name == "centred":
            return not part or lower_bound_exists(P, part)
        if cond.name == "linked":
            return all(lower_bound_exists(P, pair) for pair in combinations(part, 2))
        if cond.name == "nlinked":
            return all(lower_bound_exists(P, sub) for r in range(1, cond.n + 1) for sub in combinations(part, r))
        return not any(
            all(not lower_bound_exists(P, pair) for pair in combinations(sub, 2))
            for sub in combinations(part, cond.n)
        )

    return ok


def test_compatible_examples():
    chain = FinitePoset.chain(3)
    assert compatible_fp(chain, 0, 2)
    assert not compatible_fp(FinitePoset.antichain(2), 0, 1)
    assert compatible_fp(FinitePoset.antichain(2), 1, 1)
    with pytest.raises(IndexOutOfRange):
        compatible_fp(chain, 0, 3)


def test_from_pairs_rejects_cycles():
    with pytest.raises(NotAPartialOrder):
        FinitePoset.from_pairs(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(IndexOutOfRange):
        FinitePoset.from_pairs(2, [(0, 2)])


def test_min_parts_examples():
    assert min_parts(FinitePoset.antichain(3), LINKED)[0] == 3
    assert min_parts(FinitePoset.chain(3), CENTRED)[0] == 1
    assert min_parts(FinitePoset.antichain(5), antichain_lt(3))[0] == 3
    P = three_atoms()
    assert min_parts(P, CENTRED)[0] == 3
    # the three minimal elements are pairwise incompatible
    assert min_parts(P, LINKED)[0] == 3
    assert min_parts(FinitePoset.antichain(0), LINKED)[0] == 0
    with pytest.raises(TooLarge):
        min_parts(FinitePoset.antichain(13), CENTRED)


def test_nlinked_needs_lower_bounds_for_small_parts():
    # a 2-antichain is not 3-linked: pick x, x, y
    assert not part_satisfies(FinitePoset.antichain(2), [0, 1], nlinked(3))
    assert min_parts(FinitePoset.antichain(2), nlinked(3))[0] == 2


def test_check_partition_examples():
    P = FinitePoset.antichain(2)
    assert check_partition(P, PartitionCertificate((0, 1), LINKED))
    assert not check_partition(P, PartitionCertificate((0, 0), LINKED))
    count, cert = min_parts(three_atoms(), CENTRED)
    assert check_partition(three_atoms(), cert)
    assert not check_partition(P, PartitionCertificate((0,), LINKED))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 7),
       st.sampled_from([LINKED, CENTRED, nlinked(3), antichain_lt(2), antichain_lt(3)]))
def test_min_parts_matches_brute_force(seed, size, cond):
    P = random_poset(random.Random(seed), size)
    count, cert = min_parts(P, cond)
    assert check_partition(P, cert)
    assert count == min_parts_oracle(size, oracle_ok(P, cond))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 9))
def test_part_satisfies_matches_definitions(seed, size):
    rng = random.Random(seed)
    P = random_poset(rng, size)
    part = [x for x in range(size) if rng.random() < 0.6]
    for cond in (LINKED, CENTRED, nlinked(3), antichain_lt(3)):
        assert part_satisfies(P, part, cond) == oracle_ok(P, cond)(part)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 10))
def test_random_posets_are_partial_orders(seed, size):
    rng = random.Random(seed)
    for P in (random_poset(rng, size), random_two_layer_poset(rng, size)):
        assert P.is_partial_order()
        assert FinitePoset.from_json(P.to_json()) == P


def test_catalog_counts_frozen():
    # naturally labelled posets on 0..5 elements
    assert [sum(1 for _ in naturally_labelled_posets(m)) for m in range(6)] == [1, 1, 2, 7, 40, 357]
    assert sum(1 for _ in poset_catalog(3)) == 11


def _canonical(P):
    return min(
        tuple(sorted((perm[a], perm[b]) for a, b in P.pairs()))
        for perm in permutations(range(P.size))
    )


def test_catalog_covers_every_isomorphism_type():
    # unlabelled posets on 1..4 elements: 1, 2, 5, 16
    for m, expected in ((1, 1), (2, 2), (3, 5), (4, 16)):
        assert len({_canonical(P) for P in naturally_labelled_posets(m)}) == expected


def test_condition_names():
    assert ChainCondition.parse("nlinked:3") == nlinked(3)
    assert str(antichain_lt(4)) == "antichain-lt:4"
    assert ChainCondition.parse("centered") == CENTRED
    with pytest.raises(ValueError):
        ChainCondition.parse("nlinked")


# -- amplifier ----------------------------------------------------------------


def test_gh_example():
    P, cfg = gh_example_poset()
    flat = gh_amplify(P, cfg)
    assert sorted(P.labels[x] for x in flat) == ["r11", "r12", "r21", "r22"]
    assert not any(compatible_fp(P, a, b) for a, b in combinations(flat, 2))


def test_gh_degenerate_and_invalid():
    P, cfg = gh_example_poset()
    at = {name: i for i, name in enumerate(P.labels)}
    small = GHConfiguration(2, 0, 0, (at["p1"],), ((at["q11"],),), ((at["r11"],),))
    assert len(gh_amplify(P, small)) == 1
    # p1 and q11 share r11, so they cannot both sit in the p antichain
    bad = GHConfiguration(3, 0, 0, (at["p1"], at["q11"]), cfg.q, cfg.r)
    with pytest.raises(InvalidConfiguration):
        gh_amplify(P, bad)


def test_gh_find():
    P, _ = gh_example_poset()
    found = gh_find_configuration(P, PartitionCertificate((0,) * P.size, antichain_lt(4)), 3)
    assert found is not None and len(gh_amplify(P, found)) == 4
    chain = FinitePoset.chain(5)
    assert gh_find_configuration(chain, PartitionCertificate((0,) * 5, LINKED), 3) is None
    empty = FinitePoset.antichain(0)
    assert gh_find_configuration(empty, PartitionCertificate((), LINKED), 3) is None


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_gh_found_configurations_amplify(seed):
    rng = random.Random(seed)
    P = random_two_layer_poset(rng, rng.randint(1, 10))
    labels = tuple(rng.randrange(2) for _ in range(P.size))
    cfg = gh_find_configuration(P, PartitionCertificate(labels, antichain_lt(4)), 3)
    if cfg is not None:
        flat = gh_amplify(P, cfg, labels)
        assert len(flat) == 4
        assert not any(compatible_fp(P, a, b) for a, b in combinations(flat, 2))


# -- hypergraphs --------------------------------------------------------------


def _sets(P):
    return sorted(P.labels, key=lambda s: (len(s), sorted(s)))


def test_condition_poset_examples():
    P = condition_poset_of(FiniteHypergraph(2, [{0, 1}]))
    assert _sets(P) == [frozenset(), frozenset({0}), frozenset({1})]
    empty = P.labels.index(frozenset())
    assert all(P.leq(x, empty) for x in range(P.size))
    free = condition_poset_of(FiniteHypergraph(2, []))
    assert free.size == 4 and min_parts(free, CENTRED)[0] == 1
    tri = condition_poset_of(FiniteHypergraph(3, [{0, 1, 2}]))
    assert _sets(tri) == [frozenset(s) for r in range(3) for s in combinations(range(3), r)]
    for x, y in combinations(range(tri.size), 2):
        assert tri.leq(x, y) == (tri.labels[y] <= tri.labels[x])
    with pytest.raises(TooLarge):
        condition_poset_of(FiniteHypergraph(13, []))


def test_sigma_centred_examples():
    H = FiniteHypergraph(4, [{0, 1}, {2, 3}])
    P, cert = sigma_centred_partition(H)
    x = P.labels.index(frozenset({0, 2}))
    assert cert.part_keys[cert.labels[x]] == ([0], [2])
    assert check_partition(P, cert)
    P, cert = sigma_centred_partition(FiniteHypergraph(2, [{0, 1}]))
    assert sorted(cert.part_keys.values()) == [([],), ([0],), ([1],)]
    assert check_partition(P, cert)
    P, cert = sigma_centred_partition(FiniteHypergraph(3, []))
    assert check_partition(P, cert)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**9))
def test_sigma_centred_random(seed):
    H = random_hypergraph(random.Random(seed))
    P, cert = sigma_centred_partition(H)
    assert len(cert.labels) == P.size == len(H.anti_cliques())
    assert check_partition(P, cert)
    assert FiniteHypergraph.from_json(H.to_json()) == H
