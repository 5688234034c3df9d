"""The four separation demos and the finite-poset checks, as report items.

Each separation pairs a positive side (the partition classes verified at
depth) with a negative side (the adversary beating prefix colourings).
"""

from __future__ import annotations

import random
import time

from .branch_space import OMEGA, TreeKind
from .condition_poset import is_centred, is_n_linked
from .errors import UnknownSelector
from .finite_poset_lab import (
    CENTRED,
    LINKED,
    PartitionCertificate,
    antichain_lt,
    check_partition,
    compatible_fp,
    gh_amplify,
    gh_example_poset,
    gh_find_configuration,
    min_parts,
    nlinked,
    poset_catalog,
    random_hypergraph,
    random_poset,
    random_two_layer_poset,
    sigma_centred_partition,
)
from .hypergraph import H0INF, H1INF, HypergraphKind, is_edge
from .prefix_adversary import PrefixColoring, find_mono_clique, find_mono_edge, refute_centred_class
from .report import DEFAULT_SEED, CheckResult, Report
from .sampling import sample_keys
from .verifier import (
    antichain_witness_valid,
    certify_r33,
    check_class_antichain_bound,
    check_h1_no_unbounded_clique,
    linked_counterexample,
    linked_violation,
    ramsey_upper,
)

SELECTORS = ("finite-cc", "bounded-cc", "centred")


def _colorings(tree: TreeKind, count: int, max_depth: int, seed: int):
    rng = random.Random(seed)
    for i in range(count):
        depth = i % (max_depth + 1)
        palette = rng.randint(1, 6)
        yield PrefixColoring.seeded(tree, depth, palette, rng.randrange(2**31))


def h1_clique_check(seed: int, samples: int = 8, max_depth: int = 6) -> CheckResult:
    rng = random.Random(seed)
    keys = []
    for m in (1, 2, 3):
        keys += sample_keys(rng, H1INF, [1], min(samples, {1: 1, 2: 2, 3: 6}[m]), max_support=4, min_len=m)
    rows = []
    ok = True
    by_depth: dict[int, int] = {}
    for key in keys:
        for depth in range(max(2, key.length), max_depth + 1):
            r = check_h1_no_unbounded_clique(key, depth)
            ok &= r.holds
            by_depth[depth] = max(by_depth.get(depth, 0), r.max_clique)
            rows.append({"key": key.to_json()["nodes"], "depth": depth, "max_clique": r.max_clique,
                         "anchor_len": r.anchor_len, "witness_anchor_len": r.witness_anchor_len})
    depths = sorted(by_depth)
    return CheckResult(
        "h1inf-class-clique-bound", ok,
        f"{len(keys)} classes, depths <= {max_depth}: max clique per depth {[by_depth[d] for d in depths]}",
        {"rows": rows},
        {"x": depths, "y": [by_depth[d] for d in depths], "bound": [d - 1 for d in depths],
         "xlabel": "depth", "ylabel": "largest H1 clique in a class"},
    )


def h1_adversary_check(seed: int, count: int = 100, max_depth: int = 4, m: int = 8) -> CheckResult:
    ok = 0
    examples = []
    for c in _colorings(OMEGA, count, max_depth, seed):
        w = find_mono_clique(c, m)
        members = sorted(w.members)
        valid = (len(members) == m and len({c.color(x) for x in members}) == 1
                 and all(is_edge(H1INF, (a, b)) for i, a in enumerate(members) for b in members[i + 1:]))
        ok += valid
        if len(examples) < 3:
            examples.append({"coloring_depth": c.depth, "witness": w.to_json()})
    return CheckResult("h1inf-adversary-cliques", ok == count,
                       f"{ok}/{count} colourings of depth <= {max_depth} beaten by {m}-cliques",
                       {"validated": ok, "trials": count, "examples": examples})


def mono_edge_check(kind: HypergraphKind, seed: int, count: int = 100, max_depth: int = 4) -> CheckResult:
    ok = 0
    examples = []
    for c in _colorings(kind.tree, count, max_depth, seed):
        w = find_mono_edge(c, kind)
        valid = is_edge(kind, w.members) and len({c.color(x) for x in w.members}) == 1
        ok += valid
        if len(examples) < 3:
            examples.append({"coloring_depth": c.depth, "witness": w.to_json()})
    return CheckResult(f"{kind}-adversary-edges", ok == count,
                       f"{ok}/{count} colourings of depth <= {max_depth} have a monochromatic {kind} edge",
                       {"validated": ok, "trials": count, "examples": examples})


def h2_antichain_check(seed: int, samples: int = 20) -> CheckResult:
    rng = random.Random(seed)
    kind = HypergraphKind.hn(2)
    # one-node keys of a fixed length are few, so vary min_len for them
    keys = []
    for m, cap in ((1, 2), (2, 4), (3, 8)):
        keys += sample_keys(rng, kind, [1], min(samples, cap), max_support=5, min_len=m)
    keys += sample_keys(rng, kind, [2], samples, max_support=5)
    rows = []
    ok = True
    for key in keys:
        r = check_class_antichain_bound(key, key.length + 3)
        ok &= r.holds and antichain_witness_valid(r)
        rows.append({"key": key.to_json()["nodes"], "corpus": r.corpus_size,
                     "max_antichain": r.max_antichain_found, "bound": r.bound})
    worst = {k: max((row["max_antichain"] for row in rows if len(row["key"]) == k), default=0) for k in (1, 2)}
    return CheckResult(
        "hn:2-class-antichain-bound", ok,
        f"{len(keys)} classes; largest antichain {worst[1]} (<{ramsey_upper(1).value}) "
        f"for 1 node, {worst[2]} (<{ramsey_upper(2).value}) for 2 nodes",
        {"rows": rows},
        {"x": list(range(len(rows))), "y": [row["max_antichain"] for row in rows],
         "bound": [row["bound"] for row in rows], "xlabel": "class", "ylabel": "largest antichain"},
    )


def ramsey_check() -> CheckResult:
    ok = certify_r33()
    return CheckResult("ramsey-r33-certificate", ok,
                       "K5 has a triangle-free 2-colouring, K6 has none" if ok else "R(3,3) check failed")


def hn_linked_check(n: int, seed: int, samples: int = 50) -> CheckResult:
    rng = random.Random(seed)
    kind = HypergraphKind.hn(n)
    keys = sample_keys(rng, kind, range(1, n), samples, max_support=5)
    failures = []
    for key in keys:
        bad = linked_violation(key, n - 1, key.length + 2)
        if bad is not None:
            failures.append({"key": key.to_json()["nodes"], "family": [c.to_json() for c in bad]})
    family, edge = linked_counterexample(keys[0], n)
    counter_ok = not is_n_linked(family, n) and is_edge(kind, edge.members)
    return CheckResult(
        f"hn:{n}-classes-{n - 1}-linked", not failures and counter_ok,
        f"{len(keys) - len(failures)}/{len(keys)} classes {n - 1}-linked at depth key+2; "
        f"{n}-linkedness refuted in class {keys[0].to_json()['nodes']}",
        {"failures": failures, "counterexample": {"key": keys[0].to_json(),
                                                  "family": [c.to_json() for c in family],
                                                  "edge": edge.to_json()}},
    )


def h0_linked_check(seed: int, ns=(3, 4), samples: int = 20) -> CheckResult:
    rng = random.Random(seed)
    rows = []
    ok = True
    for n in ns:
        keys = sample_keys(rng, H0INF, range(1, 4), samples, max_support=5, min_len=n + 1)
        bad = sum(linked_violation(k, n, k.length + 2) is not None for k in keys)
        ok &= bad == 0
        rows.append({"n": n, "classes": len(keys), "failures": bad})
    return CheckResult("h0inf-classes-n-linked", ok,
                       "; ".join(f"n={r['n']}: {r['classes'] - r['failures']}/{r['classes']}" for r in rows),
                       {"rows": rows})


def h0_refute_check(seed: int, count: int = 100, max_depth: int = 4) -> CheckResult:
    ok = 0
    examples = []
    for c in _colorings(OMEGA, count, max_depth, seed):
        family = refute_centred_class(c)
        colours = {c.color(x) for q in family for x in q.elements}
        proper = all(is_centred(family[:i] + family[i + 1:]) for i in range(len(family)))
        valid = len(colours) == 1 and not is_centred(family) and proper
        ok += valid
        if len(examples) < 3:
            examples.append({"coloring_depth": c.depth, "family": [q.to_json() for q in family]})
    return CheckResult("h0inf-not-centred", ok == count,
                       f"{ok}/{count} colourings have a one-colour non-centred family",
                       {"validated": ok, "trials": count, "examples": examples})


def demo_separation(which: str, seed: int = DEFAULT_SEED, depth: int = 4, samples: int = 20,
                    colorings: int = 100) -> Report:
    start = time.perf_counter()
    results: list[CheckResult]
    if which == "finite-cc":
        results = [h1_clique_check(seed, samples), h1_adversary_check(seed, colorings, depth)]
    elif which == "bounded-cc":
        results = [
            h2_antichain_check(seed, samples),
            ramsey_check(),
            h1_adversary_check(seed, colorings, depth),
            mono_edge_check(HypergraphKind.hn(2), seed, colorings, depth),
        ]
    elif which.startswith("linked:"):
        try:
            n = int(which.split(":", 1)[1])
        except ValueError:
            raise UnknownSelector(which) from None
        if n < 3:
            raise UnknownSelector(f"{which}: linked:n needs n >= 3")
        kind = HypergraphKind.hn(n)
        results = [hn_linked_check(n, seed, max(samples, 50)), mono_edge_check(kind, seed, colorings, depth)]
    elif which == "centred":
        results = [h0_linked_check(seed, samples=samples), h0_refute_check(seed, colorings, depth)]
    else:
        raise UnknownSelector(f"unknown demo {which!r}; expected finite-cc, bounded-cc, linked:N or centred")
    params = {"which": which, "depth": depth, "samples": samples, "colorings": colorings}
    return Report(["demo", which], params, seed, results, time.perf_counter() - start)


# -- finite posets ---------------------------------------------------------------


def gh_demo_check() -> CheckResult:
    P, cfg = gh_example_poset()
    antichain = gh_amplify(P, cfg)
    names = [P.labels[x] for x in antichain]
    labels = tuple(0 for _ in range(P.size))
    found = gh_find_configuration(P, PartitionCertificate(labels, antichain_lt(4)), 3)
    found_ok = found is not None and len(gh_amplify(P, found, labels)) == 4
    return CheckResult("gh-amplify-example", len(antichain) == 4 and found_ok,
                       f"amplified antichain {names}; search recovers a configuration: {found_ok}",
                       {"antichain": names, "configuration": cfg.to_json(),
                        "found": found.to_json() if found else None})


def gh_random_check(seed: int, count: int = 200, max_size: int = 10) -> CheckResult:
    rng = random.Random(seed)
    found = failures = 0
    for i in range(count):
        if i % 2:
            P = random_poset(rng, rng.randint(1, max_size))
            classes = rng.randint(1, 3)
        else:
            # the shape where configurations are common
            P = random_two_layer_poset(rng, rng.randint(min(6, max_size), max_size))
            classes = rng.choice((1, 1, 1, 2))
        labels = tuple(rng.randrange(classes) for _ in range(P.size))
        cfg = gh_find_configuration(P, PartitionCertificate(labels, antichain_lt(4)), 3)
        if cfg is None:
            continue
        found += 1
        flat = gh_amplify(P, cfg, labels)
        if len(flat) != 4 or any(compatible_fp(P, a, b) for i, a in enumerate(flat) for b in flat[i + 1:]):
            failures += 1
    return CheckResult("gh-random-posets", failures == 0,
                       f"{found}/{count} posets had a configuration; {failures} verification failures",
                       {"found": found, "failures": failures, "trials": count})


def hierarchy_check(seed: int, catalog_size: int = 6, random_count: int = 200, max_size: int = 10) -> CheckResult:
    rng = random.Random(seed)
    posets = list(poset_catalog(catalog_size))
    posets += [random_poset(rng, rng.randint(1, max_size)) for _ in range(random_count)]
    bad = []
    for idx, P in enumerate(posets):
        c = min_parts(P, CENTRED)[0]
        l3 = min_parts(P, nlinked(3))[0]
        lk = min_parts(P, LINKED)[0]
        a2 = min_parts(P, antichain_lt(2))[0]
        a3 = min_parts(P, antichain_lt(3))[0]
        if not (a2 == lk and c >= l3 >= lk >= a3):
            bad.append({"index": idx, "poset": P.to_json(), "centred": c, "nlinked3": l3,
                        "linked": lk, "antichain_lt2": a2, "antichain_lt3": a3})
    return CheckResult("partition-number-hierarchy", not bad,
                       f"{len(posets) - len(bad)}/{len(posets)} posets satisfy antichain-lt:2 = linked and "
                       f"centred >= nlinked:3 >= linked >= antichain-lt:3",
                       {"posets": len(posets), "violations": bad})


def sigma_centred_check(seed: int, count: int = 50) -> CheckResult:
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        H = random_hypergraph(rng)
        P, cert = sigma_centred_partition(H)
        if not check_partition(P, cert) or len(cert.labels) != P.size:
            bad += 1
    return CheckResult("sigma-centred-partition", bad == 0,
                       f"{count - bad}/{count} hypergraph partitions have only centred parts",
                       {"trials": count, "failures": bad})
