"""Command-line front end.

Every command prints tab-separated ``check, PASS/FAIL, summary`` lines,
optionally writes the JSON report (``--json``) and figures
(``--plot-dir``).  Exit status: 0 all checks pass, 1 some check fails,
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import demos
from .branch_space import Node
from .condition_poset import Condition
from .errors import ChainCondError, ConfigError
from .finite_poset_lab import (
    ChainCondition,
    FiniteHypergraph,
    FinitePoset,
    check_partition,
    min_parts,
    sigma_centred_partition,
)
from .hypergraph import HypergraphKind
from .partition_builder import SeparatorKey, class_key, classify, match_nodes
from .prefix_adversary import PrefixColoring, find_mono_clique, find_mono_edge, refute_centred_class
from .report import DEFAULT_SEED, CheckResult, Report, max_workers
from .verifier import (
    check_class_antichain_bound,
    check_h1_no_unbounded_clique,
    claim_violation,
    linked_violation,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _load_json_arg(text: str):
    """Inline JSON, or ``@path`` to read it from a file."""
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return json.load(fh)
    return json.loads(text)


def _read_json_file(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


# -- commands --------------------------------------------------------------------


def cmd_demo(args) -> Report:
    return demos.demo_separation(args.which, seed=args.seed, depth=args.depth, samples=args.samples,
                                 colorings=args.colorings)


def _key_from_args(kind: HypergraphKind, args) -> SeparatorKey:
    nodes = _load_json_arg(args.key)
    return SeparatorKey(kind, tuple(Node(kind.tree, tuple(w)) for w in nodes), args.min_len)


def cmd_verify(args) -> Report:
    start = time.perf_counter()
    kind = HypergraphKind.parse(args.kind)
    key = _key_from_args(kind, args)
    depth = args.depth if args.depth is not None else key.length + 2
    check = args.check
    if check is None:
        check = {"hn": "antichain" if kind.n == 2 else "linked", "h0inf": "linked", "h1inf": "clique"}[kind.family]
    results = []
    if check == "claim":
        edge = claim_violation(key, depth)
        results.append(CheckResult("claim-guarantee", edge is None,
                                   "every extension tuple is an anti-clique" if edge is None else "edge found",
                                   {"edge": edge.to_json() if edge else None}))
    elif check == "antichain":
        r = check_class_antichain_bound(key, depth)
        results.append(CheckResult("class-antichain-bound", r.holds,
                                   f"largest antichain {r.max_antichain_found} of {r.corpus_size} members, bound {r.bound}",
                                   r.to_json()))
    elif check == "linked":
        size = args.n if args.n is not None else (kind.n - 1 if kind.family == "hn" else 3)
        bad = linked_violation(key, size, depth)
        results.append(CheckResult(f"class-{size}-linked", bad is None,
                                   f"every {size} members centred" if bad is None else f"{len(bad)} members with an edge",
                                   {"size": size, "family": [c.to_json() for c in bad] if bad else None}))
    elif check == "clique":
        r = check_h1_no_unbounded_clique(key, depth)
        results.append(CheckResult("class-clique-bound", r.holds,
                                   f"max clique {r.max_clique} <= anchor length {r.anchor_len}",
                                   {"max_clique": r.max_clique, "anchor_len": r.anchor_len,
                                    "witness": [b.to_json() for b in r.witness]}))
    params = {"kind": str(kind), "key": key.to_json(), "depth": depth, "check": check}
    return Report(["verify", "class"], params, None, results, time.perf_counter() - start)


def cmd_adversary(args) -> Report:
    start = time.perf_counter()
    kind = HypergraphKind.parse(args.kind)
    if args.table:
        coloring = PrefixColoring.load(args.table)
    else:
        coloring = PrefixColoring.seeded(kind.tree, args.depth, args.palette, args.seed)
    if kind.family == "h1inf":
        w = find_mono_clique(coloring, args.clique)
        name = f"mono-clique-{args.clique}"
    else:
        w = find_mono_edge(coloring, kind)
        name = "mono-edge"
    results = [CheckResult(name, True, f"colour {w.color} on {len(w.members)} branches at anchor {w.anchor.to_json()}",
                           w.to_json())]
    if kind.family == "h0inf":
        family = refute_centred_class(coloring)
        results.append(CheckResult("not-centred-family", True, f"{len(family)} one-colour singletons, not centred",
                                   {"family": [q.to_json() for q in family]}))
    params = {"kind": str(kind), "depth": coloring.depth, "palette": coloring.palette_size,
              "clique": args.clique, "table": args.table}
    return Report(["adversary"], params, args.seed, results, time.perf_counter() - start)


def cmd_partition(args) -> Report:
    start = time.perf_counter()
    kind = HypergraphKind.parse(args.kind)
    q = Condition.of(kind, *_load_json_arg(args.condition))
    if args.action == "key":
        key = class_key(q, args.min_len)
        results = [CheckResult("class-key", True, json.dumps(key.to_json()["nodes"]),
                               {"key": key.to_json(), "case": classify(q).value})]
    else:
        key = _key_from_args(kind, args)
        match = match_nodes(q, key)
        results = [CheckResult("membership", match is not None,
                               "member" if match is not None else "not a member",
                               {"key": key.to_json(), "condition": q.to_json()})]
    return Report(["partition", args.action], {"kind": str(kind)}, None, results, time.perf_counter() - start)


def cmd_poset(args) -> Report:
    start = time.perf_counter()
    if args.action == "gh-demo":
        results = [demos.gh_demo_check(), demos.gh_random_check(args.seed, args.count)]
        return Report(["poset", "gh-demo"], {"count": args.count}, args.seed, results, time.perf_counter() - start)
    P = FinitePoset.from_json(_read_json_file(args.file))
    cond = ChainCondition.parse(args.condition)
    count, cert = min_parts(P, cond)
    ok = check_partition(P, cert)
    results = [CheckResult(f"min-parts-{cond}", ok, f"{count} parts", {"count": count, **cert.to_json()})]
    return Report(["poset", "analyze"], {"file": args.file, "condition": str(cond)}, None, results,
                  time.perf_counter() - start)


def cmd_hypergraph(args) -> Report:
    start = time.perf_counter()
    H = FiniteHypergraph.from_json(_read_json_file(args.file))
    P, cert = sigma_centred_partition(H)
    ok = check_partition(P, cert)
    parts = cert.parts
    details = {
        "conditions": P.size,
        "parts": [{"key": cert.part_keys[lab], "members": [sorted(P.labels[x]) for x in xs]}
                  for lab, xs in sorted(parts.items())],
    }
    results = [CheckResult("sigma-centred", ok, f"{P.size} conditions in {len(parts)} centred parts", details)]
    return Report(["hypergraph", "sigma-centred"], {"file": args.file}, None, results, time.perf_counter() - start)


# -- suite -----------------------------------------------------------------------


def _run_check(entry: dict, seed: int) -> list[dict]:
    kind = entry["type"]
    s = int(entry.get("seed", seed))
    if kind == "demo":
        rep = demos.demo_separation(entry["which"], seed=s, depth=int(entry.get("depth", 4)),
                                    samples=int(entry.get("samples", 20)),
                                    colorings=int(entry.get("colorings", 100)))
        results = rep.results
    elif kind == "gh-demo":
        results = [demos.gh_demo_check(), demos.gh_random_check(s, int(entry.get("count", 200)))]
    elif kind == "hierarchy":
        results = [demos.hierarchy_check(s, int(entry.get("catalog_size", 6)), int(entry.get("random", 200)))]
    elif kind == "sigma-centred":
        results = [demos.sigma_centred_check(s, int(entry.get("count", 50)))]
    else:  # validated before dispatch
        raise AssertionError(kind)
    return [r.to_json() for r in results]


CHECK_TYPES = {"demo": ("which",), "gh-demo": (), "hierarchy": (), "sigma-centred": ()}


def load_suite(path: str) -> dict:
    config = _read_json_file(path)
    if not isinstance(config, dict):
        raise ConfigError(f"{path}: top level must be an object")
    checks = config.get("checks", [])
    if not isinstance(checks, list):
        raise ConfigError(f"{path}: checks must be a list")
    for i, entry in enumerate(checks):
        where = f"{path}: checks[{i}]"
        if not isinstance(entry, dict) or "type" not in entry:
            raise ConfigError(f"{where}: each check needs a 'type'")
        if entry["type"] not in CHECK_TYPES:
            raise ConfigError(f"{where}.type: unknown check type {entry['type']!r}")
        for field in CHECK_TYPES[entry["type"]]:
            if field not in entry:
                raise ConfigError(f"{where}: missing {field!r}")
        if entry["type"] == "demo":
            which = entry["which"]
            if which not in demos.SELECTORS and not which.startswith("linked:"):
                raise ConfigError(f"{where}.which: unknown demo {which!r}")
    return config


def run_suite(path: str, seed: int | None = None) -> Report:
    start = time.perf_counter()
    config = load_suite(path)
    seed = int(config.get("seed", DEFAULT_SEED)) if seed is None else seed
    checks = config.get("checks", [])
    workers = min(max_workers(), max(1, len(checks)))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            batches = list(pool.map(_run_check, checks, [seed] * len(checks)))
    else:
        batches = [_run_check(entry, seed) for entry in checks]
    results = [CheckResult.from_json(r) for batch in batches for r in batch]
    return Report(["suite", path], {"checks": checks}, seed, results, time.perf_counter() - start)


def cmd_suite(args) -> Report:
    return run_suite(args.config, args.seed)


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chaincond", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="OUT", help="write the JSON report here")
    common.add_argument("--plot-dir", metavar="DIR", help="render figures for plottable checks into DIR")
    common.add_argument("--quiet", action="store_true", help="suppress the per-check lines")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("demo", parents=[common], help="run one separation demo")
    p.add_argument("which", help="finite-cc | bounded-cc | linked:N | centred")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--depth", type=int, default=4, help="largest adversary colouring depth")
    p.add_argument("--samples", type=int, default=20, help="classes sampled per check")
    p.add_argument("--colorings", type=int, default=100)
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("verify", help="exhaustive checks on one partition class")
    vsub = p.add_subparsers(dest="target", required=True)
    v = vsub.add_parser("class", parents=[common])
    v.add_argument("--kind", required=True, help="hn:N | h0inf | h1inf")
    v.add_argument("--key", required=True, help="JSON list of key nodes, or @file")
    v.add_argument("--min-len", type=int, default=1)
    v.add_argument("--depth", type=int, help="support bound (default: key length + 2)")
    v.add_argument("--check", choices=["claim", "antichain", "linked", "clique"])
    v.add_argument("--n", type=int, help="family size for the linked check")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("adversary", parents=[common], help="beat a prefix-determined colouring")
    p.add_argument("--kind", required=True, help="hn:N | h0inf | h1inf")
    p.add_argument("--depth", type=int, default=0, help="colouring depth D")
    p.add_argument("--clique", type=int, default=8, help="clique size for h1inf")
    p.add_argument("--palette", type=int, default=4)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--table", help="JSON colour table instead of a seeded one")
    p.set_defaults(func=cmd_adversary)

    p = sub.add_parser("partition", help="class keys and membership")
    psub = p.add_subparsers(dest="action", required=True)
    for action in ("key", "check-membership"):
        q = psub.add_parser(action, parents=[common])
        q.add_argument("--kind", required=True)
        q.add_argument("--condition", required=True, help="JSON list of branch supports, or @file")
        q.add_argument("--min-len", type=int, default=1)
        if action == "check-membership":
            q.add_argument("--key", required=True, help="JSON list of key nodes, or @file")
        q.set_defaults(func=cmd_partition)

    p = sub.add_parser("poset", help="finite poset analysis")
    psub = p.add_subparsers(dest="action", required=True)
    q = psub.add_parser("analyze", parents=[common])
    q.add_argument("file")
    q.add_argument("--condition", required=True, help="linked | centred | nlinked:N | antichain-lt:N")
    q.set_defaults(func=cmd_poset)
    q = psub.add_parser("gh-demo", parents=[common])
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)
    q.add_argument("--count", type=int, default=200)
    q.set_defaults(func=cmd_poset)

    p = sub.add_parser("hypergraph", help="finite hypergraph constructions")
    hsub = p.add_subparsers(dest="action", required=True)
    q = hsub.add_parser("sigma-centred", parents=[common])
    q.add_argument("file")
    q.set_defaults(func=cmd_hypergraph)

    p = sub.add_parser("suite", parents=[common], help="run a JSON list of checks")
    p.add_argument("config")
    p.add_argument("--seed", type=int, help="override the config seed")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (ChainCondError, OSError, KeyError, TypeError, ValueError) as exc:
        print(f"chaincond: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not args.quiet:
        for line in report.lines():
            print(line)
    if args.json:
        report.dump(args.json)
    if args.plot_dir:
        from .plotting import render_report

        for path in render_report(report, args.plot_dir):
            print(f"figure\t{path}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
