"""Slow reference implementations used to cross-check the library.

Each one follows the definitions directly and shares no code with the
package beyond the value types.
"""

from __future__ import annotations

from itertools import combinations, product


def node_words(branching, length):
    """All words of a given length, in lex order."""
    return list(product(*[range(branching(i)) for i in range(length)]))


def dense_words(branching, levels):
    """Length-lex enumeration of all nodes, padded with zeros to their index."""
    out = []
    length = 0
    while len(out) < levels:
        for w in node_words(branching, length):
            if len(out) == levels:
                break
            k = len(out)
            out.append(w + (0,) * (k - len(w)))
        length += 1
    return out


def arity_branching(n):
    return lambda i: n


def omega_branching(i):
    return i + 1


def padded(support, width):
    return tuple(support) + (0,) * (width - len(support))


def edge_oracle(family, n, supports, branching):
    """Definition-level edge test on raw supports."""
    members = [tuple(s) for s in supports]
    if len(set(members)) != len(members) or len(members) < 2:
        return False
    width = max(len(s) for s in members) + 1
    dense = dense_words(branching, width)
    rows = [padded(s, width) for s in members]
    for level in range(width - 1):
        d = dense[level]
        if any(r[:level] != d for r in rows):
            continue
        if len({r[level + 1:] for r in rows}) != 1:
            continue
        entries = [r[level] for r in rows]
        if len(set(entries)) != len(entries):
            continue
        if family == "hn":
            if sorted(entries) == list(range(n)):
                return True
        elif family == "h0inf":
            if level >= 2 and sorted(entries) == list(range(level)):
                return True
        elif len(rows) == 2 and all(e < level for e in entries):
            return True
    return False


def anti_clique_oracle(family, n, supports, branching):
    supports = list(supports)
    for r in range(2, len(supports) + 1):
        for sub in combinations(supports, r):
            if edge_oracle(family, n, sub, branching):
                return False
    return True


def max_clique_oracle(n, adjacent):
    best = 0
    for r in range(n, 0, -1):
        for sub in combinations(range(n), r):
            if all(adjacent(a, b) for a, b in combinations(sub, 2)):
                return r
    return best


def min_parts_oracle(m, ok_part):
    """Least k such that 0..m-1 splits into k parts all passing ``ok_part``."""
    if m == 0:
        return 0

    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for p in partitions(rest):
            for i in range(len(p)):
                yield p[:i] + [[first] + p[i]] + p[i + 1:]
            yield [[first]] + p

    return min(len(p) for p in partitions(list(range(m))) if all(ok_part(part) for part in p))
