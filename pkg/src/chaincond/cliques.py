"""Exact maximum clique on small graphs given as adjacency bitmasks.

Branch and bound with greedy colouring bounds (Tomita-style); vertex sets
are Python ints used as bitsets.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def adjacency_from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    adj = [0] * n
    for a, b in pairs:
        if a != b:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return adj


def _colour_order(adj: Sequence[int], candidates: int) -> tuple[list[int], list[int]]:
    order: list[int] = []
    bounds: list[int] = []
    colour = 0
    uncoloured = candidates
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~(1 << v)
            q &= ~adj[v]
            uncoloured &= ~(1 << v)
            order.append(v)
            bounds.append(colour)
    return order, bounds


def max_clique(adj: Sequence[int], within: int | None = None, stop_at: int | None = None) -> list[int]:
    """A maximum clique among the vertices of ``within`` (default: all).

    With ``stop_at`` the search returns as soon as a clique of that size is
    found.
    """
    n = len(adj)
    if within is None:
        within = (1 << n) - 1
    best: list[int] = []

    def expand(current: list[int], candidates: int) -> bool:
        nonlocal best
        order, bounds = _colour_order(adj, candidates)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if len(current) + bound <= len(best):
                return False
            grown = current + [v]
            rest = candidates & adj[v]
            if rest:
                if expand(grown, rest):
                    return True
            elif len(grown) > len(best):
                best = grown
                if stop_at is not None and len(best) >= stop_at:
                    return True
            candidates &= ~(1 << v)
        return False

    if within:
        expand([], within)
    return sorted(best)


def has_clique(adj: Sequence[int], size: int, within: int | None = None) -> list[int] | None:
    if size <= 0:
        return []
    found = max_clique(adj, within, stop_at=size)
    return found[:size] if len(found) >= size else None
