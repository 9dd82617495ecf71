"""Bitset clique search on k-uniform hypergraphs.

A hypergraph is given by its *links*: for every (k-1)-subset F of the vertices
(indexed by colex rank), ``links[rank(F)]`` is the bitmask of vertices w such
that F + {w} is an edge. For k = 2 this is the ordinary adjacency list.

Vertices are added in increasing order, so the first clique of a given size
found by :func:`search` is the lexicographically least one.
"""
from __future__ import annotations

from math import comb

from .errors import BudgetExceeded


class Budget:
    """Node counter shared by one or more searches."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    def spend(self, nodes: int = 1) -> None:
        self.used += nodes
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(self.limit)


def lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class _Stop(Exception):
    pass


def search(
    links: list[int],
    k: int,
    candidates: int,
    *,
    target: int | None = None,
    floor: int = 0,
    budget: Budget | None = None,
) -> list[int]:
    """Largest clique among ``candidates``, stopping early once ``target`` is reached.

    Only cliques larger than ``floor`` are reported; if none exists the
    result is an empty list. With ``target`` set and ``floor = target - 1``
    this is a pure existence query returning the lex-least ``target``-clique.
    """
    budget = budget if budget is not None else Budget()
    best: list[int] = []
    state = {"floor": floor}
    # binom[j][v] = C(v, j): colex offset of v as the largest element of a j-set
    top = candidates.bit_length()
    binom = [[comb(v, j) for v in range(top + 1)] for j in range(k)]

    def dfs(clique: list[int], subs: list[list[int]], cand: int) -> None:
        budget.spend()
        if len(clique) > state["floor"]:
            best[:] = clique
            state["floor"] = len(clique)
            if target is not None and len(clique) >= target:
                raise _Stop
        while cand:
            if len(clique) + cand.bit_count() <= state["floor"]:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cand
            if len(clique) >= k - 2:
                off = binom[k - 1][v]
                for t in subs[k - 2]:
                    nxt &= links[t + off]
                    if not nxt:
                        break
            if not nxt and len(clique) + 1 <= state["floor"]:
                continue
            new_subs = [subs[0]]
            for j in range(1, k - 1):
                off = binom[j][v]
                new_subs.append(subs[j] + [t + off for t in subs[j - 1]])
            clique.append(v)
            dfs(clique, new_subs, nxt)
            clique.pop()

    try:
        dfs([], [[0]] + [[] for _ in range(k - 2)], candidates)
    except _Stop:
        pass
    return list(best)


def has_clique(links: list[int], k: int, candidates: int, size: int, budget: Budget | None = None) -> list[int] | None:
    found = search(links, k, candidates, target=size, floor=size - 1, budget=budget)
    return found or None
