"""Maximal clique enumeration (Bron-Kerbosch with pivoting), deterministic output."""

from __future__ import annotations

from collections.abc import Iterable, Mapping


def maximal_cliques(vertices: Iterable[int], neighbors: Mapping[int, set[int]]) -> list[frozenset[int]]:
    """All inclusion-maximal cliques of the graph given by the neighbor map.

    Isolated vertices come out as singleton cliques. Output is sorted by the
    cliques' sorted vertex tuples, so repeated runs are byte-identical.
    """
    found: list[frozenset[int]] = []

    def bk(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            found.append(frozenset(r))
            return
        # pivot with the most candidates in p; ties go to the smallest label
        pivot = max(sorted(p | x), key=lambda u: len(p & neighbors[u]))
        for v in sorted(p - neighbors[pivot]):
            bk(r | {v}, p & neighbors[v], x & neighbors[v])
            p = p - {v}
            x = x | {v}

    vs = set(vertices)
    if vs:
        bk(set(), vs, set())
    return sorted(found, key=sorted)
