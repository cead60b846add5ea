"""Exhaustive corpora of small labeled complexes and graphs for sweeps and tests."""

from __future__ import annotations

import random
from typing import Iterator

from .complexes import SimplicialComplex
from .graphs import Graph, graph_from_edge_mask, isolated_vertices


def antichain_complexes(n: int, covering_only: bool = False) -> Iterator[SimplicialComplex]:
    """Every simplicial complex on the ground set 0..n-1, as facet antichains.

    Includes the minimal complex {empty face}.  With ``covering_only`` the
    stream is limited to complexes in which every ground vertex is a face.
    """
    if n == 0:
        yield SimplicialComplex(0, [])
        return
    if not covering_only:
        yield SimplicialComplex(n, [])
    full = (1 << n) - 1
    chosen: list[int] = []

    def rec(start: int) -> Iterator[SimplicialComplex]:
        for m in range(start, 1 << n):
            if any((m & c) == m or (m & c) == c for c in chosen):
                continue
            chosen.append(m)
            if not covering_only:
                yield SimplicialComplex(n, tuple(chosen))
            else:
                union = 0
                for c in chosen:
                    union |= c
                if union == full:
                    yield SimplicialComplex(n, tuple(chosen))
            yield from rec(m + 1)
            chosen.pop()

    yield from rec(1)


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def labeled_graphs(n: int) -> Iterator[Graph]:
    for m in range(labeled_graph_count(n)):
        yield graph_from_edge_mask(n, m)


def graphs_without_isolated(n: int) -> Iterator[Graph]:
    for g in labeled_graphs(n):
        if not isolated_vertices(g):
            yield g


def random_edge_masks(n: int, count: int, rng: random.Random) -> Iterator[int]:
    space = labeled_graph_count(n)
    for _ in range(count):
        yield rng.randrange(space)
