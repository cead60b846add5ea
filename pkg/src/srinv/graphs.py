"""Finite simple graphs and the constructions that feed independence complexes."""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .complexes import (
    MAX_GROUND_SIZE,
    SimplicialComplex,
    iter_bits,
    mask_from_vertices,
    vertices_from_mask,
)
from .errors import DomainError, InputError

VertexSet = int | Iterable[int]


class Graph:
    """A finite simple graph on the dense vertex set 0..n-1.

    ``parts`` optionally records multipartite provenance (a part index per
    vertex); it is carried as metadata and ignored by equality.
    """

    __slots__ = ("n", "edges", "parts")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), parts: Sequence[int] | None = None):
        if not 0 <= n <= MAX_GROUND_SIZE:
            raise InputError(f"vertex count must be between 0 and {MAX_GROUND_SIZE}, got {n}")
        self.n = n
        canon = set()
        for e in edges:
            u, v = e
            if u == v:
                raise InputError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for {n} vertices")
            canon.add((min(u, v), max(u, v)))
        self.edges = tuple(sorted(canon))
        if parts is not None:
            parts = tuple(parts)
            if len(parts) != n:
                raise InputError("parts must assign a part to every vertex")
        self.parts = parts

    # -- queries -----------------------------------------------------------

    def adjacency_masks(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def induced(self, vertices: VertexSet) -> "Graph":
        keep = sorted(iter_bits(vertices)) if isinstance(vertices, int) else sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        kept = set(keep)
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in kept and v in kept]
        return Graph(len(keep), edges)

    def _vertex_mask(self, vertices: VertexSet) -> int:
        mask = vertices if isinstance(vertices, int) else mask_from_vertices(vertices)
        if mask < 0 or mask >> self.n:
            raise InputError(f"vertex set out of range for {self.n} vertices")
        return mask

    def to_text(self) -> str:
        lines = [f"graph n={self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# -- independent sets and covers -------------------------------------------


def is_independent(g: Graph, vertices: VertexSet) -> bool:
    mask = g._vertex_mask(vertices)
    return all(not (mask >> u & 1 and mask >> v & 1) for u, v in g.edges)


def is_vertex_cover(g: Graph, vertices: VertexSet) -> bool:
    mask = g._vertex_mask(vertices)
    return all(mask >> u & 1 or mask >> v & 1 for u, v in g.edges)


def maximal_independent_sets(g: Graph) -> tuple[int, ...]:
    """All maximal independent sets as masks (Bron-Kerbosch with pivoting)."""
    n = g.n
    if n == 0:
        return (0,)
    full = (1 << n) - 1
    adj = g.adjacency_masks()
    nonadj = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda v: (p & nonadj[v]).bit_count())
        cand = p & ~nonadj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & nonadj[v], x & nonadj[v])
            p ^= low
            x |= low
            cand ^= low

    expand(0, full, 0)
    return tuple(out)


def independence_complex(g: Graph) -> SimplicialComplex:
    """The complex whose faces are the independent vertex sets of ``g``."""
    return SimplicialComplex(g.n, maximal_independent_sets(g))


def isolated_vertices(g: Graph) -> tuple[int, ...]:
    touched = 0
    for u, v in g.edges:
        touched |= (1 << u) | (1 << v)
    return tuple(v for v in range(g.n) if not touched >> v & 1)


def minimal_vertex_covers(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All inclusion-minimal vertex covers, in lexicographic order.

    Computed directly from the cover definition (every member must meet an
    edge that no other member meets), independently of the independence
    complex machinery.
    """
    covers = []
    for m in range(1 << g.n):
        if not all(m >> u & 1 or m >> v & 1 for u, v in g.edges):
            continue
        minimal = True
        for c in iter_bits(m):
            if not any((m >> u & 1) + (m >> v & 1) == 1 and c in (u, v) for u, v in g.edges):
                minimal = False
                break
        if minimal:
            covers.append(vertices_from_mask(m))
    return tuple(sorted(covers))


# -- constructions -----------------------------------------------------------


def whisker(g: Graph) -> Graph:
    """Attach one pendant vertex to every vertex; whisker of i gets id n+i."""
    d = g.n
    edges = list(g.edges) + [(i, d + i) for i in range(d)]
    return Graph(2 * d, edges)


def s_suspension(g: Graph, independent: VertexSet) -> Graph:
    """Add one vertex adjacent to everything outside the given independent set."""
    mask = g._vertex_mask(independent)
    if not is_independent(g, mask):
        raise DomainError("suspension set must be independent")
    w = g.n
    edges = list(g.edges) + [(v, w) for v in range(g.n) if not mask >> v & 1]
    return Graph(g.n + 1, edges)


def complete_multipartite(*sizes: int) -> Graph:
    """The complete multipartite graph with the given part sizes."""
    if not sizes:
        raise InputError("at least one part is required")
    if any(r < 1 for r in sizes):
        raise InputError(f"part sizes must be positive, got {sizes}")
    parts = []
    for i, r in enumerate(sizes):
        parts.extend([i] * r)
    n = len(parts)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if parts[u] != parts[v]]
    return Graph(n, edges, parts=parts)


def induced_matching_number(g: Graph) -> int:
    """Largest size of a matching whose edges pairwise admit no connecting edge.

    Exact branch and bound: picking an edge removes the closed neighbourhoods
    of both endpoints, so any later pick is automatically at distance >= 2.
    """
    adj = g.adjacency_masks()
    edges = sorted(g.edges, key=lambda e: g.degree(e[0]) + g.degree(e[1]))
    closed = [adj[u] | adj[v] | (1 << u) | (1 << v) for u, v in edges]
    best = 0
    m = len(edges)

    def rec(i: int, avail: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        for j in range(i, m):
            if count + (m - j) <= best:
                return
            u, v = edges[j]
            if avail >> u & 1 and avail >> v & 1:
                rec(j + 1, avail & ~closed[j], count + 1)

    rec(0, (1 << g.n) - 1, 0)
    return best


def o_transform(g: Graph, cover: Sequence[int], independent: Sequence[int]) -> Graph:
    """Fold the cross edges between a minimal cover and its matched independent set.

    Requires a graph on 2d vertices split into a minimal vertex cover
    x_1..x_d and a maximal independent set y_1..y_d with every matching edge
    {x_i, y_i} present.  Each extra cross edge {x_k, y_i} is replaced by
    {x_k, x_i}; the failed validation clause is named on rejection.
    """
    xs = tuple(cover)
    ys = tuple(independent)
    d = len(xs)
    if len(ys) != d or g.n != 2 * d or sorted(xs + ys) != list(range(g.n)):
        raise DomainError(
            "vertex set must split into a cover and an independent set of equal size d with n = 2d"
        )
    if not is_vertex_cover(g, xs):
        raise DomainError("cover side is not a vertex cover")
    xmask = mask_from_vertices(xs)
    for c in xs:
        if not any((xmask >> u & 1) + (xmask >> v & 1) == 1 and c in (u, v) for u, v in g.edges):
            raise DomainError("cover side is not a minimal vertex cover")
    if not is_independent(g, ys):
        raise DomainError("independent side is not an independent set")
    ymask = mask_from_vertices(ys)
    adj = g.adjacency_masks()
    if any(not adj[v] & ymask for v in xs):
        raise DomainError("independent side is not maximal")
    for i in range(d):
        if not g.has_edge(xs[i], ys[i]):
            raise DomainError(f"matching edge ({xs[i]}, {ys[i]}) is missing")
    edge_set = set(g.edges)
    for i in range(d):
        for k in range(d):
            if k == i:
                continue
            cross = (min(xs[k], ys[i]), max(xs[k], ys[i]))
            if cross in edge_set:
                edge_set.discard(cross)
                edge_set.add((min(xs[k], xs[i]), max(xs[k], xs[i])))
    return Graph(g.n, edge_set)


# -- labeled-graph encodings --------------------------------------------------


def vertex_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    pairs = vertex_pairs(n)
    return Graph(n, [pairs[i] for i in iter_bits(mask)])


def edge_mask(g: Graph) -> int:
    index = {p: i for i, p in enumerate(vertex_pairs(g.n))}
    m = 0
    for e in g.edges:
        m |= 1 << index[e]
    return m


# -- serialization -------------------------------------------------------------

_GRAPH_HEADER = re.compile(r"^graph\s+n\s*=\s*(\d+)\s*$")


def graph_from_text(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputError("empty graph file")
    m = _GRAPH_HEADER.match(lines[0])
    if not m:
        raise InputError(f"expected header 'graph n=<N>', got {lines[0]!r}")
    n = int(m.group(1))
    edges = []
    for line in lines[1:]:
        toks = line.split()
        if len(toks) != 2:
            raise InputError(f"bad edge line {line!r}")
        try:
            edges.append((int(toks[0]), int(toks[1])))
        except ValueError as exc:
            raise InputError(f"bad edge line {line!r}") from exc
    return Graph(n, edges)


def graph_from_json_dict(obj: dict) -> Graph:
    try:
        n = int(obj["n"])
        edges = [(int(e[0]), int(e[1])) for e in obj["edges"]]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"bad graph JSON: {exc}") from exc
    return Graph(n, edges)
