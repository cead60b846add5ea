"""Shared strategies and brute-force oracles for the test suite.

The oracles here deliberately avoid the production code paths they check:
faces are enumerated by scanning all vertex subsets, covers by definition,
and Euler characteristics by counting faces.
"""

from hypothesis import strategies as st

from srinv import Graph, SimplicialComplex, graph_from_edge_mask
from srinv.complexes import mask_from_vertices, vertices_from_mask


@st.composite
def complexes(draw, max_n=5, max_facets=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    facets = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=0, max_size=max_facets))
    return SimplicialComplex(n, facets)


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_edge_mask(n, mask)


def brute_faces(cx: SimplicialComplex) -> set[int]:
    """All subsets of the ground set contained in some facet."""
    return {
        m
        for m in range(1 << cx.n)
        if any(m & f == m for f in cx.facets)
    }


def brute_link_faces(cx: SimplicialComplex, face_mask: int) -> set[frozenset]:
    """Faces of the link of ``face_mask`` as vertex sets in original ids."""
    out = set()
    for m in brute_faces(cx):
        if m & face_mask:
            continue
        if (m | face_mask) in brute_faces(cx):
            out.add(frozenset(vertices_from_mask(m)))
    return out


def as_vertex_sets(cx: SimplicialComplex, relabel_from: tuple[int, ...] | None = None) -> set[frozenset]:
    """All faces of ``cx`` as vertex sets, optionally mapped back to old ids."""
    out = set()
    for m in brute_faces(cx):
        verts = vertices_from_mask(m)
        if relabel_from is not None:
            verts = tuple(relabel_from[v] for v in verts)
        out.add(frozenset(verts))
    return out


def reduced_euler(cx: SimplicialComplex) -> int:
    """Alternating sum of face counts, the empty face counting in degree -1."""
    total = 0
    for m in brute_faces(cx):
        total += 1 if m.bit_count() % 2 == 1 else -1
    return total


def brute_minimal_nonfaces(cx: SimplicialComplex) -> set[int]:
    faces = brute_faces(cx)
    out = set()
    for m in range(1 << cx.n):
        if m in faces:
            continue
        if all((m ^ (1 << v)) in faces for v in vertices_from_mask(m)):
            out.add(m)
    return out


def brute_minimal_covers(g: Graph) -> set[frozenset]:
    """Minimal covers as complements of maximal independent sets, by scanning."""
    full = (1 << g.n) - 1
    independent = [
        m
        for m in range(1 << g.n)
        if all(not (m >> u & 1 and m >> v & 1) for u, v in g.edges)
    ]
    ind_set = set(independent)
    maximal = [
        m
        for m in independent
        if all(m >> v & 1 or (m | 1 << v) not in ind_set for v in range(g.n))
    ]
    return {frozenset(vertices_from_mask(full & ~m)) for m in maximal}


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])
