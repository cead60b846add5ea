"""Graded Betti numbers by vertex-subset homology, and the ring invariants
derived from them.

The Betti number in homological degree i and total internal degree j of the
face ring of a complex equals the sum, over vertex subsets W of size j, of
the reduced homology rank of the restriction to W in degree j - i - 1.  The
table is stored by total degree; the shift convention (j - i) is what shows
up in regularity and linear-resolution tests, and printed tables show both.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import SimplicialComplex, iter_bits, vertices_from_mask
from .errors import DomainError, ResourceLimitError
from .homology import GF2, FieldSpec, ranks_of_face_masks

MAX_HOCHSTER_VERTICES = 22


@dataclass
class BettiTable:
    """Betti numbers of a face ring, keyed by (homological degree, total degree)."""

    n: int
    entries: dict[tuple[int, int], int]

    def beta(self, i: int, j: int | None = None) -> int:
        if j is not None:
            return self.entries.get((i, j), 0)
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    def shifts(self) -> tuple[int, ...]:
        """Sorted shifts j - i over nonzero entries in degrees i >= 1."""
        return tuple(sorted({j - i for i, j in self.entries if i >= 1}))

    def as_rows(self) -> list[tuple[int, int, int, int]]:
        """Rows (i, total degree, shift, value) in table order."""
        return [(i, j, j - i, v) for (i, j), v in sorted(self.entries.items())]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {"i": i, "total_degree": j, "shift": j - i, "value": v}
                for (i, j), v in sorted(self.entries.items())
            ],
            "projective_dimension": self.projective_dimension,
            "regularity": self.regularity,
        }


def _is_cone_restriction(facets: tuple[int, ...], w: int) -> bool:
    # A vertex common to every facet intersection with w is an apex of the
    # restriction, which is then acyclic and contributes nothing.
    common = w
    for f in facets:
        common &= f
        if not common:
            return False
    return True


def betti_table(
    cx: SimplicialComplex,
    field: FieldSpec = GF2,
    max_vertices: int = MAX_HOCHSTER_VERTICES,
) -> BettiTable:
    """Full Betti table of the face ring of ``cx`` over GF(p).

    Enumerates all vertex subsets (Gray-code order); per-subset results are
    pure and accumulated by integer addition, so any evaluation order gives
    the same table.
    """
    if cx.n > max_vertices:
        raise ResourceLimitError(f"ground size {cx.n} exceeds the subset-enumeration limit {max_vertices}")
    p = field.characteristic
    all_faces = cx.faces()
    facets = cx.facets
    entries: dict[tuple[int, int], int] = {}
    for g in range(1 << cx.n):
        w = g ^ (g >> 1)
        if _is_cone_restriction(facets, w):
            continue
        inv = ~w
        faces_w = [f for f in all_faces if not f & inv]
        ranks = ranks_of_face_masks(faces_w, p)
        j = w.bit_count()
        for card, r in enumerate(ranks):
            if r:
                key = (j - card, j)
                entries[key] = entries.get(key, 0) + r
    return BettiTable(cx.n, entries)


def regularity(cx: SimplicialComplex, field: FieldSpec = GF2) -> int:
    """Largest shift j - i over nonzero Betti entries (0 for a full simplex)."""
    return betti_table(cx, field).regularity


def projective_dimension(cx: SimplicialComplex, field: FieldSpec = GF2) -> int:
    return betti_table(cx, field).projective_dimension


def krull_dimension(cx: SimplicialComplex) -> int:
    return cx.dim + 1


def _link_facets(cx: SimplicialComplex, face_mask: int) -> list[int]:
    return [f & ~face_mask for f in cx.facets if f & face_mask == face_mask]


def _closure(facet_masks: list[int]) -> list[int]:
    seen = {0}
    seen.update(facet_masks)
    stack = list(facet_masks)
    while stack:
        f = stack.pop()
        rest = f
        while rest:
            low = rest & -rest
            sub = f ^ low
            if sub not in seen:
                seen.add(sub)
                stack.append(sub)
            rest ^= low
    return list(seen)


def is_cm_reisner(cx: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Cohen-Macaulay test by vanishing of low link homology at every face."""
    p = field.characteristic
    for face in cx.faces():
        lf = _link_facets(cx, face)
        common = lf[0]
        for f in lf[1:]:
            common &= f
            if not common:
                break
        if common:
            continue  # the link is a cone, hence acyclic
        dim_link = max(f.bit_count() for f in lf) - 1
        if dim_link <= 0:
            continue  # a link with a vertex has no homology below degree 0
        ranks = ranks_of_face_masks(_closure(lf), p)
        if any(ranks[c] for c in range(dim_link + 1)):
            return False
    return True


def is_cm_betti(cx: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Cohen-Macaulay test by projective dimension equal to codimension."""
    return betti_table(cx, field).projective_dimension == cx.n - (cx.dim + 1)


def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec = GF2, method: str = "reisner") -> bool:
    if method == "reisner":
        return is_cm_reisner(cx, field)
    if method == "betti":
        return is_cm_betti(cx, field)
    raise ValueError(f"unknown method {method!r}")


def cm_type(cx: SimplicialComplex, field: FieldSpec = GF2) -> int:
    """Total Betti number in homological degree n - d (Cohen-Macaulay input only)."""
    table = betti_table(cx, field)
    c = cx.n - (cx.dim + 1)
    if table.projective_dimension != c:
        raise DomainError(f"type is defined for Cohen-Macaulay complexes only (over {field})")
    return table.beta(c)


def a_invariant(cx: SimplicialComplex, field: FieldSpec = GF2) -> int:
    """Regularity minus Krull dimension (Cohen-Macaulay input only)."""
    table = betti_table(cx, field)
    d = cx.dim + 1
    if table.projective_dimension != cx.n - d:
        raise DomainError(f"the a-invariant is defined for Cohen-Macaulay complexes only (over {field})")
    return table.regularity - d


def has_p_linear_resolution(cx: SimplicialComplex, p: int, field: FieldSpec = GF2) -> bool:
    """Whether all nonzero Betti entries in degrees i >= 1 sit at shift p."""
    if len(cx.facets) == 1 and cx.facets[0] == cx.full_mask:
        raise DomainError("a full simplex has no generators, so no linear-resolution question")
    return betti_table(cx, field).shifts() == (p,)


@dataclass(frozen=True)
class FaceSetReport:
    """Faces with nonvanishing top link homology, and the minimal ones."""

    X: tuple[tuple[int, ...], ...]
    M: tuple[tuple[int, ...], ...]


def face_sets_X_M(cx: SimplicialComplex, field: FieldSpec = GF2) -> FaceSetReport:
    """Faces whose link has homology in its own top dimension, plus minima.

    Every facet belongs (its link is the empty complex, with homology in
    degree -1); the minimal members bound the Cohen-Macaulay type from
    below.
    """
    p = field.characteristic
    x_masks = []
    for face in cx.faces():
        lf = _link_facets(cx, face)
        common = lf[0]
        for f in lf[1:]:
            common &= f
            if not common:
                break
        if common:
            continue  # cones never contribute
        dim_link = max(f.bit_count() for f in lf) - 1
        ranks = ranks_of_face_masks(_closure(lf), p)
        if ranks[dim_link + 1]:
            x_masks.append(face)
    m_masks = [a for a in x_masks if not any(b != a and b & a == b for b in x_masks)]
    return FaceSetReport(
        X=tuple(vertices_from_mask(m) for m in x_masks),
        M=tuple(vertices_from_mask(m) for m in m_masks),
    )


# -- vertex decomposability ----------------------------------------------------


def _antichain(masks: tuple[int, ...]) -> tuple[int, ...]:
    by_size = sorted(set(masks), key=lambda m: -m.bit_count())
    keep: list[int] = []
    for m in by_size:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return tuple(sorted(keep))


@lru_cache(maxsize=None)
def _vd(facets: tuple[int, ...]) -> bool:
    if len(facets) == 1:
        return True
    support = 0
    for f in facets:
        support |= f
    for v in iter_bits(support):
        bit = 1 << v
        link = tuple(sorted(f & ~bit for f in facets if f & bit))
        deletion = _antichain(tuple(f & ~bit for f in facets))
        # shedding condition: no deletion facet may survive as a link face
        if any(any(dd & ll == dd for ll in link) for dd in deletion):
            continue
        if _vd(deletion) and _vd(link):
            return True
    return False


def is_vertex_decomposable(cx: SimplicialComplex) -> bool:
    """Recursive shedding-vertex test; simplices are the base case.

    Memoized on canonical facet tuples; candidates are tried in ascending
    vertex id so the found decomposition is deterministic.
    """
    return _vd(cx.facets)


def shedding_trace(cx: SimplicialComplex) -> dict | None:
    """A witness decomposition tree, or None when none exists.

    Vertex ids in the trace refer to the original ground set.
    """
    def build(facets: tuple[int, ...]) -> dict | None:
        if len(facets) == 1:
            return {"simplex": vertices_from_mask(facets[0])}
        support = 0
        for f in facets:
            support |= f
        for v in iter_bits(support):
            bit = 1 << v
            link = tuple(sorted(f & ~bit for f in facets if f & bit))
            deletion = _antichain(tuple(f & ~bit for f in facets))
            if any(any(dd & ll == dd for ll in link) for dd in deletion):
                continue
            if _vd(deletion) and _vd(link):
                return {
                    "shedding_vertex": v,
                    "deletion": build(deletion),
                    "link": build(link),
                }
        return None

    return build(cx.facets)


# -- bundled report --------------------------------------------------------------


@dataclass
class InvariantReport:
    """All scalar invariants of one complex over one prime field."""

    dim: int
    krull_dim: int
    is_cm_reisner: bool
    is_cm_betti: bool
    reg: int
    pd: int
    cm_type: int | None
    a_invariant: int | None
    is_core: bool
    field_char: int

    @property
    def is_cm(self) -> bool:
        return self.is_cm_reisner and self.is_cm_betti

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "krull_dim": self.krull_dim,
            "is_cm_reisner": self.is_cm_reisner,
            "is_cm_betti": self.is_cm_betti,
            "reg": self.reg,
            "pd": self.pd,
            "cm_type": self.cm_type,
            "a_invariant": self.a_invariant,
            "is_core": self.is_core,
            "field_char": self.field_char,
        }


def invariant_report(cx: SimplicialComplex, field: FieldSpec = GF2) -> InvariantReport:
    """Compute the full invariant bundle for one complex."""
    table = betti_table(cx, field)
    d = cx.dim + 1
    cm_b = table.projective_dimension == cx.n - d
    cm_r = is_cm_reisner(cx, field)
    cm = cm_b and cm_r
    return InvariantReport(
        dim=cx.dim,
        krull_dim=d,
        is_cm_reisner=cm_r,
        is_cm_betti=cm_b,
        reg=table.regularity,
        pd=table.projective_dimension,
        cm_type=table.beta(cx.n - d) if cm else None,
        a_invariant=table.regularity - d if cm else None,
        is_core=cx.is_core(),
        field_char=field.characteristic,
    )
