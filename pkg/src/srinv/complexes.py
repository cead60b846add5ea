"""Finite abstract simplicial complexes over small ground sets.

A complex is stored as its facet antichain, each face an integer bit mask
over the dense ground set 0..n-1 (n <= 63 so a face fits in a machine word).
The minimal representable complex is {empty face}; the void complex (no
faces at all) is deliberately unrepresentable.  Ground vertices are allowed
to be non-faces: restrictions keep their ground set, so a restricted complex
may have vertices that carry no face.

Every instance is immutable and every operation is a pure function, so
values can be shared freely across parallel workers.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DomainError, InputError

MAX_GROUND_SIZE = 63

FaceLike = int | Iterable[int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertices_from_mask(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def mask_from_vertices(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _mask_key(mask: int) -> tuple[int, tuple[int, ...]]:
    # canonical order: cardinality first, then lexicographic on vertex tuples
    return (mask.bit_count(), vertices_from_mask(mask))


class SimplicialComplex:
    """An abstract simplicial complex given by its facet antichain."""

    __slots__ = ("n", "facets", "labels")

    def __init__(
        self,
        n: int,
        facets: Iterable[FaceLike] = (),
        labels: tuple[str, ...] | None = None,
    ):
        if not 0 <= n <= MAX_GROUND_SIZE:
            raise InputError(f"ground size must be between 0 and {MAX_GROUND_SIZE}, got {n}")
        self.n = n
        masks = {self._to_mask(f, n) for f in facets}
        by_size = sorted(masks, key=lambda m: -m.bit_count())
        keep: list[int] = []
        for m in by_size:
            if not any(m & k == m for k in keep):
                keep.append(m)
        if not keep:
            keep = [0]
        self.facets = tuple(sorted(keep, key=_mask_key))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise InputError("labels must name every ground vertex")
            if len(set(labels)) != n:
                raise InputError("labels must be unique")
        self.labels = labels

    @staticmethod
    def _to_mask(face: FaceLike, n: int) -> int:
        if isinstance(face, int):
            mask = face
            if mask < 0 or mask >> n:
                raise InputError(f"face mask {face:#x} out of range for ground size {n}")
            return mask
        mask = 0
        for v in face:
            if not 0 <= v < n:
                raise InputError(f"vertex {v} out of range for ground size {n}")
            mask |= 1 << v
        return mask

    # -- basic queries ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def dim(self) -> int:
        return self.facets[-1].bit_count() - 1

    @property
    def is_pure(self) -> bool:
        return self.facets[0].bit_count() == self.facets[-1].bit_count()

    def facet_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vertices_from_mask(f) for f in self.facets)

    def is_face(self, face: FaceLike) -> bool:
        mask = self._to_mask(face, self.n)
        return any(mask & f == mask for f in self.facets)

    __contains__ = is_face

    def _face_mask(self, face: FaceLike) -> int:
        mask = self._to_mask(face, self.n)
        if not any(mask & f == mask for f in self.facets):
            raise DomainError(f"{set(vertices_from_mask(mask)) or '{}'} is not a face of the complex")
        return mask

    def faces(self) -> tuple[int, ...]:
        """All faces as masks, in canonical (cardinality, lex) order."""
        seen = {0}
        seen.update(self.facets)
        stack = list(self.facets)
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
        return tuple(sorted(seen, key=_mask_key))

    # -- local structure -------------------------------------------------

    def star(self, face: FaceLike) -> "SimplicialComplex":
        """Faces whose union with ``face`` is still a face; same ground set."""
        mask = self._face_mask(face)
        kept = [f for f in self.facets if f & mask == mask]
        return SimplicialComplex(self.n, kept, self.labels)

    def link(self, face: FaceLike) -> "SimplicialComplex":
        """The star of ``face`` with the face's vertices removed; ground set shrinks."""
        mask = self._face_mask(face)
        sub = [f & ~mask for f in self.facets if f & mask == mask]
        return self._relabel(sub, self.full_mask & ~mask)

    def restriction(self, ground: FaceLike) -> "SimplicialComplex":
        """The subcomplex of faces contained in ``ground``, on ground set ``ground``."""
        gmask = self._to_mask(ground, self.n)
        return self._relabel([f & gmask for f in self.facets], gmask)

    def deletion(self, face: FaceLike) -> "SimplicialComplex":
        """Faces disjoint from ``face``, on the complementary ground set."""
        mask = self._to_mask(face, self.n)
        return self.restriction(self.full_mask & ~mask)

    def core(self) -> "SimplicialComplex":
        """Restriction to the vertices that are left out of at least one facet."""
        common = self.full_mask
        for f in self.facets:
            common &= f
            if not common:
                break
        return self.restriction(self.full_mask & ~common)

    def is_core(self) -> bool:
        common = self.full_mask
        for f in self.facets:
            common &= f
        return not common

    def cone(self, apex: int | None = None, label: str | None = None) -> "SimplicialComplex":
        """Join with one fresh vertex; the apex id must be the next dense id ``n``."""
        if apex is None:
            apex = self.n
        if 0 <= apex < self.n:
            raise InputError(f"cone vertex {apex} is already in the ground set")
        if apex != self.n:
            raise InputError(f"cone vertex must be the next dense id {self.n}, got {apex}")
        bit = 1 << apex
        labels = None
        if self.labels is not None:
            base = label if label is not None else f"v{apex}"
            name, k = base, 1
            while name in self.labels:
                name = f"{base}_{k}"
                k += 1
            labels = self.labels + (name,)
        return SimplicialComplex(self.n + 1, [f | bit for f in self.facets], labels)

    def _relabel(self, facet_masks: Iterable[int], ground_mask: int) -> "SimplicialComplex":
        verts = vertices_from_mask(ground_mask)
        pos = {v: i for i, v in enumerate(verts)}
        out = []
        for m in facet_masks:
            mm = 0
            while m:
                low = m & -m
                mm |= 1 << pos[low.bit_length() - 1]
                m ^= low
            out.append(mm)
        labels = tuple(self.labels[v] for v in verts) if self.labels is not None else None
        return SimplicialComplex(len(verts), out, labels)

    # -- global structure --------------------------------------------------

    def is_strongly_connected(self) -> bool:
        """Whether any two facets are linked by a chain of codimension-1 overlaps.

        Defined for pure complexes only; non-pure input is rejected.
        """
        if not self.is_pure:
            raise DomainError("strong connectivity is defined for pure complexes only")
        fs = self.facets
        if len(fs) <= 1:
            return True
        d = self.dim + 1
        seen = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for j in range(len(fs)):
                if j not in seen and (fs[i] & fs[j]).bit_count() == d - 1:
                    seen.add(j)
                    frontier.append(j)
        return len(seen) == len(fs)

    def minimal_nonfaces(self) -> tuple[int, ...]:
        """Inclusion-minimal non-faces, canonically ordered.

        A minimal non-face has every proper subset a face, so its size is at
        most dim+2; subsets are scanned by cardinality up to that bound.
        """
        out = []
        found_supersets: list[int] = []
        for k in range(1, min(self.n, self.dim + 2) + 1):
            for combo in combinations(range(self.n), k):
                m = mask_from_vertices(combo)
                if any(s & m == s for s in found_supersets):
                    continue
                if self.is_face(m):
                    continue
                found_supersets.append(m)
                out.append(m)
        return tuple(out)

    def indeg(self) -> int:
        """Largest cardinality of a minimal non-face; 0 when there are none."""
        mnf = self.minimal_nonfaces()
        return max((m.bit_count() for m in mnf), default=0)

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"complex n={self.n}"]
        lines.extend(" ".join(map(str, vertices_from_mask(f))) for f in self.facets if f)
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "facets": [list(vertices_from_mask(f)) for f in self.facets]}

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={list(self.facet_sets())})"


def from_facets(n: int, facets: Iterable[FaceLike], labels: tuple[str, ...] | None = None) -> SimplicialComplex:
    """Build a complex from an arbitrary facet list (maximal faces are kept)."""
    return SimplicialComplex(n, facets, labels)


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, [(1 << n) - 1])


def ridge_sum(
    first: SimplicialComplex,
    first_ridge: FaceLike,
    second: SimplicialComplex,
    second_ridge: FaceLike,
) -> SimplicialComplex:
    """Glue two complexes of equal dimension along codimension-1 faces.

    The second ridge's vertices are identified with the first's in sorted
    order; the remaining vertices of ``second`` are appended after the
    ground set of ``first``.  Vertex labels do not survive identification.
    """
    d = first.dim + 1
    if second.dim + 1 != d:
        raise DomainError(f"dimension mismatch: {first.dim} vs {second.dim}")
    m1 = first._face_mask(first_ridge)
    m2 = second._face_mask(second_ridge)
    if m1.bit_count() != d - 1 or m2.bit_count() != d - 1:
        raise DomainError("ridges must be faces of dimension dim-1")
    r1 = vertices_from_mask(m1)
    r2 = vertices_from_mask(m2)
    mapping = dict(zip(r2, r1))
    nxt = first.n
    for v in range(second.n):
        if v not in mapping:
            mapping[v] = nxt
            nxt += 1
    mapped = []
    for f in second.facets:
        mm = 0
        for v in iter_bits(f):
            mm |= 1 << mapping[v]
        mapped.append(mm)
    return SimplicialComplex(nxt, list(first.facets) + mapped)


_COMPLEX_HEADER = re.compile(r"^complex\s+n\s*=\s*(\d+)\s*$")


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def complex_from_text(text: str) -> SimplicialComplex:
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty complex file")
    m = _COMPLEX_HEADER.match(lines[0])
    if not m:
        raise InputError(f"expected header 'complex n=<N>', got {lines[0]!r}")
    n = int(m.group(1))
    facets = []
    for line in lines[1:]:
        try:
            facets.append(tuple(int(tok) for tok in line.split()))
        except ValueError as exc:
            raise InputError(f"bad facet line {line!r}") from exc
    return SimplicialComplex(n, facets)


def complex_from_json_dict(obj: dict) -> SimplicialComplex:
    try:
        n = int(obj["n"])
        facets = [tuple(int(v) for v in f) for f in obj["facets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad complex JSON: {exc}") from exc
    return SimplicialComplex(n, facets)
