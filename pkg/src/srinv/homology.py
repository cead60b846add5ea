"""Reduced simplicial homology ranks over prime fields.

This is the computational primitive underneath every ring invariant in the
package, so the hot path is kept lean: over GF(2) boundary columns are int
bit sets eliminated with word-wide xors, odd characteristics go through a
dense elimination mod p.  The chain complex is augmented, i.e. the empty
face spans the degree -1 chain group, so the complex {empty face} has one
unit of homology in degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .complexes import SimplicialComplex, iter_bits, vertices_from_mask
from .errors import InputError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p), given by its characteristic."""

    characteristic: int

    def __post_init__(self):
        if not _is_prime(self.characteristic):
            raise InputError(f"field characteristic must be prime, got {self.characteristic}")

    def __str__(self) -> str:
        return f"GF({self.characteristic})"


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


@dataclass(frozen=True)
class HomologyRanks:
    """Ranks of reduced homology; ``ranks[k]`` is the rank in degree k-1."""

    ranks: tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        idx = degree + 1
        if 0 <= idx < len(self.ranks):
            return self.ranks[idx]
        return 0

    @property
    def top_degree(self) -> int:
        return len(self.ranks) - 2

    def nonzero(self) -> tuple[tuple[int, int], ...]:
        return tuple((k - 1, r) for k, r in enumerate(self.ranks) if r)

    def as_dict(self) -> dict[int, int]:
        return {k - 1: r for k, r in enumerate(self.ranks)}


def rank_gf2(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows given as int bit sets."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            low = cur & -cur
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = cur
                rank += 1
                break
            cur ^= piv
    return rank


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by Gaussian elimination."""
    if matrix.size == 0:
        return 0
    a = np.array(matrix, dtype=np.int64) % p
    m, n = a.shape
    rank = 0
    for col in range(n):
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        i = rank + int(nz[0])
        if i != rank:
            a[[rank, i]] = a[[i, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        others = np.nonzero(a[:, col])[0]
        others = others[others != rank]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, col], a[rank])) % p
        rank += 1
        if rank == m:
            break
    return rank


def _faces_by_cardinality(faces: Sequence[int]) -> list[list[int]]:
    top = max(f.bit_count() for f in faces)
    buckets: list[list[int]] = [[] for _ in range(top + 1)]
    for f in faces:
        buckets[f.bit_count()].append(f)
    for b in buckets:
        b.sort(key=vertices_from_mask)
    return buckets


def _boundary_rank(lower: list[int], upper: list[int], p: int) -> int:
    """Rank of the boundary map from ``upper`` faces to ``lower`` faces."""
    if not lower or not upper:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    if p == 2:
        cols = []
        for f in upper:
            col = 0
            for v in iter_bits(f):
                col |= 1 << index[f ^ (1 << v)]
            cols.append(col)
        return rank_gf2(cols)
    mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for j, f in enumerate(upper):
        for pos, v in enumerate(iter_bits(f)):
            mat[index[f ^ (1 << v)], j] = 1 if pos % 2 == 0 else p - 1
    return rank_mod_p(mat, p)


def ranks_of_face_masks(faces: Sequence[int], characteristic: int) -> tuple[int, ...]:
    """Reduced homology ranks of the complex whose face set is ``faces``.

    ``faces`` must be downward closed and contain the empty face (mask 0);
    entry k of the result is the rank in degree k-1.
    """
    buckets = _faces_by_cardinality(faces)
    top = len(buckets) - 1
    bd = [0] * (top + 2)
    for c in range(1, top + 1):
        bd[c] = _boundary_rank(buckets[c - 1], buckets[c], characteristic)
    return tuple(len(buckets[c]) - bd[c] - bd[c + 1] for c in range(top + 1))


def boundary_matrices(cx: SimplicialComplex, field: FieldSpec = GF2) -> list[np.ndarray]:
    """The augmented chain complex of ``cx`` as matrices over GF(p).

    Entry i is the boundary map from i-faces to (i-1)-faces (the map from
    vertices hits the empty face with coefficient 1); bases are ordered
    lexicographically within each dimension.  The complex {empty face} has
    no maps at all.
    """
    p = field.characteristic
    buckets = _faces_by_cardinality(cx.faces())
    out = []
    for c in range(1, len(buckets)):
        lower, upper = buckets[c - 1], buckets[c]
        index = {f: i for i, f in enumerate(lower)}
        mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
        for j, f in enumerate(upper):
            for pos, v in enumerate(iter_bits(f)):
                mat[index[f ^ (1 << v)], j] = 1 if pos % 2 == 0 else p - 1
        out.append(mat)
    return out


def reduced_homology_ranks(cx: SimplicialComplex, field: FieldSpec = GF2) -> HomologyRanks:
    """Ranks of the reduced homology of ``cx`` with coefficients in GF(p)."""
    return HomologyRanks(ranks_of_face_masks(cx.faces(), field.characteristic))
