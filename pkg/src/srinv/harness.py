"""Constructions hitting prescribed invariants, identity checks, and sweeps.

The sweep machinery exploits that every vertex-subset restriction of an
independence complex is again the independence complex of an induced
subgraph, and likewise every face link is the independence complex of the
graph minus a closed neighbourhood.  Homology ranks are therefore memoized
once per (vertex count, dense edge mask, characteristic) and shared across
the whole corpus; the generic per-complex route in ``invariants`` stays
independent and is used to cross-validate this fast path in the test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations

from .complexes import SimplicialComplex, iter_bits, vertices_from_mask
from .corpus import random_edge_masks
from .errors import DomainError, ResourceLimitError
from .graphs import (
    Graph,
    complete_multipartite,
    edge_mask,
    independence_complex,
    induced_matching_number,
    is_independent,
    isolated_vertices,
    minimal_vertex_covers,
    o_transform,
    s_suspension,
    vertex_pairs,
    whisker,
)
from .homology import GF2, FieldSpec, ranks_of_face_masks
from .invariants import (
    MAX_HOCHSTER_VERTICES,
    InvariantReport,
    betti_table,
    invariant_report,
    is_cm_reisner,
)

EXHAUSTIVE_SWEEP_LIMIT = 6
MAX_SWEEP_VERTICES = 12


# -- memoized homology of independence complexes --------------------------------


@lru_cache(maxsize=None)
def _pair_index(k: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(vertex_pairs(k))}


@lru_cache(maxsize=None)
def _within_masks(k: int) -> tuple[int, ...]:
    """For each vertex subset of 0..k-1, the mask of edge slots inside it."""
    pairs = vertex_pairs(k)
    out = []
    for w in range(1 << k):
        m = 0
        for idx, (a, b) in enumerate(pairs):
            if w >> a & 1 and w >> b & 1:
                m |= 1 << idx
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def _induced_maps(k: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Per subset: pairs (edge slot in the host, edge bit in the dense subgraph)."""
    pairs = vertex_pairs(k)
    out = []
    for w in range(1 << k):
        verts = vertices_from_mask(w)
        pos = {v: i for i, v in enumerate(verts)}
        sub_index = _pair_index(len(verts))
        entries = []
        for idx, (a, b) in enumerate(pairs):
            if w >> a & 1 and w >> b & 1:
                entries.append((idx, 1 << sub_index[(pos[a], pos[b])]))
        out.append(tuple(entries))
    return tuple(out)


@lru_cache(maxsize=None)
def _flag_data(k: int, em: int, p: int) -> tuple[tuple[int, ...], int]:
    """(homology ranks, independence number) of the independence complex of
    the graph on k dense vertices with edge mask ``em``, over GF(p)."""
    wm = _within_masks(k)
    faces = [w for w in range(1 << k) if not wm[w] & em]
    alpha = max(w.bit_count() for w in faces)
    return ranks_of_face_masks(faces, p), alpha


def _induced_mask(imap, em: int) -> int:
    sub = 0
    for idx, bit in imap:
        if em >> idx & 1:
            sub |= bit
    return sub


# -- per-graph survey record ------------------------------------------------------


@dataclass
class GraphSurveyRecord:
    """Everything the sweep asserts or records about one labeled graph."""

    n: int
    edges: tuple[tuple[int, int], ...]
    d: int
    cm_reisner: bool
    cm_betti: bool
    pd: int
    reg: int
    cm_type: int | None
    a_invariant: int | None
    one_linear: bool
    is_pure: bool
    strongly_connected: bool | None
    min_top_faces: tuple[tuple[int, ...], ...]
    bound_holds: bool | None
    bound_tight: bool | None
    refinement_case: str | None
    refinement_holds: bool | None
    problems: tuple[str, ...]

    @property
    def is_cm(self) -> bool:
        return self.cm_reisner and self.cm_betti


def _survey(n: int, em: int, p: int) -> GraphSurveyRecord:
    pairs = vertex_pairs(n)
    wm = _within_masks(n)
    imaps = _induced_maps(n)
    full = (1 << n) - 1

    faces = [w for w in range(1 << n) if not wm[w] & em]
    face_set = set(faces)
    d = max(w.bit_count() for w in faces)
    facets = [
        w
        for w in faces
        if all(w >> v & 1 or (w | 1 << v) not in face_set for v in range(n))
    ]

    entries: dict[tuple[int, int], int] = {}
    for w in range(1 << n):
        k = w.bit_count()
        ranks, _ = _flag_data(k, _induced_mask(imaps[w], em), p)
        for card, r in enumerate(ranks):
            if r:
                key = (k - card, k)
                entries[key] = entries.get(key, 0) + r
    pd = max(i for i, _ in entries)
    reg = max(j - i for i, j in entries)
    cm_betti = pd == n - d
    shift_set = {j - i for i, j in entries if i >= 1}
    one_linear = shift_set == {1}

    adj = [0] * n
    for idx in iter_bits(em):
        u, v = pairs[idx]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    cm_reisner = True
    x_masks = []
    for f in faces:
        closed = f
        for v in iter_bits(f):
            closed |= adj[v]
        rmask = full & ~closed
        ranks, alpha = _flag_data(rmask.bit_count(), _induced_mask(imaps[rmask], em), p)
        dim_link = alpha - 1
        if any(ranks[c] for c in range(dim_link + 1)):
            cm_reisner = False
        if ranks[dim_link + 1]:
            x_masks.append(f)
    m_masks = [a for a in x_masks if not any(b != a and b & a == b for b in x_masks)]

    problems: list[str] = []
    if cm_reisner != cm_betti:
        problems.append("link-homology and projective-dimension CM tests disagree")
    cm = cm_reisner and cm_betti
    pure = all(f.bit_count() == d for f in facets)

    cmtype = a_inv = None
    strongly = bound_holds = bound_tight = refinement_holds = None
    refinement_case = None
    if cm:
        cmtype = sum(v for (i, _), v in entries.items() if i == n - d)
        a_inv = reg - d
        if not pure:
            problems.append("Cohen-Macaulay complex is not pure")
        else:
            strongly = _strongly_connected(facets, d)
            if not strongly:
                problems.append("Cohen-Macaulay complex is not strongly connected")
        bound_holds = d <= reg * cmtype
        bound_tight = d == reg * cmtype
        if not bound_holds:
            problems.append(f"dimension bound fails: {d} > {reg} * {cmtype}")
        if not all(any(mm & f == mm for mm in m_masks) for f in facets):
            problems.append("stars of the minimal top-homology faces do not cover the complex")
        if any(d - mm.bit_count() > reg for mm in m_masks):
            problems.append("codimension of a minimal top-homology face exceeds the regularity")
        if len(m_masks) > cmtype:
            problems.append("more minimal top-homology faces than the type")
        if n - d < d:
            problems.append(f"codimension bound fails: {n - d} < {d}")
        refinement_holds = d <= reg + cmtype - 1
        if one_linear:
            refinement_case = "one_linear"
            if cmtype != n - d:
                problems.append(f"linear-resolution type {cmtype} differs from codimension {n - d}")
            if not refinement_holds:
                problems.append("refined bound fails in the linear-resolution case")
        elif a_inv == 0:
            refinement_case = "a_zero"
            if not refinement_holds:
                problems.append("refined bound fails in the a-invariant-zero case")

    return GraphSurveyRecord(
        n=n,
        edges=tuple(pairs[i] for i in iter_bits(em)),
        d=d,
        cm_reisner=cm_reisner,
        cm_betti=cm_betti,
        pd=pd,
        reg=reg,
        cm_type=cmtype,
        a_invariant=a_inv,
        one_linear=one_linear,
        is_pure=pure,
        strongly_connected=strongly,
        min_top_faces=tuple(vertices_from_mask(m) for m in m_masks),
        bound_holds=bound_holds,
        bound_tight=bound_tight,
        refinement_case=refinement_case,
        refinement_holds=refinement_holds,
        problems=tuple(problems),
    )


def _strongly_connected(facets: list[int], d: int) -> bool:
    if len(facets) <= 1:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(len(facets)):
            if j not in seen and (facets[i] & facets[j]).bit_count() == d - 1:
                seen.add(j)
                frontier.append(j)
    return len(seen) == len(facets)


def survey_graph(g: Graph, field: FieldSpec = GF2) -> GraphSurveyRecord:
    """Run the full per-graph battery of checks on one graph."""
    if isolated_vertices(g):
        raise DomainError("survey requires a graph without isolated vertices")
    return _survey(g.n, edge_mask(g), field.characteristic)


# -- sweep ------------------------------------------------------------------------


@dataclass
class SweepReport:
    """Aggregated outcome of a corpus sweep; counterexamples must stay empty."""

    field_char: int
    max_n: int
    exhaustive_limit: int
    seed: int | None
    samples_per_size: int
    counts: dict[str, int] = dc_field(default_factory=dict)
    equality_cases: list[dict] = dc_field(default_factory=list)
    counterexamples: list[dict] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "field_char": self.field_char,
            "max_n": self.max_n,
            "exhaustive_limit": self.exhaustive_limit,
            "seed": self.seed,
            "samples_per_size": self.samples_per_size,
            "counts": dict(self.counts),
            "equality_cases": self.equality_cases,
            "counterexamples": self.counterexamples,
            "ok": self.ok,
        }


def _record_dict(rec: GraphSurveyRecord, extra: bool = False) -> dict:
    out = {
        "n": rec.n,
        "edges": [list(e) for e in rec.edges],
        "d": rec.d,
        "reg": rec.reg,
        "type": rec.cm_type,
    }
    if extra:
        out["problems"] = list(rec.problems)
        out["pd"] = rec.pd
        out["cm_reisner"] = rec.cm_reisner
        out["cm_betti"] = rec.cm_betti
    return out


def sweep(
    max_n: int,
    field: FieldSpec = GF2,
    seed: int | None = None,
    samples_per_size: int = 300,
    equality_case_cap: int = 500,
) -> SweepReport:
    """Check every asserted property over all small labeled graphs.

    Sizes up to 6 are exhausted (every labeled graph); beyond that each size
    contributes ``samples_per_size`` uniform random edge sets.  Graphs with
    isolated vertices fall outside every hypothesis and are counted, not
    tested.  Any failed assertion lands in ``counterexamples`` with the full
    witness.
    """
    if not 1 <= max_n <= MAX_SWEEP_VERTICES:
        raise ResourceLimitError(f"sweep size must be between 1 and {MAX_SWEEP_VERTICES}")
    p = field.characteristic
    rng = random.Random(seed)
    counts = {
        "graphs_enumerated": 0,
        "isolated_skipped": 0,
        "tested": 0,
        "cm": 0,
        "non_cm": 0,
        "equality_total": 0,
        "one_linear_cm": 0,
        "a_zero_cm": 0,
        "refinement_outside_holds": 0,
        "refinement_outside_fails": 0,
    }
    report = SweepReport(
        field_char=p,
        max_n=max_n,
        exhaustive_limit=min(max_n, EXHAUSTIVE_SWEEP_LIMIT),
        seed=seed,
        samples_per_size=samples_per_size,
        counts=counts,
    )
    for n in range(1, max_n + 1):
        pairs = vertex_pairs(n)
        if n <= EXHAUSTIVE_SWEEP_LIMIT:
            masks = range(1 << len(pairs))
        else:
            masks = list(random_edge_masks(n, samples_per_size, rng))
        for em in masks:
            counts["graphs_enumerated"] += 1
            touched = 0
            for idx in iter_bits(em):
                u, v = pairs[idx]
                touched |= (1 << u) | (1 << v)
            if touched != (1 << n) - 1:
                counts["isolated_skipped"] += 1
                continue
            rec = _survey(n, em, p)
            counts["tested"] += 1
            if rec.is_cm:
                counts["cm"] += 1
                if rec.bound_tight:
                    counts["equality_total"] += 1
                    if len(report.equality_cases) < equality_case_cap:
                        report.equality_cases.append(_record_dict(rec))
                if rec.refinement_case == "one_linear":
                    counts["one_linear_cm"] += 1
                elif rec.refinement_case == "a_zero":
                    counts["a_zero_cm"] += 1
                elif rec.refinement_holds:
                    counts["refinement_outside_holds"] += 1
                else:
                    counts["refinement_outside_fails"] += 1
            else:
                counts["non_cm"] += 1
            if rec.problems:
                report.counterexamples.append(_record_dict(rec, extra=True))
    return report


# -- the tightness construction ---------------------------------------------------


@dataclass
class ConstructionCertificate:
    """A graph built for targets (d, r, t), with recomputed invariants."""

    d: int
    r: int
    t: int
    base_parts: tuple[int, ...]
    suspensions: tuple[tuple[int, ...], ...]
    graph: Graph
    invariants: InvariantReport
    claims_met: bool
    problems: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        out = {
            "input": {"d": self.d, "r": self.r, "t": self.t},
            "base_parts": list(self.base_parts),
            "suspensions": [list(s) for s in self.suspensions],
            "graph": self.graph.to_json_dict(),
            "invariants": self.invariants.to_json_dict(),
            "claims_met": self.claims_met,
        }
        if self.problems:
            out["problems"] = list(self.problems)
        return out


def _first_independent_set(g: Graph, size: int) -> tuple[int, ...] | None:
    for combo in combinations(range(g.n), size):
        if is_independent(g, combo):
            return combo
    return None


def construct(d: int, r: int, t: int, field: FieldSpec = GF2) -> ConstructionCertificate:
    """Build a graph whose independence complex hits dim d-1, regularity r, type t.

    Start from the whiskered complete multipartite graph with d = p*r + q
    split into p parts of size r plus one part of size q (if q > 0), then
    raise the type one unit at a time with suspensions over independent sets
    of size d-1 until the recomputed type reaches t.  Every claim in the
    certificate is recomputed from scratch on the final graph.
    """
    if r < 2 or t < 2:
        raise DomainError(f"construction requires r >= 2 and t >= 2, got r={r}, t={t}")
    if not r <= d <= r * t:
        raise DomainError(f"construction requires r <= d <= r*t, got d={d}, r={r}, t={t}")
    quot, rem = divmod(d, r)
    parts = (r,) * quot + ((rem,) if rem else ())
    g = whisker(complete_multipartite(*parts))
    problems: list[str] = []
    rep = invariant_report(independence_complex(g), field)
    suspensions: list[tuple[int, ...]] = []
    while rep.is_cm and rep.cm_type is not None and rep.cm_type < t:
        if len(suspensions) >= t:
            problems.append("suspension loop failed to reach the target type")
            break
        s = _first_independent_set(g, d - 1)
        if s is None:
            problems.append(f"no independent set of size {d - 1} available")
            break
        g = s_suspension(g, s)
        suspensions.append(s)
        new_rep = invariant_report(independence_complex(g), field)
        if not new_rep.is_cm:
            problems.append(f"suspension {len(suspensions)} lost Cohen-Macaulayness")
        if new_rep.dim != rep.dim:
            problems.append(f"suspension {len(suspensions)} changed the dimension")
        if new_rep.reg != rep.reg:
            problems.append(f"suspension {len(suspensions)} changed the regularity")
        if new_rep.cm_type is not None and rep.cm_type is not None and new_rep.cm_type != rep.cm_type + 1:
            problems.append(f"suspension {len(suspensions)} did not raise the type by one")
        rep = new_rep
        if problems:
            break
    claims_met = (
        rep.is_cm
        and rep.dim == d - 1
        and rep.reg == r
        and rep.cm_type == t
        and not isolated_vertices(g)
    )
    return ConstructionCertificate(
        d=d,
        r=r,
        t=t,
        base_parts=parts,
        suspensions=tuple(suspensions),
        graph=g,
        invariants=rep,
        claims_met=claims_met,
        problems=tuple(problems),
    )


# -- standalone identity checks -----------------------------------------------------


@dataclass
class DimensionBoundRecord:
    """Evaluation of d <= reg * type (and the refined sum bound) on one complex."""

    d: int
    reg: int
    cm_type: int
    holds: bool
    tight: bool
    refinement_case: str | None
    refinement_holds: bool

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "reg": self.reg,
            "cm_type": self.cm_type,
            "holds": self.holds,
            "tight": self.tight,
            "refinement_case": self.refinement_case,
            "refinement_holds": self.refinement_holds,
        }


def verify_dimension_bound(obj: SimplicialComplex | Graph, field: FieldSpec = GF2) -> DimensionBoundRecord:
    """Check d <= reg * type for a Cohen-Macaulay complex equal to its core."""
    cx = independence_complex(obj) if isinstance(obj, Graph) else obj
    table = betti_table(cx, field)
    d = cx.dim + 1
    if table.projective_dimension != cx.n - d or not is_cm_reisner(cx, field):
        raise DomainError(f"the complex is not Cohen-Macaulay over {field}")
    if not cx.is_core():
        raise DomainError("the complex must equal its core (some vertex lies in every facet)")
    reg = table.regularity
    ty = table.beta(cx.n - d)
    one_linear = table.shifts() == (1,)
    a_inv = reg - d
    if one_linear:
        case = "one_linear"
    elif a_inv == 0:
        case = "a_zero"
    else:
        case = None
    return DimensionBoundRecord(
        d=d,
        reg=reg,
        cm_type=ty,
        holds=d <= reg * ty,
        tight=d == reg * ty,
        refinement_case=case,
        refinement_holds=d <= reg + ty - 1,
    )


@dataclass
class MultipartiteWhiskerReport:
    """Closed-form invariants of a whiskered complete multipartite graph vs computed."""

    parts: tuple[int, ...]
    expected_dim: int
    expected_reg: int
    expected_type: int
    computed: InvariantReport
    induced_matching: int
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "parts": list(self.parts),
            "expected": {"dim": self.expected_dim, "reg": self.expected_reg, "type": self.expected_type},
            "computed": self.computed.to_json_dict(),
            "induced_matching": self.induced_matching,
            "ok": self.ok,
        }


def verify_whiskered_multipartite(
    parts: tuple[int, ...],
    field: FieldSpec = GF2,
    max_vertices: int = MAX_HOCHSTER_VERTICES,
) -> MultipartiteWhiskerReport:
    """Compare computed invariants of a whiskered complete multipartite graph
    against the closed forms (dim = sum - 1, reg = largest part, type = part count),
    cross-checking the regularity against the induced matching number."""
    parts = tuple(parts)
    if not parts or any(r < 1 for r in parts):
        raise DomainError(f"part sizes must be positive, got {parts}")
    if 2 * sum(parts) > max_vertices:
        raise ResourceLimitError(f"whiskered graph on {2 * sum(parts)} vertices exceeds the limit {max_vertices}")
    g = whisker(complete_multipartite(*parts))
    rep = invariant_report(independence_complex(g), field)
    indmat = induced_matching_number(g)
    exp_dim = sum(parts) - 1
    exp_reg = max(parts)
    exp_type = len(parts)
    ok = (
        rep.is_cm
        and rep.dim == exp_dim
        and rep.reg == exp_reg
        and rep.cm_type == exp_type
        and indmat == exp_reg
        and rep.reg == indmat
    )
    return MultipartiteWhiskerReport(
        parts=parts,
        expected_dim=exp_dim,
        expected_reg=exp_reg,
        expected_type=exp_type,
        computed=rep,
        induced_matching=indmat,
        ok=ok,
    )


@dataclass
class CoverTypeReport:
    """Type computed from the Betti table vs counted from minimal covers."""

    cm_type: int
    cover_count: int
    ok: bool
    cover: tuple[int, ...]
    independent: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "cm_type": self.cm_type,
            "cover_count": self.cover_count,
            "ok": self.ok,
            "cover": list(self.cover),
            "independent": list(self.independent),
        }


def verify_type_via_covers(
    g: Graph,
    cover: tuple[int, ...] | None = None,
    independent: tuple[int, ...] | None = None,
    field: FieldSpec = GF2,
) -> CoverTypeReport:
    """Cross-check the type of an independence complex against a cover count.

    The graph must split into a minimal vertex cover and a matched maximal
    independent set (by default the first and second halves of the vertex
    range, which matches the whisker layout).  The type of the complex is
    compared with the number of minimal vertex covers of the folded graph
    restricted to the cover side.
    """
    if g.n % 2:
        raise DomainError("the graph must have an even number of vertices")
    d = g.n // 2
    if cover is None:
        cover = tuple(range(d))
    if independent is None:
        independent = tuple(v for v in range(g.n) if v not in set(cover))
    folded = o_transform(g, cover, independent)
    rep = invariant_report(independence_complex(g), field)
    if not rep.is_cm:
        raise DomainError(f"the independence complex is not Cohen-Macaulay over {field}")
    if rep.dim != d - 1:
        raise DomainError(f"the independence complex must have dimension {d - 1}, got {rep.dim}")
    covers = minimal_vertex_covers(folded.induced(cover))
    return CoverTypeReport(
        cm_type=rep.cm_type,
        cover_count=len(covers),
        ok=rep.cm_type == len(covers),
        cover=tuple(cover),
        independent=tuple(independent),
    )
