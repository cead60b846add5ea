import json

import pytest
from hypothesis import given

from helpers import (
    as_vertex_sets,
    brute_faces,
    brute_link_faces,
    brute_minimal_nonfaces,
    complexes,
)
from srinv import (
    DomainError,
    InputError,
    SimplicialComplex,
    from_facets,
    full_simplex,
    independence_complex,
    ridge_sum,
)
from srinv.complexes import complex_from_json_dict, complex_from_text, vertices_from_mask
from srinv.corpus import antichain_complexes
from srinv.graphs import Graph, graph_from_edge_mask


def hollow_triangle():
    return SimplicialComplex(3, [(0, 1), (0, 2), (1, 2)])


def two_disjoint_edges():
    # the independence complex of a 4-cycle
    return SimplicialComplex(4, [(0, 2), (1, 3)])


class TestConstruction:
    def test_hollow_triangle_is_pure_dim_one(self):
        cx = hollow_triangle()
        assert cx.dim == 1
        assert cx.is_pure

    def test_single_edge_is_full_simplex(self):
        cx = SimplicialComplex(2, [(0, 1)])
        assert cx.dim == 1
        assert cx.facet_sets() == ((0, 1),)

    def test_duplicate_facets_are_merged(self):
        cx = SimplicialComplex(4, [(0, 1, 2), (0, 1, 2)])
        assert cx.facet_sets() == ((0, 1, 2),)

    def test_non_maximal_faces_are_dropped(self):
        cx = SimplicialComplex(3, [(0,), (0, 1), (1,)])
        assert cx.facet_sets() == ((0, 1),)

    def test_out_of_range_vertex_rejected(self):
        with pytest.raises(InputError):
            SimplicialComplex(3, [(0, 3)])

    def test_ground_size_limit(self):
        with pytest.raises(InputError):
            SimplicialComplex(64, [])

    def test_empty_facet_list_gives_minimal_complex(self):
        cx = SimplicialComplex(2, [])
        assert cx.facets == (0,)
        assert cx.dim == -1

    def test_facets_in_canonical_order(self):
        cx = SimplicialComplex(5, [(1, 2), (0, 3), (4,)])
        assert cx.facet_sets() == ((4,), (0, 3), (1, 2))

    def test_labels_checked(self):
        SimplicialComplex(2, [(0, 1)], labels=("a", "b"))
        with pytest.raises(InputError):
            SimplicialComplex(2, [(0, 1)], labels=("a",))
        with pytest.raises(InputError):
            SimplicialComplex(2, [(0, 1)], labels=("a", "a"))

    @given(complexes())
    def test_round_trip_through_facet_sets(self, cx):
        assert from_facets(cx.n, cx.facet_sets()) == cx


class TestLocalOperations:
    def test_link_of_vertex_in_hollow_triangle(self):
        link = hollow_triangle().link((0,))
        assert link.n == 2
        assert link.facet_sets() == ((0,), (1,))

    def test_link_of_empty_face_is_identity(self):
        cx = hollow_triangle()
        assert cx.link(()) == cx

    def test_link_of_top_face_of_simplex_is_minimal(self):
        cx = SimplicialComplex(2, [(0, 1)])
        link = cx.link((0, 1))
        assert link.n == 0
        assert link.facets == (0,)
        assert link.dim == -1

    def test_link_requires_a_face(self):
        with pytest.raises(DomainError):
            hollow_triangle().link((0, 1, 2))

    def test_star_of_cone_apex_is_whole_complex(self):
        cone = hollow_triangle().cone()
        assert cone.star((3,)) == cone

    def test_star_requires_a_face(self):
        with pytest.raises(DomainError):
            two_disjoint_edges().star((0, 1))

    def test_deletion_of_vertex(self):
        out = hollow_triangle().deletion((0,))
        assert out.n == 2
        assert out.facet_sets() == ((0, 1),)

    def test_restriction_keeps_ground_set(self):
        out = two_disjoint_edges().restriction((1, 2))
        assert out.n == 2
        assert out.facet_sets() == ((0,), (1,))

    def test_restriction_may_leave_nonface_vertices(self):
        cx = SimplicialComplex(3, [(0, 1)])
        out = cx.restriction((0, 2))
        assert out.n == 2
        assert out.facet_sets() == ((0,),)
        assert not out.is_face((1,))

    def test_labels_follow_relabeling(self):
        cx = SimplicialComplex(3, [(0, 1), (0, 2), (1, 2)], labels=("a", "b", "c"))
        assert cx.link((0,)).labels == ("b", "c")
        assert cx.deletion((2,)).labels == ("a", "b")

    @given(complexes(max_n=4))
    def test_link_is_star_restricted_away_from_face(self, cx):
        for face in cx.faces():
            away = cx.full_mask & ~face
            assert cx.link(face) == cx.star(face).restriction(away)

    @given(complexes(max_n=4))
    def test_link_faces_match_brute_force(self, cx):
        for face in cx.faces():
            keep = vertices_from_mask(cx.full_mask & ~face)
            got = as_vertex_sets(cx.link(face), relabel_from=keep)
            assert got == brute_link_faces(cx, face)


class TestCoreAndCone:
    def test_core_of_full_simplex_is_minimal(self):
        core = SimplicialComplex(2, [(0, 1)]).core()
        assert core.n == 0
        assert core.facets == (0,)

    def test_whiskered_edge_complex_is_its_own_core(self):
        g = Graph(2, [(0, 1)])
        from srinv import whisker

        cx = independence_complex(whisker(g))
        assert cx.core() == cx
        assert cx.is_core()

    def test_core_of_cone_removes_apex(self):
        tri = hollow_triangle()
        assert tri.cone().core() == tri

    @given(complexes())
    def test_core_is_idempotent(self, cx):
        core = cx.core()
        assert core.core() == core

    @given(complexes())
    def test_every_core_vertex_misses_some_facet(self, cx):
        core = cx.core()
        for v in range(core.n):
            assert any(not f >> v & 1 for f in core.facets)

    def test_cone_over_minimal_complex_is_point(self):
        cx = SimplicialComplex(0, []).cone()
        assert cx.n == 1
        assert cx.facet_sets() == ((0,),)

    def test_cone_over_two_points(self):
        cx = SimplicialComplex(2, [(0,), (1,)]).cone()
        assert cx.facet_sets() == ((0, 2), (1, 2))

    def test_cone_raises_dimension(self):
        assert hollow_triangle().cone().dim == 2

    def test_cone_rejects_existing_vertex(self):
        with pytest.raises(InputError):
            hollow_triangle().cone(1)

    def test_cone_rejects_sparse_id(self):
        with pytest.raises(InputError):
            hollow_triangle().cone(7)

    @given(complexes(max_n=4))
    def test_cones_are_never_core(self, cx):
        cone = cx.cone()
        assert not cone.is_core()


class TestRidgeSum:
    def test_two_segments_glue_to_path(self):
        seg = SimplicialComplex(2, [(0, 1)])
        out = ridge_sum(seg, (1,), seg, (0,))
        assert out.n == 3
        assert out.facet_sets() == ((0, 1), (1, 2))

    def test_two_triangles_share_an_edge(self):
        tri = full_simplex(3)
        out = ridge_sum(tri, (0, 1), tri, (0, 1))
        assert out.n == 4
        assert out.facet_sets() == ((0, 1, 2), (0, 1, 3))

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(DomainError):
            ridge_sum(full_simplex(3), (0, 1), full_simplex(2), (0,))

    def test_non_ridge_rejected(self):
        tri = full_simplex(3)
        with pytest.raises(DomainError):
            ridge_sum(tri, (0,), tri, (0, 1))

    def test_gluing_a_fresh_simplex_adds_one_facet(self):
        tri = hollow_triangle()
        out = ridge_sum(tri, (1,), full_simplex(2), (0,))
        assert len(out.facets) == len(tri.facets) + 1


class TestGlobalStructure:
    def test_hollow_triangle_strongly_connected(self):
        assert hollow_triangle().is_strongly_connected()

    def test_disjoint_edges_not_strongly_connected(self):
        assert not two_disjoint_edges().is_strongly_connected()

    def test_single_facet_strongly_connected(self):
        assert full_simplex(3).is_strongly_connected()

    def test_non_pure_rejected(self):
        cx = SimplicialComplex(3, [(0, 1), (2,)])
        with pytest.raises(DomainError):
            cx.is_strongly_connected()

    def test_minimal_nonfaces_of_square_complex(self):
        mnf = two_disjoint_edges().minimal_nonfaces()
        assert tuple(vertices_from_mask(m) for m in mnf) == ((0, 1), (0, 3), (1, 2), (2, 3))
        assert two_disjoint_edges().indeg() == 2

    def test_full_simplex_has_no_nonfaces(self):
        assert full_simplex(3).minimal_nonfaces() == ()
        assert full_simplex(3).indeg() == 0

    def test_hollow_triangle_single_cubic_nonface(self):
        mnf = hollow_triangle().minimal_nonfaces()
        assert tuple(vertices_from_mask(m) for m in mnf) == ((0, 1, 2),)
        assert hollow_triangle().indeg() == 3

    @given(complexes(max_n=4))
    def test_minimal_nonfaces_match_brute_force(self, cx):
        assert set(cx.minimal_nonfaces()) == brute_minimal_nonfaces(cx)

    @given(complexes(max_n=4))
    def test_faces_match_brute_force(self, cx):
        assert set(cx.faces()) == brute_faces(cx)


def test_degree_two_generators_characterize_independence_complexes():
    # on complexes whose vertices are all faces, indeg 2 holds exactly when
    # the complex is the independence complex of a graph with an edge
    for n in range(1, 6):
        for cx in antichain_complexes(n, covering_only=True):
            mnf = cx.minimal_nonfaces()
            if cx.indeg() == 2:
                assert all(m.bit_count() == 2 for m in mnf)
                g = Graph(n, [vertices_from_mask(m) for m in mnf])
                assert independence_complex(g) == cx
    for n in range(2, 6):
        for mask in range(1, 1 << (n * (n - 1) // 2)):
            g = graph_from_edge_mask(n, mask)
            assert independence_complex(g).indeg() == 2


class TestSerialization:
    def test_text_round_trip(self):
        cx = two_disjoint_edges()
        assert complex_from_text(cx.to_text()) == cx

    def test_text_round_trip_minimal_complex(self):
        cx = SimplicialComplex(3, [])
        assert complex_from_text(cx.to_text()) == cx

    def test_text_comments_and_blanks(self):
        text = "# boundary of a triangle\ncomplex n=3\n\n0 1  # an edge\n0 2\n1 2\n"
        assert complex_from_text(text) == hollow_triangle()

    def test_text_bad_header(self):
        with pytest.raises(InputError):
            complex_from_text("graph n=3\n0 1\n")

    def test_json_round_trip(self):
        cx = hollow_triangle()
        assert complex_from_json_dict(json.loads(json.dumps(cx.to_json_dict()))) == cx

    def test_json_of_minimal_complex_keeps_empty_facet(self):
        assert SimplicialComplex(1, []).to_json_dict() == {"n": 1, "facets": [[]]}

    @given(complexes())
    def test_both_formats_round_trip(self, cx):
        assert complex_from_text(cx.to_text()) == cx
        assert complex_from_json_dict(cx.to_json_dict()) == cx
