"""Tests for simplicial complexes and their triangles."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scmh.complexes import (
    SimplicialComplex,
    Triangle,
    alexander_dual,
    empty_complex,
    f_vector,
    full_simplex,
    h_from_htilde,
    h_triangle_shelling,
    h_vector,
    htilde_from_h,
    htriangle_tilde,
    is_shifted,
    minimal_nonfaces,
    pure_skeleton,
    relabel_to_support,
    restriction,
    shelling_order,
    sigma,
    skeleton,
)
from scmh.errors import DomainError, ShapeError


class TestSimplicialComplex:
    """Tests for construction and basic queries."""

    def test_from_faces_keeps_maximal(self):
        """Non-maximal members are dropped and facets are sorted."""
        c = SimplicialComplex.from_faces(3, [[1], [3, 2], [2]])
        assert c.facets == ((1,), (2, 3))

    def test_vertex_range(self):
        """Vertices must lie in [n]."""
        with pytest.raises(DomainError):
            SimplicialComplex(n=3, facets=((4,),))

    def test_contained_facet_rejected(self):
        """A facet inside another facet is not a facet."""
        with pytest.raises(DomainError, match="contained"):
            SimplicialComplex(n=3, facets=((2,), (2, 3), (1,)))
        with pytest.raises(DomainError):
            SimplicialComplex(n=3, facets=((1, 2), (2, 1)))
        with pytest.raises(DomainError):
            SimplicialComplex(n=2, facets=((), (1,)))

    def test_canonical_facets(self, vertex_and_edge):
        """Facet order and vertex order do not affect equality."""
        c = SimplicialComplex(n=3, facets=((3, 2), (1,)))
        assert c.facets == ((1,), (2, 3))
        assert c == vertex_and_edge
        assert not c.is_pure
        assert h_triangle_shelling(c) == h_triangle_shelling(vertex_and_edge)

    def test_faces(self, vertex_and_edge):
        """Every subset of a facet is a face."""
        assert vertex_and_edge.faces == {(), (1,), (2,), (3,), (2, 3)}
        assert (3, 2) in vertex_and_edge
        assert (1, 2) not in vertex_and_edge

    def test_queries(self, vertex_and_edge):
        """Dimension, purity and vertex set."""
        assert vertex_and_edge.d == 2
        assert vertex_and_edge.dim == 1
        assert not vertex_and_edge.is_pure
        assert vertex_and_edge.vertices == (1, 2, 3)

    def test_void_and_empty(self):
        """The void complex differs from {emptyset}."""
        void = SimplicialComplex(n=2, facets=())
        assert void.is_void
        assert not empty_complex(2).is_void
        assert empty_complex(2).d == 0
        with pytest.raises(DomainError):
            _ = void.d


class TestVectors:
    """Tests for f- and h-vectors."""

    def test_f_vector(self, vertex_and_edge):
        """Face counts by size."""
        assert f_vector(vertex_and_edge) == (1, 3, 1)

    def test_h_vector_may_be_negative(self, vertex_and_edge):
        """Non-pure complexes can have negative h-entries."""
        assert h_vector(vertex_and_edge) == (1, 1, -1)

    def test_simplex(self):
        """A simplex has h = (1, 0, ..., 0)."""
        assert h_vector(full_simplex(3)) == (1, 0, 0, 0)


class TestSkeleta:
    """Tests for pure and ordinary skeleta."""

    def test_pure_skeleton(self, vertex_and_edge):
        """The pure 0-skeleton holds every vertex."""
        assert pure_skeleton(vertex_and_edge, 0).facets == ((1,), (2,), (3,))

    def test_pure_skeleton_range(self, vertex_and_edge):
        """Skeleton index must not exceed the dimension."""
        with pytest.raises(DomainError):
            pure_skeleton(vertex_and_edge, 2)

    def test_skeleton(self):
        """The 1-skeleton of a triangle is its boundary."""
        assert skeleton(full_simplex(3), 1).facets == ((1, 2), (1, 3), (2, 3))


class TestShifted:
    """Tests for shiftedness and the shelling data."""

    def test_shifted(self, vertex_and_edge, two_edges):
        """Both fixtures are shifted."""
        assert is_shifted(vertex_and_edge)
        assert is_shifted(two_edges)

    def test_not_shifted(self):
        """Two disjoint edges are not shifted."""
        assert not is_shifted(SimplicialComplex.from_faces(4, [[1, 2], [3, 4]]))

    def test_sigma_and_restriction(self):
        """Top segments of faces."""
        assert sigma((1, 3), 3) == (3,)
        assert sigma((2, 3), 3) == (2, 3)
        assert sigma((1, 2), 3) == ()
        assert restriction((1, 3), 3) == (1,)

    def test_shelling_order(self, two_edges):
        """Larger vertices first."""
        assert shelling_order(two_edges) == [(2, 3), (1, 3)]

    def test_shelling_requires_shifted(self):
        """Non-shifted input is rejected."""
        with pytest.raises(DomainError):
            shelling_order(SimplicialComplex.from_faces(4, [[1, 2], [3, 4]]))


class TestTriangles:
    """Tests for h~- and h-triangles."""

    def test_htriangle_tilde(self, vertex_and_edge, two_edges):
        """Rows are h-vectors of the pure skeleta."""
        assert htriangle_tilde(vertex_and_edge).rows == ((1,), (1, 2), (1, 0, 0))
        assert htriangle_tilde(two_edges).rows == ((1,), (1, 2), (1, 1, 0))

    def test_h_from_htilde_matches_shelling(self, vertex_and_edge):
        """Both routes to the h-triangle agree."""
        expected = ((0,), (0, 1), (1, 0, 0))
        assert h_from_htilde(htriangle_tilde(vertex_and_edge)).rows == expected
        assert h_triangle_shelling(vertex_and_edge).rows == expected

    def test_shape_checked(self):
        """Rows must have the right lengths."""
        with pytest.raises(ShapeError):
            Triangle.from_rows([[1], [1, 2, 3]])
        with pytest.raises(ShapeError):
            Triangle.from_rows([])

    def test_entry_outside_is_zero(self):
        """Entries outside the triangle read as 0."""
        t = Triangle.from_rows([[1], [1, 2]])
        assert t.entry(1, 2) == 0
        assert t.entry(2, 0) == 0
        assert t[1] == (1, 2)

    @given(
        st.integers(0, 4).flatmap(
            lambda d: st.tuples(
                *(
                    st.lists(st.integers(-5, 20), min_size=i + 1, max_size=i + 1)
                    for i in range(d + 1)
                )
            )
        )
    )
    def test_transforms_invert(self, rows):
        """htilde_from_h undoes h_from_htilde."""
        t = Triangle.from_rows(rows)
        assert htilde_from_h(h_from_htilde(t)) == t


class TestDuality:
    """Tests for minimal nonfaces and Alexander duals."""

    def test_minimal_nonfaces(self, vertex_and_edge):
        """1 is joined to nothing."""
        assert minimal_nonfaces(vertex_and_edge) == [(1, 2), (1, 3)]

    def test_dual(self, vertex_and_edge):
        """Complements of the minimal nonfaces."""
        assert alexander_dual(vertex_and_edge).facets == ((2,), (3,))

    def test_dual_of_simplex_is_void(self):
        """The full simplex has no nonfaces."""
        assert alexander_dual(full_simplex(2)).is_void

    def test_dual_of_empty_complex(self):
        """Every vertex is a nonface of {emptyset}."""
        assert alexander_dual(empty_complex(2)).facets == ((1,), (2,))


class TestRelabel:
    """Tests for moving a complex onto its support."""

    def test_top_segment(self):
        """Vertices {3, 4, 5} move to {1, 2, 3}."""
        c = SimplicialComplex.from_faces(5, [[4, 5], [3]])
        assert relabel_to_support(c) == SimplicialComplex(n=3, facets=((1,), (2, 3)))

    def test_not_top_segment(self):
        """A gap below n is rejected."""
        with pytest.raises(DomainError):
            relabel_to_support(SimplicialComplex.from_faces(5, [[3, 4]]))
