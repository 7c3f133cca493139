"""Tests for lattice paths and the complex/multicomplex correspondence."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scmh.complexes import SimplicialComplex, htriangle_tilde
from scmh.correspondence import (
    LatticePath,
    Phi,
    Phi_bar,
    Psi,
    Psi_bar,
    is_order_ideal,
    is_shifted_set_family,
    lambda_,
    lambda_inverse,
    lattice_paths,
    nu,
    nu_inverse,
    path_leq,
    phi,
    psi,
)
from scmh.errors import DomainError
from scmh.multicomplexes import Multicomplex, f_triangle, validate_metacomplex

WORKED_PATH = "NEENENNEEEN"


class TestLatticePath:
    """Tests for the path encodings."""

    def test_worked_path(self):
        """North steps and the monomial of a path to (6, 5)."""
        path = LatticePath(WORKED_PATH)
        assert (path.r, path.a) == (6, 5)
        assert nu(path) == (1, 4, 6, 7, 11)
        assert lambda_(path) == (1, 0, 1, 2, 0, 0)

    def test_inverses(self):
        """Both inverse maps recover the word."""
        assert nu_inverse((1, 4, 6, 7, 11), 6, 5).word == WORKED_PATH
        assert lambda_inverse((1, 0, 1, 2, 0, 0), 6, 5).word == WORKED_PATH

    def test_bad_inputs(self):
        """Invalid words, subsets and degrees are rejected."""
        with pytest.raises(DomainError):
            LatticePath("NX")
        with pytest.raises(DomainError):
            nu_inverse((1, 9), 3, 2)
        with pytest.raises(DomainError):
            lambda_inverse((2, 1), 2, 2)

    def test_path_order(self):
        """EN stays below NE."""
        assert path_leq(LatticePath("EN"), LatticePath("NE"))
        assert not path_leq(LatticePath("NE"), LatticePath("EN"))
        with pytest.raises(DomainError):
            path_leq(LatticePath("EN"), LatticePath("N"))

    @given(
        st.integers(0, 5).flatmap(
            lambda r: st.tuples(
                st.just(r), st.lists(st.integers(0, 3), min_size=r, max_size=r)
            )
        ),
        st.integers(0, 3),
    )
    def test_phi_psi_round_trip(self, r_and_exps, extra):
        """psi undoes phi."""
        r, exps = r_and_exps
        a = sum(exps) + extra
        assert psi(phi(exps, a), r, a) == tuple(exps)


class TestFamilies:
    """Tests for path families and shifted set families."""

    def test_lattice_paths(self):
        """All paths, sorted with E before N."""
        assert [p.word for p in lattice_paths(1, 1)] == ["EN", "NE"]
        assert len(lattice_paths(2, 2)) == 6

    def test_order_ideal(self):
        """A family must contain everything below its members."""
        assert is_order_ideal([LatticePath("EN")], 1, 1)
        assert not is_order_ideal([LatticePath("NE")], 1, 1)

    def test_shifted_set_family(self):
        """Closure under moving an element up."""
        assert is_shifted_set_family([(2, 3), (1, 3)], 3)
        assert not is_shifted_set_family([(1, 3)], 3)


class TestComplexMaps:
    """Tests for Phi, Psi and their level-wise versions."""

    def test_phi_psi_on_unit(self):
        """The unit on one variable is the vertex {2} of [2]."""
        unit = Multicomplex.from_generators(1, [(0,)])
        c = Phi(unit, 1)
        assert c == SimplicialComplex(n=2, facets=((2,),))
        assert Psi(c) == unit

    def test_psi_requires_pure(self, vertex_and_edge):
        """Psi only takes pure complexes."""
        with pytest.raises(DomainError):
            Psi(vertex_and_edge)

    def test_phi_requires_shifted(self):
        """Phi only takes shifted multicomplexes."""
        with pytest.raises(DomainError):
            Phi(Multicomplex.from_generators(2, [(1, 0)]), 1)

    def test_levels_transport_h(self, vertex_and_edge, two_edges):
        """The f-triangle of Psi_bar is the h~-triangle."""
        for c in (vertex_and_edge, two_edges):
            mc = Psi_bar(c)
            assert validate_metacomplex(mc) == (True, None)
            assert f_triangle(mc) == htriangle_tilde(c)

    def test_round_trip(self, vertex_and_edge, two_edges):
        """Phi_bar undoes Psi_bar."""
        for c in (vertex_and_edge, two_edges):
            assert Phi_bar(Psi_bar(c)) == c

    def test_psi_bar_requires_shifted(self):
        """Non-shifted complexes have no metacomplex."""
        with pytest.raises(DomainError):
            Psi_bar(SimplicialComplex.from_faces(4, [[1, 2], [3, 4]]))
