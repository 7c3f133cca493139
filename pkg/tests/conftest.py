"""Shared fixtures for scmh tests."""

import pytest

from scmh.characterization import Composition, CompositionSpace
from scmh.complexes import SimplicialComplex, Triangle


@pytest.fixture
def counterexample() -> Triangle:
    """Passes the row conditions but is not an h~-triangle."""
    return Triangle.from_rows(
        [[1], [1, 5], [1, 4, 7], [1, 3, 3, 4], [1, 2, 0, 0, 0]]
    )


@pytest.fixture
def vertex_and_edge() -> SimplicialComplex:
    return SimplicialComplex.from_faces(3, [[2, 3], [1]])


@pytest.fixture
def two_edges() -> SimplicialComplex:
    return SimplicialComplex.from_faces(3, [[2, 3], [1, 3]])


@pytest.fixture
def space_22() -> CompositionSpace:
    """Monomials of degree <= 2 on u1, u2 bounded below by (1, 4, 9, 4, 1)."""
    return CompositionSpace(nvars=2, cap=2, h=(1, 4, 9, 4, 1))


def make_composition(
    space: CompositionSpace, one: int, u1: int, u2: int, quadrics: int = 1
) -> Composition:
    return Composition.from_mapping(
        space,
        {
            (0, 0): one,
            (1, 0): u1,
            (0, 1): u2,
            (2, 0): quadrics,
            (1, 1): quadrics,
            (0, 2): quadrics,
        },
    )


@pytest.fixture
def d1(space_22: CompositionSpace) -> Composition:
    return make_composition(space_22, 10, 4, 5)


@pytest.fixture
def d2(space_22: CompositionSpace) -> Composition:
    return make_composition(space_22, 9, 5, 5)


@pytest.fixture
def d3(space_22: CompositionSpace) -> Composition:
    return make_composition(space_22, 9, 4, 6)


@pytest.fixture
def compose(space_22: CompositionSpace):
    """Build compositions over `space_22` from (1, u1, u2) values."""

    def build(one: int, u1: int, u2: int, quadrics: int = 1) -> Composition:
        return make_composition(space_22, one, u1, u2, quadrics)

    return build
