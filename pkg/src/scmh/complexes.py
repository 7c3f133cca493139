"""Simplicial complexes on [n]: faces, skeleta, shiftedness and h-triangles.

Faces are sorted vertex tuples. A complex is stored by its facets, so two
complexes are equal exactly when they have the same ground set and facets.
The complex {emptyset} has the single facet (); the void complex (no faces at
all) has no facets and only arises as the Alexander dual of a full simplex.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from more_itertools import powerset

from scmh.errors import DomainError, ShapeError
from scmh.macaulay import binomial

Face = tuple[int, ...]

ERROR_VERTEX_RANGE = "vertex outside the ground set"
ERROR_NOT_ANTICHAIN = "facet contained in another facet"
ERROR_VOID = "operation needs a nonempty complex"
ERROR_NOT_SHIFTED = "complex is not shifted"
ERROR_SKELETON_RANGE = "skeleton index out of range"
ERROR_TRIANGLE_SHAPE = "row i of a triangle must hold exactly i + 1 entries"
ERROR_NOT_TOP_SEGMENT = "used vertices do not form a top segment of the ground set"


def _facet_key(face: Face) -> tuple[int, Face]:
    return (len(face), face)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on [n] given by its facets."""

    n: int
    facets: tuple[Face, ...]

    def __post_init__(self) -> None:
        for face in self.facets:
            if any(v < 1 or v > self.n for v in face):
                raise DomainError(f"{ERROR_VERTEX_RANGE}: {face} on [{self.n}]")
        canonical = tuple(
            sorted((tuple(sorted(set(face))) for face in self.facets), key=_facet_key)
        )
        members = [set(face) for face in canonical]
        for k, small in enumerate(members):
            for big in members[k + 1 :]:
                if small <= big:
                    raise DomainError(
                        f"{ERROR_NOT_ANTICHAIN}: {sorted(small)} within {sorted(big)}"
                    )
        object.__setattr__(self, "facets", canonical)

    @classmethod
    def from_faces(cls, n: int, sets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build the complex generated by `sets`, keeping only maximal members."""
        family = {tuple(sorted(set(s))) for s in sets}
        ordered = sorted(family, key=len, reverse=True)
        maximal: list[Face] = []
        for face in ordered:
            as_set = set(face)
            if not any(as_set <= set(other) for other in maximal):
                maximal.append(face)
        return cls(n=n, facets=tuple(sorted(maximal, key=_facet_key)))

    @cached_property
    def faces(self) -> frozenset[Face]:
        """Every face of the complex (including the empty face when nonempty)."""
        return frozenset(
            tuple(sub) for facet in self.facets for sub in powerset(facet)
        )

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def d(self) -> int:
        """Size of the largest facet, so the complex is a (d-1)-complex."""
        if self.is_void:
            raise DomainError(ERROR_VOID)
        return max(len(f) for f in self.facets)

    @property
    def dim(self) -> int:
        return self.d - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def faces_of_size(self, size: int) -> list[Face]:
        return sorted(f for f in self.faces if len(f) == size)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, tuple):
            return tuple(sorted(item)) in self.faces
        return False


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n=n, facets=(tuple(range(1, n + 1)),))


def empty_complex(n: int) -> SimplicialComplex:
    """The complex {emptyset} on [n]."""
    return SimplicialComplex(n=n, facets=((),))


@dataclass(frozen=True)
class Triangle:
    """A triangular integer array: row i holds i + 1 entries, i = 0..d."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ShapeError(f"{ERROR_TRIANGLE_SHAPE}: no rows")
        for i, row in enumerate(self.rows):
            if len(row) != i + 1:
                raise ShapeError(f"{ERROR_TRIANGLE_SHAPE}: row {i} has {len(row)}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Triangle":
        return cls(rows=tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def d(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def entry(self, i: int, j: int) -> int:
        """Entry (i, j), or 0 outside the triangle."""
        if 0 <= i <= self.d and 0 <= j <= i:
            return self.rows[i][j]
        return 0

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


@dataclass
class _TriangleBuilder:
    d: int
    cells: list[list[int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.cells = [[0] * (i + 1) for i in range(self.d + 1)]

    def freeze(self) -> Triangle:
        return Triangle.from_rows(self.cells)


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    """Face counts (f_{-1}, f_0, ..., f_{d-1})."""
    counts = [0] * (c.d + 1)
    for face in c.faces:
        counts[len(face)] += 1
    return tuple(counts)


def h_vector(c: SimplicialComplex) -> tuple[int, ...]:
    """The h-vector (h_0, ..., h_d) of a (d-1)-complex."""
    f = f_vector(c)
    d = c.d
    return tuple(
        sum(
            (-1) ** (k - i) * binomial(d - i, k - i) * f[i]
            for i in range(k + 1)
        )
        for k in range(d + 1)
    )


def pure_skeleton(c: SimplicialComplex, i: int) -> SimplicialComplex:
    """The pure i-skeleton: its facets are the i-dimensional faces of c."""
    if i < -1 or i > c.dim:
        raise DomainError(f"{ERROR_SKELETON_RANGE}: i={i}, dim={c.dim}")
    return SimplicialComplex(n=c.n, facets=tuple(c.faces_of_size(i + 1)))


def skeleton(c: SimplicialComplex, i: int) -> SimplicialComplex:
    """The i-skeleton: all faces of dimension at most i."""
    if i < -1:
        raise DomainError(f"{ERROR_SKELETON_RANGE}: i={i}")
    if c.is_void or i >= c.dim:
        return c
    pieces: list[Face] = []
    for facet in c.facets:
        if len(facet) <= i + 1:
            pieces.append(facet)
        else:
            pieces.extend(combinations(facet, i + 1))
    return SimplicialComplex.from_faces(c.n, pieces)


def is_shifted(c: SimplicialComplex) -> bool:
    """True iff every face survives every elementary exchange r -> s with r < s."""
    faces = c.faces
    for face in faces:
        members = set(face)
        for r in face:
            for s in range(r + 1, c.n + 1):
                if s in members:
                    continue
                moved = tuple(sorted((members - {r}) | {s}))
                if moved not in faces:
                    return False
    return True


def sigma(face: Sequence[int], n: int) -> Face:
    """The longest segment {s, ..., n} contained in the face (empty if n is not)."""
    members = set(face)
    if n not in members:
        return ()
    s = n
    while s - 1 in members:
        s -= 1
    return tuple(range(s, n + 1))


def restriction(face: Sequence[int], n: int) -> Face:
    """The face minus its top segment."""
    top = set(sigma(face, n))
    return tuple(sorted(v for v in face if v not in top))


def htriangle_tilde(c: SimplicialComplex) -> Triangle:
    """Row i is the h-vector of the pure (i-1)-skeleton, i = 0..d."""
    if c.is_void:
        raise DomainError(ERROR_VOID)
    return Triangle.from_rows(
        h_vector(pure_skeleton(c, i - 1)) for i in range(c.d + 1)
    )


def h_from_htilde(t: Triangle) -> Triangle:
    """h_{i,j} = h~_{i,j} - sum_{l <= j} h~_{i+1,l}; the last row is unchanged."""
    return Triangle.from_rows(
        [
            t.entry(i, j) - sum(t.entry(i + 1, ell) for ell in range(j + 1))
            for j in range(i + 1)
        ]
        for i in range(t.d + 1)
    )


def htilde_from_h(t: Triangle) -> Triangle:
    """Inverse of `h_from_htilde`, filled in from the last row upwards."""
    rows: list[list[int]] = [list(t.rows[t.d])]
    for i in range(t.d - 1, -1, -1):
        below = rows[0]
        rows.insert(0, [t.entry(i, j) + sum(below[: j + 1]) for j in range(i + 1)])
    return Triangle.from_rows(rows)


def h_triangle_shelling(c: SimplicialComplex) -> Triangle:
    """Count facets F by |F| = i and |sigma(F)| = i - j."""
    if not is_shifted(c):
        raise DomainError(ERROR_NOT_SHIFTED)
    builder = _TriangleBuilder(d=c.d)
    for facet in c.facets:
        i = len(facet)
        builder.cells[i][i - len(sigma(facet, c.n))] += 1
    return builder.freeze()


def shelling_order(c: SimplicialComplex) -> list[Face]:
    """Facets in reverse lexicographic order (larger vertices first).

    For a shifted complex this is a shelling whose restriction map is
    `restriction(F, n)`.
    """
    if not is_shifted(c):
        raise DomainError(ERROR_NOT_SHIFTED)

    def key(face: Face) -> tuple[int, ...]:
        members = set(face)
        return tuple(1 if v in members else 0 for v in range(c.n, 0, -1))

    return sorted(c.facets, key=key, reverse=True)


def minimal_nonfaces(c: SimplicialComplex) -> list[Face]:
    """Inclusion-minimal subsets of [n] that are not faces, in canonical order."""
    faces = c.faces
    found: list[Face] = []
    for sub in powerset(range(1, c.n + 1)):
        candidate = tuple(sub)
        if candidate in faces:
            continue
        if all(
            candidate[:k] + candidate[k + 1 :] in faces
            for k in range(len(candidate))
        ):
            found.append(candidate)
    return sorted(found, key=_facet_key)


def alexander_dual(c: SimplicialComplex) -> SimplicialComplex:
    """{F subset of [n] : [n] minus F is not a face}; void for the full simplex."""
    ground = set(range(1, c.n + 1))
    return SimplicialComplex(
        n=c.n,
        facets=tuple(
            sorted(
                (tuple(sorted(ground - set(g))) for g in minimal_nonfaces(c)),
                key=_facet_key,
            )
        ),
    )


def relabel_to_support(c: SimplicialComplex) -> SimplicialComplex:
    """Move a complex whose vertices are {n-f0+1, ..., n} onto [f0]."""
    used = c.vertices
    f0 = len(used)
    if used != tuple(range(c.n - f0 + 1, c.n + 1)):
        raise DomainError(f"{ERROR_NOT_TOP_SEGMENT}: {used} on [{c.n}]")
    offset = c.n - f0
    return SimplicialComplex(
        n=f0,
        facets=tuple(
            sorted(
                (tuple(v - offset for v in facet) for facet in c.facets),
                key=_facet_key,
            )
        ),
    )
