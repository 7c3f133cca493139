"""Square-free strongly stable ideals, generator arrays and Betti tables.

Generator counts are indexed by a position p >= 1 and a degree k. A generator g
of degree k with largest variable index m(g) sits at position p = m(g) - k + 1,
so the reduced array counts m[p, k] = #{g : deg g = k, m(g) = p + k - 1}. The
cumulative array follows the recursion mu[p, k] = m[p, k] + sum_{q<=p} mu[q, k-1].
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from scmh.characterization import Verdict, check_htriangle
from scmh.complexes import (
    SimplicialComplex,
    Triangle,
    h_triangle_shelling,
    minimal_nonfaces,
)
from scmh.config import Positivity
from scmh.errors import DomainError, ShapeError
from scmh.macaulay import binomial
from scmh.multicomplexes import Monomial

logger = logging.getLogger(__name__)

ERROR_NOT_SQUAREFREE = "generators must be square-free"
ERROR_NOT_STABLE = "ideal is not square-free strongly stable"
ERROR_ARRAY_SHAPE = "column of degree k must hold n - k + 1 entries"
ERROR_DEGREE_RANGE = "array degrees do not match the requested range"
ERROR_START_DEGREE = "generators of a proper ideal have degree at least 1"


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b, strict=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators."""

    nvars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if len(g) != self.nvars or any(e < 0 for e in g):
                raise DomainError(f"bad generator {g} on {self.nvars} variables")

    @classmethod
    def from_generators(
        cls, nvars: int, gens: Iterable[Sequence[int]]
    ) -> "MonomialIdeal":
        """Keep only the generators not divisible by another one."""
        unique = sorted({tuple(g) for g in gens}, key=lambda g: (sum(g), g))
        minimal: list[Monomial] = []
        for g in unique:
            if not any(_divides(other, g) for other in minimal):
                minimal.append(g)
        return cls(nvars=nvars, generators=tuple(minimal))

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    def contains(self, m: Monomial) -> bool:
        return any(_divides(g, m) for g in self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({sum(g) for g in self.generators}))


def max_index(g: Monomial) -> int:
    """Largest 1-based variable index dividing g, 0 for the unit."""
    return max((k + 1 for k, e in enumerate(g) if e > 0), default=0)


def stanley_reisner_ideal(c: SimplicialComplex) -> MonomialIdeal:
    """The ideal generated by the minimal nonfaces of c."""
    gens = [
        tuple(1 if v in face else 0 for v in range(1, c.n + 1))
        for face in minimal_nonfaces(c)
    ]
    return MonomialIdeal.from_generators(c.n, gens)


def is_sqfree_strongly_stable(ideal: MonomialIdeal) -> bool:
    """True iff x_i * (g / x_j) lies in the ideal for every generator g,
    every x_j dividing g and every i < j with x_i not dividing g."""
    if not ideal.is_squarefree:
        raise DomainError(ERROR_NOT_SQUAREFREE)
    for g in ideal.generators:
        for j, e in enumerate(g):
            if e == 0:
                continue
            for i in range(j):
                if g[i]:
                    continue
                moved = list(g)
                moved[j] = 0
                moved[i] = 1
                if not ideal.contains(tuple(moved)):
                    return False
    return True


def _require_stable(ideal: MonomialIdeal) -> None:
    if not is_sqfree_strongly_stable(ideal):
        raise DomainError(ERROR_NOT_STABLE)


@dataclass(frozen=True)
class GeneratorArray:
    """Counts for the degrees start..start+len(columns)-1 on n variables.

    `columns[t]` holds the entries p = 1..n-k+1 of degree k = start + t. The
    same type carries reduced (m) and cumulative (mu) arrays.
    """

    n: int
    start: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.start < 1:
            raise ShapeError(f"{ERROR_START_DEGREE}: start={self.start}")
        for t, column in enumerate(self.columns):
            k = self.start + t
            if len(column) != self.n - k + 1:
                raise ShapeError(
                    f"{ERROR_ARRAY_SHAPE}: degree {k} has {len(column)} on n={self.n}"
                )
            if any(x < 0 for x in column):
                raise ShapeError(f"negative entry in degree {k}: {column}")

    @property
    def stop(self) -> int:
        """Largest degree present."""
        return self.start + len(self.columns) - 1

    @property
    def degrees(self) -> range:
        return range(self.start, self.stop + 1)

    def get(self, p: int, k: int) -> int:
        if k < self.start or k > self.stop or p < 1 or p > self.n - k + 1:
            return 0
        return self.columns[k - self.start][p - 1]


def m_array(ideal: MonomialIdeal) -> GeneratorArray:
    """Reduced array: generators counted by degree and largest variable index."""
    _require_stable(ideal)
    n = ideal.nvars
    degrees = ideal.degrees
    if not degrees:
        return GeneratorArray(n=n, start=n + 1, columns=())
    counts: dict[tuple[int, int], int] = {}
    for g in ideal.generators:
        k = sum(g)
        p = max(max_index(g) - k + 1, 1)
        counts[(p, k)] = counts.get((p, k), 0) + 1
    start, stop = degrees[0], degrees[-1]
    return GeneratorArray(
        n=n,
        start=start,
        columns=tuple(
            tuple(counts.get((p, k), 0) for p in range(1, n - k + 2))
            for k in range(start, stop + 1)
        ),
    )


def mu_array_from_m(m: GeneratorArray, stop: int | None = None) -> GeneratorArray:
    """Apply mu[p, k] = m[p, k] + sum_{q<=p} mu[q, k-1], up to degree `stop`."""
    last = m.stop if stop is None else stop
    columns: list[tuple[int, ...]] = []
    previous: tuple[int, ...] = ()
    for k in range(m.start, last + 1):
        column = []
        for p in range(1, m.n - k + 2):
            carried = sum(previous[:p])
            column.append(m.get(p, k) + carried)
        previous = tuple(column)
        columns.append(previous)
    return GeneratorArray(n=m.n, start=m.start, columns=tuple(columns))


def m_array_from_mu(mu: GeneratorArray) -> GeneratorArray:
    """Invert the recursion: m[p, k] = mu[p, k] - sum_{q<=p} mu[q, k-1]."""
    columns = tuple(
        tuple(
            mu.get(p, k) - sum(mu.get(q, k - 1) for q in range(1, p + 1))
            for p in range(1, mu.n - k + 2)
        )
        for k in mu.degrees
    )
    return GeneratorArray(n=mu.n, start=mu.start, columns=columns)


def mu_array(ideal: MonomialIdeal) -> GeneratorArray:
    """Cumulative array of generators."""
    return mu_array_from_m(m_array(ideal))


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers b[s, s + ell], stored by (s, ell) when nonzero."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def get(self, s: int, degree: int) -> int:
        """b[s, degree]."""
        return self.entries.get((s, degree - s), 0)

    @property
    def rows(self) -> list[int]:
        return sorted({ell for _, ell in self.entries})

    @property
    def length(self) -> int:
        """Largest homological index with a nonzero entry, -1 when empty."""
        return max((s for s, _ in self.entries), default=-1)

    def __str__(self) -> str:
        if not self.entries:
            return "(zero table)"
        width = max(len(str(v)) for v in self.entries.values())
        cols = range(self.length + 1)
        label = max(len(str(ell)) for ell in self.rows) + 1
        lines = [" " * (label + 1) + " ".join(str(s).rjust(width) for s in cols)]
        for ell in self.rows:
            cells = []
            for s in cols:
                value = self.entries.get((s, ell), 0)
                cells.append((str(value) if value else ".").rjust(width))
            lines.append(f"{ell}:".rjust(label) + " " + " ".join(cells))
        return "\n".join(lines)


def _expand(m: GeneratorArray) -> BettiTable:
    # sum_s b[s, s+ell] t^s = sum_k m[k, ell] (1 + t)^(k-1)
    entries: dict[tuple[int, int], int] = {}
    for ell in m.degrees:
        for k in range(1, m.n - ell + 2):
            count = m.get(k, ell)
            if not count:
                continue
            for s in range(k):
                gained = binomial(k - 1, s) * count
                entries[(s, ell)] = entries.get((s, ell), 0) + gained
    return BettiTable(entries={key: v for key, v in entries.items() if v})


def betti_table(ideal: MonomialIdeal) -> BettiTable:
    """Betti table of a square-free strongly stable ideal."""
    return _expand(m_array(ideal))


def betti_from_complex(c: SimplicialComplex) -> BettiTable:
    """Betti table of the Stanley-Reisner ideal of the Alexander dual of c.

    Uses m[s+1, k] = h[n-k, s](c), read off the shelling h-triangle of c.
    """
    h = h_triangle_shelling(c)
    n = c.n
    if h.d == n:
        raise DomainError(f"the dual of the full simplex on [{n}] is void")
    columns = []
    start = n - h.d
    for k in range(start, n + 1):
        columns.append(tuple(h.entry(n - k, s) for s in range(n - k + 1)))
    return _expand(GeneratorArray(n=n, start=start, columns=tuple(columns)))


def betti_polynomial(table: BettiTable, ell: int) -> list[int]:
    """Coefficients of sum_s b[s, s+ell] t^s, lowest power first."""
    top = max((s for s, row in table.entries if row == ell), default=-1)
    return [table.entries.get((s, ell), 0) for s in range(top + 1)]


def evaluate(poly: Sequence[int], t: int) -> int:
    return sum(coefficient * t**s for s, coefficient in enumerate(poly))


def generator_array_from_triangle(t: Triangle, n: int) -> GeneratorArray:
    """mu[p, k] = h~[n-k, p-1]: triangle row i becomes the column of degree n - i."""
    if n <= t.d:
        raise DomainError(f"n={n} must exceed the triangle depth {t.d}")
    start = n - t.d
    return GeneratorArray(
        n=n,
        start=start,
        columns=tuple(t.rows[n - k] for k in range(start, n + 1)),
    )


def triangle_from_generator_array(mu: GeneratorArray) -> Triangle:
    """Rotate a cumulative array into a triangle, extending it to degree n.

    Degrees above the last column follow the recursion with no new generators.
    """
    if not mu.columns:
        raise ShapeError("empty generator array")
    columns = list(mu.columns)
    for k in range(mu.stop + 1, mu.n + 1):
        previous = columns[-1]
        columns.append(tuple(sum(previous[:p]) for p in range(1, mu.n - k + 2)))
    depth = mu.n - mu.start
    return Triangle.from_rows(columns[depth - i] for i in range(depth + 1))


def check_generator_array(
    mu: GeneratorArray,
    r: int | None = None,
    d: int | None = None,
    positivity: Positivity = Positivity.ZERO_ADMITTED,
) -> Verdict:
    """Decide whether `mu` is the array of generators of an r-regular
    componentwise linear ideal generated in degrees >= d.

    The array is rotated into an h~-triangle and checked there.
    """
    if d is not None and mu.start != d:
        raise ShapeError(f"{ERROR_DEGREE_RANGE}: starts at {mu.start}, expected {d}")
    if r is not None and mu.stop != r:
        raise ShapeError(f"{ERROR_DEGREE_RANGE}: ends at {mu.stop}, expected {r}")
    triangle = triangle_from_generator_array(mu)
    logger.debug("generator array rotated to %s", triangle.rows)
    return check_htriangle(triangle, positivity)
