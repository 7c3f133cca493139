"""Compositions over monomial spaces, the rho bound, and the h~-triangle checker.

A composition assigns a non-negative integer to every monomial of degree at
most `cap` on u_1..u_v. The checker decides whether a triangle is the
h~-triangle of a sequentially Cohen-Macaulay complex; the witness constructor
builds a shifted complex realizing an accepted triangle.
"""

import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from scmh.complexes import (
    SimplicialComplex,
    Triangle,
    htriangle_tilde,
    is_shifted,
    relabel_to_support,
)
from scmh.config import Positivity
from scmh.correspondence import Phi_bar, Psi_bar
from scmh.errors import (
    ConstructionError,
    DomainError,
    InfeasibleError,
    ShapeError,
)
from scmh.macaulay import (
    boundary,
    generalized_boundary,
    is_m_sequence,
    max_with_boundary_at_most,
)
from scmh.multicomplexes import (
    Metacomplex,
    Monomial,
    Multicomplex,
    compressed_monomials,
    is_shifted_multicomplex,
    monomials_of_degree,
    monomials_up_to,
    validate_metacomplex,
)

logger = logging.getLogger(__name__)

# Composition axioms, in the order they are checked
ERROR_NEGATIVE = "negative value"
ERROR_EXCHANGE = "exchange monotonicity violated"
ERROR_TOP_DEGREE = "top-degree value is not 1"
ERROR_BOUNDARY = "boundary growth violated"
ERROR_LOWER = "value below the h-vector bound"
ERROR_TOTAL = "values do not sum to r"

ERROR_SPACE = "composition space needs nvars >= 1, cap >= 1 and an M-sequence h"
ERROR_MISSING = "composition is missing monomials"
ERROR_REJECTED = "triangle is rejected"

# Theorem conditions
CONDITION_M_SEQUENCE = "a"
CONDITION_ROW_INEQUALITY = "b"
CONDITION_RHO = "c"

LABEL_ACCEPT = "ACCEPT"
LABEL_REJECT = "REJECT"


def pi_key(m: Monomial) -> tuple[int, ...]:
    """Sort key for the order with higher-index variables most significant.

    On two variables with cap 2 it runs 1, u1, u1^2, u2, u1*u2, u2^2.
    """
    return tuple(reversed(m))


@dataclass(frozen=True)
class CompositionSpace:
    """Monomials on u_1..u_nvars of degree at most cap, bounded below by h."""

    nvars: int
    cap: int
    h: tuple[int, ...]
    positivity: Positivity = Positivity.ZERO_ADMITTED

    def __post_init__(self) -> None:
        if self.nvars < 1 or self.cap < 1 or not is_m_sequence(self.h):
            raise DomainError(
                f"{ERROR_SPACE}: nvars={self.nvars}, cap={self.cap}, h={self.h}"
            )

    def h_at(self, ell: int) -> int:
        return self.h[ell] if ell < len(self.h) else 0

    def lower(self, ell: int) -> int:
        """Least admissible value for a monomial of degree cap - ell."""
        if self.positivity is Positivity.STRICT:
            return max(self.h_at(ell), 1)
        return self.h_at(ell)

    @cached_property
    def monomials(self) -> tuple[Monomial, ...]:
        """Every monomial of the space, increasing in the pi order."""
        return tuple(sorted(monomials_up_to(self.nvars, self.cap), key=pi_key))

    def ell(self, m: Monomial) -> int:
        return self.cap - sum(m)


@dataclass(frozen=True)
class Composition:
    """Values aligned with `space.monomials`."""

    space: CompositionSpace
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.space.monomials):
            raise ShapeError(
                f"{ERROR_MISSING}: {len(self.values)} of {len(self.space.monomials)}"
            )

    @classmethod
    def from_mapping(
        cls, space: CompositionSpace, q: Mapping[Monomial, int]
    ) -> "Composition":
        missing = [m for m in space.monomials if m not in q]
        if missing:
            raise ShapeError(f"{ERROR_MISSING}: {missing}")
        return cls(space=space, values=tuple(q[m] for m in space.monomials))

    @property
    def q(self) -> dict[Monomial, int]:
        return dict(zip(self.space.monomials, self.values, strict=True))

    def __getitem__(self, m: Monomial) -> int:
        return self.values[self.space.monomials.index(m)]

    @property
    def total(self) -> int:
        return sum(self.values)


def _up_exchanges(m: Monomial) -> Iterator[Monomial]:
    for i, e in enumerate(m):
        if e == 0:
            continue
        for j in range(i + 1, len(m)):
            moved = list(m)
            moved[i] -= 1
            moved[j] += 1
            yield tuple(moved)


def _times(m: Monomial, var: int) -> Monomial:
    return m[:var] + (m[var] + 1,) + m[var + 1 :]


def validate_composition(comp: Composition, r: int) -> tuple[bool, str | None]:
    """Check the five composition axioms.

    Args:
        comp: A fully assigned composition.
        r: The required total.

    Returns:
        (ok, diagnosis) where diagnosis names the first violated axiom.
    """
    space = comp.space
    q = comp.q
    for m, value in q.items():
        if value < 0:
            return False, f"{ERROR_NEGATIVE}: q{m}={value}"
    for m, value in q.items():
        for moved in _up_exchanges(m):
            if value > q[moved]:
                return False, f"{ERROR_EXCHANGE}: q{m}={value} > q{moved}={q[moved]}"
    for m, value in q.items():
        if sum(m) == space.cap and value != 1:
            return False, f"{ERROR_TOP_DEGREE}: q{m}={value}"
    for m, value in q.items():
        ell = space.ell(m)
        if ell == 0:
            continue
        shadow = boundary(value, ell)
        for var in range(space.nvars):
            above = _times(m, var)
            if shadow > q[above]:
                return False, (
                    f"{ERROR_BOUNDARY}: boundary of q{m}={value} is {shadow}"
                    f" > q{above}={q[above]}"
                )
    for m, value in q.items():
        bound = space.lower(space.ell(m))
        if value < bound:
            return False, f"{ERROR_LOWER}: q{m}={value} < {bound}"
    if comp.total != r:
        return False, f"{ERROR_TOTAL}: {comp.total} != {r}"
    return True, None


def sigma_top(comp: Composition) -> int:
    """Sum of the values on monomials divisible by the top variable."""
    return sum(v for m, v in zip(comp.space.monomials, comp.values) if m[-1] > 0)


def min_mass(space: CompositionSpace) -> int:
    """Least total of any composition; every r at or above it is feasible."""
    return sum(space.lower(space.ell(m)) for m in space.monomials)


def _check_feasible(space: CompositionSpace, r: int) -> None:
    least = min_mass(space)
    if r < least:
        raise InfeasibleError(
            f"no composition of {r} on nvars={space.nvars}, cap={space.cap}, "
            f"h={space.h}: least total is {least}"
        )


class _Search:
    """Depth-first search over compositions, assigning the largest monomial first.

    Every constraint on a monomial coming from an already assigned (larger)
    monomial is an upper bound, so lower bounds only come from the h-vector and
    the optional per-monomial floors.
    """

    def __init__(
        self,
        space: CompositionSpace,
        r: int,
        minimize: bool,
        floors: Mapping[Monomial, int] | None = None,
        caps: Mapping[Monomial, int] | None = None,
        top_cap: int | None = None,
    ):
        self.space = space
        self.r = r
        self.minimize = minimize
        self.top_cap = top_cap
        self.order = tuple(sorted(space.monomials, key=pi_key, reverse=True))
        index = {m: k for k, m in enumerate(self.order)}
        self.ups = [tuple(index[x] for x in _up_exchanges(m)) for m in self.order]
        self.mults = [
            tuple(index[_times(m, v)] for v in range(space.nvars))
            if sum(m) < space.cap
            else ()
            for m in self.order
        ]
        self.ells = [space.ell(m) for m in self.order]
        floors = floors or {}
        self.lows = [
            max(space.lower(ell), floors.get(m, 0))
            for m, ell in zip(self.order, self.ells)
        ]
        caps = caps or {}
        self.caps = [caps.get(m, r) for m in self.order]
        self.tops = [m[-1] > 0 for m in self.order]
        size = len(self.order)
        self.rest_low = [sum(self.lows[k:]) for k in range(size + 1)]
        self.rest_top_low = [
            sum(low for low, top in zip(self.lows[k:], self.tops[k:]) if top)
            for k in range(size + 1)
        ]
        self.incumbent: int | None = None
        self.nodes = 0

    def upper(self, k: int, values: Sequence[int]) -> int:
        if self.ells[k] == 0:
            return min(1, self.caps[k])
        hi = min(self.r, self.caps[k])
        for u in self.ups[k]:
            hi = min(hi, values[u])
        ceiling = min(values[x] for x in self.mults[k])
        return min(hi, max_with_boundary_at_most(ceiling, self.ells[k], self.r))

    def optimistic(self, k: int, values: list[int]) -> int:
        """Largest total the monomials from k on could still carry."""
        trial = list(values)
        total = 0
        for t in range(k, len(self.order)):
            trial[t] = self.upper(t, trial)
            total += trial[t]
        return total

    def walk(self) -> Iterator[tuple[int, ...]]:
        """Yield completions in pi order; with `minimize`, only improving ones."""
        values = [0] * len(self.order)
        yield from self._walk(0, values, 0, 0)

    def _walk(
        self, k: int, values: list[int], spent: int, top: int
    ) -> Iterator[tuple[int, ...]]:
        self.nodes += 1
        if self.top_cap is not None and top + self.rest_top_low[k] > self.top_cap:
            return
        if self.minimize and self.incumbent is not None:
            if top + self.rest_top_low[k] >= self.incumbent:
                return
        if k == len(self.order):
            if spent == self.r:
                yield tuple(values)
            return
        lo = self.lows[k]
        hi = min(self.upper(k, values), self.r - spent - self.rest_low[k + 1])
        if k == len(self.order) - 1:
            lo = max(lo, self.r - spent)
        candidates = range(lo, hi + 1)
        if self.minimize and not self.tops[k]:
            candidates = range(hi, lo - 1, -1)
        for value in candidates:
            values[k] = value
            if spent + value + self.optimistic(k + 1, values) < self.r:
                continue
            yield from self._walk(
                k + 1, values, spent + value, top + (value if self.tops[k] else 0)
            )
            if (
                self.minimize
                and self.incumbent is not None
                and top + self.rest_top_low[k] >= self.incumbent
            ):
                break
        values[k] = 0

    def to_composition(self, assigned: Sequence[int]) -> Composition:
        q = dict(zip(self.order, assigned, strict=True))
        return Composition.from_mapping(self.space, q)


def enumerate_compositions(space: CompositionSpace, r: int) -> Iterator[Composition]:
    """Every composition of r over the space, each exactly once."""
    if r < min_mass(space):
        return
    search = _Search(space, r, minimize=False)
    for assigned in search.walk():
        yield search.to_composition(assigned)


def _greedy_composition(space: CompositionSpace, r: int) -> Composition:
    """The step-by-step greedy: each value in increasing pi order is the largest
    p that leaves room for the later monomials.

    Later monomials of degree at least deg m are charged max(h, lowered boundary
    of p); later monomials of smaller degree are charged the largest value already
    fixed in their degree. The result is not always minimal.

    Raises:
        ConstructionError: if the greedy choice cannot be completed or the result
            violates an axiom.
    """
    order = space.monomials
    q: dict[Monomial, int] = {}
    spent = 0

    for k, m in enumerate(order):
        ell = space.ell(m)
        if ell == 0:
            q[m] = 1
            spent += 1
            continue

        # c[s] counts the later monomials of degree cap - s
        c = [0] * (space.cap + 1)
        for other in order[k + 1 :]:
            c[space.ell(other)] += 1

        fixed = 0
        for j in range(ell + 1, space.cap + 1):
            if c[j]:
                seen = [v for x, v in q.items() if space.ell(x) == j]
                fixed += c[j] * max(seen, default=space.lower(j))

        def needed(p: int) -> int:
            total = fixed
            for j in range(ell + 1):
                if c[ell - j]:
                    total += c[ell - j] * max(
                        space.lower(ell - j), generalized_boundary(p, ell, j)
                    )
            return total

        lo, hi = space.lower(ell), r - spent
        if lo + needed(lo) > hi:
            raise ConstructionError(
                f"greedy composition stuck at {m}: needs {lo + needed(lo)} of {hi}"
            )
        # invariant: lo fits, the answer lies in [lo, hi]
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if mid + needed(mid) <= r - spent:
                lo = mid
            else:
                hi = mid - 1
        q[m] = lo
        spent += lo

    comp = Composition.from_mapping(space, q)
    ok, diagnosis = validate_composition(comp, r)
    if not ok:
        raise ConstructionError(f"greedy composition is invalid: {diagnosis}")
    return comp


def regular_composition(space: CompositionSpace, r: int) -> Composition:
    """The minimal composition of r whose values, read in increasing pi order,
    are lexicographically greatest.

    Each value in increasing pi order is as large as a minimal completion allows.

    Raises:
        InfeasibleError: if r is below the least total of the space.
    """
    least = rho(space, r)
    search = _Search(space, r, minimize=False, top_cap=least)
    best: Composition | None = None
    for assigned in search.walk():
        comp = search.to_composition(assigned)
        if best is None or comp.values > best.values:
            best = comp
    logger.debug("regular composition: %d candidates visited", search.nodes)
    if best is None:
        raise ConstructionError(f"no composition of {r} reaches rho={least}")
    return best


def minimal_composition(space: CompositionSpace, r: int) -> Composition:
    """A composition of r with the least top-variable mass.

    Branch and bound, seeded with the greedy composition when it succeeds.

    Raises:
        InfeasibleError: if no composition of r exists.
    """
    _check_feasible(space, r)
    search = _Search(space, r, minimize=True)
    best: Composition | None = None
    try:
        best = _greedy_composition(space, r)
        search.incumbent = sigma_top(best)
    except ConstructionError as e:
        logger.debug(
            "no greedy seed for nvars=%d cap=%d: %s", space.nvars, space.cap, e
        )

    for assigned in search.walk():
        best = search.to_composition(assigned)
        search.incumbent = sigma_top(best)
        logger.debug("rho search: incumbent %d", search.incumbent)
    logger.debug("rho search visited %d nodes", search.nodes)

    if best is None:
        raise InfeasibleError(f"no composition of {r} found")
    return best


def rho(space: CompositionSpace, r: int) -> int:
    """Least top-variable mass over all compositions of r.

    Raises:
        InfeasibleError: if no composition of r exists.
    """
    return sigma_top(minimal_composition(space, r))


@dataclass
class Verdict:
    """Outcome of checking a triangle against the three conditions."""

    m_sequences: bool | None = None
    row_inequalities: bool | None = None
    rho_bounds: bool | None = None

    condition: str | None = None
    location: tuple[int, int] | None = None
    errors: list[str] | None = None

    @property
    def accepted(self) -> bool:
        return all(
            check is True
            for check in (self.m_sequences, self.row_inequalities, self.rho_bounds)
        )

    def reject(self, condition: str, i: int, j: int, message: str) -> "Verdict":
        self.condition = condition
        self.location = (i, j)
        self.errors = [*(self.errors or []), message]
        return self

    def __str__(self) -> str:
        if self.accepted:
            return LABEL_ACCEPT
        if self.location is None:
            return f"{LABEL_REJECT} condition={self.condition}"
        i, j = self.location
        return f"{LABEL_REJECT} condition={self.condition} at (i={i},j={j})"


def _first_m_violation(row: Sequence[int]) -> int | None:
    if row[0] != 1:
        return 0
    for ell in range(1, len(row)):
        if row[ell] < 0 or boundary(row[ell], ell) > row[ell - 1]:
            return ell
    return None


def check_necessary_conditions(t: Triangle) -> Verdict:
    """Rows are M-sequences and each entry dominates the prefix sums below it."""
    verdict = Verdict()
    for i, row in enumerate(t.rows):
        j = _first_m_violation(row)
        if j is not None:
            verdict.m_sequences = False
            return verdict.reject(
                CONDITION_M_SEQUENCE, i, j, f"row {i} is not an M-sequence: {row}"
            )
    verdict.m_sequences = True

    for i in range(t.d):
        for j in range(i + 1):
            below = sum(t.entry(i + 1, ell) for ell in range(j + 1))
            if t.entry(i, j) < below:
                verdict.row_inequalities = False
                return verdict.reject(
                    CONDITION_ROW_INEQUALITY,
                    i,
                    j,
                    f"h~[{i}][{j}]={t.entry(i, j)} < {below}",
                )
    verdict.row_inequalities = True
    return verdict


def _space_for(
    t: Triangle, i: int, j: int, positivity: Positivity
) -> CompositionSpace:
    return CompositionSpace(
        nvars=t.d - i, cap=j, h=t.rows[t.d], positivity=positivity
    )


def check_htriangle(
    t: Triangle, positivity: Positivity = Positivity.ZERO_ADMITTED
) -> Verdict:
    """Decide whether `t` is the h~-triangle of a sequentially Cohen-Macaulay complex.

    Args:
        t: The triangle to check.
        positivity: Whether compositions may take the value 0.

    Returns:
        A Verdict; on rejection it names the first failing condition and entry.
    """
    verdict = check_necessary_conditions(t)
    if verdict.condition is not None:
        return verdict

    for i in range(1, t.d):
        for j in range(1, i + 1):
            space = _space_for(t, i, j, positivity)
            r = t.entry(i, j)
            try:
                value = rho(space, r)
            except InfeasibleError as e:
                verdict.rho_bounds = False
                return verdict.reject(CONDITION_RHO, i, j, str(e))
            if value > t.entry(i, j - 1):
                verdict.rho_bounds = False
                return verdict.reject(
                    CONDITION_RHO,
                    i,
                    j,
                    f"rho={value} > h~[{i}][{j - 1}]={t.entry(i, j - 1)}",
                )
    verdict.rho_bounds = True
    return verdict


def _witness_bounds(
    t: Triangle,
    i: int,
    j: int,
    space: CompositionSpace,
    chosen: Mapping[tuple[int, int], Composition],
) -> tuple[dict[Monomial, int], dict[Monomial, int]]:
    """Floors and caps tying the (i, j) composition to those already chosen.

    Caps keep Q_{i,j} divisible into Q_{i,j-1}, through the lower block by
    Macaulay's boundary and through each upper variable by prefix inclusion.
    Floors keep the cone over level i + 1 inside level i.
    """
    previous = chosen.get((i, j - 1))
    floors: dict[Monomial, int] = {}
    caps: dict[Monomial, int] = {}
    r = t.entry(i, j)
    for m in space.monomials:
        ell = space.ell(m)
        cap = r
        if ell > 0:
            below = previous[m] if previous else 1
            cap = min(cap, max_with_boundary_at_most(below, ell, r))
        for var, e in enumerate(m):
            if e:
                divided = m[:var] + (e - 1,) + m[var + 1 :]
                cap = min(cap, previous[divided] if previous else 1)
        caps[m] = cap

        height, rest = m[-1], m[:-1]
        if height == j:
            floors[m] = 1
        elif i + 1 == t.d:
            floors[m] = t.entry(t.d, j - height)
        else:
            floors[m] = chosen[(i + 1, j - height)][rest]
    return floors, caps


def witness_compositions(
    t: Triangle, positivity: Positivity = Positivity.ZERO_ADMITTED
) -> dict[tuple[int, int], Composition] | None:
    """Choose one composition per (i, j), 1 <= j <= i <= d - 1, that assemble into
    a metacomplex, or None when no such family exists.

    Levels are filled from i = d - 1 down, degrees from j = 1 up; a choice that
    leaves a later slot empty is undone.
    """
    slots = [(i, j) for i in range(t.d - 1, 0, -1) for j in range(1, i + 1)]
    chosen: dict[tuple[int, int], Composition] = {}
    nodes = 0

    def extend(k: int) -> bool:
        nonlocal nodes
        if k == len(slots):
            return True
        i, j = slots[k]
        space = _space_for(t, i, j, positivity)
        floors, caps = _witness_bounds(t, i, j, space, chosen)
        search = _Search(space, t.entry(i, j), minimize=False, floors=floors, caps=caps)
        for assigned in search.walk():
            nodes += 1
            chosen[(i, j)] = search.to_composition(assigned)
            if extend(k + 1):
                return True
        chosen.pop((i, j), None)
        return False

    found = extend(0)
    logger.debug("witness search tried %d compositions", nodes)
    return chosen if found else None


def build_witness(
    t: Triangle, positivity: Positivity = Positivity.ZERO_ADMITTED
) -> SimplicialComplex:
    """Build a shifted complex whose h~-triangle is `t`.

    The top level is the compressed multicomplex of the last row. Level i in
    degree j is assembled from a composition over the d - i upper variables;
    each upper monomial m takes the first q^m monomials of the complementary
    degree on the lower block.

    Raises:
        DomainError: if the triangle is rejected.
        ConstructionError: if no family of compositions fits together or an
            intermediate object fails validation.
    """
    verdict = check_htriangle(t, positivity)
    if not verdict.accepted:
        raise DomainError(f"{ERROR_REJECTED}: {verdict}")

    d = t.d
    entries = [x for row in t.rows for x in row]
    n = d + max(1, max(entries))
    lower_vars = n - d
    logger.debug("building witness for d=%d on %d vertices", d, n)

    try:
        levels: list[Multicomplex] = [compressed_monomials(t.rows[d], lower_vars)]
    except DomainError as e:
        raise ConstructionError(f"top level: {e}") from e

    family = witness_compositions(t, positivity)
    if family is None:
        raise ConstructionError(f"no compatible compositions for {t.rows}")

    for i in range(d - 1, -1, -1):
        upper_vars = d - i
        members: set[Monomial] = {(0,) * (n - i)}
        for j in range(1, i + 1):
            for m, count in family[(i, j)].q.items():
                available = monomials_of_degree(lower_vars, j - sum(m))
                if count > len(available):
                    raise ConstructionError(
                        f"level {i} degree {j}: q{m}={count} exceeds {len(available)}"
                    )
                members.update(p + m for p in available[:count])
        try:
            level = Multicomplex(
                nvars=lower_vars + upper_vars, members=frozenset(members)
            )
        except DomainError as e:
            raise ConstructionError(f"level {i}: {e}") from e
        if not is_shifted_multicomplex(level):
            raise ConstructionError(f"level {i} is not shifted")
        levels.insert(0, level)

    mc = Metacomplex(n=n, levels=tuple(levels))
    ok, diagnosis = validate_metacomplex(mc)
    if not ok:
        raise ConstructionError(f"witness metacomplex is invalid: {diagnosis}")

    witness = relabel_to_support(Phi_bar(mc))
    if htriangle_tilde(witness) != t:
        raise ConstructionError(
            f"witness h~-triangle {htriangle_tilde(witness).rows} != {t.rows}"
        )
    return witness


def necessity_compositions(c: SimplicialComplex) -> dict[tuple[int, int], Composition]:
    """Count the degree-j monomials of each level by their upper-block part.

    For every 1 <= j <= i <= d - 1 the counts form a composition of h~[i][j]
    whose top mass is at most h~[i][j - 1].
    """
    if not is_shifted(c):
        raise DomainError("complex is not shifted")
    mc = Psi_bar(c)
    d = c.d
    last = htriangle_tilde(c).rows[d]
    found: dict[tuple[int, int], Composition] = {}
    for i in range(1, d):
        level = mc.levels[i]
        start, stop = c.n - d, c.n - i
        for j in range(1, i + 1):
            space = CompositionSpace(nvars=d - i, cap=j, h=last)
            counts = dict.fromkeys(space.monomials, 0)
            for mono in level.members_of_degree(j):
                counts[mono[start:stop]] += 1
            found[(i, j)] = Composition.from_mapping(space, counts)
    return found
