"""Monomials, multicomplexes, cones and metacomplexes.

A monomial on w_1..w_r is its exponent vector, a tuple of length r. The unit
monomial is the all-zero tuple.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from scmh.complexes import Triangle
from scmh.errors import DomainError
from scmh.macaulay import is_m_sequence

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]

ERROR_NOT_CLOSED = "multicomplex is not closed under divisibility"
ERROR_WRONG_VARS = "monomial has the wrong number of variables"
ERROR_DEGREE_CAP = "degree cap violated"
ERROR_LEVEL_VARS = "level has the wrong number of variables"
ERROR_CONE = "cone containment violated"
ERROR_NOT_M_SEQUENCE = "not an M-sequence"
ERROR_TOO_FEW_MONOMIALS = "not enough monomials of this degree"


def degree(m: Monomial) -> int:
    return sum(m)


def unit(nvars: int) -> Monomial:
    return (0,) * nvars


def revlex_key(m: Monomial) -> tuple[int, ...]:
    """Revlex sort key: at the lowest variable index where two monomials differ,
    the smaller exponent comes first."""
    return m


def monomials_of_degree(nvars: int, deg: int) -> list[Monomial]:
    """All monomials of degree `deg` on `nvars` variables, in revlex order."""
    if deg < 0:
        return []
    if nvars == 0:
        return [()] if deg == 0 else []
    found = []
    for choice in combinations_with_replacement(range(nvars), deg):
        exps = [0] * nvars
        for var in choice:
            exps[var] += 1
        found.append(tuple(exps))
    return sorted(found, key=revlex_key)


def monomials_up_to(nvars: int, cap: int) -> list[Monomial]:
    return [m for k in range(cap + 1) for m in monomials_of_degree(nvars, k)]


def divisors(m: Monomial) -> Iterable[Monomial]:
    return product(*(range(e + 1) for e in m))


@dataclass(frozen=True)
class Multicomplex:
    """A finite set of monomials closed under divisibility."""

    nvars: int
    members: frozenset[Monomial]

    def __post_init__(self) -> None:
        for m in self.members:
            if len(m) != self.nvars:
                raise DomainError(f"{ERROR_WRONG_VARS}: {m} on {self.nvars}")
            for var, e in enumerate(m):
                if e < 0:
                    raise DomainError(f"negative exponent in {m}")
                if e > 0:
                    lower = m[:var] + (e - 1,) + m[var + 1 :]
                    if lower not in self.members:
                        raise DomainError(f"{ERROR_NOT_CLOSED}: {m} without {lower}")

    @classmethod
    def from_generators(
        cls, nvars: int, gens: Iterable[Sequence[int]]
    ) -> "Multicomplex":
        """Close a list of monomials under divisibility."""
        members: set[Monomial] = set()
        for g in gens:
            if len(g) != nvars:
                raise DomainError(f"{ERROR_WRONG_VARS}: {tuple(g)} on {nvars}")
            members.update(divisors(tuple(g)))
        return cls(nvars=nvars, members=frozenset(members))

    @property
    def degree(self) -> int:
        """Largest degree of a member, -1 when empty."""
        return max((sum(m) for m in self.members), default=-1)

    def members_of_degree(self, deg: int) -> list[Monomial]:
        return sorted((m for m in self.members if sum(m) == deg), key=revlex_key)

    def __contains__(self, item: object) -> bool:
        return item in self.members

    def __len__(self) -> int:
        return len(self.members)


def mc_f_vector(m: Multicomplex) -> tuple[int, ...]:
    """Member counts per degree, starting at degree 0."""
    counts = [0] * (m.degree + 1)
    for mono in m.members:
        counts[sum(mono)] += 1
    return tuple(counts)


def is_shifted_multicomplex(m: Multicomplex) -> bool:
    """True iff u_j * (mono / u_i) stays inside for every member and i < j."""
    for mono in m.members:
        for i, e in enumerate(mono):
            if e == 0:
                continue
            for j in range(i + 1, m.nvars):
                moved = list(mono)
                moved[i] -= 1
                moved[j] += 1
                if tuple(moved) not in m.members:
                    return False
    return True


def a_cone(m: Multicomplex, a: int) -> Multicomplex:
    """Adjoin a new top variable w_{r+1}: {mono * w_{r+1}^l : deg mono + l < a}."""
    if a < 1:
        raise DomainError(f"cone height must be positive, got {a}")
    if m.degree > a:
        raise DomainError(f"{ERROR_DEGREE_CAP}: degree {m.degree} > {a}")
    members = {
        mono + (ell,)
        for mono in m.members
        for ell in range(a - sum(mono))
    }
    return Multicomplex(nvars=m.nvars + 1, members=frozenset(members))


def compressed_monomials(f: Sequence[int], nvars: int) -> Multicomplex:
    """The first f_j degree-j monomials in revlex order, for every j."""
    if not is_m_sequence(f):
        raise DomainError(f"{ERROR_NOT_M_SEQUENCE}: {tuple(f)}")
    members: set[Monomial] = set()
    for deg, count in enumerate(f):
        available = monomials_of_degree(nvars, deg)
        if count > len(available):
            raise DomainError(
                f"{ERROR_TOO_FEW_MONOMIALS}: {count} of degree {deg} on {nvars}"
            )
        members.update(available[:count])
    return Multicomplex(nvars=nvars, members=frozenset(members))


@dataclass(frozen=True)
class Metacomplex:
    """Levels M^[0..d]; level i lives on n - i variables with degrees at most i."""

    n: int
    levels: tuple[Multicomplex, ...]

    @property
    def d(self) -> int:
        return len(self.levels) - 1

    @property
    def is_shifted(self) -> bool:
        return all(is_shifted_multicomplex(level) for level in self.levels)


def metacomplex_from_levels(
    n: int, levels: Sequence[Iterable[Sequence[int]]]
) -> Metacomplex:
    """Build a metacomplex from generator lists, level i on n - i variables."""
    return Metacomplex(
        n=n,
        levels=tuple(
            Multicomplex.from_generators(n - i, gens) for i, gens in enumerate(levels)
        ),
    )


def validate_metacomplex(mc: Metacomplex) -> tuple[bool, str | None]:
    """Check variable counts, the degree cap and cone containment level by level.

    Returns:
        (ok, diagnosis) where diagnosis names the first violated axiom.
    """
    for i, level in enumerate(mc.levels):
        if level.nvars != mc.n - i:
            return False, f"{ERROR_LEVEL_VARS}: level {i} has {level.nvars}"
        if level.degree > i:
            return False, f"{ERROR_DEGREE_CAP}: level {i} reaches {level.degree}"
    for i in range(1, mc.d + 1):
        cone = a_cone(mc.levels[i], i)
        missing = cone.members - mc.levels[i - 1].members
        if missing:
            first = min(missing, key=revlex_key)
            return False, (
                f"{ERROR_CONE}: level {i} cone has {first} outside level {i - 1}"
            )
    return True, None


def f_triangle(mc: Metacomplex) -> Triangle:
    """Row i is the f-vector of level i, padded with zeros to length i + 1."""
    rows = []
    for i, level in enumerate(mc.levels):
        f = list(mc_f_vector(level))
        if len(f) > i + 1:
            raise DomainError(f"{ERROR_DEGREE_CAP}: level {i} reaches {level.degree}")
        rows.append(f + [0] * (i + 1 - len(f)))
    return Triangle.from_rows(rows)
