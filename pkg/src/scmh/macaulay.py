"""Exact binomial calculus: l-representations, Macaulay boundaries, M-sequences."""

from collections.abc import Sequence
from dataclasses import dataclass
from math import comb

from scmh.errors import DomainError

ERROR_NEGATIVE_TOP = "binomial top index must be non-negative"
ERROR_NONPOSITIVE = "l-representation needs p >= 1 and ell >= 1"
ERROR_J_RANGE = "generalized boundary needs 0 <= j <= ell"


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient, 0 when k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"{ERROR_NEGATIVE_TOP}: n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class LRepresentation:
    """The greedy expansion p = C(a_ell, ell) + C(a_{ell-1}, ell-1) + ... + C(a_e, e).

    `terms` holds the pairs (a_k, k) with k running ell, ell-1, ..., e.
    """

    ell: int
    terms: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return sum(binomial(a, k) for a, k in self.terms)

    @property
    def e(self) -> int:
        """The lowest index in the expansion."""
        return self.terms[-1][1]


def l_representation(p: int, ell: int) -> LRepresentation:
    """Return the unique ell-representation of a positive integer p."""
    if p < 1 or ell < 1:
        raise DomainError(f"{ERROR_NONPOSITIVE}: p={p}, ell={ell}")

    terms: list[tuple[int, int]] = []
    remaining = p
    k = ell
    while remaining > 0:
        # C(k, k) = 1 <= remaining, so a_k >= k always holds
        a = k
        while comb(a + 1, k) <= remaining:
            a += 1
        terms.append((a, k))
        remaining -= comb(a, k)
        k -= 1
    return LRepresentation(ell=ell, terms=tuple(terms))


def generalized_boundary(p: int, ell: int, j: int) -> int:
    """Evaluate the lowered sum C(a_ell - j, ell - j) + ... + C(a_e - j, e - j).

    Terms whose lower index e - j is negative contribute 0. The value is a lower
    bound on the number of degree ell - j monomials in a multicomplex holding p
    monomials of degree ell.
    """
    if j < 0 or j > ell:
        raise DomainError(f"{ERROR_J_RANGE}: ell={ell}, j={j}")
    if p == 0:
        return 0
    if j == 0:
        return p
    rep = l_representation(p, ell)
    return sum(binomial(a - j, k - j) for a, k in rep.terms if k >= j)


def boundary(p: int, ell: int) -> int:
    """Macaulay's boundary of p at level ell, with the convention boundary(0) = 0."""
    if ell < 1:
        raise DomainError(f"{ERROR_NONPOSITIVE}: ell={ell}")
    return generalized_boundary(p, ell, 1)


def max_with_boundary_at_most(bound: int, ell: int, limit: int) -> int:
    """Largest p in [0, limit] with boundary(p, ell) <= bound, or -1 if none.

    boundary is non-decreasing in p, so the admissible values form an interval
    starting at 0.
    """
    if limit < 0 or bound < 0:
        return -1
    if boundary(limit, ell) <= bound:
        return limit
    lo, hi = 0, limit
    # invariant: boundary(lo) <= bound < boundary(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if boundary(mid, ell) <= bound:
            lo = mid
        else:
            hi = mid
    return lo


def is_m_sequence(f: Sequence[int]) -> bool:
    """Check f_0 = 1 and boundary(f_ell, ell) <= f_{ell-1} for every ell >= 1."""
    if not f or f[0] != 1:
        return False
    if any(x < 0 for x in f):
        return False
    return all(boundary(f[ell], ell) <= f[ell - 1] for ell in range(1, len(f)))


def is_cm_h_vector(h: Sequence[int], n: int) -> bool:
    """Macaulay-Stanley criterion: an M-sequence with h_1 <= n - d, d = len(h) - 1."""
    if not is_m_sequence(h):
        return False
    d = len(h) - 1
    if d == 0:
        return n >= 0
    return h[1] <= n - d
