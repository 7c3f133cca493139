"""Lattice paths and the correspondence between shifted complexes and
shifted multicomplexes.

A path from (0, 0) to (r, a) is a word over {N, E}. Its N positions give an
a-subset of [r + a]; its N steps taken at x = 0..r-1 give a monomial on
w_1..w_r. N steps in the last column x = r carry no variable.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import accumulate, combinations

from scmh.complexes import Face, SimplicialComplex, is_shifted, pure_skeleton
from scmh.errors import DomainError
from scmh.multicomplexes import (
    Metacomplex,
    Monomial,
    Multicomplex,
    is_shifted_multicomplex,
)

STEPS = frozenset("NE")

ERROR_BAD_WORD = "lattice path words use only N and E"
ERROR_SUBSET = "expected an a-subset of [r + a]"
ERROR_DEGREE = "monomial degree exceeds a"
ERROR_ENDPOINTS = "paths end at different points"
ERROR_NOT_SHIFTED = "input is not shifted"
ERROR_NOT_PURE = "complex is not pure"


@dataclass(frozen=True)
class LatticePath:
    word: str

    def __post_init__(self) -> None:
        if not set(self.word) <= STEPS:
            raise DomainError(f"{ERROR_BAD_WORD}: {self.word!r}")

    @property
    def r(self) -> int:
        return self.word.count("E")

    @property
    def a(self) -> int:
        return self.word.count("N")

    @property
    def heights(self) -> tuple[int, ...]:
        """Height after each step."""
        return tuple(accumulate(1 if s == "N" else 0 for s in self.word))

    def __str__(self) -> str:
        return self.word


def nu(path: LatticePath) -> Face:
    """1-based positions of the N steps."""
    return tuple(k + 1 for k, s in enumerate(path.word) if s == "N")


def nu_inverse(subset: Iterable[int], r: int, a: int) -> LatticePath:
    chosen = set(subset)
    if len(chosen) != a or any(v < 1 or v > r + a for v in chosen):
        raise DomainError(f"{ERROR_SUBSET}: {sorted(chosen)} with r={r}, a={a}")
    word = "".join("N" if k in chosen else "E" for k in range(1, r + a + 1))
    return LatticePath(word)


def lambda_(path: LatticePath) -> Monomial:
    """Exponent of w_i is the number of N steps at x = i - 1."""
    exps = [0] * path.r
    x = 0
    for s in path.word:
        if s == "E":
            x += 1
        elif x < path.r:
            exps[x] += 1
    return tuple(exps)


def lambda_inverse(m: Sequence[int], r: int, a: int) -> LatticePath:
    """The path whose leftover a - deg m north steps sit in the last column."""
    if len(m) != r:
        raise DomainError(f"monomial {tuple(m)} is not on {r} variables")
    if sum(m) > a:
        raise DomainError(f"{ERROR_DEGREE}: {tuple(m)}, a={a}")
    return LatticePath("".join("N" * e + "E" for e in m) + "N" * (a - sum(m)))


def path_leq(first: LatticePath, second: LatticePath) -> bool:
    """True iff `first` never goes above `second`."""
    if (first.r, first.a) != (second.r, second.a):
        raise DomainError(f"{ERROR_ENDPOINTS}: {first} and {second}")
    return all(x <= y for x, y in zip(first.heights, second.heights, strict=True))


def phi(m: Sequence[int], a: int) -> Face:
    return nu(lambda_inverse(m, len(m), a))


def psi(subset: Iterable[int], r: int, a: int) -> Monomial:
    return lambda_(nu_inverse(subset, r, a))


def lattice_paths(r: int, a: int) -> list[LatticePath]:
    """Every path from (0, 0) to (r, a), words sorted with E before N."""
    paths = [nu_inverse(s, r, a) for s in combinations(range(1, r + a + 1), a)]
    return sorted(paths, key=lambda p: p.word)


def is_order_ideal(paths: Iterable[LatticePath], r: int, a: int) -> bool:
    """True iff every path lying below a member is itself a member."""
    members = {p.word for p in paths}
    everything = lattice_paths(r, a)
    for word in members:
        top = LatticePath(word)
        for other in everything:
            if other.word not in members and path_leq(other, top):
                return False
    return True


def is_shifted_set_family(sets: Iterable[Iterable[int]], n: int) -> bool:
    """Closure under replacing an element by any larger one outside the set."""
    family = {frozenset(s) for s in sets}
    for face in family:
        for old in face:
            for new in range(old + 1, n + 1):
                if new not in face and (face - {old}) | {new} not in family:
                    return False
    return True


def Phi(m: Multicomplex, a: int) -> SimplicialComplex:
    """Pure shifted (a-1)-complex on [r + a] with facets phi(mono), mono in m."""
    if not is_shifted_multicomplex(m):
        raise DomainError(ERROR_NOT_SHIFTED)
    if m.degree > a:
        raise DomainError(f"{ERROR_DEGREE}: degree {m.degree}, a={a}")
    return SimplicialComplex.from_faces(
        m.nvars + a, (phi(mono, a) for mono in m.members)
    )


def Psi(c: SimplicialComplex) -> Multicomplex:
    """Inverse of Phi on pure shifted complexes; f(Psi(c)) is the h-vector of c."""
    if not c.is_pure:
        raise DomainError(ERROR_NOT_PURE)
    if not is_shifted(c):
        raise DomainError(ERROR_NOT_SHIFTED)
    a = c.d
    r = c.n - a
    return Multicomplex(
        nvars=r, members=frozenset(psi(facet, r, a) for facet in c.facets)
    )


def Psi_bar(c: SimplicialComplex) -> Metacomplex:
    """Level i is Psi of the pure (i-1)-skeleton, on n - i variables."""
    if not is_shifted(c):
        raise DomainError(ERROR_NOT_SHIFTED)
    return Metacomplex(
        n=c.n,
        levels=tuple(Psi(pure_skeleton(c, i - 1)) for i in range(c.d + 1)),
    )


def Phi_bar(mc: Metacomplex) -> SimplicialComplex:
    """Union of Phi(M^[i], i) over the levels, reduced to maximal faces."""
    if not mc.is_shifted:
        raise DomainError(ERROR_NOT_SHIFTED)
    faces: list[Face] = []
    for i, level in enumerate(mc.levels):
        faces.extend(Phi(level, i).facets)
    return SimplicialComplex.from_faces(mc.n, faces)
