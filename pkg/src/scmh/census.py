"""Exhaustive small-case enumeration and the verification suites built on it."""

import json
import logging
from collections.abc import Callable, Iterator, Sequence
from dataclasses import asdict, dataclass, field
from itertools import combinations
from multiprocessing import Pool
from typing import TypeVar

from scmh.betti import (
    betti_from_complex,
    betti_polynomial,
    betti_table,
    check_generator_array,
    evaluate,
    is_sqfree_strongly_stable,
    m_array,
    mu_array,
    stanley_reisner_ideal,
)
from scmh.characterization import (
    CompositionSpace,
    build_witness,
    check_htriangle,
    check_necessary_conditions,
    enumerate_compositions,
    min_mass,
    necessity_compositions,
    regular_composition,
    sigma_top,
    validate_composition,
)
from scmh.complexes import (
    Face,
    SimplicialComplex,
    Triangle,
    alexander_dual,
    h_from_htilde,
    h_triangle_shelling,
    h_vector,
    htriangle_tilde,
    is_shifted,
    skeleton,
)
from scmh.config import DEFAULT_MAX_N, Positivity, Settings
from scmh.correspondence import (
    Phi,
    Phi_bar,
    Psi,
    Psi_bar,
    is_order_ideal,
    is_shifted_set_family,
    lambda_,
    lattice_paths,
    nu,
    phi,
    psi,
)
from scmh.errors import (
    BoundsError,
    ConstructionError,
    DomainError,
    InfeasibleError,
    ScmhError,
)
from scmh.macaulay import (
    binomial,
    is_cm_h_vector,
    is_m_sequence,
    max_with_boundary_at_most,
)
from scmh.multicomplexes import (
    Monomial,
    Multicomplex,
    a_cone,
    f_triangle,
    is_shifted_multicomplex,
    mc_f_vector,
    monomials_up_to,
    revlex_key,
    validate_metacomplex,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")

ORDER_LABEL = "pi: higher-index variables most significant"

REPORT_FORMATS = ("text", "json", "markdown")


def _down_sets(preds: Sequence[Sequence[int]]) -> Iterator[list[int]]:
    """Every down-set containing item 0, for items listed in a linear extension.

    `preds[k]` lists the items that must be present for item k to be added.
    """
    size = len(preds)
    chosen = [False] * size

    def walk(k: int) -> Iterator[list[int]]:
        if k == size:
            yield [t for t in range(size) if chosen[t]]
            return
        if k > 0:
            yield from walk(k + 1)
        if all(chosen[p] for p in preds[k]):
            chosen[k] = True
            yield from walk(k + 1)
            chosen[k] = False

    if size:
        yield from walk(0)


def _indexed_preds(
    items: Sequence[T], below: Callable[[T], Iterator[T]]
) -> list[tuple[int, ...]]:
    index = {item: k for k, item in enumerate(items)}
    return [tuple(index[x] for x in below(item) if x in index) for item in items]


def _face_predecessors(face: Face, n: int) -> Iterator[Face]:
    members = set(face)
    for v in face:
        yield tuple(sorted(members - {v}))
        if v + 1 <= n and v + 1 not in members:
            yield tuple(sorted((members - {v}) | {v + 1}))


def enumerate_shifted(
    n: int, dmax: int, max_n: int = DEFAULT_MAX_N
) -> Iterator[SimplicialComplex]:
    """Every nonvoid shifted complex on [n] with faces of size at most dmax.

    Each complex appears once; the order is deterministic.

    Raises:
        BoundsError: unless 0 <= dmax <= n <= max_n.
    """
    if not 0 <= dmax <= n <= max_n:
        raise BoundsError(f"need 0 <= dmax <= n <= {max_n}, got n={n}, dmax={dmax}")
    faces = [
        face
        for size in range(dmax + 1)
        for face in sorted(combinations(range(1, n + 1), size), key=lambda f: -sum(f))
    ]
    preds = _indexed_preds(faces, lambda f: _face_predecessors(f, n))
    for chosen in _down_sets(preds):
        yield SimplicialComplex.from_faces(n, (faces[k] for k in chosen))


def enumerate_complexes(
    n: int, max_n: int = DEFAULT_MAX_N
) -> Iterator[SimplicialComplex]:
    """Every nonvoid simplicial complex on [n], shifted or not.

    Raises:
        BoundsError: unless 0 <= n <= max_n.
    """
    if not 0 <= n <= max_n:
        raise BoundsError(f"need 0 <= n <= {max_n}, got n={n}")
    faces = [
        face for size in range(n + 1) for face in combinations(range(1, n + 1), size)
    ]
    preds = _indexed_preds(
        faces, lambda f: (f[:k] + f[k + 1 :] for k in range(len(f)))
    )
    for chosen in _down_sets(preds):
        yield SimplicialComplex.from_faces(n, (faces[k] for k in chosen))


def _monomial_predecessors(m: Monomial) -> Iterator[Monomial]:
    for var, e in enumerate(m):
        if e == 0:
            continue
        yield m[:var] + (e - 1,) + m[var + 1 :]
        if var + 1 < len(m):
            moved = list(m)
            moved[var] -= 1
            moved[var + 1] += 1
            yield tuple(moved)


def enumerate_shifted_multicomplexes(r: int, a: int) -> Iterator[Multicomplex]:
    """Every nonempty shifted multicomplex on r variables with degrees at most a."""
    monomials = sorted(
        monomials_up_to(r, a), key=lambda m: (sum(m), revlex_key(m))
    )
    preds = _indexed_preds(monomials, _monomial_predecessors)
    for chosen in _down_sets(preds):
        yield Multicomplex(nvars=r, members=frozenset(monomials[k] for k in chosen))


def m_sequences(
    length: int, h1_max: int, total_max: int | None = None
) -> Iterator[tuple[int, ...]]:
    """M-sequences (h_0, ..., h_{length-1}) with h_1 <= h1_max, and with entries
    summing to at most total_max when it is given."""

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        ell = len(prefix)
        limit = binomial(h1_max + ell - 1, ell) if ell > 1 else h1_max
        top = max_with_boundary_at_most(prefix[-1], ell, limit)
        for value in range(top + 1):
            if total_max is not None and sum(prefix) + value > total_max:
                break
            yield from extend(prefix + (value,))

    if length >= 1:
        yield from extend((1,))


def complex_key(c: SimplicialComplex) -> tuple[int, tuple[tuple[int, Face], ...]]:
    return (c.n, tuple((len(f), f) for f in c.facets))


@dataclass(frozen=True)
class CensusRecord:
    """A shifted complex with the invariants derived from it."""

    complex: SimplicialComplex
    htilde: Triangle
    h: Triangle
    metacomplex: Triangle
    dual: tuple[Face, ...]


def census_record(c: SimplicialComplex) -> CensusRecord:
    htilde = htriangle_tilde(c)
    return CensusRecord(
        complex=c,
        htilde=htilde,
        h=h_from_htilde(htilde),
        metacomplex=f_triangle(Psi_bar(c)),
        dual=alexander_dual(c).facets,
    )


def census(
    n_max: int,
    dmax: int | None = None,
    jobs: int = 1,
    max_n: int = DEFAULT_MAX_N,
) -> list[CensusRecord]:
    """Records for every shifted complex on [n], n = 0..n_max, in canonical order."""
    complexes = [
        c
        for n in range(n_max + 1)
        for c in enumerate_shifted(n, n if dmax is None else min(dmax, n), max_n)
    ]
    logger.debug("census: %d complexes up to n=%d", len(complexes), n_max)
    if jobs > 1:
        with Pool(processes=jobs) as pool:
            records = pool.map(census_record, complexes, chunksize=64)
    else:
        records = [census_record(c) for c in complexes]
    return sorted(records, key=lambda rec: complex_key(rec.complex))


def bounded_triangles(dmax: int, entry_max: int) -> Iterator[Triangle]:
    """Triangles with d <= dmax and entries <= entry_max that pass the
    necessary conditions; every other triangle is rejected outright."""
    for d in range(dmax + 1):
        for last in m_sequences(d + 1, entry_max):
            if max(last) > entry_max:
                continue
            yield from _fill_upwards(d, [last], entry_max)


def _fill_upwards(
    d: int, below: list[tuple[int, ...]], entry_max: int
) -> Iterator[Triangle]:
    i = d - len(below)
    if i < 0:
        t = Triangle.from_rows(below)
        if check_necessary_conditions(t).condition is None:
            yield t
        return
    under = below[0]
    floors = [sum(under[: j + 1]) for j in range(i + 1)]
    for row in m_sequences(i + 1, entry_max):
        if max(row) <= entry_max and all(x >= f for x, f in zip(row, floors)):
            yield from _fill_upwards(d, [row, *below], entry_max)


@dataclass
class RunReport:
    """Outcome of one verification suite."""

    suite: str
    instances: int = 0
    positivity: str = Positivity.ZERO_ADMITTED.value
    order: str = ORDER_LABEL
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)


def _start(name: str, settings: Settings) -> RunReport:
    logger.info("suite %s: starting", name)
    return RunReport(suite=name, positivity=settings.positivity.value)


def _finish(report: RunReport) -> RunReport:
    logger.info(
        "suite %s: %d instances, %d failures",
        report.suite,
        report.instances,
        len(report.failures),
    )
    return report


def suite_worked_cases(settings: Settings) -> RunReport:
    """Replay every shipped worked case."""
    from scmh.catalog import load_all_cases, run_case

    report = _start("worked-cases", settings)
    for record in load_all_cases():
        report.instances += 1
        ok, message = run_case(record, settings.positivity)
        if not ok:
            report.fail(f"{record['case_id']}: {message}")
    return _finish(report)


def suite_bijections(
    settings: Settings, path_max: int = 10, ideal_max: int = 7, n_max: int = 6
) -> RunReport:
    """phi/psi inverses, order-ideal correspondence, Phi_bar after Psi_bar."""
    report = _start("bijections", settings)
    for total in range(path_max + 1):
        for a in range(total + 1):
            r = total - a
            for subset in combinations(range(1, total + 1), a):
                report.instances += 1
                if phi(psi(subset, r, a), a) != subset:
                    report.fail(f"phi(psi({subset})) with r={r}, a={a}")
            for m in monomials_up_to(r, a):
                report.instances += 1
                if psi(phi(m, a), r, a) != m:
                    report.fail(f"psi(phi({m})) with r={r}, a={a}")

    for total in range(1, ideal_max + 1):
        for a in range(total + 1):
            r = total - a
            paths = lattice_paths(r, a)
            for family in _families(paths, limit=4):
                report.instances += 1
                sets = [nu(p) for p in family]
                if is_shifted_set_family(sets, total) != is_order_ideal(family, r, a):
                    report.fail(f"set family {sets} on [{total}]")
            for monos in _families(monomials_up_to(r, a), limit=3):
                report.instances += 1
                preimage = [p for p in paths if lambda_(p) in monos]
                if _is_shifted_family(monos, r) != is_order_ideal(preimage, r, a):
                    report.fail(f"monomial family {monos} with r={r}, a={a}")

    for n in range(min(n_max, settings.max_n) + 1):
        for c in enumerate_shifted(n, n, settings.max_n):
            report.instances += 1
            if Phi_bar(Psi_bar(c)) != c:
                report.fail(f"Phi_bar(Psi_bar({c.facets})) on [{n}]")
    return _finish(report)


def _families(items: Sequence[T], limit: int) -> Iterator[list[T]]:
    for size in range(min(limit, len(items)) + 1):
        for family in combinations(items, size):
            yield list(family)


def _is_shifted_family(monos: Sequence[Monomial], r: int) -> bool:
    try:
        return is_shifted_multicomplex(Multicomplex(nvars=r, members=frozenset(monos)))
    except DomainError:
        return False


def suite_transport(
    settings: Settings, n_max: int = 6, r_max: int = 3, a_max: int = 4
) -> RunReport:
    """h-vectors through Psi, and cones against codimension-one skeleta."""
    report = _start("transport", settings)
    for n in range(min(n_max, settings.max_n) + 1):
        for c in enumerate_shifted(n, n, settings.max_n):
            if not c.is_pure:
                continue
            report.instances += 1
            f = mc_f_vector(Psi(c))
            h = h_vector(c)
            if f != h[: len(f)] or any(h[len(f) :]):
                report.fail(f"h{h} != f{f} for {c.facets}")
    for r in range(r_max + 1):
        for a in range(2, a_max + 1):
            for m in enumerate_shifted_multicomplexes(r, a):
                report.instances += 1
                if Phi(a_cone(m, a), a - 1) != skeleton(Phi(m, a), a - 2):
                    report.fail(f"cone of {sorted(m.members)} at a={a}")
    return _finish(report)


def _calibrate(
    realized: set[Triangle],
    dmax: int,
    entry_max: int,
    positivity: Positivity,
    witnesses: bool,
) -> tuple[int, list[str]]:
    """Compare the accepted bounded triangles with the realized ones."""
    instances = 0
    failures: list[str] = []
    accepted = set()
    for t in bounded_triangles(dmax, entry_max):
        instances += 1
        if check_htriangle(t, positivity).accepted:
            accepted.add(t)

    for t in sorted(accepted - realized, key=lambda t: t.rows):
        failures.append(f"accepted but not realized: {t.rows}")
    for t in sorted(realized - accepted, key=lambda t: t.rows):
        failures.append(f"realized but rejected: {t.rows}")

    if witnesses:
        for t in sorted(accepted, key=lambda t: t.rows):
            try:
                w = build_witness(t, positivity)
            except ScmhError as e:
                failures.append(f"witness for {t.rows}: {e}")
                continue
            if not is_shifted(w) or htriangle_tilde(w) != t:
                failures.append(f"witness for {t.rows} does not realize it")
    return instances, failures


def suite_calibration(
    settings: Settings, dmax: int = 3, entry_max: int = 4, witnesses: bool = True
) -> RunReport:
    """Accepted bounded triangles against the h~-triangles of the census.

    On a mismatch the run is repeated under the other positivity convention;
    when that one matches, it is selected and the report says so.
    """
    report = _start("calibration", settings)
    n_max = min(settings.max_n, dmax + entry_max)
    realized = {
        rec.htilde
        for rec in census(n_max, dmax, settings.jobs, settings.max_n)
        if max(x for row in rec.htilde.rows for x in row) <= entry_max
    }
    first = settings.positivity
    report.instances, failures = _calibrate(
        realized, dmax, entry_max, first, witnesses
    )
    if failures:
        other = (
            Positivity.STRICT
            if first is Positivity.ZERO_ADMITTED
            else Positivity.ZERO_ADMITTED
        )
        logger.warning(
            "calibration mismatch under positivity=%s, retrying with %s",
            first.value,
            other.value,
        )
        instances, retry = _calibrate(realized, dmax, entry_max, other, witnesses)
        report.instances += instances
        if not retry:
            report.positivity = other.value
            report.notes.append(
                f"selected positivity={other.value} after {len(failures)} "
                f"mismatches under {first.value}"
            )
            return _finish(report)
        failures.extend(f"[{other.value}] {message}" for message in retry)
    report.failures.extend(failures)
    return _finish(report)


def suite_rho(
    settings: Settings,
    vmax: int = 3,
    cmax: int = 3,
    rmax: int = 30,
) -> RunReport:
    """Regular compositions against the exhaustive minimum on every feasible space."""
    report = _start("rho", settings)
    for v in range(1, vmax + 1):
        for c in range(1, cmax + 1):
            for h in m_sequences(c + 1, rmax, total_max=rmax):
                space = CompositionSpace(
                    nvars=v, cap=c, h=h, positivity=settings.positivity
                )
                for r in range(min_mass(space), rmax + 1):
                    found = list(enumerate_compositions(space, r))
                    if not found:
                        continue
                    least = min(sigma_top(x) for x in found)
                    greatest = max(x.values for x in found if sigma_top(x) == least)
                    report.instances += 1
                    try:
                        regular = regular_composition(space, r)
                    except (ConstructionError, InfeasibleError) as e:
                        report.fail(f"v={v} c={c} h={h} r={r}: {e}")
                        continue
                    if sigma_top(regular) != least:
                        report.fail(
                            f"v={v} c={c} h={h} r={r}: regular "
                            f"{sigma_top(regular)} > minimum {least}"
                        )
                    elif regular.values != greatest:
                        report.fail(f"v={v} c={c} h={h} r={r}: regular is not greatest")
    return _finish(report)


def suite_macaulay_stanley(
    settings: Settings, n_max: int = 6, d_max: int = 3
) -> RunReport:
    """Three descriptions of h-vectors of pure shifted complexes agree."""
    report = _start("macaulay-stanley", settings)
    for n in range(1, min(n_max, settings.max_n) + 1):
        for d in range(1, min(d_max, n) + 1):
            report.instances += 1
            from_complexes = {
                h_vector(c)
                for c in enumerate_shifted(n, d, settings.max_n)
                if c.is_pure and c.d == d
            }
            from_multicomplexes = {
                _pad(mc_f_vector(m), d + 1)
                for m in enumerate_shifted_multicomplexes(n - d, d)
            }
            from_sequences = {
                h for h in m_sequences(d + 1, n - d) if is_cm_h_vector(h, n)
            }
            if not from_complexes == from_multicomplexes == from_sequences:
                report.fail(
                    f"n={n} d={d}: {len(from_complexes)} complexes, "
                    f"{len(from_multicomplexes)} multicomplexes, "
                    f"{len(from_sequences)} sequences"
                )
    return _finish(report)


def _pad(f: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(f) + (0,) * (length - len(f))


def suite_betti(settings: Settings, n_max: int = 5) -> RunReport:
    """The dual-complex lemma, the generating function and the array checker."""
    report = _start("betti", settings)
    for n in range(1, min(n_max, settings.max_n) + 1):
        for c in enumerate_shifted(n, n, settings.max_n):
            dual = alexander_dual(c)
            ideal = stanley_reisner_ideal(c)
            if dual.is_void or not ideal.generators:
                continue
            report.instances += 1
            if not is_sqfree_strongly_stable(ideal):
                report.fail(f"ideal of {c.facets} is not stable")
                continue
            m = m_array(ideal)
            h = h_triangle_shelling(dual)
            for k in m.degrees:
                for s in range(n - k + 1):
                    if m.get(s + 1, k) != h.entry(n - k, s):
                        report.fail(f"lemma at s={s}, k={k} for {c.facets}")
            table = betti_table(ideal)
            if betti_from_complex(dual) != table:
                report.fail(f"Betti tables disagree for {c.facets}")
            for ell in m.degrees:
                poly = betti_polynomial(table, ell)
                for t in (1, 2, 3):
                    expected = sum(
                        m.get(s + 1, ell) * (1 + t) ** s for s in range(n - ell + 1)
                    )
                    if evaluate(poly, t) != expected:
                        report.fail(f"generating function at t={t} for {c.facets}")
            verdict = check_generator_array(
                mu_array(ideal), positivity=settings.positivity
            )
            if not verdict.accepted:
                report.fail(f"generator array of {c.facets} rejected")
    return _finish(report)


def suite_necessity(settings: Settings, n_max: int = 5) -> RunReport:
    """Compositions read off shifted complexes satisfy the rho bound."""
    report = _start("necessity", settings)
    for n in range(min(n_max, settings.max_n) + 1):
        for c in enumerate_shifted(n, n, settings.max_n):
            htilde = htriangle_tilde(c)
            for (i, j), comp in necessity_compositions(c).items():
                report.instances += 1
                ok, diagnosis = validate_composition(comp, htilde.entry(i, j))
                if not ok:
                    report.fail(f"{c.facets} at ({i},{j}): {diagnosis}")
                elif sigma_top(comp) > htilde.entry(i, j - 1):
                    report.fail(f"{c.facets} at ({i},{j}): top mass too large")
    return _finish(report)


def suite_complexes(
    settings: Settings, n_max: int = 6, dual_n_max: int = 5
) -> RunReport:
    """Triangle identities and duality over the census, and rejected worked
    triangles staying unrealized."""
    from scmh.catalog import KIND_TRIANGLE, load_all_cases

    report = _start("complexes", settings)
    rejected = {
        Triangle.from_rows(record["rows"])
        for record in load_all_cases()
        if record["kind"] == KIND_TRIANGLE and record["expected"] == "reject"
    }
    for n in range(min(n_max, settings.max_n) + 1):
        for c in enumerate_shifted(n, n, settings.max_n):
            report.instances += 1
            htilde = htriangle_tilde(c)
            if h_triangle_shelling(c) != h_from_htilde(htilde):
                report.fail(f"shelling and skeleton triangles differ for {c.facets}")
            for i, row in enumerate(htilde.rows):
                if not is_m_sequence(row):
                    report.fail(f"row {i} of {c.facets} is not an M-sequence")
            if not is_shifted(alexander_dual(c)):
                report.fail(f"dual of {c.facets} is not shifted")
            if htilde in rejected:
                report.fail(f"{c.facets} realizes the rejected {htilde.rows}")

    for n in range(min(dual_n_max, settings.max_n) + 1):
        for c in enumerate_complexes(n, settings.max_n):
            report.instances += 1
            if alexander_dual(alexander_dual(c)) != c:
                report.fail(f"double dual of {c.facets} on [{n}]")
    return _finish(report)


def suite_multicomplexes(
    settings: Settings, n_max: int = 6, r_max: int = 3, a_max: int = 4
) -> RunReport:
    """f-vectors, cones and metacomplex f-triangles of shifted objects."""
    report = _start("multicomplexes", settings)
    for r in range(r_max + 1):
        for a in range(1, a_max + 1):
            for m in enumerate_shifted_multicomplexes(r, a):
                report.instances += 1
                if not is_m_sequence(mc_f_vector(m)):
                    report.fail(f"f-vector of {sorted(m.members)} is not an M-sequence")
                if not is_shifted_multicomplex(a_cone(m, a)):
                    report.fail(f"cone of {sorted(m.members)} at a={a} is not shifted")

    for n in range(min(n_max, settings.max_n) + 1):
        for c in enumerate_shifted(n, n, settings.max_n):
            report.instances += 1
            mc = Psi_bar(c)
            ok, diagnosis = validate_metacomplex(mc)
            if not ok:
                report.fail(f"metacomplex of {c.facets}: {diagnosis}")
                continue
            verdict = check_necessary_conditions(f_triangle(mc))
            if verdict.condition is not None:
                report.fail(f"f-triangle of {c.facets}: {verdict}")
    return _finish(report)


SUITES: dict[str, Callable[[Settings], RunReport]] = {
    "worked-cases": suite_worked_cases,
    "bijections": suite_bijections,
    "transport": suite_transport,
    "necessity": suite_necessity,
    "calibration": suite_calibration,
    "rho": suite_rho,
    "macaulay-stanley": suite_macaulay_stanley,
    "betti": suite_betti,
    "complexes": suite_complexes,
    "multicomplexes": suite_multicomplexes,
}


def run_suites(names: Sequence[str], settings: Settings) -> list[RunReport]:
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suite: {', '.join(unknown)}")
    return [SUITES[name](settings) for name in names]


def format_report(reports: Sequence[RunReport], fmt: str = "text") -> str:
    """Render suite reports as plain text, JSON or a markdown table."""
    if fmt == "json":
        return json.dumps(
            [{**asdict(r), "passed": r.passed} for r in reports], indent=2
        )
    if fmt == "markdown":
        lines = [
            "| Suite | Instances | Failures | Result |",
            "|-------|-----------|----------|--------|",
        ]
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            lines.append(
                f"| {r.suite} | {r.instances} | {len(r.failures)} | {status} |"
            )
        return "\n".join(lines)
    if fmt == "text":
        lines = []
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            lines.append(
                f"{r.suite}: {status} ({r.instances} instances, "
                f"positivity={r.positivity})"
            )
            lines.extend(f"  - {message}" for message in r.failures)
            lines.extend(f"  note: {note}" for note in r.notes)
        return "\n".join(lines)
    raise ValueError(f"Unknown report format: {fmt}")
