"""Tests for the census enumeration and the verification suites."""

import json

import pytest

from scmh.census import (
    RunReport,
    bounded_triangles,
    census,
    enumerate_complexes,
    enumerate_shifted,
    enumerate_shifted_multicomplexes,
    format_report,
    m_sequences,
    run_suites,
    suite_betti,
    suite_bijections,
    suite_calibration,
    suite_complexes,
    suite_macaulay_stanley,
    suite_multicomplexes,
    suite_necessity,
    suite_rho,
    suite_transport,
    suite_worked_cases,
)
from scmh.complexes import is_shifted, skeleton
from scmh.config import Positivity, Settings
from scmh.correspondence import Phi
from scmh.errors import BoundsError
from scmh.multicomplexes import a_cone


class TestEnumerateShifted:
    """Tests for the shifted-complex census."""

    def test_two_vertices(self):
        """{emptyset}, {2}, both vertices, and the edge."""
        found = [c.facets for c in enumerate_shifted(2, 2)]
        assert sorted(found) == sorted([((),), ((2,),), ((1,), (2,)), ((1, 2),)])

    def test_one_vertex(self):
        """{emptyset} and the vertex."""
        assert len(list(enumerate_shifted(1, 1))) == 2

    def test_zero_dimensional(self):
        """Vertex sets are top segments of [3]."""
        found = {c.facets for c in enumerate_shifted(3, 1)}
        assert found == {((),), ((3,),), ((2,), (3,)), ((1,), (2,), (3,))}

    def test_all_shifted_and_distinct(self):
        """No duplicates and nothing unshifted."""
        found = list(enumerate_shifted(4, 3))
        assert all(is_shifted(c) for c in found)
        assert len({c.facets for c in found}) == len(found)

    def test_deterministic(self):
        """Two runs produce the same stream."""
        assert list(enumerate_shifted(4, 2)) == list(enumerate_shifted(4, 2))

    def test_bounds(self):
        """n is bounded by max_n and dmax by n."""
        with pytest.raises(BoundsError):
            list(enumerate_shifted(8, 2))
        with pytest.raises(BoundsError):
            list(enumerate_shifted(2, 3))
        with pytest.raises(BoundsError):
            list(enumerate_shifted(5, 2, max_n=4))


class TestSmallEnumerations:
    """Tests for the other enumeration helpers."""

    def test_multicomplexes(self):
        """The unit alone, or the unit and w1."""
        assert len(list(enumerate_shifted_multicomplexes(1, 1))) == 2

    def test_m_sequences(self):
        """(1, 0), (1, 1) and (1, 2)."""
        assert list(m_sequences(2, 2)) == [(1, 0), (1, 1), (1, 2)]

    def test_m_sequences_total(self):
        """Entries, h_0 included, add up to at most total_max."""
        assert list(m_sequences(3, 5, total_max=2)) == [(1, 0, 0), (1, 1, 0)]

    def test_all_complexes(self):
        """Nonvoid complexes on [n], shifted or not."""
        assert [len(list(enumerate_complexes(n))) for n in range(4)] == [1, 2, 5, 19]
        with pytest.raises(BoundsError):
            list(enumerate_complexes(3, max_n=2))

    def test_bounded_triangles(self):
        """Depth at most 1 with entries at most 1."""
        found = {t.rows for t in bounded_triangles(1, 1)}
        assert found == {((1,),), ((1,), (1, 0)), ((1,), (1, 1))}

    def test_census_sorted(self):
        """Records cover n = 0..2 in canonical order."""
        records = census(2)
        assert len(records) == 7
        keys = [(r.complex.n, r.complex.facets) for r in records]
        assert keys[0] == (0, ((),))
        assert [k[0] for k in keys] == sorted(k[0] for k in keys)
        for record in records:
            assert record.metacomplex == record.htilde


class TestReports:
    """Tests for report formatting and suite dispatch."""

    def test_unknown_suite(self):
        """Suite names are validated."""
        with pytest.raises(ValueError, match="Unknown suite"):
            run_suites(["nope"], Settings())

    def test_formats(self):
        """Text, JSON and markdown renderings."""
        report = RunReport(suite="demo", instances=3)
        report.fail("broken")
        assert "demo: FAIL" in format_report([report], "text")
        assert "  - broken" in format_report([report], "text")
        data = json.loads(format_report([report], "json"))
        assert data[0]["passed"] is False
        assert data[0]["failures"] == ["broken"]
        assert "| demo | 3 | 1 | FAIL |" in format_report([report], "markdown")

    def test_unknown_format(self):
        """Only known formats render."""
        with pytest.raises(ValueError, match="Unknown report format"):
            format_report([], "csv")

    def test_worked_cases(self):
        """Every shipped worked case replays."""
        report = suite_worked_cases(Settings())
        assert report.failures == []
        assert report.instances > 0


@pytest.mark.slow
class TestSuites:
    """Exhaustive suites; run with -m slow."""

    def test_bijections(self):
        """Path, set and monomial encodings agree."""
        assert suite_bijections(Settings()).failures == []

    def test_transport(self):
        """h-vectors transport to f-vectors and cones to skeleta."""
        assert suite_transport(Settings()).failures == []

    def test_necessity(self):
        """Realized triangles carry valid compositions."""
        assert suite_necessity(Settings()).failures == []

    def test_calibration(self):
        """Accepted bounded triangles are exactly the realized ones."""
        assert suite_calibration(Settings()).failures == []

    def test_rho(self):
        """The search agrees with exhaustive enumeration."""
        assert suite_rho(Settings()).failures == []

    def test_macaulay_stanley(self):
        """Three descriptions of Cohen-Macaulay h-vectors agree."""
        assert suite_macaulay_stanley(Settings()).failures == []

    def test_betti(self):
        """Both Betti routes and the generator-array checker agree."""
        assert suite_betti(Settings()).failures == []

    def test_complexes(self):
        """Triangle identities and duality over the census."""
        assert suite_complexes(Settings()).failures == []

    def test_multicomplexes(self):
        """f-vectors, cones and f-triangles of shifted objects."""
        assert suite_multicomplexes(Settings()).failures == []


class TestSmallSuites:
    """The suites on small bounds, run by default."""

    def test_cone_of_top_degree(self):
        """Coning a multicomplex of degree a matches the skeleton of its complex."""
        tops = [m for m in enumerate_shifted_multicomplexes(2, 3) if m.degree == 3]
        assert tops
        for m in tops:
            assert Phi(a_cone(m, 3), 2) == skeleton(Phi(m, 3), 1)

    def test_transport(self):
        """Small multicomplexes of every degree up to a."""
        report = suite_transport(Settings(), n_max=3, r_max=2, a_max=3)
        assert report.failures == []
        assert report.instances > 0

    def test_calibration(self):
        """Accepted triangles up to depth 2 and entry 3 are realized and witnessed."""
        report = suite_calibration(Settings(), dmax=2, entry_max=3)
        assert report.failures == []
        assert report.positivity == Positivity.ZERO_ADMITTED.value
        assert report.notes == []

    def test_calibration_selects_convention(self):
        """Strict positivity rejects a single edge, so zero values are selected."""
        settings = Settings(positivity=Positivity.STRICT)
        report = suite_calibration(settings, dmax=2, entry_max=1, witnesses=False)
        assert report.failures == []
        assert report.positivity == Positivity.ZERO_ADMITTED.value
        assert "selected positivity=zero" in report.notes[0]

    def test_rho(self):
        """Minimality on every feasible space up to r = 13."""
        report = suite_rho(Settings(), rmax=13)
        assert report.failures == []
        assert report.instances > 0

    def test_complexes(self):
        """Identities on up to four vertices, double duals on up to three."""
        report = suite_complexes(Settings(), n_max=4, dual_n_max=3)
        assert report.failures == []

    def test_multicomplexes(self):
        """Cones and f-triangles on small bounds."""
        report = suite_multicomplexes(Settings(), n_max=4, r_max=2, a_max=3)
        assert report.failures == []
