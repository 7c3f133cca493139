"""Tests for the text file formats."""

import pytest

from scmh.betti import GeneratorArray
from scmh.complexes import SimplicialComplex, Triangle
from scmh.errors import FormatError
from scmh.formats import (
    format_facets,
    format_generator_array,
    format_generators,
    format_triangle,
    parse_facets,
    parse_generator_array,
    parse_generators,
    parse_triangle,
    read_facets,
    read_triangle,
)


class TestTriangleFormat:
    """Tests for .tri files."""

    def test_comments_and_blanks(self):
        """Comments and blank lines are skipped."""
        text = "# worked triangle\n1\n\n1 2  # row 1\n1 0 0\n"
        assert parse_triangle(text) == Triangle.from_rows([[1], [1, 2], [1, 0, 0]])

    def test_row_length_reports_line(self):
        """A short row is reported with its line number."""
        with pytest.raises(FormatError) as excinfo:
            parse_triangle("1\n1 2\n1 0\n", path="bad.tri")
        assert excinfo.value.line == 3
        assert "bad.tri:3" in str(excinfo.value)

    def test_negative_and_garbage(self):
        """Only non-negative integers are allowed."""
        with pytest.raises(FormatError):
            parse_triangle("1\n1 -2\n")
        with pytest.raises(FormatError):
            parse_triangle("1\nx y\n")
        with pytest.raises(FormatError):
            parse_triangle("# nothing\n")

    def test_format(self):
        """Rows print one per line."""
        t = Triangle.from_rows([[1], [1, 2]])
        assert format_triangle(t) == "1\n1 2\n"
        assert parse_triangle(format_triangle(t)) == t


class TestFacetFormat:
    """Tests for .fac files."""

    def test_parse(self):
        """Header then one facet per line."""
        c = parse_facets("n 3\n2 3\n1\n")
        assert c == SimplicialComplex(n=3, facets=((1,), (2, 3)))

    def test_empty_facet_and_void(self):
        """'-' is the empty facet; no facets is the void complex."""
        assert parse_facets("n 2\n-\n").facets == ((),)
        assert parse_facets("n 2\n").is_void

    def test_vertex_range(self):
        """Vertices must lie in [n]."""
        with pytest.raises(FormatError) as excinfo:
            parse_facets("n 2\n1 3\n")
        assert excinfo.value.line == 2

    def test_header(self):
        """The header is required."""
        with pytest.raises(FormatError):
            parse_facets("1 2\n")

    def test_format(self):
        """Empty facets print as '-'."""
        assert format_facets(SimplicialComplex(n=2, facets=((),))) == "n 2\n-\n"
        assert format_facets(SimplicialComplex(n=3, facets=())) == "n 3\n"


class TestGeneratorFormats:
    """Tests for .gens and .gar files."""

    def test_generators(self):
        """Exponent vectors after a vars header."""
        ideal = parse_generators("vars 3\n1 1 0\n1 0 1\n")
        assert ideal.generators == ((1, 0, 1), (1, 1, 0))
        assert format_generators(ideal) == "vars 3\n1 0 1\n1 1 0\n"

    def test_generator_length(self):
        """Each vector has one exponent per variable."""
        with pytest.raises(FormatError):
            parse_generators("vars 3\n1 1\n")

    def test_generator_array_start(self):
        """The first line's length fixes the start degree."""
        mu = parse_generator_array("n 3\n1 0 0\n1 2\n1\n")
        assert mu == GeneratorArray(n=3, start=1, columns=((1, 0, 0), (1, 2), (1,)))
        assert format_generator_array(mu) == "n 3\n1 0 0\n1 2\n1\n"

    def test_generator_array_shape(self):
        """Each later line is one entry shorter."""
        with pytest.raises(FormatError) as excinfo:
            parse_generator_array("n 3\n1 0\n1 2\n")
        assert excinfo.value.line == 3

    def test_generator_array_degree_zero(self):
        """A first line of n + 1 entries would start in degree 0."""
        with pytest.raises(FormatError) as excinfo:
            parse_generator_array("n 2\n1 0 0\n1 1\n1\n")
        assert excinfo.value.line == 2


class TestReading:
    """Tests for reading from disk."""

    def test_round_trip_on_disk(self, tmp_path):
        """Files written by the formatters read back."""
        path = tmp_path / "complex.fac"
        c = SimplicialComplex(n=3, facets=((1, 3), (2, 3)))
        path.write_text(format_facets(c))
        assert read_facets(path) == c

    def test_missing_file(self, tmp_path):
        """Unreadable files become format errors."""
        with pytest.raises(FormatError):
            read_triangle(tmp_path / "missing.tri")
