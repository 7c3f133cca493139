"""Line-oriented text formats.

.tri   line i holds the i + 1 entries of triangle row i
.fac   "n <N>", then one facet per line; "-" is the empty facet
.gens  "vars <N>", then one exponent vector per line
.gar   "n <N>", then one line per degree k listing mu[1, k] .. mu[n-k+1, k]

Blank lines and anything after "#" are ignored.
"""

from pathlib import Path

from scmh.betti import GeneratorArray, MonomialIdeal
from scmh.complexes import SimplicialComplex, Triangle
from scmh.errors import FormatError

EMPTY_FACET = "-"

ERROR_NOT_INTEGER = "expected non-negative integers"
ERROR_ROW_LENGTH = "row {i} must hold {expected} entries, found {found}"
ERROR_HEADER = "expected header '{keyword} <N>'"
ERROR_NO_DATA = "no data lines"


def _data_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((number, content))
    return lines


def _integers(content: str, path: str | Path | None, line: int) -> list[int]:
    try:
        values = [int(token) for token in content.split()]
    except ValueError:
        raise FormatError(f"{ERROR_NOT_INTEGER}: {content!r}", path, line) from None
    if any(v < 0 for v in values):
        raise FormatError(f"{ERROR_NOT_INTEGER}: {content!r}", path, line)
    return values


def _header(
    lines: list[tuple[int, str]], keyword: str, path: str | Path | None
) -> int:
    if not lines:
        raise FormatError(ERROR_NO_DATA, path)
    number, content = lines[0]
    parts = content.split()
    if len(parts) != 2 or parts[0] != keyword:
        raise FormatError(ERROR_HEADER.format(keyword=keyword), path, number)
    return _integers(parts[1], path, number)[0]


def parse_triangle(text: str, path: str | Path | None = None) -> Triangle:
    lines = _data_lines(text)
    if not lines:
        raise FormatError(ERROR_NO_DATA, path)
    rows = []
    for i, (number, content) in enumerate(lines):
        row = _integers(content, path, number)
        if len(row) != i + 1:
            raise FormatError(
                ERROR_ROW_LENGTH.format(i=i, expected=i + 1, found=len(row)),
                path,
                number,
            )
        rows.append(row)
    return Triangle.from_rows(rows)


def format_triangle(t: Triangle) -> str:
    return str(t) + "\n"


def parse_facets(text: str, path: str | Path | None = None) -> SimplicialComplex:
    """Read a complex; a file with a header and no facets is the void complex."""
    lines = _data_lines(text)
    n = _header(lines, "n", path)
    facets: list[list[int]] = []
    for number, content in lines[1:]:
        if content == EMPTY_FACET:
            facets.append([])
            continue
        facet = _integers(content, path, number)
        if any(v < 1 or v > n for v in facet):
            raise FormatError(f"vertex outside [1, {n}]: {content!r}", path, number)
        facets.append(facet)
    return SimplicialComplex.from_faces(n, facets)


def format_facets(c: SimplicialComplex) -> str:
    lines = [f"n {c.n}"]
    for facet in c.facets:
        lines.append(" ".join(str(v) for v in facet) if facet else EMPTY_FACET)
    return "\n".join(lines) + "\n"


def parse_generators(text: str, path: str | Path | None = None) -> MonomialIdeal:
    lines = _data_lines(text)
    nvars = _header(lines, "vars", path)
    gens = []
    for number, content in lines[1:]:
        exps = _integers(content, path, number)
        if len(exps) != nvars:
            raise FormatError(
                f"expected {nvars} exponents, found {len(exps)}", path, number
            )
        gens.append(exps)
    return MonomialIdeal.from_generators(nvars, gens)


def format_generators(ideal: MonomialIdeal) -> str:
    lines = [f"vars {ideal.nvars}"]
    lines.extend(" ".join(str(e) for e in g) for g in ideal.generators)
    return "\n".join(lines) + "\n"


def parse_generator_array(
    text: str, path: str | Path | None = None
) -> GeneratorArray:
    """Read a cumulative array; the first column's length fixes the start degree."""
    lines = _data_lines(text)
    n = _header(lines, "n", path)
    body = lines[1:]
    if not body:
        raise FormatError(ERROR_NO_DATA, path)
    columns = []
    start = n + 1 - len(body[0][1].split())
    if start < 1:
        raise FormatError(
            f"first degree would be {start}: at most {n} entries allowed",
            path,
            body[0][0],
        )
    for offset, (number, content) in enumerate(body):
        column = _integers(content, path, number)
        expected = n - (start + offset) + 1
        if len(column) != expected or expected < 1:
            raise FormatError(
                f"degree {start + offset} must hold {expected} entries, "
                f"found {len(column)}",
                path,
                number,
            )
        columns.append(tuple(column))
    return GeneratorArray(n=n, start=start, columns=tuple(columns))


def format_generator_array(mu: GeneratorArray) -> str:
    lines = [f"n {mu.n}"]
    lines.extend(" ".join(str(x) for x in column) for column in mu.columns)
    return "\n".join(lines) + "\n"


def read_triangle(path: Path) -> Triangle:
    return parse_triangle(_read(path), path)


def read_facets(path: Path) -> SimplicialComplex:
    return parse_facets(_read(path), path)


def read_generators(path: Path) -> MonomialIdeal:
    return parse_generators(_read(path), path)


def read_generator_array(path: Path) -> GeneratorArray:
    return parse_generator_array(_read(path), path)


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read file: {e.strerror}", path) from e
