"""Command-line interface.

Exit status is 0 on accept or success, 1 on reject and 2 on usage, format or
domain errors.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from scmh.betti import betti_table, check_generator_array
from scmh.catalog import format_monomial
from scmh.census import REPORT_FORMATS, SUITES, census, format_report, run_suites
from scmh.characterization import (
    CompositionSpace,
    Verdict,
    build_witness,
    check_htriangle,
    enumerate_compositions,
    regular_composition,
    rho,
    sigma_top,
)
from scmh.complexes import alexander_dual, h_from_htilde, htriangle_tilde
from scmh.config import Positivity, Settings
from scmh.correspondence import LatticePath, lambda_, lambda_inverse, nu, nu_inverse
from scmh.errors import InfeasibleError, ScmhError, ShapeError
from scmh.formats import (
    format_facets,
    format_triangle,
    read_facets,
    read_generator_array,
    read_generators,
    read_triangle,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_ERROR = 2

LABEL_INFEASIBLE = "INFEASIBLE"


def int_list(text: str) -> list[int]:
    """Parse "1,4,9" (or space separated) into integers."""
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def _emit(text: str, output: Path | None) -> None:
    if output:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text if text.endswith("\n") else text + "\n")
        print(f"Wrote output to {output}", file=sys.stderr)
    else:
        print(text.rstrip("\n"))


def _verdict_status(verdict: Verdict) -> int:
    print(verdict)
    for message in verdict.errors or []:
        logger.info("%s", message)
    return EXIT_OK if verdict.accepted else EXIT_REJECT


def cmd_check_triangle(args: argparse.Namespace, settings: Settings) -> int:
    t = read_triangle(args.file)
    return _verdict_status(check_htriangle(t, settings.positivity))


def cmd_witness(args: argparse.Namespace, settings: Settings) -> int:
    t = read_triangle(args.file)
    verdict = check_htriangle(t, settings.positivity)
    if not verdict.accepted:
        print(verdict)
        return EXIT_REJECT
    _emit(format_facets(build_witness(t, settings.positivity)), args.out)
    return EXIT_OK


def cmd_htriangle(args: argparse.Namespace, settings: Settings) -> int:
    t = htriangle_tilde(read_facets(args.file))
    if args.h:
        t = h_from_htilde(t)
    print(format_triangle(t), end="")
    return EXIT_OK


def cmd_dual(args: argparse.Namespace, settings: Settings) -> int:
    print(format_facets(alexander_dual(read_facets(args.file))), end="")
    return EXIT_OK


def cmd_bfs(args: argparse.Namespace, settings: Settings) -> int:
    if args.kind == "path":
        path = LatticePath(args.value)
    elif args.kind == "set":
        path = nu_inverse(int_list(args.value), args.r, args.a)
    else:
        path = lambda_inverse(int_list(args.value), args.r, args.a)
    if (path.r, path.a) != (args.r, args.a):
        raise ShapeError(f"path {path} ends at ({path.r}, {path.a})")
    print(f"path: {path}")
    print(f"set: {' '.join(str(v) for v in nu(path))}")
    monomial = lambda_(path)
    print(f"monomial: {format_monomial(monomial).replace('u', 'w')}")
    return EXIT_OK


def _space(args: argparse.Namespace, settings: Settings) -> CompositionSpace:
    return CompositionSpace(
        nvars=args.vars,
        cap=args.cap,
        h=tuple(args.h),
        positivity=settings.positivity,
    )


def cmd_rho(args: argparse.Namespace, settings: Settings) -> int:
    space = _space(args, settings)
    if args.oracle:
        masses = [sigma_top(c) for c in enumerate_compositions(space, args.r)]
        if not masses:
            print(LABEL_INFEASIBLE)
            return EXIT_REJECT
        print(min(masses))
        return EXIT_OK
    try:
        print(rho(space, args.r))
    except InfeasibleError as e:
        logger.info("%s", e)
        print(LABEL_INFEASIBLE)
        return EXIT_REJECT
    return EXIT_OK


def cmd_regular_composition(args: argparse.Namespace, settings: Settings) -> int:
    space = _space(args, settings)
    try:
        comp = regular_composition(space, args.r)
    except InfeasibleError as e:
        logger.info("%s", e)
        print(LABEL_INFEASIBLE)
        return EXIT_REJECT
    for m, value in comp.q.items():
        print(f"{format_monomial(m)} {value}")
    print(f"sigma {sigma_top(comp)}")
    return EXIT_OK


def cmd_betti(args: argparse.Namespace, settings: Settings) -> int:
    print(betti_table(read_generators(args.file)))
    return EXIT_OK


def cmd_check_generator_array(args: argparse.Namespace, settings: Settings) -> int:
    mu = read_generator_array(args.file)
    if args.n is not None and mu.n != args.n:
        raise ShapeError(f"array is on n={mu.n}, expected {args.n}")
    return _verdict_status(
        check_generator_array(mu, r=args.r, d=args.d, positivity=settings.positivity)
    )


def cmd_census(args: argparse.Namespace, settings: Settings) -> int:
    if args.verify:
        names = list(SUITES) if args.verify == "all" else args.verify.split(",")
        reports = run_suites(names, settings)
        _emit(format_report(reports, args.format), args.output)
        return EXIT_OK if all(r.passed for r in reports) else EXIT_REJECT

    records = census(args.n, args.dmax, jobs=settings.jobs, max_n=settings.max_n)
    lines = []
    for record in records:
        facets = format_facets(record.complex).strip().replace("\n", " | ")
        lines.append(f"{facets} ; htilde {list(map(list, record.htilde.rows))}")
    lines.append(f"# {len(records)} shifted complexes")
    _emit("\n".join(lines), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scmh",
        description="h-triangles of sequentially Cohen-Macaulay complexes",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--jobs", type=int, help="Worker processes for the census")
    parser.add_argument(
        "--strict-positivity",
        action="store_true",
        help="Require every composition value to be at least 1",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-triangle", help="Decide a .tri file")
    p.add_argument("file", type=Path)
    p.set_defaults(handler=cmd_check_triangle)

    p = sub.add_parser("witness", help="Build a complex realizing a .tri file")
    p.add_argument("file", type=Path)
    p.add_argument("--out", type=Path, help="Output .fac path (default: stdout)")
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("htriangle", help="Triangle of a .fac complex")
    p.add_argument("file", type=Path)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--h", action="store_true", help="Print the h-triangle")
    kind.add_argument("--htilde", action="store_true", help="Print h~ (default)")
    p.set_defaults(handler=cmd_htriangle)

    p = sub.add_parser("dual", help="Alexander dual of a .fac complex")
    p.add_argument("file", type=Path)
    p.set_defaults(handler=cmd_dual)

    p = sub.add_parser("bfs", help="Translate a path, a set or a monomial")
    p.add_argument("kind", choices=["path", "set", "monomial"])
    p.add_argument("value", help="N/E word, or comma separated integers")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.set_defaults(handler=cmd_bfs)

    for name, handler in (
        ("rho", cmd_rho),
        ("regular-composition", cmd_regular_composition),
    ):
        p = sub.add_parser(name, help="Compositions over a monomial space")
        p.add_argument("--vars", type=int, required=True)
        p.add_argument("--cap", type=int, required=True)
        p.add_argument("--h", type=int_list, required=True, help="e.g. 1,4,9,4,1")
        p.add_argument("r", type=int)
        if name == "rho":
            p.add_argument(
                "--oracle", action="store_true", help="Exhaustive minimum instead"
            )
        p.set_defaults(handler=handler)

    p = sub.add_parser("betti", help="Betti table of a .gens ideal")
    p.add_argument("file", type=Path)
    p.set_defaults(handler=cmd_betti)

    p = sub.add_parser("check-generator-array", help="Decide a .gar array")
    p.add_argument("file", type=Path)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--d", type=int)
    p.set_defaults(handler=cmd_check_generator_array)

    p = sub.add_parser("census", help="Shifted complexes or verification suites")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--dmax", type=int)
    p.add_argument(
        "--verify", help=f"'all' or a comma separated list of: {', '.join(SUITES)}"
    )
    p.add_argument(
        "-f", "--format", choices=REPORT_FORMATS, default="text", help="Report format"
    )
    p.add_argument("-o", "--output", type=Path, help="Output path (default: stdout)")
    p.set_defaults(handler=cmd_census)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_ERROR

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        settings = Settings.from_env().with_overrides(
            jobs=args.jobs,
            positivity=Positivity.STRICT if args.strict_positivity else None,
        )
        return int(args.handler(args, settings))
    except (ScmhError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
