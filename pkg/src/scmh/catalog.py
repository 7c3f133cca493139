"""Worked cases shipped with the package as YAML records.

Each record has a `case_id`, a `kind` and a `description`; the remaining keys
depend on the kind.
"""

import importlib.resources
import logging
import re
from collections.abc import Callable
from pathlib import Path
from typing import Any, cast

import yaml

from scmh.betti import MonomialIdeal, betti_table
from scmh.characterization import (
    Composition,
    CompositionSpace,
    build_witness,
    check_htriangle,
    regular_composition,
    rho,
    sigma_top,
    validate_composition,
)
from scmh.complexes import SimplicialComplex, Triangle, htriangle_tilde, is_shifted
from scmh.config import Positivity
from scmh.correspondence import LatticePath, lambda_, nu
from scmh.errors import DomainError, ScmhError
from scmh.multicomplexes import Monomial

logger = logging.getLogger(__name__)

KIND_TRIANGLE = "triangle"
KIND_COMPOSITION = "composition"
KIND_LATTICE_PATH = "lattice_path"
KIND_IDEAL = "ideal"
KIND_COMPLEX = "complex"

ERROR_UNKNOWN_KIND = "Unknown case kind"
ERROR_MONOMIAL = "cannot read monomial"

_FACTOR = re.compile(r"^u(\d+)(?:\^(\d+))?$")

CaseRecord = dict[str, Any]


def get_data_path() -> Path:
    """Get the path to the data directory."""
    return Path(str(importlib.resources.files("scmh.data")))


def load_case(case_path: Path) -> CaseRecord:
    """Load a single case from a YAML file."""
    with open(case_path) as f:
        return cast(CaseRecord, yaml.safe_load(f))


def load_all_cases() -> list[CaseRecord]:
    """Load all cases from the cases directory."""
    cases_dir = get_data_path() / "cases"
    return [load_case(p) for p in sorted(cases_dir.glob("*.yaml"))]


def parse_monomial(text: str, nvars: int) -> Monomial:
    """Read "1", "u2" or "u1^2*u3" as an exponent vector on u_1..u_nvars."""
    exps = [0] * nvars
    if text.strip() == "1":
        return tuple(exps)
    for factor in text.replace(" ", "").split("*"):
        match = _FACTOR.match(factor)
        if match is None:
            raise DomainError(f"{ERROR_MONOMIAL}: {text!r}")
        index = int(match.group(1))
        if index < 1 or index > nvars:
            raise DomainError(f"{ERROR_MONOMIAL}: {text!r} on {nvars} variables")
        exps[index - 1] += int(match.group(2) or 1)
    return tuple(exps)


def format_monomial(m: Monomial) -> str:
    """Inverse of `parse_monomial`."""
    factors = [
        f"u{k + 1}" if e == 1 else f"u{k + 1}^{e}" for k, e in enumerate(m) if e
    ]
    return "*".join(factors) or "1"


def _space(record: CaseRecord, positivity: Positivity) -> CompositionSpace:
    return CompositionSpace(
        nvars=record["vars"],
        cap=record["cap"],
        h=tuple(record["h"]),
        positivity=positivity,
    )


def composition_from_record(
    space: CompositionSpace, values: dict[str, int]
) -> Composition:
    q = {parse_monomial(k, space.nvars): v for k, v in values.items()}
    return Composition.from_mapping(space, q)


def _run_triangle(
    record: CaseRecord, positivity: Positivity
) -> tuple[bool, str | None]:
    t = Triangle.from_rows(record["rows"])
    verdict = check_htriangle(t, positivity)
    expected = record["expected"]
    if expected == "accept":
        if not verdict.accepted:
            return False, f"expected accept, got {verdict}"
        if record.get("witness", False):
            c = build_witness(t, positivity)
            if htriangle_tilde(c) != t:
                return False, f"witness {c.facets} does not realize the triangle"
        return True, None
    if verdict.accepted:
        return False, "expected reject, got accept"
    location = tuple(record["location"]) if "location" in record else None
    if verdict.condition != record["condition"] or (
        location is not None and verdict.location != location
    ):
        wanted = f"condition {record['condition']} at {location}"
        return False, f"expected {wanted}, got {verdict}"
    return True, None


def _run_composition(
    record: CaseRecord, positivity: Positivity
) -> tuple[bool, str | None]:
    space = _space(record, positivity)
    r = record["r"]
    by_name: dict[str, Composition] = {}
    for entry in record["compositions"]:
        comp = composition_from_record(space, entry["values"])
        by_name[entry["name"]] = comp
        ok, message = validate_composition(comp, r)
        if ok != entry["valid"]:
            return False, f"{entry['name']}: validity {ok} ({message})"
        if "sigma" in entry and sigma_top(comp) != entry["sigma"]:
            return False, f"{entry['name']}: sigma {sigma_top(comp)}"
    if "rho" in record and rho(space, r) != record["rho"]:
        return False, f"rho is {rho(space, r)}, expected {record['rho']}"
    if "regular" in record:
        regular = regular_composition(space, r)
        if regular != by_name[record["regular"]]:
            return False, f"regular composition is {regular.q}"
    return True, None


def _run_lattice_path(
    record: CaseRecord, positivity: Positivity
) -> tuple[bool, str | None]:
    path = LatticePath(record["word"])
    if list(nu(path)) != record["nu"]:
        return False, f"nu is {nu(path)}"
    if list(lambda_(path)) != record["lambda"]:
        return False, f"lambda is {lambda_(path)}"
    return True, None


def _run_ideal(record: CaseRecord, positivity: Positivity) -> tuple[bool, str | None]:
    ideal = MonomialIdeal.from_generators(record["vars"], record["generators"])
    table = betti_table(ideal)
    expected = {(s, degree - s): value for s, degree, value in record["betti"]}
    if table.entries != expected:
        return False, f"betti table is {table.entries}"
    return True, None


def _run_complex(
    record: CaseRecord, positivity: Positivity
) -> tuple[bool, str | None]:
    c = SimplicialComplex.from_faces(record["n"], record["facets"])
    if is_shifted(c) != record.get("shifted", True):
        return False, f"is_shifted is {is_shifted(c)}"
    if "htilde" in record:
        t = htriangle_tilde(c)
        if t != Triangle.from_rows(record["htilde"]):
            return False, f"h~-triangle is {t.rows}"
    return True, None


CASE_RUNNERS: dict[
    str, Callable[[CaseRecord, Positivity], tuple[bool, str | None]]
] = {
    KIND_TRIANGLE: _run_triangle,
    KIND_COMPOSITION: _run_composition,
    KIND_LATTICE_PATH: _run_lattice_path,
    KIND_IDEAL: _run_ideal,
    KIND_COMPLEX: _run_complex,
}


def run_case(
    record: CaseRecord, positivity: Positivity = Positivity.ZERO_ADMITTED
) -> tuple[bool, str | None]:
    """Replay one worked case.

    Returns:
        (True, None) when every expectation holds, else (False, reason).
    """
    kind = record["kind"]
    if kind not in CASE_RUNNERS:
        raise ValueError(f"{ERROR_UNKNOWN_KIND}: {kind}")
    logger.debug("running case %s", record["case_id"])
    try:
        return CASE_RUNNERS[kind](record, positivity)
    except ScmhError as e:
        return False, f"{type(e).__name__}: {e}"
