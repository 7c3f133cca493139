"""scmh - h-triangles of sequentially Cohen-Macaulay complexes."""

from scmh.betti import betti_table, check_generator_array
from scmh.characterization import (
    Verdict,
    build_witness,
    check_htriangle,
    regular_composition,
    rho,
)
from scmh.complexes import SimplicialComplex, Triangle, htriangle_tilde

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex",
    "Triangle",
    "Verdict",
    "betti_table",
    "build_witness",
    "check_generator_array",
    "check_htriangle",
    "htriangle_tilde",
    "regular_composition",
    "rho",
]
