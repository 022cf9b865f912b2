"""Algebras of partially transposed permutation operators."""

import json

import numpy as np

from . import _ptalg
from ._ptalg import (
    IrrepError,
    SpectralError,
    cycle_string,
    mul_generators,
    parse_permutation,
    partitions_of,
    permutations,
    q_matrix,
    unit_of_M,
)

__all__ = [
    "IrrepError",
    "SpectralError",
    "cycle_string",
    "irrep",
    "mul_generators",
    "parse_permutation",
    "partitions_of",
    "permutations",
    "q_matrix",
    "spectrum",
    "structure",
    "unit_of_M",
    "verify",
]


def spectrum(alpha, d, n):
    """Q(alpha) with its closed-form eigenpairs, rank and vanishing label."""
    r = json.loads(_ptalg.spectrum_json(list(alpha), d, n))
    r["matrix"] = np.array(r["matrix"], dtype=float)
    return r


def irrep(kind, label, d, n, basis="f"):
    """Images of every generator, keyed by cycle string, as numpy arrays."""
    r = json.loads(_ptalg.irrep_json(kind, list(label), d, n, basis))
    r["images"] = {k: np.array(v, dtype=float).reshape(r["dimension"], r["dimension"]) for k, v in r["images"].items()}
    return r


def structure(n, d, oracle=False):
    """Block inventory and dimension count."""
    return json.loads(_ptalg.structure_json(n, d, oracle))


def verify(n, d, suite="all", tol=0.0):
    """Verification reports of one suite."""
    return json.loads(_ptalg.verify_json(suite, n, d, tol))
