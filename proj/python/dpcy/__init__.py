"""Del Pezzo surfaces, their projections and nodal Calabi-Yau complete intersections."""

import json
import os
from pathlib import Path

_packaged = Path(__file__).with_name("cases.json")
if _packaged.exists():
    os.environ.setdefault("DPCY_CASES", str(_packaged))

from ._core import (  # noqa: E402
    DEFAULT_PRIME,
    DEFAULT_SEED,
    AlgebraError,
    case_ids,
    ci_chern,
    table1_text,
)
from . import _core  # noqa: E402

__all__ = [
    "AlgebraError",
    "DEFAULT_PRIME",
    "DEFAULT_SEED",
    "case_ids",
    "census",
    "ci_chern",
    "compute",
    "run_case",
    "table1_text",
]


def compute(operation, seed=DEFAULT_SEED, prime=DEFAULT_PRIME, rational=False, **params):
    """Runs one operation ("census", "betti", "nodes", ...) and returns its computed values."""
    return json.loads(_core.compute_json(operation, json.dumps(params), seed, prime, rational))


def census(surface, seed=DEFAULT_SEED, prime=DEFAULT_PRIME):
    """Number of minimal generators of the surface ideal, by degree."""
    return {int(d): n for d, n in compute("census", seed, prime, surface=surface)["census"].items()}


def run_case(case_id, seed=DEFAULT_SEED, prime=DEFAULT_PRIME, timing=True):
    """Report of one registered reproduction case."""
    return json.loads(_core.run_case_json(case_id, seed, prime, timing))
