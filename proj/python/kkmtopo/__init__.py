"""Python front end for the kkm library.

Rationals are exchanged as strings ("3/10") or ints, as in the JSON files.
Reports come back as dicts with the same fields as the kkm CLI output.
"""

import json

from . import _core
from ._core import (
    HypothesisFailure,
    InvalidInput,
    KkmError,
    NotOrientable,
    OnImage,
    Unsupported,
)

__all__ = [
    "KkmError",
    "InvalidInput",
    "NotOrientable",
    "OnImage",
    "HypothesisFailure",
    "Unsupported",
    "commands",
    "cov",
    "degree",
    "fuzz",
    "pebble",
    "run",
    "sperner_labeling",
    "subdivide",
    "winding",
]


def _points(points):
    return json.dumps([[str(x) for x in pt] for pt in points])


def _point(p):
    return json.dumps([str(x) for x in p])


def degree(complex_, labeling, target=None, seed_sign=1):
    """Degree report of a labeling on a closed oriented pseudomanifold."""
    return json.loads(_core.degree(json.dumps(complex_), json.dumps(labeling), target, seed_sign))


def winding(loop, p, ray="+x"):
    return _core.winding(_points(loop), _point(p), ray)


def cov(V, p):
    return json.loads(_core.cov(_points(V), _point(p)))


def pebble(V):
    return json.loads(_core.pebble(_points(V)))


def subdivide(complex_, depth=1):
    return json.loads(_core.subdivide(json.dumps(complex_), depth))


def sperner_labeling(complex_, m):
    """Canonical Sperner labeling of a subdivided complex with carriers."""
    return json.loads(_core.sperner_labeling(json.dumps(complex_), m))


def fuzz(family, count, seed=1, threads=1):
    return json.loads(_core.fuzz(family, count, seed, threads))


def run(command, inputs=None, options=None, output=None):
    """Run a CLI command in-process. Returns (exit_code, report dict or None, error)."""
    code, report, error = _core.run(
        command,
        {k: str(v) for k, v in (inputs or {}).items()},
        {k: str(v) for k, v in (options or {}).items()},
        None if output is None else str(output),
    )
    return code, json.loads(report) if report else None, error


def commands():
    return list(_core.commands())
