"""Python bindings for dimerlab.

The heavy lifting happens in the C++ core; results come back as parsed JSON
documents with the same layout the command-line tool prints.
"""

import json

from ._dimerlab import (
    DimerlabError,
    Triangulation,
    __version__,
    enumerate_triangulations,
    fan_triangulation,
    flip,
    flip_sequence,
    p2,
    parse_triangulation,
    quiver_dot,
)
from . import _dimerlab


def dimer(t, m, reduced=True):
    return json.loads(_dimerlab.dimer_json(t, m, reduced))


def quiver(t, m):
    return json.loads(_dimerlab.quiver_json(t, m))


def gamma(m, n):
    return json.loads(_dimerlab.gamma_json(m, n))


def verify(t, m, budget_visited=1_000_000, budget_length=0, reflect=False):
    return json.loads(_dimerlab.verify_json(t, m, budget_visited, budget_length, reflect))


def sweep(ms, max_n, min_n=3, workers=1, budget_visited=1_000_000, budget_length=0):
    return json.loads(_dimerlab.sweep_json(list(ms), min_n, max_n, workers, budget_visited, budget_length))


def flip_check(t, diagonal, m, budget_visited=1_000_000, budget_length=0):
    return json.loads(_dimerlab.flip_check_json(t, tuple(diagonal), m, budget_visited, budget_length))


__all__ = [
    "DimerlabError",
    "Triangulation",
    "__version__",
    "dimer",
    "enumerate_triangulations",
    "fan_triangulation",
    "flip",
    "flip_check",
    "flip_sequence",
    "gamma",
    "p2",
    "parse_triangulation",
    "quiver",
    "quiver_dot",
    "sweep",
    "verify",
]
