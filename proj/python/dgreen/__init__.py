"""Green functions and Springer correspondences for dihedral groups I2(m).

Results come back as plain Python structures decoded from the library's
canonical JSON. Polynomials are strings such as ``"q^5+q^4"``.
"""

import json

from . import _core
from ._core import DgreenError, fake_degree, poincare, run

__all__ = [
    "DgreenError",
    "atlas",
    "atlas_names",
    "fake_degree",
    "irr",
    "maximal",
    "omega",
    "poincare",
    "run",
    "search",
    "solve",
    "spref",
    "verify",
]


def _springer(labels):
    return labels if isinstance(labels, str) else ",".join(labels)


def irr(m):
    return json.loads(_core.irr(m))


def omega(m, method="sum"):
    return json.loads(_core.omega(m, method))


def solve(datum):
    """Solve for a datum given as a dict or JSON text."""
    text = datum if isinstance(datum, str) else json.dumps(datum)
    return json.loads(_core.solve(text))


def search(m, springer, certificates=False, max_candidates=1_000_000, family_filter=True):
    return json.loads(_core.search(m, _springer(springer), certificates, max_candidates, family_filter))


def maximal(m, springer):
    return json.loads(_core.maximal(m, _springer(springer)))


def spref(m):
    return json.loads(_core.spref(m))


def atlas_names():
    return list(_core.atlas_names())


def atlas(name):
    return json.loads(_core.atlas(name))


def verify(m):
    return json.loads(_core.verify(m))
