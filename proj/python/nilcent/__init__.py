"""Component groups of centralizers of nilpotent elements in simple Lie algebras."""

import json
import os
from pathlib import Path

_packaged = Path(__file__).with_name("data")
if _packaged.is_dir():
    os.environ.setdefault("NILCENT_DATA_DIR", str(_packaged))

from . import _core  # noqa: E402

DEFAULT_SUITES = ("classical", "exceptional-structural", "exceptional-groups", "properties")


def component_group(algebra, orbit="", representative="", route="auto", budget=0, timing=False):
    """Orbit record for one orbit, as a dict."""
    return json.loads(_core.component_group(algebra, orbit, str(representative), route, budget, timing))


def orbit_labels(algebra):
    return _core.orbit_labels(algebra)


def table(algebra):
    """Records of all orbits of `algebra` with a nontrivial component group."""
    return [json.loads(r) for r in _core.table(algebra)]


def diff_reference(algebra):
    """Differences against the shipped reference table; empty when they agree."""
    return _core.diff_reference(algebra)


def suite_names():
    return _core.suite_names()


def verify(suites=DEFAULT_SUITES, algebra="", stretch=False):
    """Runs acceptance suites. Returns (report dict, exit code)."""
    report, code = _core.verify(list(suites), algebra, stretch)
    return json.loads(report), code


cartan_matrix = _core.cartan_matrix
canonical_type_label = _core.canonical_type_label
num_positive_roots = _core.num_positive_roots
data_dir = _core.data_dir

__all__ = [
    "component_group",
    "orbit_labels",
    "table",
    "diff_reference",
    "suite_names",
    "verify",
    "cartan_matrix",
    "canonical_type_label",
    "num_positive_roots",
    "data_dir",
]
