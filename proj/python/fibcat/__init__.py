"""Finite fibered category checks.

Inputs and outputs are the JSON documents used by the command line tool,
passed as strings or as already parsed dicts.
"""

import json

from . import _core
from ._core import FibcatError, predicate_names

__version__ = _core.__version__

__all__ = [
    "FibcatError",
    "analyze",
    "arrow_cat",
    "check",
    "error_kind",
    "fixture",
    "free_cocart",
    "gen",
    "gluing",
    "groth",
    "predicate_names",
    "roundtrip",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def error_kind(err):
    """Kind name of a FibcatError, e.g. 'NotBicartesian'."""
    return str(err).split(":", 1)[0]


def fixture(name):
    return json.loads(_core.fixture(name))


def check(doc, max_morphisms=20000):
    return _core.check(_text(doc), max_morphisms)


def analyze(doc, predicates=(), jobs=1, timing=False):
    return json.loads(_core.analyze(_text(doc), list(predicates), jobs, timing))


def roundtrip(doc, mode="moens"):
    return json.loads(_core.roundtrip(_text(doc), mode))


def gluing(doc):
    return json.loads(_core.gluing(_text(doc)))


def free_cocart(doc):
    return json.loads(_core.free_cocart(_text(doc)))


def groth(doc):
    return json.loads(_core.groth(_text(doc)))


def arrow_cat(doc):
    return json.loads(_core.arrow_cat(_text(doc)))


def gen(kind, size=6, seed=1, fiber=3, lattice_base=False):
    return json.loads(_core.gen(kind, size, seed, fiber, lattice_base))
