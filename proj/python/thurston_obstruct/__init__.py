"""Python front end for the exact obstruction engine."""

import json
from fractions import Fraction

from . import _core
from ._core import InputError, PreconditionError, ResourceLimitError

__all__ = [
    "InputError",
    "PreconditionError",
    "ResourceLimitError",
    "spectral_radius_class",
    "leading_eigenvalue_interval",
    "subinvariant_vector",
    "imprimitivity_index",
    "pullback_slope",
    "canonical_obstruction",
    "run",
    "replay",
]


def _text(m):
    return [[str(Fraction(e)) for e in row] for row in m]


def _pair(p):
    return Fraction(p[0]), Fraction(p[1])


def spectral_radius_class(matrix):
    tag, iv = _core.spectral_radius_class(_text(matrix))
    return tag, _pair(iv)


def leading_eigenvalue_interval(matrix, width=Fraction(1, 10**6)):
    return _pair(_core.leading_eigenvalue_interval(_text(matrix), str(Fraction(width))))


def subinvariant_vector(matrix):
    v = _core.subinvariant_vector(_text(matrix))
    return None if v is None else [Fraction(x) for x in v]


def imprimitivity_index(matrix):
    return _core.imprimitivity_index(_text(matrix))


def pullback_slope(a, slope):
    """Returns (target slope, component count, component degree)."""
    return _core.pullback_slope(a, slope[0], slope[1])


def canonical_obstruction(a):
    c = _core.canonical_obstruction(a)
    return None if c is None else (c[0], Fraction(c[1]))


def run(command, document, **options):
    """Runs one analysis; returns (exit code, report dict)."""
    options = {k: str(v) if isinstance(v, Fraction) else v for k, v in options.items()}
    request = {"command": command, "input": document, "options": options}
    code, text = _core.run(json.dumps(request))
    return code, json.loads(text)


def replay(report):
    return _core.replay(json.dumps(report))
