"""Exact Schroeter constructions on plane cubics.

Points and coefficients are exact rationals written as strings ("-3/4").
"""

import json

from . import _schroeter
from ._schroeter import GeometryError

__all__ = ["GeometryError", "construct", "seed_from_curve", "fit", "verify", "plot"]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def construct(seed, max_points=512, max_generations=16, shuffle_seed=None):
    """Run the construction from a seed dict (or JSON text); returns the run as a dict."""
    return json.loads(_schroeter.construct(_text(seed), max_points, max_generations, shuffle_seed))


def seed_from_curve(a, b, points):
    """Seed on y^2 = x^3 + a x^2 + b x from three affine points, e.g. "1,2;2,4;1/16,23/64"."""
    return json.loads(_schroeter.seed_from_curve(str(a), str(b), points))


def fit(points):
    """Coefficients of the cubic through nine points, in monomial order x^3 ... z^3."""
    return _schroeter.fit(points).split()


def verify(run, suite="all"):
    return json.loads(_schroeter.verify(_text(run), suite))


def plot(run, tangents=False):
    """SVG text for a run."""
    return _schroeter.plot(_text(run), tangents)
