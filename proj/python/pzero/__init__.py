"""Zero 2-rank curves in characteristic 2: automorphism groups, genus spectra, bounds.

The heavy lifting happens in the C++ extension; these wrappers decode its JSON
documents into plain dicts so results look the same here and on the command line.
"""

import json as _json

from ._core import curve_genus, curve_two_rank, group_order
from . import _core as _c

__all__ = [
    "group_order",
    "build_group",
    "classify",
    "curve_info",
    "curve_genus",
    "curve_two_rank",
    "rational_points",
    "verify_automorphisms",
    "spectrum",
    "quotient_table",
    "bounds",
    "verify",
]


def build_group(family, n):
    """Natural 2-transitive action (or the SU3 matrix handle) as a dict."""
    return _json.loads(_c.build_group_json(family, n))


def classify(degree, generators):
    """Structural classification of a permutation group given by generator images."""
    return _json.loads(_c.classify_json(degree, generators))


def curve_info(family, **params):
    """Genus, automorphism order, and model equation of a curve family member."""
    return _json.loads(_c.curve_info_json(family, **params))


def rational_points(family, field_exp, **params):
    """Rational point count over F_{2^field_exp}."""
    return _json.loads(_c.rational_points_json(family, field_exp, **params))


def verify_automorphisms(family, **params):
    """Rebuild the automorphism group on the curve's points and compare orders."""
    return _json.loads(_c.verify_automorphisms_json(family, **params))


def spectrum(family, n):
    """Genus spectrum of the family: retained and filtered entries."""
    return _json.loads(_c.spectrum_json(family, n))


def quotient_table(n):
    """Tame-quotient consistency table for the unitary tower over F_{n^2}."""
    return _json.loads(_c.quotient_json(n))


def bounds(order, g, abelian=False, solvable=False, fixes_point=False):
    """Automorphism-order bound checks for a genus-g curve."""
    return _json.loads(_c.bounds_json(order, g, abelian, solvable, fixes_point))


def verify(suite="all", quick=False):
    """Run the verification battery and return its criteria results."""
    return _json.loads(_c.verify_json(suite, quick))
