"""Exact root counting for sparse polynomials over F_q((T)).

Thin wrapper over the C++ core: every function takes the polynomial text
grammar (e.g. ``"x^4 + (1+T+T^2)*x^2 + (T+T^2)*x"``) and returns parsed JSON.
"""

import json as _json

from ._core import (  # noqa: F401
    CapError,
    CheckError,
    PrecisionError,
)
from . import _core


def roots(expr, q=2, e=1, prec=16, deg=0):
    """Distinct zeros in F_q((T^(1/e))), or of degree <= deg when deg > 0."""
    return _json.loads(_core.roots(expr, q, e, prec, deg))


def polygon(expr, q=2, e=1):
    """Newton polygon with dependence indices and the proper order."""
    return _json.loads(_core.polygon(expr, q, e))


def oracle(expr, q=2, prec=8, lo=-3, hi=4):
    """Brute-force enumeration root set over a valuation window."""
    return _json.loads(_core.oracle(expr, q, prec, lo, hi))


def bound(q, k, d):
    """Per-degree Moebius counts and the total degree-d bound."""
    return _json.loads(_core.bound(q, k, d))


def verify(expr, q=2, prec=16):
    """Every campaign check (bounds, lemma, trees, phi, oracle) on one input."""
    return _json.loads(_core.verify(expr, q, prec))


def subspace(basis, q=2, F=0, scale="1", d=0, prec=16):
    """Subspace polynomial for a comma-separated basis, with a sharpness report."""
    return _json.loads(_core.subspace(basis, q, F, scale, d, prec))


def campaign(spec):
    """Run a verification campaign; `spec` is a CorpusSpec dict or JSON string."""
    if isinstance(spec, dict):
        spec = _json.dumps(spec)
    return _json.loads(_core.campaign(spec))
