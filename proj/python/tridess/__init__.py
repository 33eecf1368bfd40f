"""Trace fields, prime splitting and congruence dessins of hyperbolic
triangle groups.

Thin convenience layer over the C++ extension: every operation returns the
same JSON document the command-line tool prints, parsed into Python objects.
Signature entries may be given as integers or the string ``"inf"``.
"""

import json

from ._tridess import (
    ResourceError,
    UnsupportedPrimeError,
    ValidationError,
    selftest,
)
from . import _tridess

__all__ = [
    "field",
    "splits",
    "dessin",
    "dessin_bytes",
    "orbit",
    "selftest",
    "ValidationError",
    "UnsupportedPrimeError",
    "ResourceError",
]


def _entry(x):
    if isinstance(x, str):
        return x
    return str(int(x))


def field(p, q, r):
    """Trace field K_{p,q,r} as a dict (degree, minimal polynomials, gamma)."""
    return json.loads(_tridess.field(_entry(p), _entry(q), _entry(r)))


def splits(p, q, r, ell):
    """Prime ideals of the trace field above the rational prime ell."""
    return json.loads(_tridess.splits(_entry(p), _entry(q), _entry(r), ell))


def dessin_bytes(p, q, r, ell, ideal_index=0, max_group_order=1000000,
                 force=False, cache_dir=""):
    """Raw JSON text of the dessin document; byte-identical across runs."""
    return _tridess.dessin(_entry(p), _entry(q), _entry(r), ell, ideal_index,
                           max_group_order, force, cache_dir)


def dessin(p, q, r, ell, ideal_index=0, max_group_order=1000000,
           force=False, cache_dir=""):
    """Congruence dessin at one prime ideal: permutation triple, passport,
    genus / cusp / theta report."""
    return json.loads(dessin_bytes(p, q, r, ell, ideal_index, max_group_order,
                                   force, cache_dir))


def orbit(p, q, r, ell, max_group_order=1000000, force=False):
    """Galois orbits of the primes above ell with per-ideal invariants and
    the Theorem-C consistency verdict."""
    return json.loads(_tridess.orbit(_entry(p), _entry(q), _entry(r), ell,
                                     max_group_order, force))
