"""Exact arithmetic for D'Arcais (Nekrasov-Okounkov) polynomials.

Thin wrapper over the compiled core: arbitrary-precision values cross the
boundary as decimal strings and are converted to python ints here.
"""

import json as _json

try:
    from darcais._darcais import *  # installed layout
    from darcais import _darcais as _core
except ImportError:  # build-tree layout: _darcais.so next to the package dir
    from _darcais import *
    import _darcais as _core

__all__ = [
    "darcais_polynomial",
    "eval_A",
    "product_expansion",
    "cyclotomic",
    "partition_count",
    "hook_lengths",
    "inertial",
    "min_poly",
    "factor_modp",
    "verify",
    "run_cli",
]


def darcais_polynomial(n, g="sigma"):
    """Coefficients of A_n^g = n! P_n^g, constant term first, as ints."""
    return [int(c) for c in _core.darcais_coeffs(g, n)[n]]


def product_expansion(r, n):
    """Coefficients of prod_{k>=1} (1 - q^k)^r up to q^n."""
    return [int(c) for c in _core.product_expansion(r, n)]


def cyclotomic(m):
    """Coefficients of Phi_m, constant term first."""
    return [int(c) for c in _core.cyclotomic(m)]


def verify(what, **kwargs):
    """Run a verifier and return the report as a dict.

    what: one of 'pentagonal', 'periodicity', 'zmija', 'roots-of-unity',
    'hooklength', 'certify'.
    """
    runners = {
        "pentagonal": lambda: _core.verify_pentagonal(kwargs.get("n", 50)),
        "periodicity": lambda: _core.verify_periodicity(
            kwargs.get("g", "sigma"), kwargs["p"], kwargs.get("n", 50)
        ),
        "zmija": lambda: _core.verify_zmija(kwargs.get("g", "sigma")),
        "roots-of-unity": lambda: _core.verify_roots_of_unity(
            kwargs.get("g", "sigma"), kwargs.get("n", 30), kwargs.get("m", 12)
        ),
        "hooklength": lambda: _core.verify_hooklength(kwargs.get("n", 8)),
        "certify": lambda: _core.certify(
            [str(c) for c in kwargs["minpoly"]], kwargs.get("g", "sigma"), kwargs["p"]
        ),
    }
    if what not in runners:
        raise ValueError(f"unknown verifier: {what}")
    return _json.loads(runners[what]())
