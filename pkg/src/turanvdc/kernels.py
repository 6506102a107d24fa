"""Fejer kernel F_q, the nonnegative building block of the extremal construction.

Two equivalent representations are provided: the triangular coefficient form
F(x) = (1/q)(1 + 2 sum_{nu<q} (1 - nu/q) cos(2 pi nu x)) and the closed form
(sin(pi q x) / (q sin(pi x)))^2.  F vanishes at nu/q for nu = 1..q-1 and
F(0) = 1.
"""
from __future__ import annotations

import numpy as np

from .core import CosPoly

# below this |sin(pi x)| the quotient is evaluated as its analytic limit 1
_SING_TOL = 1e-9


def fejer(q: int) -> CosPoly:
    """Fejer kernel of order q as a CosPoly: t0 = 1/q, t_nu = (2/q)(1 - nu/q)."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    t = np.empty(q)
    t[0] = 1.0 / q
    nu = np.arange(1, q)
    t[1:] = (2.0 / q) * (1.0 - nu / q)
    return CosPoly(t)


def fejer_closed(q: int, x):
    """Closed form (sin(pi q x)/(q sin(pi x)))^2, with value 1 at integer x."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    xa = np.asarray(x, dtype=float)
    den = np.sin(np.pi * xa)
    num = np.sin(np.pi * q * xa)
    safe = np.abs(den) >= _SING_TOL
    ratio = np.where(safe, num / np.where(safe, q * den, 1.0), 1.0)
    vals = np.where(safe, ratio * ratio, 1.0)
    return float(vals) if np.isscalar(x) or xa.ndim == 0 else vals
