"""Gauss hypergeometric function 2F1(a, b; c; x) on [0, 1].

Below x = 3/4 the defining series is summed directly.  At and above it the
zero-balanced case c = a + b (and more generally c = a + b + m for integer m)
is summed from its logarithmic expansion in powers of 1 - x, which converges
at rate 1 - x <= 1/4.  Negative integer excess goes through the Euler
transformation first.  At x = 1 Gauss's summation is used when c > a + b.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DivergenceError, DomainError, NonConvergenceError


class AccuracyWarning(UserWarning):
    """Evaluation route used outside the region it was designed for."""


@dataclass(frozen=True)
class HypParams:
    a: float
    b: float
    c: float
    x: float

    def __post_init__(self):
        if self.c <= 0 and float(self.c).is_integer():
            raise DomainError(f"c must not be a nonpositive integer, got {self.c}")
        if not 0.0 <= self.x <= 1.0:
            raise DomainError(f"x must lie in [0, 1], got {self.x}")


def _raise_for(status: int, a, b, c, x) -> None:
    if status == _kernels.OK:
        return
    where = f"2F1({a}, {b}; {c}; {x})"
    if status == _kernels.NONCONVERGED:
        raise NonConvergenceError(f"{where}: series reached {_kernels.MAX_TERMS} terms without converging")
    if status == _kernels.DIVERGENT:
        raise DivergenceError(f"{where}: diverges at x = 1 since c - a - b <= 0")
    raise DomainError(f"{where}: no evaluation route for these parameters")


def hyp2f1_series(a: float, b: float, c: float, x: float) -> float:
    """Direct sum of the defining power series, 0 <= x < 1."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"direct series needs 0 <= x < 1, got {x}")
    if c <= 0 and float(c).is_integer():
        raise DomainError(f"c must not be a nonpositive integer, got {c}")
    v, st, _ = _kernels.series_2f1(float(a), float(b), float(c), float(x))
    _raise_for(st, a, b, c, x)
    return float(v)


def hyp2f1_zb_near1(a: float, b: float, x: float) -> float:
    """2F1(a, b; a+b; x) from its expansion about x = 1.

    Meant for x >= 3/4; it still converges for smaller x but is not used
    there, and an :class:`AccuracyWarning` is emitted below x = 1/2.
    """
    if not (a > 0 and b > 0):
        raise DomainError(f"near-1 expansion needs a, b > 0, got a={a}, b={b}")
    if not 0.0 < x < 1.0:
        raise DomainError(f"near-1 expansion needs 0 < x < 1, got {x}")
    if x < 0.5:
        warnings.warn(f"near-1 expansion evaluated at x={x} < 1/2", AccuracyWarning, stacklevel=2)
    v, st, _ = _kernels.near1_2f1(float(a), float(b), 0, float(x))
    _raise_for(st, a, b, a + b, x)
    return float(v)


def hyp2f1_route(a: float, b: float, c: float, x: float) -> tuple[float, str]:
    """Value and the name of the route that produced it."""
    v, st, r = _kernels.hyp2f1_scalar(float(a), float(b), float(c), float(x))
    _raise_for(st, a, b, c, x)
    return float(v), _kernels.ROUTE_NAMES[r]


def hyp2f1(a: float, b: float, c: float, x: float) -> float:
    return hyp2f1_route(a, b, c, x)[0]


def hyp2f1_grid(a: float, b: float, c: float, xs) -> np.ndarray:
    """Vectorised :func:`hyp2f1` over an array of abscissae in [0, 1]."""
    xs = np.asarray(xs, dtype=float)
    flat = xs.ravel()
    v, st, _ = _kernels.hyp2f1_array(a, b, c, flat)
    bad = np.flatnonzero(st != _kernels.OK)
    if bad.size:
        i = bad[0]
        _raise_for(int(st[i]), a, b, c, float(flat[i]))
    return v.reshape(xs.shape)


def d_hyp2f1(a: float, b: float, c: float, x: float) -> float:
    """d/dx 2F1(a, b; c; x) = (ab/c) 2F1(a+1, b+1; c+1; x), 0 <= x < 1."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"derivative needs 0 <= x < 1, got {x}")
    if a == 0 or b == 0:
        return 0.0
    return a * b / c * hyp2f1(a + 1, b + 1, c + 1, x)


def d_hyp2f1_grid(a: float, b: float, c: float, xs) -> np.ndarray:
    xs = np.asarray(xs, dtype=float)
    if a == 0 or b == 0:
        return np.zeros_like(xs)
    return a * b / c * hyp2f1_grid(a + 1, b + 1, c + 1, xs)


def gauss_value(a: float, b: float, c: float) -> float:
    """2F1(a, b; c; 1) for c > a + b."""
    if not c - a - b > 0:
        raise DivergenceError("Gauss summation needs c > a + b")
    return math.exp(math.lgamma(c) + math.lgamma(c - a - b) - math.lgamma(c - a) - math.lgamma(c - b))
