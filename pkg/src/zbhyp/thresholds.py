"""Extremum thresholds alpha0, delta_-, delta_+ and grid classifiers for
curvature and monotonicity of phi, f and the G-ratio."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError
from .hyp2f1 import hyp2f1_grid
from .phi import (
    PLUS_STABLE_GAP,
    ZbParams,
    _as_params,
    aux_eval,
    c_threshold,
    f_second_derivative,
    phi,
    phi_plus_extended,
    psi_big_scale,
)
from .special import beta, ramanujan_R

SCAN_POINTS = 4096
X_TOL = 1e-10
CURVATURE_MARGIN = 1e-4
MONOTONE_MARGIN = 1e-9
STRICT_TOL = 1e-9
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class ThresholdBundle:
    R: float
    inv_sum: float
    c_ab: float
    alpha0: float
    delta_minus: float
    delta_plus: float
    g_ratio_up: float
    alpha0_at: float = math.nan
    delta_minus_at: float = math.nan
    delta_plus_at: float = math.nan

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CurvatureVerdict:
    verdict: str  # "convex" | "concave" | "neither"
    witness: float | None
    min_second: float
    max_second: float


@dataclass(frozen=True)
class MonotonicityVerdict:
    verdict: str  # "increasing" | "decreasing" | "neither"
    witness: float | None
    min_slope: float
    max_slope: float


def probe_grid(n: int, margin: float, *, split: float = 0.05) -> np.ndarray:
    """n abscissae in [margin, 1 - margin], geometric near both ends and
    uniform in the middle, so endpoint behaviour is resolved."""
    if n < 4:
        raise DomainError("grid needs at least 4 points")
    n_end = n // 4
    n_mid = n - 2 * n_end
    left = np.geomspace(margin, split, n_end, endpoint=False)
    mid = np.linspace(split, 1.0 - split, n_mid)
    right = 1.0 - np.geomspace(split, margin, n_end + 1)[1:]
    return np.concatenate([left, mid, right])


def _scan_grid(n: int, gap: float, include_one: bool) -> np.ndarray:
    half = n // 2
    uni = np.linspace(0.0, 1.0 - gap, n - half)
    geo = 1.0 - np.geomspace(0.1, gap, half)
    xs = np.unique(np.concatenate([uni, geo]))
    if include_one:
        xs = np.append(xs, 1.0)
    return xs


def _refine(func, xs, vals, i, sense):
    """Golden-section refinement of a sampled extremum at interior index i."""
    if i == 0 or i == len(xs) - 1:
        return xs[i], vals[i]
    sign = -1.0 if sense == "max" else 1.0
    lo, mid, hi = xs[i - 1], xs[i], xs[i + 1]
    try:
        res = minimize_scalar(lambda t: sign * func(t), bracket=(lo, mid, hi), method="golden",
                              options={"xtol": X_TOL / max(mid, 1e-300)})
    except ValueError:  # flat bracket at rounding level
        return xs[i], vals[i]
    if not lo <= res.x <= hi:
        return xs[i], vals[i]
    value = sign * res.fun
    better = value > vals[i] if sense == "max" else value < vals[i]
    return (float(res.x), float(value)) if better else (xs[i], vals[i])


def extrema_phi_pm(params, n: int = SCAN_POINTS):
    """(alpha0, delta_minus, delta_plus) plus the abscissae where they occur.

    alpha0 = max phi_+ and delta_plus = min phi_+ over [0, 1] (phi_+ extended
    by its limit R(a,b) at 1); delta_minus = max phi_- over [0, 1 - 1e-6].
    """
    p = _as_params(params)
    p.require_positive()
    xp = _scan_grid(n, PLUS_STABLE_GAP, include_one=True)
    vp = np.asarray(phi_plus_extended(p, xp))
    xm = _scan_grid(n, PLUS_STABLE_GAP, include_one=False)
    vm = np.asarray(aux_eval(p, xm).phi_minus)

    def plus(t):
        return float(phi_plus_extended(p, min(max(t, 0.0), 1.0)))

    def minus(t):
        return float(aux_eval(p, min(max(t, 0.0), 1.0 - PLUS_STABLE_GAP)).phi_minus)

    a_at, alpha0 = _refine(plus, xp, vp, int(np.argmax(vp)), "max")
    dp_at, delta_plus = _refine(plus, xp, vp, int(np.argmin(vp)), "min")
    dm_at, delta_minus = _refine(minus, xm, vm, int(np.argmax(vm)), "max")
    return {
        "alpha0": float(alpha0), "alpha0_at": float(a_at),
        "delta_minus": float(delta_minus), "delta_minus_at": float(dm_at),
        "delta_plus": float(delta_plus), "delta_plus_at": float(dp_at),
    }


def g_ratio_up(params) -> float:
    p = _as_params(params)
    p.require_positive()
    a, b = p.a, p.b
    return (ramanujan_R(a, b) - ramanujan_R(a + 0.5, b + 0.5)) / beta(a + 0.5, b + 0.5)


def thresholds(params, n: int = SCAN_POINTS) -> ThresholdBundle:
    p = _as_params(params)
    p.require_positive()
    ext = extrema_phi_pm(p, n)
    return ThresholdBundle(
        R=ramanujan_R(p.a, p.b),
        inv_sum=1.0 / p.a + 1.0 / p.b,
        c_ab=c_threshold(p),
        g_ratio_up=g_ratio_up(p),
        **ext,
    )


def _richardson_second(func, xs, step):
    """Central second difference at steps h and h/2, Richardson-combined."""
    f0 = func(xs)

    def d2(h):
        return (func(xs + h) - 2.0 * f0 + func(xs - h)) / (h * h)

    return (4.0 * d2(step / 2.0) - d2(step)) / 3.0, f0


def _verdict(values, tol, xs, labels):
    up, down = labels
    neg = values < -tol
    pos = values > tol
    if not neg.any() and not pos.any():
        verdict, witness = (up if values.sum() >= 0 else down), None
    elif not neg.any():
        verdict, witness = up, None
    elif not pos.any():
        verdict, witness = down, None
    else:
        verdict, witness = "neither", float(xs[int(np.argmin(values / np.maximum(tol, 1e-300)))])
    return verdict, witness


def classify_curvature(params, c: float, target: str = "phi", n: int = 512,
                       margin: float = CURVATURE_MARGIN) -> CurvatureVerdict:
    """Sign test of the second derivative of phi or f on n grid points."""
    if n < 64:
        raise DomainError("classify_curvature needs n >= 64")
    p = _as_params(params)
    xs = probe_grid(n, margin)
    if target == "phi":
        step = np.minimum(1e-3, 0.5 * np.minimum(xs, 1.0 - xs))
        values, f0 = _richardson_second(lambda t: np.asarray(phi(p, c, t)), xs, step)
        tol = STRICT_TOL * np.maximum(1.0, np.abs(f0)) + 64.0 * _EPS * np.abs(f0) / step ** 2
    elif target == "f_ratio":
        if not c > 0:
            raise DomainError(f"f_ratio needs c > 0, got {c}")
        values = np.asarray(f_second_derivative(p, c, xs))
        u = c - np.log1p(-xs)
        tol = STRICT_TOL * psi_big_scale(p, c, xs) / ((1.0 - xs) ** 2 * np.abs(u) ** 3)
    else:
        raise DomainError(f"unknown curvature target {target!r}")
    verdict, witness = _verdict(values, tol, xs, ("convex", "concave"))
    return CurvatureVerdict(verdict, witness, float(values.min()), float(values.max()))


def _slope_verdict(func, n, margin):
    xs = np.concatenate([probe_grid(n, margin)])
    vals = np.asarray(func(xs))
    dx = np.diff(xs)
    slopes = np.diff(vals) / dx
    scale = np.maximum(np.abs(vals[:-1]), np.abs(vals[1:]))
    tol = STRICT_TOL * np.maximum(1.0, scale) + 8.0 * _EPS * scale / dx
    mids = 0.5 * (xs[:-1] + xs[1:])
    verdict, witness = _verdict(slopes, tol, mids, ("increasing", "decreasing"))
    return MonotonicityVerdict(verdict, witness, float(slopes.min()), float(slopes.max()))


def classify_monotonicity(params, c: float, n: int = 512,
                          margin: float = MONOTONE_MARGIN) -> MonotonicityVerdict:
    """First-difference sign test of phi_{a,b,c} on (0, 1)."""
    if n < 64:
        raise DomainError("classify_monotonicity needs n >= 64")
    p = _as_params(params)
    p.require_positive()
    return _slope_verdict(lambda t: phi(p, c, t), n, margin)


def g_ratio(params, c: float, x):
    """(c + x 2F1(a+1/2, b+1/2; a+b+1; x)) / 2F1(a, b; a+b; x)."""
    p = _as_params(params)
    a, b = sorted((p.a, p.b))  # symmetric in (a, b)
    xs = np.asarray(x, dtype=float)
    num = c + xs * hyp2f1_grid(a + 0.5, b + 0.5, a + b + 1.0, xs)
    out = num / hyp2f1_grid(a, b, a + b, xs)
    return float(out) if xs.ndim == 0 else out


def classify_g_ratio(params, c: float, n: int = 512,
                     margin: float = MONOTONE_MARGIN) -> MonotonicityVerdict:
    if n < 64:
        raise DomainError("classify_g_ratio needs n >= 64")
    p = _as_params(params)
    p.require_positive()
    return _slope_verdict(lambda t: g_ratio(p, c, t), n, margin)


__all__ = [
    "ThresholdBundle", "CurvatureVerdict", "MonotonicityVerdict", "ZbParams",
    "probe_grid", "extrema_phi_pm", "thresholds", "g_ratio_up", "g_ratio",
    "classify_curvature", "classify_monotonicity", "classify_g_ratio",
]
