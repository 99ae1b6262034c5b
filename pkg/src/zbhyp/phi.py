"""The ratio phi_{a,b,c}, its reciprocal f_{a,b,c}, and the quadratic system
(h, g, Delta) whose roots govern the curvature of f.

With F = 2F1(a,b;a+b;x), F1 = 2F1(a,b;a+b+1;x), F2 = 2F1(a+1,b+1;a+b+2;x)
and p = ab/(a+b):

    h = p^2 (a+b)/(a+b+1) (1-x) F2 + p F1
    g = -(2 p F1 + F)
    Delta = g^2 - 8 h F
    omega_pm = (-g +- sqrt(Delta)) / (2h),   phi_pm = log(1-x) + omega_pm

and f'' = Psi / ((1-x)^2 (c - log(1-x))^3) with
Psi = h U^2 + g U + 2F = h (c - phi_+)(c - phi_-),  U = c - log(1-x).

Everything accepts a scalar or an array of abscissae.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateParameterError, DomainError
from .hyp2f1 import hyp2f1_grid
from .special import beta, ramanujan_R

# below 1 - PLUS_STABLE_GAP phi_+ is replaced by a chord to its limit R(a,b)
PLUS_STABLE_GAP = 1e-6


@dataclass(frozen=True)
class ZbParams:
    a: float
    b: float

    def __post_init__(self):
        if not (self.a >= 0 and self.b >= 0):
            raise DomainError(f"a, b must be nonnegative, got a={self.a}, b={self.b}")

    @property
    def zero_balanced_theorem_domain(self) -> bool:
        return self.a + self.b <= 1.0

    @property
    def degenerate(self) -> bool:
        return self.a == 0 or self.b == 0

    def require_positive(self) -> None:
        if self.degenerate:
            raise DegenerateParameterError(
                f"a={self.a}, b={self.b}: needs a, b > 0 (R(a,b), c(a,b) and the roots are undefined)")


@dataclass
class AuxEval:
    """Auxiliary values at one abscissa (or elementwise over an array)."""

    x: np.ndarray | float
    F: np.ndarray | float
    F1: np.ndarray | float
    F2: np.ndarray | float
    h: np.ndarray | float
    g: np.ndarray | float
    delta: np.ndarray | float
    omega_minus: np.ndarray | float
    omega_plus: np.ndarray | float
    phi_minus: np.ndarray | float
    phi_plus: np.ndarray | float


def _as_params(params) -> ZbParams:
    return params if isinstance(params, ZbParams) else ZbParams(*params)


def _unwrap(arr, scalar_in):
    return float(arr) if scalar_in else arr


def zb_F(params, x):
    """F(x) = 2F1(a, b; a+b; x)."""
    p = _as_params(params)
    xs = np.asarray(x, dtype=float)
    if p.degenerate:
        return _unwrap(np.ones_like(xs), xs.ndim == 0)
    return _unwrap(hyp2f1_grid(p.a, p.b, p.a + p.b, xs), xs.ndim == 0)


def _open_unit(x, lo_closed=False):
    xs = np.asarray(x, dtype=float)
    ok = (xs >= 0.0) if lo_closed else (xs > 0.0)
    if not np.all(ok & (xs < 1.0)):
        raise DomainError(f"abscissa must lie in {'[0' if lo_closed else '(0'}, 1), got {x}")
    return xs


def phi(params, c: float, x):
    """(c - log(1-x)) / 2F1(a, b; a+b; x) on (0, 1)."""
    p = _as_params(params)
    xs = _open_unit(x)
    out = (c - np.log1p(-xs)) / zb_F(p, xs)
    return _unwrap(out, xs.ndim == 0)


def f_ratio(params, c: float, x):
    """2F1(a, b; a+b; x) / (c - log(1-x)) on [0, 1); needs c > 0."""
    if not c > 0:
        raise DomainError(f"f_ratio needs c > 0 so that c - log(1-x) stays positive, got {c}")
    p = _as_params(params)
    xs = _open_unit(x, lo_closed=True)
    out = zb_F(p, xs) / (c - np.log1p(-xs))
    return _unwrap(out, xs.ndim == 0)


def aux_eval(params, x) -> AuxEval:
    p = _as_params(params)
    p.require_positive()
    xs = _open_unit(x, lo_closed=True)
    a, b = p.a, p.b
    s = a + b
    q = a * b / s
    F = hyp2f1_grid(a, b, s, xs)
    F1 = hyp2f1_grid(a, b, s + 1, xs)
    F2 = hyp2f1_grid(a + 1, b + 1, s + 2, xs)
    h = (a * b) ** 2 / (s * (s + 1)) * (1.0 - xs) * F2 + q * F1
    g = -(2.0 * q * F1 + F)
    delta = g * g - 8.0 * h * F
    root = np.sqrt(np.maximum(delta, 0.0))
    big = -g + root  # both terms positive, no cancellation
    omega_plus = big / (2.0 * h)
    omega_minus = 4.0 * F / big  # product of roots is 2F/h
    lg = np.log1p(-xs)
    sc = xs.ndim == 0
    return AuxEval(*(_unwrap(v, sc) for v in (xs, F, F1, F2, h, g, delta, omega_minus, omega_plus,
                                              lg + omega_minus, lg + omega_plus)))


def phi_plus_extended(params, x):
    """phi_+ continued to [0, 1] with phi_+(1) = R(a, b).

    Within PLUS_STABLE_GAP of 1 the value is the chord from the last direct
    evaluation to R(a, b).
    """
    p = _as_params(params)
    p.require_positive()
    xs = np.asarray(x, dtype=float)
    if not np.all((xs >= 0.0) & (xs <= 1.0)):
        raise DomainError(f"abscissa must lie in [0, 1], got {x}")
    r = ramanujan_R(p.a, p.b)
    xs_stable = 1.0 - PLUS_STABLE_GAP
    direct = xs <= xs_stable
    out = np.empty(xs.shape)
    if direct.any():
        out[direct] = aux_eval(p, xs[direct]).phi_plus
    if (~direct).any():
        anchor = float(aux_eval(p, xs_stable).phi_plus)
        t = (xs[~direct] - xs_stable) / PLUS_STABLE_GAP
        out[~direct] = anchor + t * (r - anchor)
        out[xs == 1.0] = r
    return _unwrap(out, xs.ndim == 0)


def phi_minus(params, x):
    return aux_eval(params, x).phi_minus


def c_threshold(params) -> float:
    """Smallest c for which phi_{a,b,c} is concave on (0, 1)."""
    p = _as_params(params)
    p.require_positive()
    a, b = p.a, p.b
    s, ab = a + b, a * b
    return s * (s - 2 * ab) * (s + 1) / (ab * ((s + 1) * (s - 2 * ab) + ab * s))


def phi_second_deriv0(params, c: float) -> float:
    """phi''(0); its unique root in c is c_threshold."""
    p = _as_params(params)
    p.require_positive()
    a, b = p.a, p.b
    s, ab = a + b, a * b
    return (s - 2 * ab) / s - c * ab * ((s + 1) * (s - 2 * ab) + ab * s) / (s * s * (s + 1))


def phi_second_derivative(params, c: float, x):
    """Closed-form phi'' from the contiguous derivatives of F (quotient rule)."""
    p = _as_params(params)
    xs = _open_unit(x, lo_closed=True)
    if p.degenerate:
        return _unwrap(1.0 / (1.0 - xs) ** 2, xs.ndim == 0)
    a, b = p.a, p.b
    s = a + b
    V = hyp2f1_grid(a, b, s, xs)
    V1 = a * b / s * hyp2f1_grid(a + 1, b + 1, s + 1, xs)
    V2 = a * b * (a + 1) * (b + 1) / (s * (s + 1)) * hyp2f1_grid(a + 2, b + 2, s + 2, xs)
    U = c - np.log1p(-xs)
    U1 = 1.0 / (1.0 - xs)
    U2 = U1 * U1
    out = (U2 * V - U * V2) / V ** 2 - 2.0 * V1 * (U1 * V - U * V1) / V ** 3
    return _unwrap(out, xs.ndim == 0)


def psi_big(params, c: float, x):
    """Psi = h U^2 + g U + 2F with U = c - log(1-x); same sign as f''."""
    aux = aux_eval(params, x)
    u = c - np.log1p(-np.asarray(aux.x))
    out = aux.h * u * u + aux.g * u + 2.0 * aux.F
    return _unwrap(out, np.ndim(x) == 0)


def psi_big_scale(params, c: float, x):
    """Magnitude of the largest term in Psi; sets rounding tolerances."""
    aux = aux_eval(params, x)
    u = c - np.log1p(-np.asarray(aux.x))
    return np.abs(aux.h * u * u) + np.abs(aux.g * u) + 2.0 * np.abs(aux.F)


def psi_factored(params, c: float, x):
    aux = aux_eval(params, x)
    return aux.h * (c - aux.phi_plus) * (c - aux.phi_minus)


def f_second_derivative(params, c: float, x):
    """f'' = Psi / ((1-x)^2 (c - log(1-x))^3)."""
    xs = np.asarray(x, dtype=float)
    u = c - np.log1p(-xs)
    return psi_big(params, c, x) / ((1.0 - xs) ** 2 * u ** 3)


def s_poly(params, c: float) -> float:
    """S(a, b, c), affine and decreasing in c."""
    p = _as_params(params)
    p.require_positive()
    a, b = p.a, p.b
    s, ab = a + b, a * b
    return (1.0 - ab * ab / ((s + 1) * s)
            - ab * (a + 1) * (b + 1) * (s + ab + 2) / (s * (s + 1) * (s + 2)) * c)


def h_at_zero(params) -> float:
    p = _as_params(params)
    a, b = p.a, p.b
    s = a + b
    return a * (a + 1) * b * (b + 1) / (s * (s + 1))


def delta_at_zero(params) -> float:
    p = _as_params(params)
    a, b = p.a, p.b
    s = a + b
    q = a * b / s
    return 1.0 - 4.0 * q + 4.0 * q * q * (1.0 - s) / (s + 1.0)


def phi_pm_at_zero(params) -> tuple[float, float]:
    """Closed forms of (phi_-(0), phi_+(0))."""
    p = _as_params(params)
    a, b = p.a, p.b
    s, ab = a + b, a * b
    root = np.sqrt(max(delta_at_zero(p), 0.0))
    den = 2.0 * ab * (s + ab + 1.0)
    return ((s + 1) * (s + 2 * ab - s * root) / den, (s + 1) * (s + 2 * ab + s * root) / den)


def a_product(params, x):
    """A(x) = (1-x) 2F1(a,b;a+b;x) 2F1(a,b;a+b+1;x)."""
    p = _as_params(params)
    xs = np.asarray(x, dtype=float)
    s = p.a + p.b
    return (1.0 - xs) * hyp2f1_grid(p.a, p.b, s, xs) * hyp2f1_grid(p.a, p.b, s + 1, xs)


def phi_limit_at_one(params) -> float:
    """phi_{a,b,c}(1-) = B(a, b) for every c."""
    p = _as_params(params)
    p.require_positive()
    return beta(p.a, p.b)
