"""Hot numeric kernels: digamma/trigamma and the two 2F1 summation routes.

Every kernel exists twice.  The scalar versions are plain ``math`` code that
numba compiles with ``@njit`` when it is importable; the ``*_numpy`` versions
sum the same series vectorised over an array of abscissae.  Which path the
array entry points use is decided once, at import, from ``ZBHYP_DISABLE_NUMBA``.

Kernels never raise: they return a status code next to the value and the
Python layer in :mod:`zbhyp.hyp2f1` turns codes into exceptions.
"""
import math
import os

import numpy as np

try:  # pragma: no cover - exercised implicitly by whichever backend is present
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False

_DISABLE = os.environ.get("ZBHYP_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")
USE_NUMBA = HAVE_NUMBA and not _DISABLE
BACKEND = "numba" if USE_NUMBA else "numpy"

EULER_GAMMA = 0.57721566490153286060651209008240243

EPS = 1e-16
MAX_TERMS = 10000
# series switch point between the direct sum and the expansion about x = 1
SWITCH_X = 0.75
INT_TOL = 1e-13

OK = 0
NONCONVERGED = 1
DOMAIN = 2
DIVERGENT = 3

ROUTE_SERIES = 0
ROUTE_NEAR1 = 1
ROUTE_GAUSS = 2
ROUTE_EULER_SERIES = 3
ROUTE_EULER_NEAR1 = 4
ROUTE_NAMES = ("series", "near-1", "gauss", "euler+series", "euler+near-1")


def _identity(f):
    return f


jit = numba.njit(cache=True) if USE_NUMBA else _identity


@jit
def digamma(x):
    # upward recurrence to x >= 10, then asymptotic series through B_14 / x^14
    w = 0.0
    while x < 10.0:
        w += 1.0 / x
        x += 1.0
    z = 1.0 / (x * x)
    tail = z * (1.0 / 12.0 + z * (-1.0 / 120.0 + z * (1.0 / 252.0 + z * (-1.0 / 240.0
           + z * (1.0 / 132.0 + z * (-691.0 / 32760.0 + z * (1.0 / 12.0)))))))
    return math.log(x) - 0.5 / x - tail - w


@jit
def trigamma(x):
    w = 0.0
    while x < 10.0:
        w += 1.0 / (x * x)
        x += 1.0
    z = 1.0 / (x * x)
    tail = z * (1.0 / 6.0 + z * (-1.0 / 30.0 + z * (1.0 / 42.0 + z * (-1.0 / 30.0
           + z * (5.0 / 66.0 + z * (-691.0 / 2730.0 + z * (7.0 / 6.0)))))))
    return w + 1.0 / x + 0.5 * z + tail / x


@jit
def series_2f1(a, b, c, x):
    """Direct hypergeometric series; returns (value, status, terms_used)."""
    s = 1.0
    term = 1.0
    guard = EPS * (1.0 - x) if x < 1.0 else EPS
    ratio = 0.0
    for n in range(MAX_TERMS):
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x
        term *= ratio
        s += term
        if abs(term) <= guard * abs(s):
            return s, OK, n + 1
    return s, NONCONVERGED, MAX_TERMS


@jit
def near1_2f1(a, b, m, x):
    """2F1(a, b; a+b+m; x) for integer m >= 0 from the log expansion in 1 - x.

    m = 0 is the zero-balanced case.  Requires a, b > 0 and 0 < x < 1.
    Returns (value, status, terms_used).
    """
    w = 1.0 - x
    lw = math.log(w)
    finite = 0.0
    if m > 0:
        pre = math.exp(math.lgamma(m) + math.lgamma(a + b + m)
                       - math.lgamma(a + m) - math.lgamma(b + m))
        t = 1.0
        acc = 1.0
        for n in range(1, m):
            t *= (a + n - 1.0) * (b + n - 1.0) / (n * (n - m)) * w
            acc += t
        finite = pre * acc
    sign = -1.0 if m % 2 == 1 else 1.0
    pref = sign * w ** m * math.exp(math.lgamma(a + b + m) - math.lgamma(a) - math.lgamma(b))
    coef = math.exp(-math.lgamma(m + 1.0))
    psi1 = -EULER_GAMMA
    psi2 = digamma(m + 1.0)
    psia = digamma(a + m)
    psib = digamma(b + m)
    wn = 1.0
    s = 0.0
    for n in range(MAX_TERMS):
        k = -psi1 - psi2 + psia + psib
        s += coef * wn * (lw + k)
        bound = coef * wn * (abs(lw) + abs(k))
        if n > 0 and bound <= EPS * abs(s):
            return finite - pref * s, OK, n + 1
        coef *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0))
        wn *= w
        psi1 += 1.0 / (n + 1.0)
        psi2 += 1.0 / (n + m + 1.0)
        psia += 1.0 / (a + m + n)
        psib += 1.0 / (b + m + n)
    return finite - pref * s, NONCONVERGED, MAX_TERMS


@jit
def gauss_2f1_at1(a, b, c):
    return math.exp(math.lgamma(c) + math.lgamma(c - a - b) - math.lgamma(c - a) - math.lgamma(c - b))


@jit
def _int_excess(a, b, c):
    s = c - a - b
    r = math.floor(s + 0.5)
    if abs(s - r) <= INT_TOL * max(1.0, abs(c)):
        return True, int(r)
    return False, 0


@jit
def _nonpos_int(v):
    return v <= 0.0 and v == math.floor(v)


@jit
def hyp2f1_scalar(a, b, c, x):
    """Routed evaluation on [0, 1]; returns (value, status, route)."""
    if not (x >= 0.0 and x <= 1.0):
        return math.nan, DOMAIN, ROUTE_SERIES
    if c <= 0.0 and c == math.floor(c):
        return math.nan, DOMAIN, ROUTE_SERIES
    if a == 0.0 or b == 0.0 or x == 0.0:
        return 1.0, OK, ROUTE_SERIES
    if _nonpos_int(a) or _nonpos_int(b):
        # polynomial: the series terminates
        v, st, _ = series_2f1(a, b, c, x)
        return v, st, ROUTE_SERIES
    if x == 1.0:
        if c - a - b > 0.0 and c - a > 0.0 and c - b > 0.0 and c > 0.0:
            return gauss_2f1_at1(a, b, c), OK, ROUTE_GAUSS
        if c - a - b <= 0.0:
            return math.inf, DIVERGENT, ROUTE_GAUSS
        return math.nan, DOMAIN, ROUTE_GAUSS
    if x < SWITCH_X:
        v, st, _ = series_2f1(a, b, c, x)
        return v, st, ROUTE_SERIES
    is_int, m = _int_excess(a, b, c)
    if _nonpos_int(c - a) or _nonpos_int(c - b):
        v, st, _ = series_2f1(c - a, c - b, c, x)
        return (1.0 - x) ** (c - a - b) * v, st, ROUTE_EULER_SERIES
    if is_int:
        if m >= 0 and a > 0.0 and b > 0.0:
            v, st, _ = near1_2f1(a, b, m, x)
            return v, st, ROUTE_NEAR1
        if m < 0 and c - a > 0.0 and c - b > 0.0:
            v, st, _ = near1_2f1(c - a, c - b, -m, x)
            return (1.0 - x) ** m * v, st, ROUTE_EULER_NEAR1
        return math.nan, DOMAIN, ROUTE_NEAR1
    if c - a - b > 0.0:
        v, st, _ = series_2f1(a, b, c, x)
        return v, st, ROUTE_SERIES
    v, st, _ = series_2f1(c - a, c - b, c, x)
    return (1.0 - x) ** (c - a - b) * v, st, ROUTE_EULER_SERIES


if USE_NUMBA:

    @numba.njit(cache=True)
    def _hyp2f1_loop(a, b, c, xs):
        n = xs.shape[0]
        out = np.empty(n)
        status = np.zeros(n, dtype=np.int64)
        route = np.zeros(n, dtype=np.int64)
        for i in range(n):
            v, st, r = hyp2f1_scalar(a, b, c, xs[i])
            out[i] = v
            status[i] = st
            route[i] = r
        return out, status, route

else:
    _hyp2f1_loop = None


# --------------------------------------------------------------------------
# pure-numpy fallback: same series, vectorised over x

def series_2f1_numpy(a, b, c, x):
    x = np.asarray(x, dtype=float)
    s = np.ones_like(x)
    term = np.ones_like(x)
    guard = np.where(x < 1.0, EPS * (1.0 - x), EPS)
    active = np.ones(x.shape, dtype=bool)
    for n in range(MAX_TERMS):
        if not active.any():
            return s, np.zeros(x.shape, dtype=np.int64)
        r = (a + n) * (b + n) / ((c + n) * (n + 1.0))
        term = np.where(active, term * r * x, 0.0)
        s = s + term
        active &= ~(np.abs(term) <= guard * np.abs(s))
    return s, np.where(active, NONCONVERGED, OK).astype(np.int64)


def near1_2f1_numpy(a, b, m, x):
    x = np.asarray(x, dtype=float)
    w = 1.0 - x
    lw = np.log(w)
    finite = np.zeros_like(x)
    if m > 0:
        pre = math.exp(math.lgamma(m) + math.lgamma(a + b + m) - math.lgamma(a + m) - math.lgamma(b + m))
        t = np.ones_like(x)
        acc = np.ones_like(x)
        for n in range(1, m):
            t = t * ((a + n - 1.0) * (b + n - 1.0) / (n * (n - m))) * w
            acc = acc + t
        finite = pre * acc
    sign = -1.0 if m % 2 else 1.0
    pref = sign * w ** m * math.exp(math.lgamma(a + b + m) - math.lgamma(a) - math.lgamma(b))
    coef = math.exp(-math.lgamma(m + 1.0))
    psi1, psi2 = -EULER_GAMMA, digamma(m + 1.0)
    psia, psib = digamma(a + m), digamma(b + m)
    wn = np.ones_like(x)
    s = np.zeros_like(x)
    active = np.ones(x.shape, dtype=bool)
    for n in range(MAX_TERMS):
        k = -psi1 - psi2 + psia + psib
        contrib = np.where(active, coef * wn * (lw + k), 0.0)
        s = s + contrib
        bound = coef * wn * (np.abs(lw) + abs(k))
        if n > 0:
            active &= ~(bound <= EPS * np.abs(s))
        if not active.any():
            return finite - pref * s, np.zeros(x.shape, dtype=np.int64)
        coef *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0))
        wn = wn * w
        psi1 += 1.0 / (n + 1.0)
        psi2 += 1.0 / (n + m + 1.0)
        psia += 1.0 / (a + m + n)
        psib += 1.0 / (b + m + n)
    return finite - pref * s, np.where(active, NONCONVERGED, OK).astype(np.int64)


def hyp2f1_numpy(a, b, c, xs):
    xs = np.asarray(xs, dtype=float)
    out = np.full(xs.shape, np.nan)
    status = np.zeros(xs.shape, dtype=np.int64)
    route = np.zeros(xs.shape, dtype=np.int64)

    bad = ~((xs >= 0.0) & (xs <= 1.0))
    if c <= 0.0 and c == math.floor(c):
        bad[:] = True
    status[bad] = DOMAIN
    todo = ~bad
    if a == 0.0 or b == 0.0:
        out[todo] = 1.0
        return out, status, route
    if _nonpos_int(a) or _nonpos_int(b):
        out[todo], status[todo] = series_2f1_numpy(a, b, c, xs[todo])
        return out, status, route
    zero = todo & (xs == 0.0)
    out[zero] = 1.0
    todo &= ~zero

    one = todo & (xs == 1.0)
    if one.any():
        v, st, r = hyp2f1_scalar(a, b, c, 1.0)
        out[one], status[one], route[one] = v, st, r
        todo &= ~one

    low = todo & (xs < SWITCH_X)
    if low.any():
        out[low], status[low] = series_2f1_numpy(a, b, c, xs[low])
    high = todo & ~low
    if not high.any():
        return out, status, route

    is_int, m = _int_excess(a, b, c)
    xh = xs[high]
    if _nonpos_int(c - a) or _nonpos_int(c - b):
        v, st = series_2f1_numpy(c - a, c - b, c, xh)
        v = (1.0 - xh) ** (c - a - b) * v
        r = ROUTE_EULER_SERIES
    elif is_int:
        if m >= 0 and a > 0.0 and b > 0.0:
            v, st = near1_2f1_numpy(a, b, m, xh)
            r = ROUTE_NEAR1
        elif m < 0 and c - a > 0.0 and c - b > 0.0:
            v, st = near1_2f1_numpy(c - a, c - b, -m, xh)
            v = (1.0 - xh) ** m * v
            r = ROUTE_EULER_NEAR1
        else:
            v, st, r = np.full(xh.shape, np.nan), np.full(xh.shape, DOMAIN), ROUTE_NEAR1
    elif c - a - b > 0.0:
        v, st = series_2f1_numpy(a, b, c, xh)
        r = ROUTE_SERIES
    else:
        v, st = series_2f1_numpy(c - a, c - b, c, xh)
        v = (1.0 - xh) ** (c - a - b) * v
        r = ROUTE_EULER_SERIES
    out[high], status[high], route[high] = v, st, r
    return out, status, route


def hyp2f1_numba(a, b, c, xs):
    if _hyp2f1_loop is None:
        raise RuntimeError("numba backend unavailable (not installed or disabled)")
    return _hyp2f1_loop(float(a), float(b), float(c), np.ascontiguousarray(xs, dtype=float))


def hyp2f1_array(a, b, c, xs):
    """Array evaluation through the selected backend; returns (values, status, route)."""
    if USE_NUMBA:
        return hyp2f1_numba(a, b, c, xs)
    return hyp2f1_numpy(float(a), float(b), float(c), xs)
