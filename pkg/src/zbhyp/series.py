"""Expansions of R(x) = R(x, 1-x) and B(x) = B(x, 1-x) in powers of
t = (1-2x)^2, the coefficient families of the two combinations

    f(x) = (1 + x(1-x) - (x(1-x))^2) B(x) - R(x) = sum b_n t^n
    g(x) = R(x) - B(x) / (1 + x(1-x))            = sum d_n t^n

and finite-difference complete-monotonicity probes.

R(x) = log 16 + 4 sum_{n>=1} lambda(2n+1) t^n and B(x) = 4 sum beta(2n+1) t^n.
For large n the leading 1's of lambda and beta cancel exactly in b_n and d_n,
so those coefficients are assembled from lambda - 1 and beta - 1 and keep full
relative accuracy even when they are far below 1e-16.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import DomainError, StepUnderflowError
from .special import (
    beta,
    dirichlet_beta,
    dirichlet_beta_excess,
    dirichlet_eta,
    dirichlet_lambda,
    dirichlet_lambda_excess,
    digamma,
    ramanujan_R,
    trigamma,
)

MAX_ORDER = 200
SIGN_TOL = 1e-14
QUOTED_B1 = 0.919
_EPS = np.finfo(float).eps

FAMILIES = ("R_series", "B_series", "f_final_b", "g_final_d", "H_gamma")


@dataclass
class CoeffTable:
    family: str
    order: int
    values: np.ndarray
    errors: np.ndarray = None
    notes: list = field(default_factory=list)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.errors is None:
            self.errors = 4.0 * _EPS * np.abs(self.values)
        if len(self.values) != self.order + 1:
            raise ValueError("values must have order + 1 entries")

    @property
    def signs(self) -> list[str]:
        # 0 only when the entry is both tiny and not resolved above its error bound
        floor = SIGN_TOL * max(1.0, abs(self.values[0]))
        out = []
        for v, e in zip(self.values, self.errors):
            if abs(v) <= floor and abs(v) <= e:
                out.append("0")
            else:
                out.append("+" if v > 0 else "-")
        return out

    @property
    def all_nonnegative(self) -> bool:
        return "-" not in self.signs

    def partial_sum(self, x) -> np.ndarray | float:
        t = (1.0 - 2.0 * np.asarray(x, dtype=float)) ** 2
        return P.polyval(t, self.values)

    def rows(self):
        return [(i, float(v), s) for i, (v, s) in enumerate(zip(self.values, self.signs))]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "value", "sign"])
        for i, v, s in self.rows():
            w.writerow([i, f"{v:.17g}", s])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "family": self.family,
            "order": self.order,
            "rows": [{"index": i, "value": v, "sign": s} for i, v, s in self.rows()],
            "notes": list(self.notes),
        }
        return json.dumps(doc, indent=2)


def _check_order(N: int) -> int:
    if not 0 <= N <= MAX_ORDER or int(N) != N:
        raise DomainError(f"series order must be an integer in [0, {MAX_ORDER}], got {N!r}")
    return int(N)


def _in_t(poly_in_s):
    """Rewrite a polynomial in s = x(1-x) as one in t = (1-2x)^2 (s = (1-t)/4)."""
    s_of_t = np.array([0.25, -0.25])
    out = np.zeros(1)
    for k, coef in enumerate(poly_in_s):
        out = P.polyadd(out, coef * P.polypow(s_of_t, k))
    return out


# 1 + s - s^2 and 1 + s, as polynomials in t
F_WEIGHT = _in_t([1.0, 1.0, -1.0])
G_DENOM = _in_t([1.0, 1.0])


def _beta_odd(n):
    return dirichlet_beta(2 * n + 1)


def coeffs_R_B(N: int) -> tuple[CoeffTable, CoeffTable]:
    N = _check_order(N)
    r = [math.log(16.0)] + [4.0 * dirichlet_lambda(2 * n + 1) for n in range(1, N + 1)]
    bcoef = [4.0 * _beta_odd(n) for n in range(N + 1)]
    return CoeffTable("R_series", N, r), CoeffTable("B_series", N, bcoef)


def coeffs_f_final(N: int) -> CoeffTable:
    """b_n: coefficients of (1 + s - s^2) B(x) - R(x) in t."""
    N = _check_order(N)
    w = F_WEIGHT
    deg = len(w) - 1
    vals, errs = [], []
    for n in range(N + 1):
        if n < deg:
            # low orders: direct combination
            terms = [4.0 * w[j] * _beta_odd(n - j) for j in range(n + 1)]
            terms.append(-(math.log(16.0) if n == 0 else 4.0 * dirichlet_lambda(2 * n + 1)))
        else:
            # sum_j w_j = 1 (s = 0 at t = 1), so the unit parts cancel exactly
            terms = [4.0 * w[j] * dirichlet_beta_excess(2 * (n - j) + 1) for j in range(deg + 1)]
            terms.append(-4.0 * dirichlet_lambda_excess(2 * n + 1))
        vals.append(math.fsum(terms))
        errs.append(8.0 * _EPS * math.fsum(abs(t) for t in terms))
    table = CoeffTable("f_final_b", N, vals, np.array(errs))
    if N >= 1:
        table.notes.append(
            f"b_1 from the coefficient formula is {vals[1]:.6g}; the quoted approximation "
            f"{QUOTED_B1} is not reproduced (see b1_three_ways)")
    return table


def _reciprocal_series(poly, N):
    """Coefficients of 1/poly(t) up to t^N."""
    inv = np.zeros(N + 1)
    inv[0] = 1.0 / poly[0]
    for n in range(1, N + 1):
        acc = sum(poly[j] * inv[n - j] for j in range(1, min(n, len(poly) - 1) + 1))
        inv[n] = -acc / poly[0]
    return inv


def coeffs_g_final(N: int) -> CoeffTable:
    """d_n: coefficients of R(x) - B(x)/(1 + s) in t."""
    N = _check_order(N)
    q = G_DENOM
    if len(q) != 2:
        raise AssertionError("1 + s must be linear in t")
    inv = _reciprocal_series(q, N + 1)
    ratio = -q[1] / q[0]  # inv is geometric with this ratio
    vals, errs = [], []
    for n in range(N + 1):
        if n == 0:
            terms = [math.log(16.0), -4.0 * inv[0] * _beta_odd(0)]
        else:
            # 1/q(1) = 1 splits as the head sum_{j<=n} inv_j plus the geometric tail
            tail = inv[n + 1] / (1.0 - ratio)
            terms = [4.0 * tail, 4.0 * dirichlet_lambda_excess(2 * n + 1)]
            terms += [-4.0 * inv[n - m] * dirichlet_beta_excess(2 * m + 1) for m in range(n + 1)]
        vals.append(math.fsum(terms))
        errs.append(8.0 * _EPS * math.fsum(abs(t) for t in terms))
    return CoeffTable("g_final_d", N, vals, np.array(errs))


def coeffs_H_gamma(N: int) -> CoeffTable:
    """Taylor coefficients in u = 1/2 - x of H(x) = Gamma(3/2-x) Gamma(1/2+x)/x + psi(x) - psi(1/2+x).

    With pi u / sin(pi u) = sum eta~(k) u^k (eta~(0) = 1, eta~(2k) = 2 eta(2k),
    odd entries 0) the coefficients are sum_k 2^(n-k+1) eta~(k) - 2^(n+1) eta(n+1).
    """
    N = _check_order(N)
    et = np.zeros(N + 1)
    et[0] = 1.0
    for k in range(2, N + 1, 2):
        et[k] = 2.0 * dirichlet_eta(k)
    vals = []
    for n in range(N + 1):
        alpha = math.fsum(2.0 ** (n - k + 1) * et[k] for k in range(n + 1))
        vals.append(alpha - 2.0 ** (n + 1) * dirichlet_eta(n + 1))
    return CoeffTable("H_gamma", N, vals)


def series_table(family: str, N: int) -> CoeffTable:
    if family == "R_series":
        return coeffs_R_B(N)[0]
    if family == "B_series":
        return coeffs_R_B(N)[1]
    if family == "f_final_b":
        return coeffs_f_final(N)
    if family == "g_final_d":
        return coeffs_g_final(N)
    if family == "H_gamma":
        return coeffs_H_gamma(N)
    raise DomainError(f"unknown coefficient family {family!r}; expected one of {FAMILIES}")


# ---------------------------------------------------------------- closed forms

def R_sym(x: float) -> float:
    return ramanujan_R(x, 1.0 - x)


def B_sym(x: float) -> float:
    return beta(x, 1.0 - x)


def f_final(x: float) -> float:
    s = x * (1.0 - x)
    return (1.0 + s - s * s) * B_sym(x) - R_sym(x)


def g_final(x: float) -> float:
    return R_sym(x) - B_sym(x) / (1.0 + x * (1.0 - x))


def b1_three_ways(step: float = 0.05) -> dict:
    """b_1 from the coefficient formula, from f''(1/2)/8, and the quoted value."""
    formula = float(coeffs_f_final(1).values[1])
    taylor = float(_derivative(f_final, 0.5, 2, step)) / 8.0
    return {"formula": formula, "taylor_oracle": taylor, "quoted_value": QUOTED_B1}


def eval_F_pro1(x: float) -> float:
    """B(1/2+x, 3/2-x)/(x(1-x)) + R(1/2+x, 3/2-x) - R(x, 1-x) on (0, 1)."""
    if not 0.0 < x < 1.0:
        raise DomainError(f"F is defined on (0, 1), got {x}")
    return (beta(0.5 + x, 1.5 - x) / (x * (1.0 - x))
            + ramanujan_R(0.5 + x, 1.5 - x) - ramanujan_R(x, 1.0 - x))


def f_b(x: float, b: float) -> float:
    """(1/x + 1/b) B(1/2+x, 1/2+b) + R(1/2+x, 1/2+b) - R(x, b)."""
    if not (x > 0 and b > 0):
        raise DomainError("f_b needs x, b > 0")
    return (1.0 / x + 1.0 / b) * beta(0.5 + x, 0.5 + b) + ramanujan_R(0.5 + x, 0.5 + b) - ramanujan_R(x, b)


def H_pro1(x: float) -> float:
    """Gamma(3/2-x) Gamma(1/2+x)/x + psi(x) - psi(1/2+x); F_pro1(x) = H(x) + H(1-x)."""
    if not 0.0 < x < 1.5:
        raise DomainError(f"H is evaluated on (0, 3/2), got {x}")
    return (math.gamma(1.5 - x) * math.gamma(0.5 + x) / x + digamma(x) - digamma(0.5 + x))


def H_b(x: float, b: float) -> float:
    return beta(x, b) - ramanujan_R(x, b)


def H_b_prime(x: float, b: float) -> float:
    """d/dx [B(x, b) - R(x, b)] = B(x, b)(psi(x) - psi(x+b)) + psi'(x)."""
    return beta(x, b) * (digamma(x) - digamma(x + b)) + trigamma(x)


def G_b(x: float, b: float) -> float:
    return beta(x, b) - 1.0 / x


# ---------------------------------------------------------------- CM probes

# target -> (function of (x, b), domain lo, domain hi or None for b-dependent, singular points)
_TARGETS = {
    "H_b_prime": (lambda x, b: H_b_prime(x, b), 0.0, math.inf),
    "G_b": (lambda x, b: G_b(x, b), 0.0, math.inf),
    "F_pro1": (lambda x, b: eval_F_pro1(x), 0.0, 0.5),
    "f_b": (lambda x, b: f_b(x, b), 0.0, None),
    "f_final": (lambda x, b: f_final(x), 0.0, 0.5),
    "g_final": (lambda x, b: g_final(x), 0.0, 0.5),
}
PRIMARY_TARGETS = ("H_b_prime", "G_b", "F_pro1", "f_b")
PROBE_MARGIN = 1e-3
BASE_STEP = 1e-3
MIN_STEP = 1e-6


def _singular_distance(target, x):
    if target in ("F_pro1", "f_final", "g_final"):
        return min(x, 1.0 - x)
    return x


def _central_difference(func, x, m, h):
    # m-th central difference, stencil points x + (m/2 - k) h
    total = math.fsum((-1) ** k * math.comb(m, k) * func(x + (m / 2.0 - k) * h) for k in range(m + 1))
    return total / h ** m


def _derivative(func, x, m, h):
    """Two-level Richardson extrapolation of the m-th central difference (h, h/2, h/4)."""
    if m == 0:
        return func(x)
    d = [_central_difference(func, x, m, h / 2 ** i) for i in range(3)]
    r1 = [(4.0 * d[i + 1] - d[i]) / 3.0 for i in range(2)]
    return (16.0 * r1[1] - r1[0]) / 15.0


@dataclass(frozen=True)
class ProbeResult:
    order: int
    passed: bool
    worst_margin: float
    worst_x: float


def probe_step(target: str, x: float, m: int) -> float:
    h = BASE_STEP * 4.0 ** max(0, m - 2)
    # stencil reach (m/2) h must stay well inside the smooth region
    h = min(h, _singular_distance(target, x) / (m + 1.0))
    if h < MIN_STEP:
        raise StepUnderflowError(f"difference step {h:.3g} at x={x} is below {MIN_STEP}")
    return h


def cm_probe(target: str, b: float, orders: int, grid) -> list[ProbeResult]:
    """Check (-1)^m D^m target > 0 on the grid for m = 0..orders."""
    if target not in _TARGETS:
        raise DomainError(f"unknown probe target {target!r}; expected one of {sorted(_TARGETS)}")
    if not 0 <= orders <= 4:
        raise DomainError("probe orders are capped at 4")
    func, lo, hi = _TARGETS[target]
    if hi is None:
        hi = 1.0 - b
    xs = np.asarray(grid, dtype=float)
    if xs.size and (xs.min() < lo + PROBE_MARGIN or xs.max() > hi - PROBE_MARGIN):
        raise DomainError(f"{target}: grid must lie inside ({lo}, {hi}) with margin {PROBE_MARGIN}")

    def fx(t):
        return func(t, b)

    results = []
    for m in range(orders + 1):
        margins = []
        for x in xs:
            h = probe_step(target, float(x), m)
            margins.append((-1) ** m * _derivative(fx, float(x), m, h))
        margins = np.asarray(margins)
        i = int(np.argmin(margins)) if margins.size else 0
        results.append(ProbeResult(
            m, bool(np.all(margins > 0.0)),
            float(margins[i]) if margins.size else math.inf,
            float(xs[i]) if margins.size else math.nan))
    return results
