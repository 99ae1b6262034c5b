"""Grid verification of the functional inequalities built on phi and f, the
lemma-level probes and the threshold sharpness checks, collected into a
mergeable :class:`Report`.

Every check carries a ``claim_id`` from :data:`CLAIMS`.  Checks of forms known
to be misprinted are recorded with ``enforced=False``; they land in
``Report.discrepancies`` and never count as violations.
"""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, PreconditionError
from .hyp2f1 import hyp2f1
from .phi import (
    ZbParams,
    _as_params,
    a_product,
    aux_eval,
    c_threshold,
    delta_at_zero,
    f_ratio,
    h_at_zero,
    phi,
    phi_pm_at_zero,
    phi_plus_extended,
    s_poly,
)
from .series import (
    b1_three_ways,
    cm_probe,
    coeffs_f_final,
    coeffs_g_final,
    f_final,
    g_final,
)
from .special import beta, ramanujan_R, riemann_zeta
from .thresholds import (
    classify_curvature,
    classify_g_ratio,
    classify_monotonicity,
    probe_grid,
    thresholds,
)

LOG2 = math.log(2.0)
LOG16 = math.log(16.0)
GRID_MARGIN = 1e-4
DEFAULT_TOL = 1e-12
IDENTITY_TOL = 1e-9
PRECONDITION_SLACK = 1e-8
CSV_COLUMNS = ("claim_id", "point", "lhs", "rhs", "margin", "allowance", "enforced", "passed")

CLAIMS = {
    "cor1.lower": "c >= c(a,b): phi(x) + phi(1-x) >= c + B(a,b)",
    "cor1.lower_alt": "c >= c(a,b): phi(x) + phi(1-x) >= c + 1/B(a,b) (variant constant)",
    "cor1.upper": "c >= c(a,b): phi(x) + phi(1-x) <= 2(c + log 2)/F(1/2)",
    "cor1.tight_half": "phi(1/2) doubled equals 2(c + log 2)/F(1/2)",
    "cor1.rev_lower": "c <= R(a,b): phi(x) + phi(1-x) <= c + B(a,b)",
    "cor1.rev_upper": "c <= R(a,b): phi(x) + phi(1-x) >= 2(c + log 2)/F(1/2)",
    "cor2.lower": "c in [delta-, delta+]: f(x) + f(1-x) >= 1/c + 1/B(a,b)",
    "cor2.upper": "c in [delta-, delta+]: f(x) + f(1-x) <= 2 F(1/2)/(c + log 2)",
    "cor2.upper_printed": "c in [delta-, delta+]: f(x) + f(1-x) <= F(1/2)/(2c + 2 log 2) (printed form)",
    "cor2.concave": "c in [delta-, delta+]: x -> f(x) + f(1-x) is concave",
    "cor2.tight_half": "f(1/2) doubled equals 2 F(1/2)/(c + log 2)",
    "cor2.rev_lower": "c >= alpha0: f(x) + f(1-x) <= 1/c + 1/B(a,b)",
    "cor2.rev_upper": "c >= alpha0: f(x) + f(1-x) >= 2 F(1/2)/(c + log 2)",
    "sand1.lower": "log 16 - 4 pi/5 + B(x)/(1+x(1-x)) <= R(x)",
    "sand1.upper": "R(x) < 1 + B(x)/(1+x(1-x))",
    "sand2.lower": "log 16 - 4 pi/5 + (14 zeta(3) - 2 pi (8 + 5 pi^2)/25)(x-1/2)^2 + B(x)/(1+x(1-x)) <= R(x)",
    "sand2.upper": "R(x) < 1 + B(x)/(1+x(1-x))",
    "sand3.lower": "(1+x(1-x)-x^2(1-x)^2) B(x) - 1 < R(x)",
    "sand3.upper": "R(x) <= (1+x(1-x)-x^2(1-x)^2) B(x) - 19 pi/16 + log 16",
    "sand3.upper_printed": "R(x) < (1+x(1-x)-x^2(1-x)^2) B(x) - 21 pi/16 + log 16 (printed form)",
    "sand.symmetry": "every sandwich margin is symmetric under x -> 1-x",
    "lem.h_increasing": "h is strictly increasing on [0, 1)",
    "lem.h_zero": "h(0) = ab(ab+a+b+1)/((a+b)(a+b+1))",
    "lem.h_limit": "h(x) -> 1/B(a,b) as x -> 1",
    "lem.delta_increasing": "Delta is strictly increasing on [0, 1)",
    "lem.delta_zero": "Delta(0) closed form",
    "lem.phi_pm_zero": "phi_-(0) and phi_+(0) closed forms",
    "lem.root_identity": "h w^2 + g w + 2F = 0 at both roots",
    "lem.root_order": "omega_- <= omega_+",
    "lem.four_ab": "a + b <= 1 implies 4ab <= a + b",
    "lem.s_negative": "S(a,b,c) < 0 for c >= c(a,b)",
    "lem.a_decreasing": "A(x) = (1-x) F F1 is strictly decreasing",
    "lem.phi_range": "c <= R(a,b): phi maps (0,1) into (c, B(a,b))",
    "thr.convex_below_R": "phi is convex for c = R - 1e-3",
    "thr.neither_above_R": "phi is neither convex nor concave for c = R + 0.1 < c(a,b)",
    "thr.concave_above_c": "phi is concave for c = c(a,b) + 1e-3",
    "thr.neither_below_c": "phi is neither convex nor concave for c = c(a,b) - 0.1 > R",
    "thr.f_convex": "f is convex for c = alpha0 + 1e-3",
    "thr.f_concave": "f is concave for c = (delta- + delta+)/2",
    "thr.bundle_order": "delta- <= delta+ <= alpha0 and R <= alpha0",
    "thr.R_below_inv_sum": "R(a,b) < 1/a + 1/b",
    "thr.endpoint": "|phi_+(1 - 1e-5) - R(a,b)| <= 1e-2 and phi_+(1) = R(a,b)",
    "thr.mono_increasing": "phi is increasing for c = R - 1e-3",
    "thr.mono_decreasing": "phi is decreasing for c = 1/a + 1/b + 1e-3",
    "thr.mono_between": "phi is not monotone for c strictly between R and 1/a + 1/b",
    "thr.gratio_decreasing": "G is decreasing for c = 1/a + 1/b + 1e-3",
    "thr.gratio_increasing": "G is increasing for c = g_ratio_up - 1e-3",
    "ser.d_positive": "d_n > 0",
    "ser.b_nonnegative": "b_n >= 0",
    "ser.f_series": "sum b_n (1-2x)^(2n) equals f(x)",
    "ser.g_series": "sum d_n (1-2x)^(2n) equals g(x)",
    "ser.b1_quoted": "b_1 is close to the quoted 0.919",
    "ser.cm": "(-1)^m D^m target > 0 on the probe grid",
    "ser.gb_witness": "G_b with b = 2 is not positive somewhere",
}


@dataclass(frozen=True)
class Check:
    """One evaluated claim instance.  ``margin`` is the signed slack (negative
    means the inequality fails); ``allowance`` is the rounding slack tolerated."""

    claim_id: str
    point: str
    lhs: float
    rhs: float
    margin: float
    allowance: float = 0.0
    enforced: bool = True

    @property
    def passed(self) -> bool:
        return self.margin >= -self.allowance

    def as_dict(self) -> dict:
        return {"claim_id": self.claim_id, "point": self.point, "lhs": self.lhs,
                "rhs": self.rhs, "margin": self.margin, "allowance": self.allowance,
                "enforced": self.enforced}


# a violation is a failed enforced check
Violation = Check


@dataclass
class Report:
    suite: str
    grid: str = ""
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    tol: float = DEFAULT_TOL

    # ---- recording
    @staticmethod
    def _scale(lhs, rhs):
        return max(1.0, abs(lhs), abs(rhs)) if math.isfinite(lhs) and math.isfinite(rhs) else 1.0

    def _add(self, claim_id, point, lhs, rhs, margin, allowance, enforced):
        if claim_id not in CLAIMS:
            raise KeyError(f"unregistered claim {claim_id!r}")
        self.checks.append(Check(claim_id, str(point), lhs, rhs, margin, allowance, enforced))

    def le(self, claim_id, point, lhs, rhs, *, enforced=True, tol=None):
        """Record lhs <= rhs, tolerating tol relative to max(1, |lhs|, |rhs|)."""
        lhs, rhs = float(lhs), float(rhs)
        tol = self.tol if tol is None else tol
        self._add(claim_id, point, lhs, rhs, rhs - lhs, tol * self._scale(lhs, rhs), enforced)

    def close(self, claim_id, point, lhs, rhs, tol, *, enforced=True):
        """Record |lhs - rhs| <= tol * max(1, |lhs|, |rhs|)."""
        lhs, rhs = float(lhs), float(rhs)
        self._add(claim_id, point, lhs, rhs, -abs(lhs - rhs), tol * self._scale(lhs, rhs), enforced)

    def expect(self, claim_id, point, ok: bool, observed="", *, enforced=True):
        """Record a categorical check; lhs is 1.0 when it holds, rhs the expected 1.0."""
        self._add(claim_id, f"{point} {observed}".strip(), float(ok), 1.0,
                  0.0 if ok else -1.0, 0.0, enforced)

    # ---- summaries
    @property
    def enforced(self):
        return [c for c in self.checks if c.enforced]

    @property
    def checks_run(self) -> int:
        return len(self.enforced)

    @property
    def violations(self) -> list:
        return [c for c in self.enforced if not c.passed]

    @property
    def checks_passed(self) -> int:
        return self.checks_run - len(self.violations)

    @property
    def discrepancies(self) -> list:
        return [c for c in self.checks if not c.enforced and not c.passed]

    def discrepancy_summary(self) -> list:
        """One entry per registered discrepancy claim: count and worst instance."""
        worst, count = {}, {}
        for d in self.discrepancies:
            count[d.claim_id] = count.get(d.claim_id, 0) + 1
            if d.claim_id not in worst or d.margin < worst[d.claim_id].margin:
                worst[d.claim_id] = d
        return [{"claim_id": k, "statement": CLAIMS[k], "count": count[k], "worst": worst[k].as_dict()}
                for k in sorted(worst)]

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "Report") -> "Report":
        return Report(
            suite=self.suite if self.suite == other.suite else f"{self.suite}+{other.suite}",
            grid=self.grid or other.grid,
            checks=self.checks + other.checks,
            notes=self.notes + [n for n in other.notes if n not in self.notes],
            tol=self.tol,
        )

    # ---- serialization
    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "grid": self.grid,
            "counts": {"checks_run": self.checks_run, "checks_passed": self.checks_passed,
                       "violations": len(self.violations),
                       "known_discrepancies": len(self.discrepancies)},
            "violations": [v.as_dict() for v in self.violations],
            "known_discrepancies": self.discrepancy_summary(),
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for c in self.checks:
            w.writerow([c.claim_id, c.point, f"{c.lhs:.17g}", f"{c.rhs:.17g}", f"{c.margin:.17g}",
                        f"{c.allowance:.17g}", int(c.enforced), int(c.passed)])
        return buf.getvalue()


def _grid(n: int) -> np.ndarray:
    if n <= 0:
        return np.empty(0)
    return np.linspace(GRID_MARGIN, 1.0 - GRID_MARGIN, n)


def _pt(p: ZbParams, c=None, x=None) -> str:
    parts = [f"a={p.a:.17g}", f"b={p.b:.17g}"]
    if c is not None:
        parts.append(f"c={c:.17g}")
    if x is not None:
        parts.append(f"x={x:.17g}")
    return " ".join(parts)


def _require_theorem_domain(p: ZbParams):
    p.require_positive()
    if not p.zero_balanced_theorem_domain:
        raise PreconditionError(f"a + b = {p.a + p.b} exceeds 1")


# ------------------------------------------------------------- phi + phi(1-x)

def _sum_phi(p, c, xs):
    return np.asarray(phi(p, c, xs)) + np.asarray(phi(p, c, 1.0 - xs))


def _sum_f(p, c, xs):
    return np.asarray(f_ratio(p, c, xs)) + np.asarray(f_ratio(p, c, 1.0 - xs))


def verify_corollary1(params, c: float, n: int = 1024, tol: float = DEFAULT_TOL,
                      control: bool = True) -> Report:
    p = _as_params(params)
    _require_theorem_domain(p)
    cab = c_threshold(p)
    if c < cab - PRECONDITION_SLACK:
        raise PreconditionError(f"c = {c} is below the concavity threshold c(a,b) = {cab}")
    rep = Report("corollary1", f"{n} uniform points in [{GRID_MARGIN}, {1 - GRID_MARGIN}]", tol=tol)
    xs = _grid(n)
    if n == 0:
        return rep
    B = beta(p.a, p.b)
    half = hyp2f1(p.a, p.b, p.a + p.b, 0.5)
    top = 2.0 * (c + LOG2) / half
    vals = _sum_phi(p, c, xs)
    for x, v in zip(xs, vals):
        pt = _pt(p, c, x)
        rep.le("cor1.lower", pt, c + B, v)
        rep.le("cor1.lower_alt", pt, c + 1.0 / B, v)
        rep.le("cor1.upper", pt, v, top)
    rep.close("cor1.tight_half", _pt(p, c, 0.5), 2.0 * phi(p, c, 0.5), top, 1e-10)
    rep.notes.append("lower constant checked both as c + B(a,b) and as the variant c + 1/B(a,b)")
    if control:
        cr = ramanujan_R(p.a, p.b) - 0.1
        top_r = 2.0 * (cr + LOG2) / half
        for x, v in zip(xs, _sum_phi(p, cr, xs)):
            pt = _pt(p, cr, x)
            rep.le("cor1.rev_lower", pt, v, cr + B)
            rep.le("cor1.rev_upper", pt, top_r, v)
    return rep


def verify_corollary2(params, c: float, n: int = 1024, tol: float = DEFAULT_TOL,
                      control: bool = True, bundle=None) -> Report:
    p = _as_params(params)
    _require_theorem_domain(p)
    tb = bundle or thresholds(p)
    if not tb.delta_minus - PRECONDITION_SLACK <= c <= tb.delta_plus + PRECONDITION_SLACK:
        raise PreconditionError(
            f"c = {c} lies outside [delta-, delta+] = [{tb.delta_minus}, {tb.delta_plus}]")
    rep = Report("corollary2", f"{n} uniform points in [{GRID_MARGIN}, {1 - GRID_MARGIN}]", tol=tol)
    xs = _grid(n)
    if n == 0:
        return rep
    B = beta(p.a, p.b)
    half = hyp2f1(p.a, p.b, p.a + p.b, 0.5)
    top = 2.0 * half / (c + LOG2)
    printed = half / (2.0 * c + 2.0 * LOG2)
    vals = _sum_f(p, c, xs)
    for x, v in zip(xs, vals):
        pt = _pt(p, c, x)
        rep.le("cor2.lower", pt, 1.0 / c + 1.0 / B, v)
        rep.le("cor2.upper", pt, v, top)
        rep.le("cor2.upper_printed", pt, v, printed, enforced=False)
    rep.close("cor2.tight_half", _pt(p, c, 0.5), 2.0 * f_ratio(p, c, 0.5), top, 1e-10)
    # second differences of the symmetric sum on the uniform grid
    if n >= 3:
        d2 = vals[2:] - 2.0 * vals[1:-1] + vals[:-2]
        scale = 4.0 * np.finfo(float).eps * np.abs(vals[1:-1])
        i = int(np.argmax(d2 - scale))
        rep.le("cor2.concave", _pt(p, c, xs[i + 1]), d2[i] - scale[i], 0.0)
    ratio = 2.0 * f_ratio(p, c, 0.5) / printed
    rep.notes.append(
        f"{_pt(p, c)}: the printed upper bound F(1/2)/(2c + 2 log 2) sits below the value at "
        f"x = 1/2 by a factor {ratio:.12g}; the enforced bound is 2 F(1/2)/(c + log 2)")
    if control:
        cr = tb.alpha0 + 0.1
        top_r = 2.0 * half / (cr + LOG2)
        for x, v in zip(xs, _sum_f(p, cr, xs)):
            pt = _pt(p, cr, x)
            rep.le("cor2.rev_lower", pt, v, 1.0 / cr + 1.0 / B)
            rep.le("cor2.rev_upper", pt, top_r, v)
    return rep


# ------------------------------------------------------------- R(x), B(x) chains

def verify_sandwich(n: int = 1024, tol: float = DEFAULT_TOL) -> Report:
    rep = Report("sandwich", f"{n} uniform points in [{GRID_MARGIN}, {1 - GRID_MARGIN}]", tol=tol)
    if n == 0:
        return rep
    xs = _grid(n)
    d0 = LOG16 - 4.0 * math.pi / 5.0
    quad = 14.0 * riemann_zeta(3) - 2.0 * math.pi / 25.0 * (8.0 + 5.0 * math.pi ** 2)
    low3_derived = 19.0 * math.pi / 16.0 - LOG16
    low3_printed = 21.0 * math.pi / 16.0 - LOG16

    def margins(x):
        s = x * (1.0 - x)
        Rx = ramanujan_R(x, 1.0 - x)
        Bx = beta(x, 1.0 - x)
        q = Bx / (1.0 + s)
        w = (1.0 + s - s * s) * Bx
        return {
            "sand1.lower": (d0 + q, Rx),
            "sand1.upper": (Rx, 1.0 + q),
            "sand2.lower": (d0 + quad * (x - 0.5) ** 2 + q, Rx),
            "sand2.upper": (Rx, 1.0 + q),
            "sand3.lower": (w - 1.0, Rx),
            "sand3.upper": (Rx, w - low3_derived),
            "sand3.upper_printed": (Rx, w - low3_printed),
        }

    sym_worst = 0.0
    for x in xs:
        m = margins(x)
        mm = margins(1.0 - x)
        for cid, (lhs, rhs) in m.items():
            rep.le(cid, f"x={x:.17g}", lhs, rhs, enforced=not cid.endswith("_printed"))
            l2, r2 = mm[cid]
            sym_worst = max(sym_worst, abs((rhs - lhs) - (r2 - l2)) / max(1.0, abs(lhs)))
    rep.close("sand.symmetry", f"{n} points", sym_worst, 0.0, 1e-12)
    rep.notes.append(
        f"third chain: the printed constant 21 pi/16 - log 16 = {low3_printed:.12g} exceeds "
        f"f(1/2) = b_0 = {low3_derived:.12g}; the enforced constant is 19 pi/16 - log 16")
    return rep


# ------------------------------------------------------------- lemma probes

def verify_lemma_probes(params, n: int = 2048, tol: float = DEFAULT_TOL) -> Report:
    p = _as_params(params)
    _require_theorem_domain(p)
    rep = Report("lemmas", f"{n} points on [0, 1 - 1e-6]", tol=tol)
    if n == 0:
        return rep
    a, b = p.a, p.b
    xs = np.concatenate([np.linspace(0.0, 0.99, n - n // 4), 1.0 - np.geomspace(1e-2, 1e-6, n // 4 + 1)[1:]])
    aux = aux_eval(p, xs)
    eps = np.finfo(float).eps

    dh = np.diff(aux.h)
    i = int(np.argmin(dh))
    rep.le("lem.h_increasing", _pt(p, x=xs[i]), 0.0, dh[i], tol=0.0)
    dd = np.diff(aux.delta)
    i = int(np.argmin(dd))
    rep.le("lem.delta_increasing", _pt(p, x=xs[i]), 0.0, dd[i], tol=0.0)

    rep.close("lem.h_zero", _pt(p, x=0.0), aux.h[0],
              a * b * (a * b + a + b + 1) / ((a + b) * (a + b + 1)), IDENTITY_TOL)
    rep.close("lem.h_zero", _pt(p, x=0.0), aux.h[0], h_at_zero(p), IDENTITY_TOL)
    # h(1-) = 1/B up to a (1-x) log(1-x) correction
    x_end = 1.0 - 1e-6
    rep.close("lem.h_limit", _pt(p, x=x_end), float(aux_eval(p, x_end).h), 1.0 / beta(a, b), 1e-4)
    rep.close("lem.delta_zero", _pt(p, x=0.0), aux.delta[0], delta_at_zero(p), IDENTITY_TOL)
    pm, pp = phi_pm_at_zero(p)
    rep.close("lem.phi_pm_zero", _pt(p, x=0.0), aux.phi_minus[0], pm, IDENTITY_TOL)
    rep.close("lem.phi_pm_zero", _pt(p, x=0.0), aux.phi_plus[0], pp, IDENTITY_TOL)

    for name, w in (("omega_minus", aux.omega_minus), ("omega_plus", aux.omega_plus)):
        resid = aux.h * w * w + aux.g * w + 2.0 * aux.F
        scale = aux.h * w * w + np.abs(aux.g * w) + 2.0 * aux.F
        rel = np.abs(resid) / scale
        i = int(np.argmax(rel))
        rep.close("lem.root_identity", _pt(p, x=xs[i]) + f" {name}", rel[i], 0.0, IDENTITY_TOL)
    gap = aux.omega_plus - aux.omega_minus
    i = int(np.argmin(gap))
    rep.le("lem.root_order", _pt(p, x=xs[i]), 0.0, gap[i],
           tol=64.0 * eps * float(np.max(np.abs(aux.omega_plus[i]))))

    rep.le("lem.four_ab", _pt(p), 4.0 * a * b, a + b, tol=0.0)
    cab = c_threshold(p)
    for c in (cab, cab + 1.0, cab + 10.0):
        rep.le("lem.s_negative", _pt(p, c), s_poly(p, c), 0.0, tol=0.0)

    xa = np.linspace(0.0, 0.999, n)
    A = np.asarray(a_product(p, xa))
    dA = np.diff(A)
    i = int(np.argmax(dA))
    rep.le("lem.a_decreasing", _pt(p, x=xa[i]), dA[i], 0.0, tol=0.0)

    R = ramanujan_R(a, b)
    B = beta(a, b)
    xr = probe_grid(max(n // 4, 64), 1e-9)
    for c in (R - 0.5, R):
        v = np.asarray(phi(p, c, xr))
        rep.le("lem.phi_range", _pt(p, c) + " min", c, float(v.min()), tol=1e-9)
        rep.le("lem.phi_range", _pt(p, c) + " max", float(v.max()), B, tol=1e-9)
    return rep


# ------------------------------------------------------------- threshold sharpness

def verify_thresholds(params, n: int = 512, band: float = 1e-3) -> Report:
    p = _as_params(params)
    _require_theorem_domain(p)
    rep = Report("thresholds", f"{n}-point classifier grids, band {band}")
    if n == 0:
        return rep
    tb = thresholds(p)
    R, cab = tb.R, tb.c_ab

    def curv(cid, c, want, target="phi", enforced=True):
        v = classify_curvature(p, c, target=target, n=n)
        rep.expect(cid, _pt(p, c), v.verdict == want, f"verdict={v.verdict}", enforced=enforced)

    curv("thr.convex_below_R", R - band, "convex")
    if R + 0.1 < cab:
        curv("thr.neither_above_R", R + 0.1, "neither")
    curv("thr.concave_above_c", cab + band, "concave")
    if cab - 0.1 > R:
        curv("thr.neither_below_c", cab - 0.1, "neither")
    curv("thr.f_convex", tb.alpha0 + band, "convex", target="f_ratio")
    if tb.delta_plus - tb.delta_minus > 1e-6:
        curv("thr.f_concave", 0.5 * (tb.delta_minus + tb.delta_plus), "concave", target="f_ratio")

    ok = tb.delta_minus <= tb.delta_plus + 1e-8 and tb.delta_plus <= tb.alpha0 + 1e-8 and R <= tb.alpha0 + 1e-8
    rep.expect("thr.bundle_order", _pt(p), ok,
               f"delta-={tb.delta_minus:.12g} delta+={tb.delta_plus:.12g} alpha0={tb.alpha0:.12g}")
    rep.le("thr.R_below_inv_sum", _pt(p), R, tb.inv_sum, tol=0.0)
    near = float(phi_plus_extended(p, 1.0 - 1e-5))
    rep.close("thr.endpoint", _pt(p, x=1.0 - 1e-5), near, R, 1e-2)
    rep.expect("thr.endpoint", _pt(p, x=1.0), float(phi_plus_extended(p, 1.0)) == R)

    def mono(cid, c, want, fn=classify_monotonicity):
        v = fn(p, c, n=n)
        rep.expect(cid, _pt(p, c), v.verdict == want, f"verdict={v.verdict}")

    mono("thr.mono_increasing", R - band, "increasing")
    mono("thr.mono_decreasing", tb.inv_sum + band, "decreasing")
    mono("thr.mono_between", R + band, "neither")
    mono("thr.mono_between", tb.inv_sum - band, "neither")
    mono("thr.gratio_decreasing", tb.inv_sum + band, "decreasing", classify_g_ratio)
    mono("thr.gratio_increasing", tb.g_ratio_up - band, "increasing", classify_g_ratio)
    if p.a == p.b == 0.5:
        rep.notes.append(
            "a = b = 1/2: phi is increasing for c <= log 16 and decreasing for c >= 4 "
            "(not the transposed orientation with the two constants swapped)")
    return rep


# ------------------------------------------------------------- coefficient tables

def verify_series(order: int = 50, n_probe: int = 40, tol: float = DEFAULT_TOL) -> Report:
    rep = Report("series", f"orders 0..{order}; {n_probe}-point probe grids", tol=tol)
    if order == 0 or n_probe == 0:
        return rep
    bt = coeffs_f_final(order)
    dt = coeffs_g_final(order)
    for k, (bv, be) in enumerate(zip(bt.values, bt.errors)):
        rep.le("ser.b_nonnegative", f"n={k}", 0.0, bv + be, tol=0.0)
    for k, dv in enumerate(dt.values):
        rep.le("ser.d_positive", f"n={k}", 0.0, dv, tol=0.0)
        if dv <= 0:
            rep.notes.append(f"d_{k} = {dv!r} is not positive")
    tail_b, tail_d = coeffs_f_final(200), coeffs_g_final(200)
    for x in (0.1, 0.25, 0.4):
        rep.close("ser.f_series", f"x={x}", tail_b.partial_sum(x), f_final(x), 1e-9)
        rep.close("ser.g_series", f"x={x}", tail_d.partial_sum(x), g_final(x), 1e-9)
    three = b1_three_ways()
    rep.close("ser.b1_quoted", "n=1", three["formula"], three["quoted_value"], 1e-2, enforced=False)
    rep.notes.append(
        "b_1: coefficient formula {formula:.12g}, Taylor coefficient f''(1/2)/8 {taylor_oracle:.12g}, "
        "quoted value {quoted_value}".format(**three))
    rep.notes.append(f"d_0 = log 16 - 4 pi/5 = {dt.values[0]:.12g}")

    probes = {
        "H_b_prime": (1.0, np.linspace(0.1, 5.0, n_probe)),
        "G_b": (0.5, np.linspace(0.1, 5.0, n_probe)),
        "F_pro1": (0.0, np.linspace(0.01, 0.49, n_probe)),
        "f_b": (0.25, np.linspace(0.01, 0.74, n_probe)),
        "f_final": (0.0, np.linspace(0.01, 0.49, n_probe)),
        "g_final": (0.0, np.linspace(0.01, 0.49, n_probe)),
    }
    for target, (b, grid) in probes.items():
        for r in cm_probe(target, b, 4, grid):
            rep.le("ser.cm", f"{target} b={b} order={r.order} x={r.worst_x:.17g}", 0.0, r.worst_margin, tol=0.0)
    r0 = cm_probe("G_b", 2.0, 0, np.linspace(0.1, 5.0, n_probe))[0]
    rep.expect("ser.gb_witness", f"G_b b=2 x={r0.worst_x:.17g}", not r0.passed,
               f"value={r0.worst_margin:.12g}")
    return rep


# ------------------------------------------------------------- suite driver

SUITES = ("corollary1", "corollary2", "sandwich", "lemmas", "thresholds", "series", "all")
DEFAULT_VALUES = (0.1, 0.3, 0.5, 0.7, 0.9)


@dataclass
class SuiteConfig:
    suite: str = "all"
    a_values: tuple = DEFAULT_VALUES
    b_values: tuple = DEFAULT_VALUES
    grid: int = 1024
    classifier_grid: int = 512
    series_order: int = 50
    tol: float = DEFAULT_TOL
    c_offsets: tuple = (0.0, 0.5)
    workers: int = 1

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; expected one of {SUITES}")
        if self.grid < 0 or self.classifier_grid < 0:
            raise ConfigError("grid sizes must be nonnegative")
        if 0 < self.classifier_grid < 64:
            raise ConfigError("classifier grid must be 0 or at least 64")
        if not self.tol >= 0:
            raise ConfigError("tol must be nonnegative")
        if not 0 <= self.series_order <= 200:
            raise ConfigError("series_order must lie in [0, 200]")
        for v in (*self.a_values, *self.b_values):
            if not v > 0:
                raise ConfigError(f"parameter values must be positive, got {v}")

    def pairs(self):
        out = []
        for a in self.a_values:
            for b in self.b_values:
                if a + b <= 1.0 + 1e-12:
                    out.append((float(a), float(b)))
        return out


_KEYS = {
    "suite": str, "grid": int, "classifier_grid": int, "series_order": int, "tol": float, "workers": int,
    "a_values": "floats", "b_values": "floats", "c_offsets": "floats",
}


def parse_config(text: str, **overrides) -> SuiteConfig:
    """Flat ``key = value`` lines; ``#`` starts a comment; lists are comma separated."""
    kw = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in _KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        kind = _KEYS[key]
        try:
            if kind == "floats":
                kw[key] = tuple(float(v) for v in val.split(",") if v.strip()) if val else ()
            else:
                kw[key] = kind(val)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: bad value for {key}: {val!r}") from exc
    kw.update({k: v for k, v in overrides.items() if v is not None})
    return SuiteConfig(**kw)


def _task_list(cfg: SuiteConfig):
    want = (lambda s: cfg.suite in (s, "all"))
    tasks = []
    if cfg.grid == 0:
        return tasks
    pairs = cfg.pairs()
    for ab in pairs:
        if want("corollary1"):
            for off in cfg.c_offsets:
                tasks.append(("corollary1", ab, off))
        if want("corollary2"):
            tasks.append(("corollary2", ab, None))
        if want("lemmas"):
            tasks.append(("lemmas", ab, None))
        if want("thresholds") and cfg.classifier_grid:
            tasks.append(("thresholds", ab, None))
    if want("sandwich"):
        tasks.append(("sandwich", None, None))
    if want("series") and cfg.series_order:
        tasks.append(("series", None, None))
    return tasks


def _run_task(task, cfg: SuiteConfig) -> Report:
    kind, ab, extra = task
    if kind == "corollary1":
        p = ZbParams(*ab)
        return verify_corollary1(p, c_threshold(p) + extra, cfg.grid, cfg.tol)
    if kind == "corollary2":
        p = ZbParams(*ab)
        tb = thresholds(p)
        c = 0.5 * (tb.delta_minus + tb.delta_plus)
        return verify_corollary2(p, c, cfg.grid, cfg.tol, bundle=tb)
    if kind == "lemmas":
        return verify_lemma_probes(ZbParams(*ab), 2 * cfg.grid, cfg.tol)
    if kind == "thresholds":
        return verify_thresholds(ZbParams(*ab), cfg.classifier_grid)
    if kind == "sandwich":
        return verify_sandwich(cfg.grid, cfg.tol)
    if kind == "series":
        return verify_series(cfg.series_order, tol=cfg.tol)
    raise ConfigError(f"unknown task {kind!r}")


def _star(args):
    return _run_task(*args)


def run_suite(config: SuiteConfig | None = None) -> Report:
    cfg = config or SuiteConfig()
    tasks = _task_list(cfg)
    merged = Report(cfg.suite, f"grid={cfg.grid} classifier_grid={cfg.classifier_grid} "
                               f"pairs={len(cfg.pairs())}", tol=cfg.tol)
    if cfg.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            parts = list(pool.map(_star, [(t, cfg) for t in tasks]))
    else:
        parts = [_run_task(t, cfg) for t in tasks]
    for part in parts:
        merged = merged.merge(part)
    merged.suite = cfg.suite
    return merged
