"""Scalar special functions: log-gamma, digamma, beta, Pochhammer and the
Dirichlet-type constants lambda(n), beta(n), eta(n), zeta(n)."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .errors import DivergenceError, DomainError

EULER_GAMMA = _kernels.EULER_GAMMA

# B_2 .. B_16
_BERNOULLI_EVEN = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510)
_HURWITZ_N = 20
_CVZ_TERMS = 30


def _check_positive(name: str, *values: float) -> None:
    for v in values:
        if not v > 0:
            raise DomainError(f"{name} requires positive arguments, got {v!r}")


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    _check_positive("ln_gamma", x)
    return math.lgamma(x)


def digamma(x: float) -> float:
    _check_positive("digamma", x)
    return float(_kernels.digamma(float(x)))


def trigamma(x: float) -> float:
    _check_positive("trigamma", x)
    return float(_kernels.trigamma(float(x)))


def beta(x: float, y: float) -> float:
    """Euler beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y)."""
    _check_positive("beta", x, y)
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


def ramanujan_R(a: float, b: float) -> float:
    """R(a, b) = -2*gamma - psi(a) - psi(b)."""
    _check_positive("ramanujan_R", a, b)
    return -2.0 * EULER_GAMMA - _kernels.digamma(float(a)) - _kernels.digamma(float(b))


def pochhammer(x: float, n: int) -> float:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1."""
    if n < 0 or int(n) != n:
        raise DomainError(f"pochhammer needs a nonnegative integer order, got {n!r}")
    p = 1.0
    for k in range(int(n)):
        p *= x + k
    return p


def hurwitz_zeta(s: float, q: float) -> float:
    """sum_{k>=0} (q+k)^-s for s > 1, q > 0 (direct head + Euler-Maclaurin tail)."""
    if s <= 1:
        raise DivergenceError(f"Hurwitz zeta diverges for s={s}")
    _check_positive("hurwitz_zeta", q)
    n = _HURWITZ_N
    head = math.fsum((q + k) ** -s for k in range(n))
    qn = q + n
    tail = qn ** (1 - s) / (s - 1) + 0.5 * qn ** -s
    rising = s  # s (s+1) ... (s+2j-2)
    fact = 2.0  # (2j)!
    for j, b2j in enumerate(_BERNOULLI_EVEN, start=1):
        tail += b2j / fact * rising * qn ** (-s - 2 * j + 1)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
    return head + tail


def _alternating_sum(term, nterms: int = _CVZ_TERMS) -> float:
    """sum_k (-1)^k term(k) for completely monotone term sequences.

    Cohen / Rodriguez Villegas / Zagier acceleration; error ~ 5.8^-nterms.
    """
    d = (3.0 + math.sqrt(8.0)) ** nterms
    d = (d + 1.0 / d) / 2.0
    b, c, s = -1.0, -d, 0.0
    for k in range(nterms):
        c = b - c
        s += c * term(k)
        b = (k + nterms) * (k - nterms) * b / ((k + 0.5) * (k + 1.0))
    return s / d


def riemann_zeta(n: int) -> float:
    if n <= 1:
        raise DivergenceError("zeta(n) diverges for n <= 1")
    return hurwitz_zeta(float(n), 1.0)


def dirichlet_lambda(n: int) -> float:
    """sum over odd k of k^-n."""
    if n <= 1:
        raise DivergenceError("lambda(n) diverges for n <= 1")
    return 2.0 ** -n * hurwitz_zeta(float(n), 0.5)


def dirichlet_beta(n: int) -> float:
    """sum_k (-1)^k (2k+1)^-n."""
    if n < 1:
        raise DomainError("dirichlet_beta needs n >= 1")
    if n == 1:
        return math.pi / 4.0
    return _alternating_sum(lambda k: (2.0 * k + 1.0) ** -n)


def dirichlet_eta(n: int) -> float:
    """sum_k (-1)^(k-1) k^-n, k >= 1."""
    if n < 1:
        raise DomainError("dirichlet_eta needs n >= 1")
    if n == 1:
        return math.log(2.0)
    return _alternating_sum(lambda k: (k + 1.0) ** -n)


def dirichlet_lambda_excess(n: int) -> float:
    """lambda(n) - 1 without cancellation: 2^-n zeta(n, 3/2)."""
    if n <= 1:
        raise DivergenceError("lambda(n) diverges for n <= 1")
    return 2.0 ** -n * hurwitz_zeta(float(n), 1.5)


def dirichlet_beta_excess(n: int) -> float:
    """beta(n) - 1 without cancellation: -sum_j (-1)^j (2j+3)^-n."""
    if n < 1:
        raise DomainError("dirichlet_beta needs n >= 1")
    return -_alternating_sum(lambda k: (2.0 * k + 3.0) ** -n)


@dataclass(frozen=True)
class DirichletConstants:
    """lambda, beta, eta and zeta at one integer order.

    At order 1 the two divergent constants are stored as ``math.inf``; the
    single-constant functions raise :class:`DivergenceError` instead.
    """

    order: int
    lambda_n: float
    beta_n: float
    eta_n: float
    zeta_n: float


def dirichlet_constants(n: int) -> DirichletConstants:
    if n < 1 or int(n) != n:
        raise DomainError(f"order must be a positive integer, got {n!r}")
    n = int(n)
    lam = math.inf if n == 1 else dirichlet_lambda(n)
    zet = math.inf if n == 1 else riemann_zeta(n)
    return DirichletConstants(n, lam, dirichlet_beta(n), dirichlet_eta(n), zet)
