"""Independent reference values used across the test modules."""
import math

import mpmath as mp


def agm(a, b):
    # quadratic convergence; stop once the pair stops changing
    for _ in range(60):
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        if abs(a - b) <= 2e-16 * a:
            break
    return 0.5 * (a + b)


def elliptic_2f1(m):
    """2F1(1/2, 1/2; 1; m) = (2/pi) K(m) = 1 / AGM(1, sqrt(1 - m)), parameter convention."""
    return 1.0 / agm(1.0, math.sqrt(1.0 - m))


def mp_hyp2f1(a, b, c, x, dps=30):
    with mp.workdps(dps):
        return float(mp.hyp2f1(a, b, c, x))


def richardson_second(f, x, h):
    d = lambda s: (f(x + s) - 2 * f(x) + f(x - s)) / (s * s)
    return (4 * d(h / 2) - d(h)) / 3


def euler_integral_2f1(a, b, c, x):
    """Euler's integral for c > b > 0, x < 1, by algebraic-weight quadrature."""
    from scipy.integrate import quad

    val, _ = quad(lambda t: (1.0 - x * t) ** (-a), 0.0, 1.0, weight="alg",
                  wvar=(b - 1.0, c - b - 1.0), epsabs=0.0, epsrel=1e-13, limit=200)
    return val / mp.beta(b, c - b)
