"""Special functions needed by the closed forms and the quadrature oracle.

Spherical Bessel j_l, Legendre P_l, Legendre functions of the second
kind Q_l for argument > 1, double factorials and exact square roots of
binomial coefficients.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .angular import WignerValue
from . import kernels

__all__ = [
    "MAX_BESSEL_ORDER",
    "spherical_j",
    "legendre_p",
    "legendre_q",
    "double_factorial",
    "sqrt_binomial",
]

MAX_BESSEL_ORDER = 50


def spherical_j(l: int, x: float) -> float:
    """Spherical Bessel function j_l(x) for 0 <= l <= 50, x >= 0.

    Evaluation switches between a power series near the origin, a
    normalized downward recurrence for x <= l and the plain upward
    recurrence for x > l, which is the stable direction there.
    """
    if not isinstance(l, int) or l < 0 or l > MAX_BESSEL_ORDER:
        raise ValueError(f"order must be an integer in [0, {MAX_BESSEL_ORDER}], got {l!r}")
    x = float(x)
    if not math.isfinite(x) or x < 0:
        raise ValueError(f"argument must be finite and nonnegative, got {x!r}")
    return kernels.sph_jl_scalar(l, x)


def legendre_p(l: int, x: float) -> float:
    """Legendre polynomial P_l(x) on [-1, 1] by the three-term recurrence."""
    if not isinstance(l, int) or l < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {l!r}")
    x = float(x)
    if abs(x) > 1.0:
        raise ValueError(f"argument must lie in [-1, 1], got {x!r}")
    if l == 0:
        return 1.0
    pm = 1.0
    p = x
    for n in range(1, l):
        pm, p = p, ((2 * n + 1) * x * p - n * pm) / (n + 1)
    return p


def legendre_q(l: int, x: float) -> float:
    """Legendre function of the second kind Q_l(x) for x > 1.

    Q0 and Q1 are closed forms; higher degrees use the three-term
    recurrence run in whichever direction is stable.  Upward from Q0,
    Q1 is fine while rho**(-2l) stays small (rho = x - sqrt(x^2-1)),
    i.e. for x near 1; otherwise Q_l is the minimal solution and the
    recurrence is run downward from a buffered start and normalized
    against Q0.
    """
    if not isinstance(l, int) or l < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {l!r}")
    x = float(x)
    if not x > 1.0:
        raise ValueError(f"argument must be > 1, got {x!r}")
    q0 = 0.5 * math.log((x + 1.0) / (x - 1.0))
    if l == 0:
        return q0
    q1 = x * q0 - 1.0
    if l == 1:
        return q1

    rho = x - math.sqrt(x * x - 1.0)
    growth = -2.0 * l * math.log(rho)  # log of the upward error amplification
    if growth < 3.0 * math.log(10.0):
        qm, q = q0, q1
        for n in range(1, l):
            qm, q = q, ((2 * n + 1) * x * q - n * qm) / (n + 1)
        return q

    buffer = max(10, math.ceil(23.0 / (-2.0 * math.log(rho))))
    n_start = l + buffer
    tp = 0.0  # t_{n+1}
    t = 1.0  # t_n
    rec = 0.0
    for n in range(n_start, 0, -1):
        tm = ((2 * n + 1) * x * t - (n + 1) * tp) / n
        tp = t
        t = tm
        if n - 1 == l:
            rec = t
        if abs(t) > 1e250:
            t /= 1e250
            tp /= 1e250
            rec /= 1e250
    return rec * (q0 / t)


def double_factorial(n: int) -> int:
    """n!! as an exact integer, with 0!! = (-1)!! = 1."""
    if not isinstance(n, int) or n < -1:
        raise ValueError(f"double factorial needs an integer >= -1, got {n!r}")
    return math.prod(range(n, 0, -2))


def sqrt_binomial(n: int, k: int) -> WignerValue:
    """Exact sqrt(C(n, k)) for 0 <= k <= n."""
    if not isinstance(n, int) or not isinstance(k, int) or n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative integers")
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    return WignerValue.sqrt_of(Fraction(math.comb(n, k)))
