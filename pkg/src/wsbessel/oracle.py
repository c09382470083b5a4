"""Direct numerical evaluation of the Bessel-product integrals.

Ground truth for validating the closed forms: a semi-infinite
quadrature that splits each integral into an adaptive head on [0, R0]
and an oscillation-cell tail whose partial sums are pushed to their
limit by sequence acceleration.  Conditionally convergent and
Abel-regularized cases damp the tail with exp(-eps r) over a
decreasing regulator sequence and extrapolate eps -> 0.

The integrands come from the shared special-function kernels only;
nothing here reads the closed-form module.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import kernels

__all__ = [
    "QuadratureConfig",
    "QuadratureReport",
    "integrate_two_bessel",
    "integrate_three_bessel",
    "integrate_single_bessel",
]

_GL_HEAD_LO = 12
_GL_HEAD_HI = 24
_GL_TAIL_TWO = 16
_GL_TAIL_THREE = 24
_MAX_TRIPLE_ORDER = 20


@dataclass(frozen=True)
class QuadratureConfig:
    """Knobs of the semi-infinite quadrature."""

    head_tolerance: float = 1e-12
    cell_count: int = 200
    acceleration_order: int = 10
    regulator_sequence: tuple[float, ...] = field(
        default_factory=lambda: tuple(0.2 * 0.5**i for i in range(8))
    )
    extrapolation_order: int = 4

    def __post_init__(self):
        if not self.head_tolerance > 0:
            raise ValueError("head_tolerance must be positive")
        if self.cell_count < 8:
            raise ValueError("cell_count must be at least 8")
        if self.acceleration_order < 1:
            raise ValueError("acceleration_order must be at least 1")
        if self.extrapolation_order < 1:
            raise ValueError("extrapolation_order must be at least 1")
        seq = self.regulator_sequence
        if len(seq) < 2 or any(e <= 0 for e in seq):
            raise ValueError("regulator_sequence needs >= 2 positive entries")
        if any(b >= a for a, b in zip(seq, seq[1:])):
            raise ValueError("regulator_sequence must be strictly decreasing")


@dataclass(frozen=True)
class QuadratureReport:
    """Numeric estimate with an honest error bar.

    error_estimate is the last acceleration/extrapolation increment
    plus a roundoff floor; extrapolation_residual is the increment of
    the final limit step alone.
    """

    estimate: float
    error_estimate: float
    cells_used: int
    regularized: bool
    extrapolation_residual: float


@lru_cache(maxsize=16)
def _gl(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _adaptive_head(eval_cells, r_max: float, omega: float, tol: float):
    """Adaptive panel quadrature of the integrand over [0, r_max].

    Starts from oscillation-resolving panels and bisects any panel
    whose embedded low/high Gauss estimates disagree.
    """
    xl, wl = _gl(_GL_HEAD_LO)
    xh, wh = _gl(_GL_HEAD_HI)
    width = math.pi / (2.0 * max(omega, 1e-12))
    n0 = min(max(int(math.ceil(r_max / width)), 4), 4096)
    edges = np.linspace(0.0, r_max, n0 + 1)

    total = 0.0
    err_total = 0.0
    for _ in range(14):
        hi = eval_cells(edges, 0.0, xh, wh)
        lo = eval_cells(edges, 0.0, xl, wl)
        cell_err = np.abs(hi - lo)
        total = float(np.sum(hi))
        abs_mass = float(np.sum(np.abs(hi)))
        err_total = float(np.sum(cell_err))
        scale = max(abs(total), 1e-2 * abs_mass, 1e-300)
        if err_total <= tol * scale or len(edges) > 60000:
            break
        bad = cell_err > tol * scale / len(edges)
        if not bad.any():
            break
        mids = 0.5 * (edges[:-1][bad] + edges[1:][bad])
        edges = np.sort(np.concatenate([edges, mids]))
    return total, err_total


def _aitken_pass(s: np.ndarray) -> np.ndarray:
    d1 = s[2:] - s[1:-1]
    d0 = s[1:-1] - s[:-2]
    den = d1 - d0
    with np.errstate(divide="ignore", invalid="ignore"):
        corr = d1 * d1 / den
    out = np.where((den != 0.0) & np.isfinite(corr), s[2:] - corr, s[2:])
    return out


def _sequence_limit(partial: np.ndarray, order: int) -> tuple[float, float]:
    """Best limit of a partial-sum sequence and its last increment.

    Runs iterated Aitken (the workhorse for alternating cell sums) and
    the rho algorithm (for same-sign algebraically decaying ones) and
    keeps whichever transform settles with the smallest increment.
    """
    n = len(partial)
    if n < 3:
        return float(partial[-1]), abs(float(partial[-1] - partial[0])) if n > 1 else abs(
            float(partial[-1])
        )
    best_val = float(partial[-1])
    best_inc = abs(float(partial[-1] - partial[-2]))

    cur = np.asarray(partial, dtype=np.float64)
    for _ in range(order):
        if len(cur) < 3:
            break
        cur = _aitken_pass(cur)
        if len(cur) >= 2 and np.isfinite(cur[-2:]).all():
            inc = abs(float(cur[-1] - cur[-2]))
            if inc < best_inc:
                best_inc = inc
                best_val = float(cur[-1])

    # rho algorithm, interpolation points x_n = n + 1
    x = np.arange(1.0, n + 1.0)
    prev2 = np.zeros(n)
    prev1 = np.asarray(partial, dtype=np.float64)
    last_even = float(prev1[-1])
    for k in range(1, min(2 * order, n - 1) + 1):
        m = n - k
        diff = prev1[1 : m + 1] - prev1[:m]
        with np.errstate(divide="ignore", invalid="ignore"):
            cur_k = prev2[1 : m + 1] + (x[k:n] - x[: n - k]) / diff
        if not np.isfinite(cur_k).all():
            break
        if k % 2 == 0:
            inc = abs(float(cur_k[-1]) - last_even)
            if inc < best_inc and np.isfinite(cur_k[-1]):
                best_inc = inc
                best_val = float(cur_k[-1])
            last_even = float(cur_k[-1])
        prev2, prev1 = prev1, cur_k
    return best_val, best_inc


def _tail_limit(eval_cells, r0: float, h: float, config: QuadratureConfig, eps: float):
    """Sum tail cells of width h from r0 and accelerate to the limit."""
    xg, wg = eval_cells.gl
    chunk = 50
    pieces = []
    peak = 0.0
    used = 0
    while used < config.cell_count:
        m = min(chunk, config.cell_count - used)
        edges = r0 + h * np.arange(used, used + m + 1)
        c = eval_cells(edges, eps, xg, wg)
        pieces.append(c)
        used += m
        cmax = float(np.max(np.abs(c)))
        peak = max(peak, cmax)
        if used >= 2 * chunk and cmax < 1e-17 * peak:
            break
    cells = np.concatenate(pieces)
    partial = np.cumsum(cells)
    est, inc = _sequence_limit(partial, config.acceleration_order)
    roundoff = 1e-16 * float(np.sum(np.abs(cells)))
    return est, inc + roundoff, len(cells), inc


def _lagrange_at_zero(xs):
    ws = []
    for i, xi in enumerate(xs):
        w = 1.0
        for j, xj in enumerate(xs):
            if j != i:
                w *= xj / (xj - xi)
        ws.append(w)
    return ws


def _richardson_zero(eps_used, vals, inner_errs, order: int):
    """Polynomial extrapolation of the damped tail values to eps = 0."""
    m = min(order + 1, len(eps_used))
    xs = list(eps_used[-m:])
    vs = list(vals[-m:])
    ws = _lagrange_at_zero(xs)
    est = math.fsum(w * v for w, v in zip(ws, vs))
    if m >= 2:
        ws_prev = _lagrange_at_zero(xs[1:])
        est_prev = math.fsum(w * v for w, v in zip(ws_prev, vs[1:]))
        resid = abs(est - est_prev)
    else:
        resid = abs(est)
    amplification = math.fsum(abs(w) for w in ws)
    propagated = amplification * max(inner_errs[-m:])
    return est, resid, propagated


class _CellEval:
    """Vectorized per-cell integrals of one integrand family."""

    def __init__(self, fn, gl_order):
        self._fn = fn
        self.gl = _gl(gl_order)

    def __call__(self, edges, eps, xg, wg):
        return self._fn(np.asarray(edges, dtype=np.float64), eps, xg, wg)


def _run(eval_cells, r0, h, omega, config, use_regulator):
    head_val, head_err = _adaptive_head(eval_cells, r0, omega, config.head_tolerance)
    if use_regulator:
        vals = []
        errs = []
        cells_used = 0
        for eps in config.regulator_sequence:
            tv, te, used, _ = _tail_limit(eval_cells, r0, h, config, eps)
            vals.append(tv)
            errs.append(te)
            cells_used = max(cells_used, used)
        tail_val, resid, propagated = _richardson_zero(
            config.regulator_sequence, vals, errs, config.extrapolation_order
        )
        tail_err = resid + propagated
        extrap = resid
    else:
        tail_val, tail_err, cells_used, extrap = _tail_limit(
            eval_cells, r0, h, config, 0.0
        )
    estimate = head_val + tail_val
    error = head_err + tail_err + 5e-16 * abs(estimate)
    if error > 0.05 * max(abs(estimate), 1e-300):
        warnings.warn(
            f"tail failed to converge within {config.cell_count} cells "
            f"(estimate {estimate:.6g}, error {error:.2g})",
            RuntimeWarning,
            stacklevel=3,
        )
    return QuadratureReport(estimate, error, cells_used, use_regulator, extrap)


def integrate_two_bessel(
    weight_exponent: int,
    lambda1: int,
    lambda2: int,
    momenta,
    config: QuadratureConfig | None = None,
    *,
    regularized: bool | None = None,
) -> QuadratureReport:
    """Quadrature of r^p j_l1(k1 r) j_l2(k2 r) over r >= 0 for p in [-l1-l2, 1].

    The default path sums undamped tail cells; pass regularized=True to
    force the Abel regulator + extrapolation route instead.
    """
    p, l1, l2 = weight_exponent, lambda1, lambda2
    if not (-(l1 + l2) <= p <= 1):
        raise ValueError(f"weight exponent {p} outside [{-(l1 + l2)}, 1]")
    k1, k2 = momenta.k1, momenta.k2
    config = config or QuadratureConfig()
    if regularized is None:
        regularized = False
    ev = _CellEval(
        lambda e, eps, xg, wg: kernels.cells_two(p, l1, l2, k1, k2, eps, e, xg, wg),
        _GL_TAIL_TWO,
    )
    r0 = 20.0 * max(1.0 / k1, 1.0 / k2, 1.0)
    h = math.pi / max(k1, k2)
    return _run(ev, r0, h, k1 + k2, config, regularized)


def integrate_three_bessel(
    lambda1: int,
    lambda2: int,
    lambda3: int,
    momenta,
    config: QuadratureConfig | None = None,
    *,
    regularized: bool | None = None,
) -> QuadratureReport:
    """Quadrature of r^2 j_l1(k1 r) j_l2(k2 r) j_l3(k3 r) over r >= 0.

    The tail amplitude only decays like 1/r, so the regulator +
    extrapolation path is the default.  The light-cone boundary
    |delta| = 1 is rejected.
    """
    for l in (lambda1, lambda2, lambda3):
        if l > _MAX_TRIPLE_ORDER:
            raise ValueError(f"triple-Bessel orders are supported up to {_MAX_TRIPLE_ORDER}")
    if abs(momenta.delta) == 1.0:
        raise ValueError("momenta on the triangle boundary (|delta| = 1) are rejected")
    k1, k2, k3 = momenta.k1, momenta.k2, momenta.k3
    config = config or QuadratureConfig()
    if regularized is None:
        regularized = True
    ev = _CellEval(
        lambda e, eps, xg, wg: kernels.cells_three(
            lambda1, lambda2, lambda3, k1, k2, k3, eps, e, xg, wg
        ),
        _GL_TAIL_THREE,
    )
    r0 = 20.0 * max(1.0 / k1, 1.0 / k2, 1.0 / k3, 1.0)
    h = math.pi / max(k1, k2, k3)
    return _run(ev, r0, h, k1 + k2 + k3, config, regularized)


def integrate_single_bessel(
    weight_exponent: int,
    lam: int,
    k: float,
    config: QuadratureConfig | None = None,
    *,
    regularized: bool | None = None,
) -> QuadratureReport:
    """Quadrature of r^p j_lam(k r) over r >= 0 for p + lam > -1.

    The tail behaves like r^(p-1) times an oscillation, so the
    regulator path is the default whenever p >= 0.
    """
    p = weight_exponent
    if not p + lam > -1:
        raise ValueError(f"integrand r^{p} j_{lam} is not integrable at the origin")
    if not k > 0:
        raise ValueError(f"wavenumber must be positive, got {k!r}")
    config = config or QuadratureConfig()
    if regularized is None:
        regularized = p >= 0
    ev = _CellEval(
        lambda e, eps, xg, wg: kernels.cells_single(p, lam, k, eps, e, xg, wg),
        _GL_TAIL_TWO,
    )
    r0 = 20.0 * max(1.0 / k, 1.0)
    h = math.pi / k
    return _run(ev, r0, h, k, config, regularized)
