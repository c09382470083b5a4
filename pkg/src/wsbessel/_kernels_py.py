"""Pure-numpy fallback for the hot evaluation kernels.

Mirrors the compiled extension in ``_kernels.pyx`` function for
function; the import-time selector in ``kernels`` picks whichever is
available.  Branch structure (series / downward / upward) is kept
identical to the compiled code so the two backends agree to rounding.
"""

import math

import numpy as np

_SERIES_CUT = 0.5
_MILLER_BUFFER = 45
_RESCALE = 1e250


def sph_jl_scalar(l: int, x: float) -> float:
    """Spherical Bessel j_l at a single point, x >= 0."""
    if x == 0.0:
        return 1.0 if l == 0 else 0.0
    if l == 0:
        return math.sin(x) / x
    if x < _SERIES_CUT:
        return _jl_series_scalar(l, x)
    if x > l:
        return _jl_upward_scalar(l, x)
    return _jl_miller_scalar(l, x)


def _jl_series_scalar(l, x):
    # j_l(x) = x^l/(2l+1)!! * sum_m (-x^2/2)^m / (m! (2l+3)(2l+5)...(2l+2m+1))
    lead = 1.0
    for n in range(1, l + 1):
        lead *= x / (2 * n + 1)
    y = 0.5 * x * x
    term = 1.0
    total = 1.0
    m = 0
    while abs(term) > 1e-18:
        m += 1
        term *= -y / (m * (2 * l + 2 * m + 1))
        total += term
    return lead * total


def _jl_upward_scalar(l, x):
    jm = math.sin(x) / x
    j = jm / x - math.cos(x) / x
    for n in range(1, l):
        jm, j = j, (2 * n + 1) / x * j - jm
    return j


def _jl_miller_scalar(l, x):
    n_start = l + _MILLER_BUFFER
    qp = 0.0
    q = 1.0
    rec = 0.0
    for n in range(n_start, 0, -1):
        qm = (2 * n + 1) / x * q - qp
        qp = q
        q = qm
        if n - 1 == l:
            rec = q
        if abs(q) > _RESCALE:
            q /= _RESCALE
            qp /= _RESCALE
            rec /= _RESCALE
    j0 = math.sin(x) / x
    j1 = j0 / x - math.cos(x) / x
    # normalize against whichever closed form is away from its zero
    if abs(j0) >= abs(j1):
        return rec * (j0 / q)
    return rec * (j1 / qp)


def sph_jl_grid(l: int, x: np.ndarray) -> np.ndarray:
    """Vectorized j_l over an array of nonnegative arguments."""
    x = np.asarray(x, dtype=np.float64)
    out = np.empty_like(x)
    if l == 0:
        nz = x != 0.0
        out[~nz] = 1.0
        xv = x[nz]
        out[nz] = np.sin(xv) / xv
        return out

    out[x == 0.0] = 0.0
    small = (x > 0.0) & (x < _SERIES_CUT)
    if small.any():
        out[small] = _jl_series_grid(l, x[small])
    up = x > l
    if up.any():
        out[up] = _jl_upward_grid(l, x[up])
    mid = (x >= _SERIES_CUT) & ~up
    if mid.any():
        out[mid] = _jl_miller_grid(l, x[mid])
    return out


def _jl_series_grid(l, x):
    lead = np.ones_like(x)
    for n in range(1, l + 1):
        lead *= x / (2 * n + 1)
    y = 0.5 * x * x
    term = np.ones_like(x)
    total = np.ones_like(x)
    for m in range(1, 30):
        term *= -y / (m * (2 * l + 2 * m + 1))
        total += term
        if np.max(np.abs(term)) < 1e-18:
            break
    return lead * total


def _jl_upward_grid(l, x):
    jm = np.sin(x) / x
    j = jm / x - np.cos(x) / x
    for n in range(1, l):
        jm, j = j, (2 * n + 1) / x * j - jm
    return j


def _jl_miller_grid(l, x):
    n_start = l + _MILLER_BUFFER
    qp = np.zeros_like(x)
    q = np.ones_like(x)
    rec = np.zeros_like(x)
    for n in range(n_start, 0, -1):
        qm = (2 * n + 1) / x * q - qp
        qp = q
        q = qm
        if n - 1 == l:
            rec = q.copy()
        big = np.abs(q) > _RESCALE
        if big.any():
            q[big] /= _RESCALE
            qp[big] /= _RESCALE
            rec[big] /= _RESCALE
    j0 = np.sin(x) / x
    j1 = j0 / x - np.cos(x) / x
    with np.errstate(divide="ignore", invalid="ignore"):
        c0 = j0 / q
        c1 = j1 / qp
    return rec * np.where(np.abs(j0) >= np.abs(j1), c0, c1)


def _gauss_points(edges, xg, wg):
    a = edges[:-1]
    b = edges[1:]
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    r = mid[:, None] + half[:, None] * xg[None, :]
    return r, half


def _weight_factor(r, p, eps):
    f = r ** p if p != 0 else np.ones_like(r)
    if eps != 0.0:
        f = f * np.exp(-eps * r)
    return f


def cells_single(p, l, k, eps, edges, xg, wg):
    """Per-cell integrals of r^p j_l(k r) e^(-eps r) over consecutive edges."""
    r, half = _gauss_points(edges, xg, wg)
    f = _weight_factor(r, p, eps) * sph_jl_grid(l, k * r.ravel()).reshape(r.shape)
    return (f @ wg) * half


def cells_two(p, l1, l2, k1, k2, eps, edges, xg, wg):
    """Per-cell integrals of r^p j_l1(k1 r) j_l2(k2 r) e^(-eps r)."""
    r, half = _gauss_points(edges, xg, wg)
    f = _weight_factor(r, p, eps)
    f = f * sph_jl_grid(l1, k1 * r.ravel()).reshape(r.shape)
    f = f * sph_jl_grid(l2, k2 * r.ravel()).reshape(r.shape)
    return (f @ wg) * half


def cells_three(l1, l2, l3, k1, k2, k3, eps, edges, xg, wg):
    """Per-cell integrals of r^2 j_l1(k1 r) j_l2(k2 r) j_l3(k3 r) e^(-eps r)."""
    r, half = _gauss_points(edges, xg, wg)
    f = _weight_factor(r, 2, eps)
    f = f * sph_jl_grid(l1, k1 * r.ravel()).reshape(r.shape)
    f = f * sph_jl_grid(l2, k2 * r.ravel()).reshape(r.shape)
    f = f * sph_jl_grid(l3, k3 * r.ravel()).reshape(r.shape)
    return (f @ wg) * half
