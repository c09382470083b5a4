"""Closed-form values of the spherical-Bessel integral families.

Two-Bessel integrals with an inverse-power or linear-power radial
weight, the triple-Bessel integral with an r^2 weight, the
single-Bessel moments, and the named special-case reductions.  Every
evaluator returns the bare integral: the angular prefactor that
multiplies the integral in the defining identity is divided out, so
callers must stay inside the applicability region where that prefactor
is nonzero.

Angular factors are combined in exact arithmetic and rounded once per
term; the terms are then accumulated in increasing magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .angular import AngularTriple, WignerValue, wigner3j_zero, wigner6j
from .specfun import double_factorial, legendre_p, legendre_q, sqrt_binomial

__all__ = [
    "MomentumPair",
    "MomentumTriple",
    "ClosedFormResult",
    "triple_bessel",
    "ws_inverse_power",
    "ws_linear_power",
    "equal_order_no_weight",
    "inverse_power_vs_j0",
    "equal_k_inverse_power",
    "sum_identity_check",
    "single_bessel_inverse_power",
    "single_bessel_linear",
    "equal_order_linear_weight",
    "linear_weight_vs_j0",
]


@dataclass(frozen=True)
class MomentumPair:
    """Two positive wavenumbers."""

    k1: float
    k2: float

    def __post_init__(self):
        if not (self.k1 > 0 and self.k2 > 0):
            raise ValueError(f"wavenumbers must be positive, got {(self.k1, self.k2)!r}")

    @property
    def k_less(self) -> float:
        return min(self.k1, self.k2)

    @property
    def k_greater(self) -> float:
        return max(self.k1, self.k2)

    @property
    def chi(self) -> float:
        """(k1^2 + k2^2) / (2 k1 k2); equals 1 exactly when k1 == k2."""
        return (self.k1 * self.k1 + self.k2 * self.k2) / (2.0 * self.k1 * self.k2)


@dataclass(frozen=True)
class MomentumTriple:
    """Three positive wavenumbers."""

    k1: float
    k2: float
    k3: float

    def __post_init__(self):
        if not (self.k1 > 0 and self.k2 > 0 and self.k3 > 0):
            raise ValueError(
                f"wavenumbers must be positive, got {(self.k1, self.k2, self.k3)!r}"
            )

    @property
    def delta(self) -> float:
        """Cosine-rule combination (k1^2 + k2^2 - k3^2) / (2 k1 k2)."""
        return (self.k1 * self.k1 + self.k2 * self.k2 - self.k3 * self.k3) / (
            2.0 * self.k1 * self.k2
        )

    @property
    def in_triangle(self) -> bool:
        return abs(self.delta) < 1.0


@dataclass(frozen=True)
class ClosedFormResult:
    """Outcome of a closed-form evaluation.

    value is None unless status == 'ok'.  convergence_class records how
    the underlying integral converges: 'absolute', 'conditional',
    'regularized' (exists only as an Abel limit) or 'divergent'.
    """

    value: float | None
    equation_tag: str
    convergence_class: str
    status: str

    def __post_init__(self):
        if self.status == "ok" and not math.isfinite(self.value):
            raise ValueError("ok result must carry a finite value")
        if self.status != "ok" and self.value is not None:
            raise ValueError("value must be unset unless status is ok")


def _not_applicable(tag: str, cls: str) -> ClosedFormResult:
    return ClosedFormResult(None, tag, cls, "not_applicable")


def _divergent(tag: str) -> ClosedFormResult:
    return ClosedFormResult(None, tag, "divergent", "divergent")


def _phase(l1: int, l2: int, l3: int) -> int:
    # i**(l1+l2-l3) is real under the parity condition; never go complex
    e = l1 + l2 - l3
    assert e % 2 == 0
    return -1 if (e // 2) % 2 else 1


def _coupled_sum(l1: int, l2: int, l3: int, with_2l_plus_1: bool, length_factor) -> float:
    """Shared double sum over the split order L and the coupled order l.

    length_factor(L, l) supplies the momentum-dependent float factor of
    each term; everything angular, the sqrt-binomial of the split, the
    sqrt(2*l3+1), and the division by the overall zero-projection 3j
    are accumulated exactly and rounded once.
    """
    overall = wigner3j_zero(AngularTriple(l1, l2, l3)).reciprocal() * WignerValue.sqrt_of(
        2 * l3 + 1
    )
    terms = []
    for cap_l in range(l3 + 1):
        a = l3 - cap_l
        split = sqrt_binomial(2 * l3, 2 * cap_l)
        lo = max(abs(l1 - a), abs(l2 - cap_l))
        hi = min(l1 + a, l2 + cap_l)
        for l in range(lo, hi + 1):
            if (l1 + a + l) % 2:
                continue
            w = (
                overall
                * split
                * wigner3j_zero(AngularTriple(l1, a, l))
                * wigner3j_zero(AngularTriple(l2, cap_l, l))
                * wigner6j(l1, l2, l3, cap_l, a, l)
            )
            if with_2l_plus_1:
                w = w.times_rational(2 * l + 1)
            if w.sign == 0:
                continue
            terms.append(w.to_float() * length_factor(cap_l, l))
    terms.sort(key=abs)
    return math.fsum(terms)


def triple_bessel(triple: AngularTriple, momenta: MomentumTriple) -> ClosedFormResult:
    """Integral of r^2 j_l1(k1 r) j_l2(k2 r) j_l3(k3 r) over r >= 0.

    Vanishes when the three momenta cannot form a triangle; the
    boundary |delta| = 1 is refused as divergent/undefined.  Requires
    an applicable order triple, since the closed form determines the
    integral only up to the overall coupling coefficient.
    """
    tag = "triple_bessel"
    if not triple.applicable:
        return _not_applicable(tag, "conditional")
    delta = momenta.delta
    if abs(delta) == 1.0:
        return _divergent(tag)
    if abs(delta) > 1.0:
        return ClosedFormResult(0.0, tag, "conditional", "ok")

    l1, l2, l3 = triple.lambda1, triple.lambda2, triple.lambda3
    k1, k2, k3 = momenta.k1, momenta.k2, momenta.k3
    ratio = k2 / k1
    total = _coupled_sum(
        l1, l2, l3, True, lambda L, l: ratio**L * legendre_p(l, delta)
    )
    pref = (
        math.pi
        / (4.0 * k1 * k2 * k3)
        * _phase(l1, l2, l3)
        * (k1 / k3) ** l3
    )
    return ClosedFormResult(pref * total, tag, "conditional", "ok")


def ws_inverse_power(triple: AngularTriple, momenta: MomentumPair) -> ClosedFormResult:
    """Integral of j_l1(k1 r) j_l2(k2 r) / r^l3 over r >= 0.

    Absolutely convergent for every applicable triple; equal momenta
    are allowed.
    """
    tag = "ws_inverse_power"
    if not triple.applicable:
        return _not_applicable(tag, "absolute")
    l1, l2, l3 = triple.lambda1, triple.lambda2, triple.lambda3
    k1, k2 = momenta.k1, momenta.k2
    k_less, k_greater = momenta.k_less, momenta.k_greater
    ratio = k2 / k1
    total = _coupled_sum(
        l1, l2, l3, False, lambda L, l: ratio**L * k_less**l / k_greater ** (l + 1)
    )
    pref = (
        0.5
        * math.pi
        * _phase(l1, l2, l3)
        * k1**l3
        / (2**l3 * math.factorial(l3))
    )
    return ClosedFormResult(pref * total, tag, "absolute", "ok")


def ws_linear_power(triple: AngularTriple, momenta: MomentumPair) -> ClosedFormResult:
    """Integral of r^(1-l3) j_l1(k1 r) j_l2(k2 r) over r >= 0.

    Diverges logarithmically when k1 == k2 (the Legendre-Q argument
    hits its singular point); conditionally convergent at l3 = 0,
    absolutely convergent for l3 >= 1.
    """
    tag = "ws_linear_power"
    if not triple.applicable:
        return _not_applicable(tag, "conditional" if triple.lambda3 == 0 else "absolute")
    if momenta.k1 == momenta.k2:
        return _divergent(tag)
    l1, l2, l3 = triple.lambda1, triple.lambda2, triple.lambda3
    k1, k2 = momenta.k1, momenta.k2
    chi = momenta.chi
    ratio = k2 / k1
    total = _coupled_sum(
        l1, l2, l3, True, lambda L, l: ratio**L * legendre_q(l, chi)
    )
    pref = (
        k1**l3
        / (2.0 * k1 * k2)
        * _phase(l1, l2, l3)
        / double_factorial(2 * l3 - 1)
    )
    cls = "conditional" if l3 == 0 else "absolute"
    return ClosedFormResult(pref * total, tag, cls, "ok")


def equal_order_no_weight(lam: int, momenta: MomentumPair) -> ClosedFormResult:
    """Integral of j_lam(k1 r) j_lam(k2 r) dr: the orthogonality-type value."""
    v = (
        0.5
        * math.pi
        / (2 * lam + 1)
        * momenta.k_less**lam
        / momenta.k_greater ** (lam + 1)
    )
    return ClosedFormResult(v, "equal_order_no_weight", "absolute", "ok")


def inverse_power_vs_j0(lam: int, momenta: MomentumPair) -> ClosedFormResult:
    """Integral of r^(-lam) j_lam(k1 r) j_0(k2 r) dr as a finite alternating sum."""
    k1, k2 = momenta.k1, momenta.k2
    k_less, k_greater = momenta.k_less, momenta.k_greater
    terms = [
        (-1) ** L
        / (2 * L + 1)
        * math.comb(lam, L)
        * (k2 / k1) ** L
        * k_less**L
        / k_greater ** (L + 1)
        for L in range(lam + 1)
    ]
    terms.sort(key=abs)
    v = 0.5 * math.pi * k1**lam / (2**lam * math.factorial(lam)) * math.fsum(terms)
    return ClosedFormResult(v, "inverse_power_vs_j0", "absolute", "ok")


def equal_k_inverse_power(lam: int, k: float) -> ClosedFormResult:
    """Integral of r^(-lam) j_lam(k r) j_0(k r) dr at coincident momenta."""
    if not k > 0:
        raise ValueError(f"wavenumber must be positive, got {k!r}")
    v = 0.5 * math.pi * k ** (lam - 1) / double_factorial(2 * lam + 1)
    return ClosedFormResult(v, "equal_k_inverse_power", "absolute", "ok")


def sum_identity_check(lam: int) -> tuple[Fraction, Fraction]:
    """Exact LHS and RHS of the alternating binomial / double-factorial identity.

    LHS = sum_L (-1)^L C(lam, L) / (2L+1), RHS = 2^lam lam! / (2 lam + 1)!!.
    """
    if not isinstance(lam, int) or lam < 0 or lam > 1000:
        raise ValueError(f"lam must be an integer in [0, 1000], got {lam!r}")
    lhs = sum(
        Fraction((-1) ** L * math.comb(lam, L), 2 * L + 1) for L in range(lam + 1)
    )
    rhs = Fraction(2**lam * math.factorial(lam), double_factorial(2 * lam + 1))
    return lhs, rhs


def single_bessel_inverse_power(lam: int, k: float) -> ClosedFormResult:
    """Integral of j_lam(k r) / r^lam dr."""
    if not k > 0:
        raise ValueError(f"wavenumber must be positive, got {k!r}")
    v = 0.5 * math.pi * k ** (lam - 1) / (2**lam * math.factorial(lam))
    cls = "conditional" if lam == 0 else "absolute"
    return ClosedFormResult(v, "single_bessel_inverse_power", cls, "ok")


def single_bessel_linear(lam: int, k: float) -> ClosedFormResult:
    """Integral of r^(1-lam) j_lam(k r) dr.

    For lam in {0, 1} the integral exists only as an Abel limit; the
    closed-form value is the regularized one.
    """
    if not k > 0:
        raise ValueError(f"wavenumber must be positive, got {k!r}")
    v = k ** (lam - 2) / double_factorial(2 * lam - 1)
    cls = "regularized" if lam <= 1 else "absolute"
    return ClosedFormResult(v, "single_bessel_linear", cls, "ok")


def equal_order_linear_weight(lam: int, momenta: MomentumPair) -> ClosedFormResult:
    """Integral of r j_lam(k1 r) j_lam(k2 r) dr; divergent at k1 == k2."""
    tag = "equal_order_linear_weight"
    if momenta.k1 == momenta.k2:
        return _divergent(tag)
    v = legendre_q(lam, momenta.chi) / (2.0 * momenta.k1 * momenta.k2)
    cls = "conditional" if lam == 0 else "absolute"
    return ClosedFormResult(v, tag, cls, "ok")


def linear_weight_vs_j0(lam: int, momenta: MomentumPair) -> ClosedFormResult:
    """Integral of r^(1-lam) j_lam(k1 r) j_0(k2 r) dr; divergent at k1 == k2.

    k1 carries the order-lam factor, k2 the order-0 one.
    """
    tag = "linear_weight_vs_j0"
    if momenta.k1 == momenta.k2:
        return _divergent(tag)
    k1, k2 = momenta.k1, momenta.k2
    chi = momenta.chi
    terms = [
        math.comb(lam, L) * (-k2 / k1) ** L * legendre_q(L, chi)
        for L in range(lam + 1)
    ]
    terms.sort(key=abs)
    v = k1 ** (lam - 1) / (2.0 * k2 * double_factorial(2 * lam - 1)) * math.fsum(terms)
    cls = "conditional" if lam == 0 else "absolute"
    return ClosedFormResult(v, tag, cls, "ok")
