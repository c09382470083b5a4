"""Exact Wigner 3j (zero projections) and 6j symbols.

All values are computed in big-integer rational arithmetic and carried
around as sign * sqrt(p/q).  Nothing in this module touches floating
point until an explicit conversion is requested, so coupling
coefficients entering the integral formulas contribute at most one
rounding each.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "AngularTriple",
    "WignerValue",
    "triangle_check",
    "wigner3j_zero",
    "wigner3j_zero_racah",
    "wigner6j",
]


def _factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return math.factorial(n)


@dataclass(frozen=True)
class AngularTriple:
    """Three nonnegative integer orders with coupling validity flags."""

    lambda1: int
    lambda2: int
    lambda3: int

    def __post_init__(self):
        for name in ("lambda1", "lambda2", "lambda3"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")

    @property
    def triangle_ok(self) -> bool:
        a, b, c = self.lambda1, self.lambda2, self.lambda3
        return abs(a - b) <= c <= a + b

    @property
    def parity_ok(self) -> bool:
        return (self.lambda1 + self.lambda2 + self.lambda3) % 2 == 0

    @property
    def applicable(self) -> bool:
        return self.triangle_ok and self.parity_ok


def triangle_check(triple: AngularTriple) -> tuple[bool, bool]:
    """Return (triangle_ok, parity_ok) for the three orders."""
    return triple.triangle_ok, triple.parity_ok


@dataclass(frozen=True)
class WignerValue:
    """Exact coupling coefficient sign * sqrt(radicand).

    The radicand is a nonnegative Fraction in lowest terms; rational
    factors are folded in as their squares, which keeps products of
    symbols inside one canonical type.  sign == 0 iff radicand == 0,
    so equal values always compare equal.
    """

    sign: int
    radicand: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign!r}")
        if self.radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if (self.sign == 0) != (self.radicand == 0):
            raise ValueError("sign == 0 must coincide with radicand == 0")

    @property
    def radicand_num(self) -> int:
        return self.radicand.numerator

    @property
    def radicand_den(self) -> int:
        return self.radicand.denominator

    @staticmethod
    def zero() -> "WignerValue":
        return WignerValue(0, Fraction(0))

    @staticmethod
    def sqrt_of(q: Fraction | int) -> "WignerValue":
        """Positive square root of a nonnegative rational."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("cannot take the square root of a negative rational")
        return WignerValue(1 if q else 0, q)

    @staticmethod
    def from_rational(q: Fraction | int) -> "WignerValue":
        """Exact embedding of a rational: sign(q) * sqrt(q**2)."""
        q = Fraction(q)
        if q == 0:
            return WignerValue.zero()
        return WignerValue(1 if q > 0 else -1, q * q)

    def __mul__(self, other: "WignerValue") -> "WignerValue":
        if not isinstance(other, WignerValue):
            return NotImplemented
        s = self.sign * other.sign
        if s == 0:
            return WignerValue.zero()
        return WignerValue(s, self.radicand * other.radicand)

    def times_rational(self, q: Fraction | int) -> "WignerValue":
        """Multiply by an exact rational (folded into the radicand squared)."""
        return self * WignerValue.from_rational(q)

    def reciprocal(self) -> "WignerValue":
        if self.sign == 0:
            raise ZeroDivisionError("reciprocal of a zero WignerValue")
        return WignerValue(self.sign, 1 / self.radicand)

    def to_float(self) -> float:
        # float(Fraction) and math.sqrt are each correctly rounded, so
        # the result is within 1 ulp of the rounded square root.
        return self.sign * math.sqrt(float(self.radicand))

    def __float__(self) -> float:
        return self.to_float()


def _triangle_coefficient(a: int, b: int, c: int) -> Fraction:
    """(a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)! for a valid triad."""
    return Fraction(
        _factorial(a + b - c) * _factorial(a - b + c) * _factorial(-a + b + c),
        _factorial(a + b + c + 1),
    )


def wigner3j_zero(triple: AngularTriple) -> WignerValue:
    """3j symbol with all projections zero, by the closed factorial form.

    For an even sum 2g the value is
    (-1)**g * sqrt(Delta) * g! / ((g-l1)! (g-l2)! (g-l3)!)
    and it vanishes when the sum is odd or the triangle condition fails.
    """
    if not triple.applicable:
        return WignerValue.zero()
    l1, l2, l3 = triple.lambda1, triple.lambda2, triple.lambda3
    g = (l1 + l2 + l3) // 2
    ratio = Fraction(
        _factorial(g), _factorial(g - l1) * _factorial(g - l2) * _factorial(g - l3)
    )
    sign = -1 if g % 2 else 1
    return WignerValue(sign, ratio * ratio * _triangle_coefficient(l1, l2, l3))


def wigner3j_zero_racah(triple: AngularTriple) -> WignerValue:
    """Same symbol through the general Racah single sum at zero projections.

    Kept as an independent route for exactness cross-checks against
    :func:`wigner3j_zero`; both must produce identical records.
    """
    if not triple.triangle_ok:
        return WignerValue.zero()
    j1, j2, j3 = triple.lambda1, triple.lambda2, triple.lambda3
    t_min = max(0, j2 - j3, j1 - j3)
    t_max = min(j1 + j2 - j3, j1, j2)
    total = Fraction(0)
    for t in range(t_min, t_max + 1):
        den = (
            _factorial(t)
            * _factorial(j1 + j2 - j3 - t)
            * _factorial(j1 - t)
            * _factorial(j2 - t)
            * _factorial(j3 - j2 + t)
            * _factorial(j3 - j1 + t)
        )
        total += Fraction((-1) ** t, den)
    total *= (-1) ** (j1 - j2) * _factorial(j1) * _factorial(j2) * _factorial(j3)
    return WignerValue.from_rational(total) * WignerValue.sqrt_of(
        _triangle_coefficient(j1, j2, j3)
    )


def _triad_ok(a: int, b: int, c: int) -> bool:
    return abs(a - b) <= c <= a + b


def wigner6j(j1: int, j2: int, j3: int, j4: int, j5: int, j6: int) -> WignerValue:
    """6j symbol {j1 j2 j3; j4 j5 j6} by the Racah single-sum formula.

    Returns the exact zero when any of the four triads violates the
    triangle rules.
    """
    js = (j1, j2, j3, j4, j5, j6)
    for j in js:
        if not isinstance(j, int) or j < 0:
            raise ValueError(f"6j arguments must be nonnegative integers, got {js!r}")
    triads = ((j1, j2, j3), (j1, j5, j6), (j4, j2, j6), (j4, j5, j3))
    if not all(_triad_ok(*tr) for tr in triads):
        return WignerValue.zero()

    sums = (j1 + j2 + j3, j1 + j5 + j6, j4 + j2 + j6, j4 + j5 + j3)
    caps = (j1 + j2 + j4 + j5, j2 + j3 + j5 + j6, j3 + j1 + j6 + j4)
    total = Fraction(0)
    for t in range(max(sums), min(caps) + 1):
        den = _factorial(caps[0] - t) * _factorial(caps[1] - t) * _factorial(caps[2] - t)
        for s in sums:
            den *= _factorial(t - s)
        total += Fraction((-1) ** t * _factorial(t + 1), den)

    value = WignerValue.from_rational(total)
    for tr in triads:
        value = value * WignerValue.sqrt_of(_triangle_coefficient(*tr))
    return value
