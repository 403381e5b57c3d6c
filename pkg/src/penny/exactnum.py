"""Exact arithmetic over the real field Q(sqrt2, sqrt3).

Elements are stored as a + b*sqrt2 + c*sqrt3 + e*sqrt6 with Fraction
coefficients, which is closed under the field operations because
sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2 and
sqrt6*sqrt6 = 6.  Since {1, sqrt2, sqrt3, sqrt6} is linearly independent
over Q, an element is zero exactly when all four coefficients are zero,
so sign determination by adaptive-precision interval evaluation always
terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Union

from .errors import InputError

RationalLike = Union[int, Fraction]


@lru_cache(maxsize=None)
def _root_interval(radicand: int, digits: int) -> tuple[Fraction, Fraction]:
    """Rational lower/upper bounds on sqrt(radicand), width 10**-digits."""
    scale = 10**digits
    lo = isqrt(radicand * scale * scale)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


def _scaled_interval(coef: Fraction, radicand: int, digits: int) -> tuple[Fraction, Fraction]:
    lo, hi = _root_interval(radicand, digits)
    if coef >= 0:
        return coef * lo, coef * hi
    return coef * hi, coef * lo


@dataclass(frozen=True)
class QuadNum:
    """An exact element a + b*sqrt2 + c*sqrt3 + e*sqrt6 of Q(sqrt2, sqrt3)."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    e: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "e"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, p: RationalLike, q: int = 1) -> QuadNum:
        return cls(Fraction(p, q))

    @classmethod
    def sqrt2(cls) -> QuadNum:
        return cls(b=Fraction(1))

    @classmethod
    def sqrt3(cls) -> QuadNum:
        return cls(c=Fraction(1))

    @classmethod
    def sqrt6(cls) -> QuadNum:
        return cls(e=Fraction(1))

    # -- ring / field operations -------------------------------------------

    def __add__(self, other: QuadNum | RationalLike) -> QuadNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QuadNum(self.a + other.a, self.b + other.b, self.c + other.c, self.e + other.e)

    __radd__ = __add__

    def __neg__(self) -> QuadNum:
        return QuadNum(-self.a, -self.b, -self.c, -self.e)

    def __sub__(self, other: QuadNum | RationalLike) -> QuadNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: QuadNum | RationalLike) -> QuadNum:
        return (-self) + other

    def __mul__(self, other: QuadNum | RationalLike) -> QuadNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a1, b1, c1, e1 = self.a, self.b, self.c, self.e
        a2, b2, c2, e2 = other.a, other.b, other.c, other.e
        return QuadNum(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * e1 * e2,
            a1 * b2 + b1 * a2 + 3 * (c1 * e2 + e1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * e2 + e1 * b2),
            a1 * e2 + e1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadNum:
        """Field inverse via the product of the three nontrivial conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        conj = self.conj_sqrt2() * self.conj_sqrt3() * self.conj_sqrt2().conj_sqrt3()
        norm = self * conj
        assert norm.b == 0 and norm.c == 0 and norm.e == 0 and norm.a != 0
        return conj * QuadNum(1 / norm.a)

    def __truediv__(self, other: QuadNum | RationalLike) -> QuadNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def conj_sqrt2(self) -> QuadNum:
        """The automorphism sqrt2 -> -sqrt2 (hence sqrt6 -> -sqrt6)."""
        return QuadNum(self.a, -self.b, self.c, -self.e)

    def conj_sqrt3(self) -> QuadNum:
        """The automorphism sqrt3 -> -sqrt3 (hence sqrt6 -> -sqrt6)."""
        return QuadNum(self.a, self.b, -self.c, -self.e)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.e == 0

    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.e == 0

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}.

        Zero is decided structurally (all coefficients zero); otherwise the
        value is irrational or plainly rational and an interval evaluation
        at doubling precision separates it from zero.
        """
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.a > 0 else -1
        digits = 20
        while True:
            lo, hi = self._interval(digits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            digits *= 2

    def _interval(self, digits: int) -> tuple[Fraction, Fraction]:
        lo = hi = self.a
        for coef, radicand in ((self.b, 2), (self.c, 3), (self.e, 6)):
            if coef:
                l, h = _scaled_interval(coef, radicand, digits)
                lo += l
                hi += h
        return lo, hi

    # -- comparisons (exact, via sign) --------------------------------------

    def __lt__(self, other: QuadNum | RationalLike) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: QuadNum | RationalLike) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: QuadNum | RationalLike) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: QuadNum | RationalLike) -> bool:
        return (self - other).sign() >= 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadNum(Fraction(other))
        if not isinstance(other, QuadNum):
            return NotImplemented
        return (self.a, self.b, self.c, self.e) == (other.a, other.b, other.c, other.e)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.e))

    # -- conversion ----------------------------------------------------------

    def to_float(self) -> float:
        """Correctly rounded float64 value.

        Narrows a rational enclosure until both endpoints round to the same
        double; rounding is monotone, so that double is the rounding of the
        true value.  Rational elements convert directly (Fraction -> float
        is correctly rounded), which also covers exact ties.
        """
        if self.is_rational():
            return float(self.a)
        digits = 25
        while True:
            lo, hi = self._interval(digits)
            flo, fhi = float(lo), float(hi)
            if flo == fhi:
                return flo
            digits *= 2

    def __float__(self) -> float:
        return self.to_float()

    # -- text form -----------------------------------------------------------

    def to_token(self) -> str:
        """Serialize as four signed fractions `a b c e` (p/q each)."""
        return " ".join(
            f"{f.numerator}/{f.denominator}" for f in (self.a, self.b, self.c, self.e)
        )

    @classmethod
    def from_tokens(cls, tokens: list[str] | tuple[str, ...]) -> QuadNum:
        if len(tokens) != 4:
            raise InputError(f"expected 4 coefficient tokens, got {len(tokens)}")
        try:
            parts = [Fraction(t) for t in tokens]
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad coefficient in {tokens!r}: {exc}") from exc
        return cls(*parts)

    def __repr__(self) -> str:
        terms = []
        for coef, label in ((self.a, ""), (self.b, "√2"), (self.c, "√3"), (self.e, "√6")):
            if coef:
                terms.append(f"{coef}{label}")
        return " + ".join(terms) if terms else "0"


def _coerce(value: object) -> QuadNum | None:
    if isinstance(value, QuadNum):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadNum(Fraction(value))
    return None


ZERO = QuadNum()
ONE = QuadNum(Fraction(1))
SQRT2 = QuadNum.sqrt2()
SQRT3 = QuadNum.sqrt3()
SQRT6 = QuadNum.sqrt6()


def half(x: QuadNum) -> QuadNum:
    return x * Fraction(1, 2)
