"""Exact arithmetic in the formal ring of elements ``a + b*t`` with ``t*t = d``.

``t`` stands for the square root of ``d = 1 + k`` but is never evaluated.
Two elements are equal only when both components agree, so the ring stays
well defined when ``d`` happens to be a perfect square (k = 3, 8, 15, ...),
where ``10 + 6t`` and ``22`` would otherwise denote the same real number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def _coerce(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"ring coefficients must be rational, got {type(x).__name__}")


class QuadraticElement:
    """An element ``a + b*t`` of Q[t]/(t^2 - d).

    Coefficients are stored as :class:`fractions.Fraction`, which keeps them
    in lowest terms with a positive denominator.  Elements with integer
    coefficients (``is_integral``) form the subring Z[t]/(t^2 - d).
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 2) -> None:
        if isinstance(d, bool) or not isinstance(d, int) or d < 1:
            raise ValueError(f"d must be a positive integer, got {d!r}")
        object.__setattr__(self, "a", _coerce(a))
        object.__setattr__(self, "b", _coerce(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticElement is immutable")

    @classmethod
    def one(cls, d: int) -> QuadraticElement:
        return cls(1, 0, d)

    @classmethod
    def zero(cls, d: int) -> QuadraticElement:
        return cls(0, 0, d)

    @classmethod
    def golden(cls, k: int) -> QuadraticElement:
        """The dominant characteristic root ``1 + t`` for ``d = 1 + k``."""
        return cls(1, 1, 1 + k)

    @property
    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _lift(self, other) -> QuadraticElement:
        if isinstance(other, QuadraticElement):
            if other.d != self.d:
                raise ValueError(f"ring mismatch: d={self.d} vs d={other.d}")
            return other
        return QuadraticElement(_coerce(other), 0, self.d)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadraticElement):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def __repr__(self) -> str:
        return f"QuadraticElement({self.a!s}, {self.b!s}, d={self.d})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {abs(self.b)}*t"

    def __neg__(self) -> QuadraticElement:
        return QuadraticElement(-self.a, -self.b, self.d)

    def __add__(self, other) -> QuadraticElement:
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return QuadraticElement(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other) -> QuadraticElement:
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return QuadraticElement(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other) -> QuadraticElement:
        return (-self) + other

    def __mul__(self, other) -> QuadraticElement:
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return QuadraticElement(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QuadraticElement:
        return ring_pow(self, e)

    def __truediv__(self, other) -> QuadraticElement:
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError(f"{o} has norm 0 and is not invertible")
        num = self * o.conj()
        return QuadraticElement(num.a / n, num.b / n, self.d)

    def conj(self) -> QuadraticElement:
        return QuadraticElement(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """``a^2 - d b^2``, the product of an element with its conjugate."""
        return self.a * self.a - self.d * self.b * self.b


def ring_mul(x: QuadraticElement, y: QuadraticElement) -> QuadraticElement:
    if x.d != y.d:
        raise ValueError(f"ring mismatch: d={x.d} vs d={y.d}")
    return x * y


def ring_pow(x: QuadraticElement, e: int) -> QuadraticElement:
    """``x**e`` by square-and-multiply; ``x**0`` is ``1 + 0t``."""
    if isinstance(e, bool) or not isinstance(e, int):
        raise TypeError("exponent must be an int")
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    result = QuadraticElement.one(x.d)
    base = x
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def ring_conj(x: QuadraticElement) -> QuadraticElement:
    return x.conj()


@dataclass(frozen=True)
class BinetPair:
    p: int
    q: int


def binet_pair(k: int, n: int) -> BinetPair:
    """P(k, n) and Q(k, n) from powers of ``phi = 1 + t`` with ``t^2 = 1 + k``.

    Writing ``phi^n = a + b t`` gives ``phi^n - conj(phi)^n = 2 b t`` and
    ``phi^n + conj(phi)^n = 2 a``, so the two closed forms reduce to
    ``P = b`` and ``Q = 2 a`` with no irrational arithmetic.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    power = ring_pow(QuadraticElement.golden(k), n)
    assert power.is_integral
    return BinetPair(p=int(power.b), q=2 * int(power.a))
