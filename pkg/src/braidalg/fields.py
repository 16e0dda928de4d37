"""Exact scalar arithmetic over the rationals and prime fields.

Rational scalars are `fractions.Fraction`; elements of F_p are plain ints
reduced to [0, p).  Every operation is exact -- there is no floating point
anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The ground field: characteristic 0 means Q, otherwise F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or prime, got {p}")

    @property
    def is_rationals(self) -> bool:
        return self.characteristic == 0

    def zero(self):
        return Fraction(0) if self.is_rationals else 0

    def one(self):
        return Fraction(1) if self.is_rationals else 1

    def of(self, value):
        """Coerce an int, Fraction or 'p/q' string into the field."""
        if isinstance(value, str):
            if "/" in value:
                num, den = value.split("/", 1)
                return self.div(self.of(int(num)), self.of(int(den)))
            value = int(value)
        if self.is_rationals:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return value.numerator % self.characteristic
            return self.div(self.of(value.numerator), self.of(value.denominator))
        return value % self.characteristic

    def add(self, a, b):
        c = a + b
        return c if self.is_rationals else c % self.characteristic

    def sub(self, a, b):
        c = a - b
        return c if self.is_rationals else c % self.characteristic

    def mul(self, a, b):
        c = a * b
        return c if self.is_rationals else c % self.characteristic

    def neg(self, a):
        return -a if self.is_rationals else (-a) % self.characteristic

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rationals:
            return 1 / Fraction(a)
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a) -> str:
        return str(a)

    def __str__(self):
        return "Q" if self.is_rationals else f"F{self.characteristic}"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)
