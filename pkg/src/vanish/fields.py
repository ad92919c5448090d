"""Coefficient fields: the rationals and prime fields GF(p).

Rational coefficients are ``fractions.Fraction`` values; prime-field
coefficients are plain ints reduced into ``[0, p)``.  All arithmetic is
exact; there is no floating-point path anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CoefficientField:
    """Either the rationals (``p is None``) or GF(p) for a prime p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"prime field characteristic must be prime, got {self.p}")

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def coerce(self, value):
        """Normalize an int, Fraction, or string like '2/3' into the field."""
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def mul_int(self, a, n: int):
        """a times an integer scalar (used by differentiation)."""
        return a * n if self.p is None else (a * n) % self.p

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


QQ = CoefficientField()


def GF(p: int) -> CoefficientField:
    return CoefficientField(p)
