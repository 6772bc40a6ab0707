"""Exact coefficient fields.

Two kinds are supported: the rationals (elements are `fractions.Fraction`)
and prime fields F_p with word-size modulus (elements are ints in [0, p)).
Floating point never appears; every operation is exact.
"""

from __future__ import annotations

from fractions import Fraction

MAX_MODULUS = 2**31


def _is_prime(p: int) -> bool:
    """Trial-division primality test, adequate for word-size moduli."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """The field Q.  A single shared instance is exported as `QQ`."""

    characteristic = 0

    def __call__(self, value) -> Fraction:
        """Coerce an int, Fraction, or numeric string into the field."""
        if isinstance(value, bool) or not isinstance(value, (int, Fraction, str)):
            raise TypeError(f"cannot coerce {value!r} into Q")
        return Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return Fraction(a) / b

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for a prime p < 2^31.  Elements are plain ints mod p."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        if p >= MAX_MODULUS:
            raise ValueError(f"modulus must be below 2^31, got {p}")
        self.p = p
        self.characteristic = p

    def __call__(self, value) -> int:
        if isinstance(value, bool):
            raise TypeError("cannot coerce bool into F_p")
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        if isinstance(value, str):
            value = int(value)
        if not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into F_{self.p}")
        return value % self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def field_from_name(name: str):
    """Parse a field label: 'Q' for the rationals, 'F<p>' for a prime field."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return PrimeField(int(name[1:]))
    raise ValueError(f"unknown field {name!r} (expected Q or F<p>)")


def field_name(field) -> str:
    """Inverse of `field_from_name`."""
    return "Q" if field == QQ else f"F{field.p}"
