"""Exact scalars for the two concrete cancellation-meadow models.

``Q0`` is the field of rationals with the zero-totalized inverse and, on top of
that, sign, floor and ceiling.  ``Zp(p)`` is a prime field with the same
inverse convention; it only interprets the plain meadow signature.

Rationals are :class:`fractions.Fraction` values, which are always stored in
lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import MeadowError, UnsupportedSymbol

Rational = Fraction

SIGN = "sign"
FLOOR = "floor"
CEILING = "ceiling"


def q0_inv(a: Fraction) -> Fraction:
    if a == 0:
        return Fraction(0)
    return 1 / a


def q0_sign(a: Fraction) -> Fraction:
    return Fraction((a > 0) - (a < 0))


def q0_floor(a: Fraction) -> Fraction:
    return Fraction(math.floor(a))


def q0_ceiling(a: Fraction) -> Fraction:
    return -q0_floor(-a)


def is_prime(n: int) -> bool:
    """Trial division; meant for desk-scale moduli only."""
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


@dataclass(frozen=True, slots=True)
class PrimeFieldScalar:
    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if not 0 <= self.residue < self.modulus:
            object.__setattr__(self, "residue", self.residue % self.modulus)

    def _check(self, other: PrimeFieldScalar) -> None:
        if other.modulus != self.modulus:
            raise MeadowError(f"mixed moduli {self.modulus} and {other.modulus}")

    def __add__(self, other: PrimeFieldScalar) -> PrimeFieldScalar:
        self._check(other)
        return PrimeFieldScalar((self.residue + other.residue) % self.modulus, self.modulus)

    def __mul__(self, other: PrimeFieldScalar) -> PrimeFieldScalar:
        self._check(other)
        return PrimeFieldScalar(self.residue * other.residue % self.modulus, self.modulus)

    def __neg__(self) -> PrimeFieldScalar:
        return PrimeFieldScalar(-self.residue % self.modulus, self.modulus)

    def __sub__(self, other: PrimeFieldScalar) -> PrimeFieldScalar:
        return self + (-other)

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"


def zp_inv(a: PrimeFieldScalar) -> PrimeFieldScalar:
    if a.residue == 0:
        return a
    return PrimeFieldScalar(pow(a.residue, a.modulus - 2, a.modulus), a.modulus)


Scalar = Union[Fraction, PrimeFieldScalar]

_RATIONAL_LITERAL = re.compile(r"\s*(-?\d+)(?:\s*/\s*(-?\d+))?\s*\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``-3/4``-style literals (optional sign, integer, optional ``/`` integer)."""
    m = _RATIONAL_LITERAL.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in literal: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Model:
    """A cancellation-meadow model: ``Q0`` (modulus ``None``) or ``Zp``."""

    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.modulus is not None and not is_prime(self.modulus):
            raise MeadowError(f"Z_{self.modulus} is not a cancellation meadow: {self.modulus} is not prime")

    @classmethod
    def from_name(cls, name: str) -> Model:
        """``q0`` or ``zp:<p>``."""
        name = name.strip().lower()
        if name == "q0":
            return Q0
        if name.startswith("zp:"):
            try:
                p = int(name[3:])
            except ValueError:
                raise MeadowError(f"bad modulus in model {name!r}") from None
            return cls(p)
        raise MeadowError(f"unknown model {name!r} (use q0 or zp:<p>)")

    @property
    def kind(self) -> str:
        return "Q0" if self.modulus is None else f"Zp({self.modulus})"

    @property
    def capabilities(self) -> frozenset[str]:
        if self.modulus is None:
            return frozenset({SIGN, FLOOR, CEILING})
        return frozenset()

    def __str__(self) -> str:
        return "q0" if self.modulus is None else f"zp:{self.modulus}"

    def scalar(self, value: int | Fraction) -> Scalar:
        if self.modulus is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return PrimeFieldScalar(value.numerator % self.modulus, self.modulus)
            num = self.scalar(value.numerator)
            return num * zp_inv(self.scalar(value.denominator))
        return PrimeFieldScalar(value % self.modulus, self.modulus)

    def zero(self) -> Scalar:
        return self.scalar(0)

    def one(self) -> Scalar:
        return self.scalar(1)

    def inv(self, a: Scalar) -> Scalar:
        if self.modulus is None:
            return q0_inv(a)
        return zp_inv(a)

    def _require(self, capability: str) -> None:
        if capability not in self.capabilities:
            raise UnsupportedSymbol(f"{capability} is not interpreted in model {self}")

    def sign(self, a: Scalar) -> Scalar:
        self._require(SIGN)
        return q0_sign(a)

    def floor(self, a: Scalar) -> Scalar:
        self._require(FLOOR)
        return q0_floor(a)

    def ceiling(self, a: Scalar) -> Scalar:
        self._require(CEILING)
        return q0_ceiling(a)

    def is_zero(self, a: Scalar) -> bool:
        if self.modulus is None:
            return a == 0
        return a.residue == 0

    def parse_scalar(self, text: str) -> Scalar:
        return self.scalar(parse_rational(text))

    def format(self, a: Scalar) -> str:
        if self.modulus is None:
            return format_rational(a)
        return str(a)

    def random_scalar(self, rng: random.Random, bound: int) -> Scalar:
        if self.modulus is None:
            return random_rational(rng, bound)
        return PrimeFieldScalar(rng.randrange(self.modulus), self.modulus)


Q0 = Model()


def random_rational(rng: random.Random, bound: int) -> Fraction:
    """Numerator and denominator uniform in ``[-bound, bound]``; a zero
    denominator is resampled."""
    num = rng.randint(-bound, bound)
    den = 0
    while den == 0:
        den = rng.randint(-bound, bound)
    return Fraction(num, den)


def rational_grid(bound: int) -> list[Fraction]:
    """Every distinct rational with numerator and denominator in ``[-bound, bound]``."""
    seen = {Fraction(n, d) for n in range(-bound, bound + 1) for d in range(1, bound + 1)}
    return sorted(seen)
