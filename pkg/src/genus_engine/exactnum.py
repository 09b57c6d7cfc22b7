"""Exact scalar domains.

Rationals are plain :class:`fractions.Fraction` values.  On top of them this
module provides numbers in a real quadratic field ``a + b*sqrt(d)``, rational
multiples of half-integer powers of pi (the values taken by Gamma at
half-integers), and radical monomials ``prod p**e`` with rational exponents.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

__all__ = [
    "Fraction",
    "QuadExt",
    "SqrtPiScaled",
    "PrimeExponentReal",
    "rational_arith",
    "quadext_arith",
    "gamma_half_integer",
    "format_rational",
    "parse_rational",
]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    """``"p/q"``, with ``q`` omitted when it is 1."""
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def rational_arith(a, b, op: str) -> Fraction:
    a, b = as_fraction(a), as_fraction(b)
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def _is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class QuadExt:
    """The number ``a + b*sqrt(d)`` with rational ``a, b`` and square-free ``d``."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 6

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        if not _is_squarefree(self.d) or self.d == 1:
            raise ValueError(f"d must be a square-free integer > 1, got {self.d}")

    @classmethod
    def sqrt(cls, d: int = 6) -> "QuadExt":
        return cls(Fraction(0), Fraction(1), d)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(f"mismatched radicands {self.d} and {other.d}")
            return other
        return QuadExt(as_fraction(other), Fraction(0), self.d)

    def __add__(self, other):
        o = self._coerce(other)
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return QuadExt(self.a * o.a + self.d * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, other):
        o = self._coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        num = self * o.conjugate()
        return QuadExt(num.a / n, num.b / n, self.d)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return QuadExt(1, 0, self.d) / (self ** -k)
        out = QuadExt(Fraction(1), Fraction(0), self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def to_string(self) -> str:
        return f"{format_rational(self.a)} + {format_rational(self.b)}*sqrt({self.d})"

    __str__ = to_string

    @classmethod
    def from_string(cls, text: str) -> "QuadExt":
        m = re.fullmatch(r"\s*(\S+)\s*\+\s*(\S+)\s*\*\s*sqrt\((\d+)\)\s*", text)
        if not m:
            raise ValueError(f"not a quadratic-field literal: {text!r}")
        return cls(parse_rational(m.group(1)), parse_rational(m.group(2)), int(m.group(3)))


def quadext_arith(a: QuadExt, b: QuadExt, op: str) -> QuadExt:
    if isinstance(a, QuadExt) and isinstance(b, QuadExt) and a.d != b.d:
        raise ValueError(f"mismatched radicands {a.d} and {b.d}")
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operator {op!r}")


@dataclass(frozen=True)
class SqrtPiScaled:
    """``coeff * pi**(pi_half_exponent/2)``."""

    coeff: Fraction
    pi_half_exponent: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_fraction(self.coeff))
        if not isinstance(self.pi_half_exponent, int):
            raise TypeError("pi_half_exponent must be an integer")
        if self.coeff == 0:
            object.__setattr__(self, "pi_half_exponent", 0)

    def __add__(self, other):
        if not isinstance(other, SqrtPiScaled):
            other = SqrtPiScaled(as_fraction(other), 0)
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if other.pi_half_exponent != self.pi_half_exponent:
            raise ValueError("cannot add values with different powers of pi")
        return SqrtPiScaled(self.coeff + other.coeff, self.pi_half_exponent)

    def __neg__(self):
        return SqrtPiScaled(-self.coeff, self.pi_half_exponent)

    def __mul__(self, other):
        if isinstance(other, SqrtPiScaled):
            return SqrtPiScaled(self.coeff * other.coeff,
                                self.pi_half_exponent + other.pi_half_exponent)
        return SqrtPiScaled(self.coeff * as_fraction(other), self.pi_half_exponent)

    __rmul__ = __mul__

    def inverse(self) -> "SqrtPiScaled":
        if self.coeff == 0:
            raise ZeroDivisionError("inverse of zero")
        return SqrtPiScaled(1 / self.coeff, -self.pi_half_exponent)

    def __truediv__(self, other):
        if not isinstance(other, SqrtPiScaled):
            other = SqrtPiScaled(as_fraction(other), 0)
        return self * other.inverse()

    def __float__(self):
        return float(self.coeff) * math.pi ** (self.pi_half_exponent / 2)

    def to_string(self) -> str:
        c = format_rational(self.coeff)
        if self.pi_half_exponent == 0:
            return c
        return f"{c} * pi^({self.pi_half_exponent}/2)"

    __str__ = to_string

    @classmethod
    def from_string(cls, text: str) -> "SqrtPiScaled":
        m = re.fullmatch(r"\s*(\S+?)\s*(?:\*\s*pi\^\((-?\d+)/2\))?\s*", text)
        if not m:
            raise ValueError(f"not a pi-scaled literal: {text!r}")
        return cls(parse_rational(m.group(1)), int(m.group(2) or 0))


def gamma_half_integer(m) -> SqrtPiScaled:
    """Gamma at a positive integer or half-integer, exactly.

    >>> gamma_half_integer(Fraction(9, 2))
    SqrtPiScaled(coeff=Fraction(105, 16), pi_half_exponent=1)
    """
    m = as_fraction(m)
    if m <= 0:
        raise ValueError(f"Gamma argument must be positive, got {m}")
    if m.denominator == 1:
        return SqrtPiScaled(Fraction(math.factorial(m.numerator - 1)), 0)
    if m.denominator != 2:
        raise ValueError(f"argument must be an integer or half-integer, got {m}")
    # Gamma(k + 1/2) = (k-1/2)(k-3/2)...(1/2) * sqrt(pi)
    c = Fraction(1)
    x = m - 1
    while x > 0:
        c *= x
        x -= 1
    return SqrtPiScaled(c, 1)


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class PrimeExponentReal:
    """A signed radical monomial ``sign * prod p**e`` with rational exponents."""

    exponents: Mapping[int, Fraction] = field(default_factory=dict)
    sign: int = 1

    def __post_init__(self):
        clean = {int(p): as_fraction(e) for p, e in self.exponents.items()
                 if as_fraction(e) != 0}
        for p in clean:
            if p < 2 or len(_factor(p)) != 1 or _factor(p)[p] != 1:
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "exponents", dict(sorted(clean.items())))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def from_rational(cls, x) -> "PrimeExponentReal":
        x = as_fraction(x)
        if x == 0:
            raise ValueError("zero has no prime-exponent form")
        exps: dict[int, Fraction] = {}
        for p, e in _factor(abs(x.numerator)).items():
            exps[p] = exps.get(p, Fraction(0)) + e
        for p, e in _factor(x.denominator).items():
            exps[p] = exps.get(p, Fraction(0)) - e
        return cls(exps, 1 if x > 0 else -1)

    def __mul__(self, other):
        if not isinstance(other, PrimeExponentReal):
            other = PrimeExponentReal.from_rational(other)
        exps = dict(self.exponents)
        for p, e in other.exponents.items():
            exps[p] = exps.get(p, Fraction(0)) + e
        return PrimeExponentReal(exps, self.sign * other.sign)

    __rmul__ = __mul__

    def __pow__(self, k):
        k = as_fraction(k)
        if self.sign < 0 and k.denominator != 1:
            raise ValueError("fractional power of a negative monomial")
        sign = self.sign if k.numerator % 2 else 1
        return PrimeExponentReal({p: e * k for p, e in self.exponents.items()}, sign)

    def inverse(self) -> "PrimeExponentReal":
        return self ** -1

    def __truediv__(self, other):
        if not isinstance(other, PrimeExponentReal):
            other = PrimeExponentReal.from_rational(other)
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, PrimeExponentReal):
            try:
                other = PrimeExponentReal.from_rational(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.sign == other.sign and dict(self.exponents) == dict(other.exponents)

    def __hash__(self):
        return hash((self.sign, tuple(self.exponents.items())))

    def is_rational(self) -> bool:
        return all(e.denominator == 1 for e in self.exponents.values())

    def __float__(self):
        v = 1.0
        for p, e in self.exponents.items():
            v *= p ** float(e)
        return self.sign * v

    def to_string(self) -> str:
        body = " * ".join(f"{p}^({format_rational(e)})" for p, e in self.exponents.items()) or "1"
        return body if self.sign > 0 else f"-{body}"

    __str__ = to_string
