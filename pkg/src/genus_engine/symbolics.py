"""Univariate exact algebra specialised to the z0 / u / s variables.

Throughout, ``nu`` is a fixed integer >= 2 and ``u = nu - (nu-1)*z0``.  All
coefficients are exact rationals; there is no symbolic ``nu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .exactnum import as_fraction, format_rational
from .errors import ResonanceError, StructuralError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(coeffs: Iterable) -> tuple:
    c = [as_fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class PolyQ:
    """Dense polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "z0"):
        self.coeffs = _trim(coeffs)
        self.var = var

    @classmethod
    def const(cls, c, var="z0"):
        return cls([c], var)

    @classmethod
    def x(cls, var="z0"):
        return cls([0, 1], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def _lift(self, other) -> "PolyQ":
        if isinstance(other, PolyQ):
            return other
        return PolyQ([as_fraction(other)], self.var)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return PolyQ([self[i] + o[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return PolyQ([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, PolyQ):
            c = as_fraction(other)
            return PolyQ([c * a for a in self.coeffs], self.var)
        if self.is_zero() or other.is_zero():
            return PolyQ((), self.var)
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = PolyQ([1], self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "PolyQ":
        """Multiply by ``var**k``."""
        if self.is_zero():
            return self
        return PolyQ([_ZERO] * k + list(self.coeffs), self.var)

    def divmod(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        q = [_ZERO] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c == 0:
                continue
            q[i - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= c * b
        return PolyQ(q, self.var), PolyQ(rem[:dq] if dq > 0 else [], self.var)

    def exact_div(self, other: "PolyQ") -> "PolyQ":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise StructuralError(f"{other} does not divide {self}")
        return q

    def deriv(self) -> "PolyQ":
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, Fraction)) else _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else _as_number(c, x))
        return acc

    def valuation(self) -> int:
        """Multiplicity of the root at 0 (``-1`` for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    def substitute_linear(self, a, b, var: str) -> "PolyQ":
        """Return ``self(a + b*y)`` as a polynomial in ``y`` named ``var``."""
        lin = PolyQ([a, b], var)
        out = PolyQ((), var)
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def __eq__(self, other):
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyQ({[format_rational(c) for c in self.coeffs]}, var={self.var!r})"

    def to_string(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            cs = format_rational(c)
            if not mono:
                terms.append(f"({cs})")
            else:
                terms.append(f"({cs})*{mono}")
        return " + ".join(terms)

    __str__ = to_string


def _as_number(c: Fraction, like):
    # mpmath / float evaluation of a rational coefficient
    try:
        import mpmath
        if isinstance(like, (mpmath.mpf, mpmath.mpc)):
            return mpmath.mpf(c.numerator) / c.denominator
    except ImportError:  # pragma: no cover
        pass
    return c.numerator / c.denominator


class LaurentU:
    """Finite Laurent polynomial ``sum_k c_k u**k`` with ``k >= min_degree``."""

    __slots__ = ("min_degree", "coeffs")

    def __init__(self, min_degree: int, coeffs: Sequence):
        c = [as_fraction(x) for x in coeffs]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        self.coeffs = tuple(c[lo:hi])
        self.min_degree = min_degree + lo if self.coeffs else 0

    @classmethod
    def from_dict(cls, d: dict) -> "LaurentU":
        d = {k: v for k, v in d.items() if v != 0}
        if not d:
            return cls(0, [])
        lo, hi = min(d), max(d)
        return cls(lo, [d.get(k, 0) for k in range(lo, hi + 1)])

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentU":
        return cls(k, [c])

    @classmethod
    def one(cls) -> "LaurentU":
        return cls(0, [1])

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        i = k - self.min_degree
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield self.min_degree + i, c

    def __add__(self, other: "LaurentU"):
        if not isinstance(other, LaurentU):
            other = LaurentU(0, [other])
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_degree, other.min_degree)
        hi = max(self.max_degree, other.max_degree)
        return LaurentU(lo, [self.coefficient(k) + other.coefficient(k) for k in range(lo, hi + 1)])

    __radd__ = __add__

    def __neg__(self):
        return LaurentU(self.min_degree, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentU):
            c = as_fraction(other)
            return LaurentU(self.min_degree, [c * a for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return LaurentU(0, [])
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentU(self.min_degree + other.min_degree, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentU.one()
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentU":
        return LaurentU(self.min_degree + k, self.coeffs)

    def __call__(self, u):
        total = 0
        for k, c in self.items():
            total = total + _as_number(c, u) * u ** k if not isinstance(u, (int, Fraction)) \
                else total + c * Fraction(u) ** k
        return total

    def pole_orders(self) -> tuple[int, int]:
        """``(min, max)`` pole order, i.e. ``(-max_degree, -min_degree)``."""
        return -self.max_degree, -self.min_degree

    def __eq__(self, other):
        if not isinstance(other, LaurentU):
            return NotImplemented
        return self.min_degree == other.min_degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_degree, self.coeffs))

    def __repr__(self):
        return "LaurentU({%s})" % ", ".join(f"{k}: {format_rational(c)}" for k, c in self.items())


@dataclass(frozen=True)
class MonomialTerm:
    """``z0**z0_power * laurent(u)``, with the z0 power kept separate."""

    z0_power: int
    laurent: LaurentU

    def __mul__(self, other: "MonomialTerm") -> "MonomialTerm":
        if isinstance(other, MonomialTerm):
            return MonomialTerm(self.z0_power + other.z0_power, self.laurent * other.laurent)
        return MonomialTerm(self.z0_power, self.laurent * other)

    __rmul__ = __mul__

    def scale(self, c) -> "MonomialTerm":
        return MonomialTerm(self.z0_power, self.laurent * as_fraction(c))

    def min_pole_order(self) -> int:
        return -self.laurent.max_degree

    def to_rational(self, nu: int) -> "RationalZ0":
        return RationalZ0.from_laurent(nu, self.laurent, self.z0_power)


def u_poly(nu: int) -> PolyQ:
    """``u = nu - (nu-1) z0`` as a polynomial in z0."""
    return PolyQ([nu, -(nu - 1)], "z0")


def z0_power_to_u(nu: int, m: int) -> LaurentU:
    """``z0**m`` written as a polynomial in ``u``: ``((nu - u)/(nu - 1))**m``."""
    if m < 0:
        raise ValueError("only nonnegative powers of z0 are polynomial in u")
    d = Fraction(1, (nu - 1) ** m)
    return LaurentU(0, [d * comb(m, i) * nu ** (m - i) * (-1) ** i for i in range(m + 1)])


def laurent_antiderivative_u(nu: int, f: LaurentU) -> LaurentU:
    """Antiderivative in ``z`` of ``f(u(z))`` (``dz = -du/(nu-1)``), zero constant."""
    res = f.coefficient(-1)
    if res != 0:
        raise ResonanceError(f"nonzero u^-1 coefficient {format_rational(res)} in integrand",
                             coefficient=res)
    out = {}
    for k, c in f.items():
        out[k + 1] = -c / ((nu - 1) * (k + 1))
    return LaurentU.from_dict(out)


class RationalZ0:
    """``numerator(z0) / (z0**z0_pole * u**u_pole)`` in canonical form."""

    __slots__ = ("nu", "numerator", "z0_pole", "u_pole")

    def __init__(self, nu: int, numerator, z0_pole: int = 0, u_pole: int = 0):
        if not isinstance(numerator, PolyQ):
            numerator = PolyQ(numerator, "z0")
        if z0_pole < 0 or u_pole < 0:
            raise ValueError("pole orders must be nonnegative")
        self.nu = nu
        num = numerator
        if num.is_zero():
            z0_pole = u_pole = 0
        while z0_pole > 0 and num[0] == 0:
            num = PolyQ(num.coeffs[1:], "z0")
            z0_pole -= 1
        if u_pole > 0:
            up = u_poly(nu)
            root = Fraction(nu, nu - 1)
            while u_pole > 0 and num(root) == 0:
                num = num.exact_div(up)
                u_pole -= 1
        self.numerator = num
        self.z0_pole = z0_pole
        self.u_pole = u_pole

    @classmethod
    def const(cls, nu: int, c) -> "RationalZ0":
        return cls(nu, PolyQ([c]))

    @classmethod
    def z0(cls, nu: int) -> "RationalZ0":
        return cls(nu, PolyQ([0, 1]))

    @classmethod
    def monomial(cls, nu: int, z0_power: int = 0, u_power: int = 0, c=1) -> "RationalZ0":
        num = PolyQ([c])
        zp = up = 0
        if z0_power >= 0:
            num = num.shift(z0_power)
        else:
            zp = -z0_power
        if u_power >= 0:
            num = num * u_poly(nu) ** u_power
        else:
            up = -u_power
        return cls(nu, num, zp, up)

    @classmethod
    def from_laurent(cls, nu: int, f: LaurentU, z0_power: int = 0) -> "RationalZ0":
        if f.is_zero():
            return cls(nu, PolyQ())
        body = PolyQ(f.coeffs, "u").substitute_linear(nu, -(nu - 1), "z0")
        return cls(nu, body) * cls.monomial(nu, z0_power, f.min_degree)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def _lift(self, other) -> "RationalZ0":
        if isinstance(other, RationalZ0):
            if other.nu != self.nu:
                raise ValueError("mixing different nu")
            return other
        return RationalZ0.const(self.nu, as_fraction(other))

    def __add__(self, other):
        o = self._lift(other)
        p, q = max(self.z0_pole, o.z0_pole), max(self.u_pole, o.u_pole)
        up = u_poly(self.nu)
        n1 = self.numerator.shift(p - self.z0_pole) * up ** (q - self.u_pole)
        n2 = o.numerator.shift(p - o.z0_pole) * up ** (q - o.u_pole)
        return RationalZ0(self.nu, n1 + n2, p, q)

    __radd__ = __add__

    def __neg__(self):
        return RationalZ0(self.nu, -self.numerator, self.z0_pole, self.u_pole)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RationalZ0(self.nu, self.numerator * o.numerator,
                          self.z0_pole + o.z0_pole, self.u_pole + o.u_pole)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not closed in this representation")
        out = RationalZ0.const(self.nu, 1)
        for _ in range(k):
            out = out * self
        return out

    def deriv(self) -> "RationalZ0":
        """d/dz0."""
        n, p, q, nu = self.numerator, self.z0_pole, self.u_pole, self.nu
        z = PolyQ.x()
        up = u_poly(nu)
        new = n.deriv() * z * up - n * up * p + n * z * (q * (nu - 1))
        return RationalZ0(nu, new, p + 1, q + 1)

    def __call__(self, z0):
        if isinstance(z0, (int, Fraction)):
            z0 = Fraction(z0)
            den = z0 ** self.z0_pole * (self.nu - (self.nu - 1) * z0) ** self.u_pole
            if den == 0:
                raise ZeroDivisionError("evaluation at a pole")
            return self.numerator(z0) / den
        u = self.nu - (self.nu - 1) * z0
        return self.numerator(z0) / (z0 ** self.z0_pole * u ** self.u_pole)

    def value_at_one(self) -> Fraction:
        return self(Fraction(1))

    def canonical(self) -> "RationalZ0":
        return RationalZ0(self.nu, self.numerator, self.z0_pole, self.u_pole)

    def is_canonical(self) -> bool:
        if self.z0_pole > 0 and self.numerator[0] == 0:
            return False
        if self.u_pole > 0 and not self.is_zero() and self.numerator(Fraction(self.nu, self.nu - 1)) == 0:
            return False
        return True

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalZ0.const(self.nu, other)
        if not isinstance(other, RationalZ0):
            return NotImplemented
        return (self.nu, self.numerator, self.z0_pole, self.u_pole) == \
            (other.nu, other.numerator, other.z0_pole, other.u_pole)

    def __hash__(self):
        return hash((self.nu, self.numerator, self.z0_pole, self.u_pole))

    def __repr__(self):
        return f"RationalZ0(nu={self.nu}, {self.to_string()})"

    def to_string(self) -> str:
        den = []
        if self.z0_pole:
            den.append(f"z0^{self.z0_pole}")
        if self.u_pole:
            den.append(f"(nu-(nu-1)*z0)^{self.u_pole}")
        num = f"({self.numerator.to_string()})"
        return num if not den else f"{num} / ({' * '.join(den)})"

    __str__ = to_string

    def to_json(self) -> dict:
        return {
            "numerator": [format_rational(c) for c in self.numerator.coeffs],
            "z0_pole": self.z0_pole,
            "u_pole": self.u_pole,
        }

    @classmethod
    def from_json(cls, nu: int, doc: dict) -> "RationalZ0":
        return cls(nu, PolyQ([Fraction(c) for c in doc["numerator"]]),
                   doc["z0_pole"], doc["u_pole"])


@dataclass(frozen=True)
class LogExtendedZ0:
    """``rational + log_z0 * log(z0) + log_u * log(u)``."""

    rational: RationalZ0
    log_z0: Fraction = _ZERO
    log_u: Fraction = _ZERO

    @property
    def nu(self) -> int:
        return self.rational.nu

    def __call__(self, z0):
        import mpmath
        u = self.nu - (self.nu - 1) * z0
        val = self.rational(z0)
        if isinstance(val, Fraction):
            val = mpmath.mpf(val.numerator) / val.denominator
        return val + _as_number(self.log_z0, mpmath.mpf(1)) * mpmath.log(z0) \
            + _as_number(self.log_u, mpmath.mpf(1)) * mpmath.log(u)

    def value_at_one(self) -> Fraction:
        return self.rational.value_at_one()

    def deriv(self) -> RationalZ0:
        nu = self.nu
        out = self.rational.deriv()
        if self.log_z0:
            out = out + RationalZ0.monomial(nu, -1, 0, self.log_z0)
        if self.log_u:
            out = out + RationalZ0.monomial(nu, 0, -1, -(nu - 1) * self.log_u)
        return out


def lift_log(f) -> LogExtendedZ0:
    if isinstance(f, LogExtendedZ0):
        return f
    return LogExtendedZ0(f)


def s_derivative(f, nu: int) -> RationalZ0:
    """d/ds of a function of z0(s), using ``dz0/ds = c_nu z0**(nu+1) / u``."""
    from .combinatorics import c_nu
    d = lift_log(f).deriv()
    return d * RationalZ0.monomial(nu, nu + 1, -1, c_nu(nu))


def theta(f: RationalZ0) -> RationalZ0:
    """The Euler operator ``s d/ds = z0 (z0 - 1)/u * d/dz0``."""
    nu = f.nu
    return f.deriv() * RationalZ0(nu, PolyQ([0, -1, 1]), 0, 1)


def s_variable(nu: int) -> RationalZ0:
    """``s = (z0 - 1)/(c_nu z0**nu)`` as a function of z0."""
    from .combinatorics import c_nu
    return RationalZ0(nu, PolyQ([Fraction(-1, c_nu(nu)), Fraction(1, c_nu(nu))]), nu, 0)


class PowerSeriesS:
    """Truncated power series ``c_0 + c_1 s + ... + c_M s**M``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs = tuple(as_fraction(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def const(cls, c, order: int) -> "PowerSeriesS":
        return cls([c] + [0] * order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def _lift(self, other) -> "PowerSeriesS":
        if isinstance(other, PowerSeriesS):
            return other
        return PowerSeriesS.const(as_fraction(other), self.order)

    def __add__(self, other):
        o = self._lift(other)
        m = min(self.order, o.order)
        return PowerSeriesS([self[i] + o[i] for i in range(m + 1)])

    __radd__ = __add__

    def __neg__(self):
        return PowerSeriesS([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeriesS):
            c = as_fraction(other)
            return PowerSeriesS([c * a for a in self.coeffs])
        m = min(self.order, other.order)
        out = [_ZERO] * (m + 1)
        for i in range(m + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(m + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return PowerSeriesS(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = PowerSeriesS.const(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "PowerSeriesS":
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [1 / a0]
        for n in range(1, self.order + 1):
            acc = sum((self.coeffs[k] * out[n - k] for k in range(1, n + 1)), _ZERO)
            out.append(-acc / a0)
        return PowerSeriesS(out)

    def deriv(self) -> "PowerSeriesS":
        """Termwise d/ds (order drops by one)."""
        return PowerSeriesS([k * c for k, c in enumerate(self.coeffs)][1:])

    def log(self) -> "PowerSeriesS":
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        # (log f)' = f'/f, integrate with zero constant
        q = self.deriv() * PowerSeriesS(self.coeffs[:-1]).inverse() if self.order > 0 else None
        out = [_ZERO]
        if q is not None:
            out += [c / (k + 1) for k, c in enumerate(q.coeffs)]
        return PowerSeriesS(out)

    def __eq__(self, other):
        if not isinstance(other, PowerSeriesS):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "PowerSeriesS([%s])" % ", ".join(format_rational(c) for c in self.coeffs)


def z0_series(nu: int, order: int) -> PowerSeriesS:
    """Generalized Catalan generating function ``sum c_nu**j zeta_j s**j``."""
    from .combinatorics import c_nu
    if nu < 2:
        raise ValueError(f"nu must be >= 2, got {nu}")
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = c_nu(nu)
    out = [Fraction(1)]
    for j in range(1, order + 1):
        out.append(Fraction(c ** j * comb(nu * j, j - 1), j))
    return PowerSeriesS(out)


def series_compose(f, nu: int, order: int) -> PowerSeriesS:
    """Taylor series in s of ``f(z0(s))`` for a rational or log-extended f."""
    z = z0_series(nu, order)
    u = PowerSeriesS.const(nu, order) - z * (nu - 1)
    g = lift_log(f)
    r = g.rational
    num = PowerSeriesS.const(0, order)
    for c in reversed(r.numerator.coeffs):
        num = num * z + c
    out = num * z.inverse() ** r.z0_pole * u.inverse() ** r.u_pole
    if g.log_z0:
        out = out + z.log() * g.log_z0
    if g.log_u:
        out = out + u.log() * g.log_u
    return out


def series_log_coefficient(z_list: Sequence[RationalZ0], g: int) -> RationalZ0:
    """Coefficient of ``n**(-2g)`` in ``log(sum_m z_m n**(-2m))`` for g >= 1."""
    if g < 1:
        raise ValueError("only g >= 1 (the g = 0 term is log z0)")
    nu = z_list[0].nu
    inv_z0 = RationalZ0.monomial(nu, -1)
    x = [RationalZ0.const(nu, 0)] + [z_list[m] * inv_z0 for m in range(1, g + 1)]
    # power[k][m]: coefficient of x**m in X**k
    total = RationalZ0.const(nu, 0)
    power = list(x)
    for k in range(1, g + 1):
        if k > 1:
            nxt = [RationalZ0.const(nu, 0)] * (g + 1)
            for i in range(g + 1):
                if power[i].is_zero():
                    continue
                for j in range(1, g + 1 - i):
                    nxt[i + j] = nxt[i + j] + power[i] * x[j]
            power = nxt
        total = total + power[g] * Fraction((-1) ** (k + 1), k)
    return total
