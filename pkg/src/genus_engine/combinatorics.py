"""Partitions, monomial symmetric polynomials and the continuum-Toda coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, prod
from typing import Sequence


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"not a partition: {p}")
        object.__setattr__(self, "parts", p)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for x in self.parts:
            out[x] = out.get(x, 0) + 1
        return out

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip().strip("[]()")
        return cls(tuple(sorted((int(x) for x in body.split(",") if x.strip()), reverse=True)))


def partitions(n: int, max_len: int) -> list[Partition]:
    """All partitions of ``n`` with at most ``max_len`` parts, reverse-lex order."""
    if n < 1 or max_len < 1:
        raise ValueError("need n >= 1 and max_len >= 1")
    out: list[Partition] = []

    def rec(remaining, largest, acc):
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        if len(acc) == max_len:
            return
        for p in range(min(remaining, largest), 0, -1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return out


@lru_cache(maxsize=None)
def _distinct_exponent_vectors(parts: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    padded = parts + (0,) * (n - len(parts))
    return tuple(sorted(set(permutations(padded))))


def monomial_symmetric(lam, x: Sequence) -> Fraction:
    """m_lambda(x): each distinct monomial counted once."""
    parts = lam.parts if isinstance(lam, Partition) else tuple(lam)
    if len(x) < len(parts):
        raise ValueError(f"need at least {len(parts)} variables, got {len(x)}")
    total = 0
    for e in _distinct_exponent_vectors(tuple(parts), len(x)):
        total += prod(xi ** ei for xi, ei in zip(x, e))
    return total


def c_nu(nu: int) -> int:
    if nu < 2:
        raise ValueError(f"nu must be >= 2, got {nu}")
    return 2 * nu * comb(2 * nu - 1, nu - 1)


def zeta(nu: int, j: int) -> Fraction:
    if j == 0:
        return Fraction(1)
    return Fraction(comb(nu * j, j - 1), j)


def _check_lambda(nu: int, lam: Partition):
    if lam.size % 2 == 0:
        raise ValueError(f"|lambda| must be odd, got {lam.size}")
    if lam.length > nu + 1:
        raise ValueError(f"length of {lam} exceeds nu+1 = {nu + 1}")


def restricted_partitions(nu: int) -> list[tuple[int, ...]]:
    """Strictly decreasing mu with (nu+1,...,1) <= mu <= (2nu,...,nu) componentwise."""
    lo = list(range(nu + 1, 0, -1))
    hi = list(range(2 * nu, nu - 1, -1))
    out = []
    for pick in combinations(range(2 * nu, 0, -1), nu + 1):
        if all(lo[i] <= pick[i] <= hi[i] for i in range(nu + 1)):
            out.append(pick)
    return out


def downturn_walks(nu: int) -> list[tuple[int, ...]]:
    """Downturn step sets of the length-2nu walks from +1 to -1."""
    return list(combinations(range(1, 2 * nu + 1), nu + 1))


def walk_locations(steps: Sequence[int]) -> tuple[int, ...]:
    """Position right after each downturn; the walk starts at +1."""
    return tuple(i - 2 * m + 1 for m, i in enumerate(steps, start=1))


@lru_cache(maxsize=None)
def _d_sym(nu: int, parts: tuple[int, ...]) -> int:
    eta = tuple(range(2 * nu, -1, -2))
    total = 0
    for mu in restricted_partitions(nu):
        total += 2 * monomial_symmetric(parts, [a - b for a, b in zip(mu, eta)])
    return int(total)


def d_coeff_symmetric(nu: int, lam) -> int:
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    _check_lambda(nu, lam)
    return _d_sym(nu, lam.parts)


def d_coeff_walks(nu: int, lam) -> int:
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    _check_lambda(nu, lam)
    total = 0
    for steps in downturn_walks(nu):
        loc = walk_locations(steps)
        total += monomial_symmetric(lam, [x + 1 for x in loc]) - monomial_symmetric(lam, loc)
    return int(total)
