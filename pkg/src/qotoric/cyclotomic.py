"""Exact arithmetic in cyclotomic fields Q(zeta_M).

A :class:`CyclotomicNumber` stores its coordinates in the power basis
``1, z, ..., z^(phi(M)-1)`` of ``Q(z)``, ``z = exp(2 pi i / M)``.  The level is
always the smallest M whose field contains the number, which makes the
representation unique: rationals have level 1, ``-1`` included.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from numbers import Rational

from . import _linalg


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] // den[-1]
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for k in _divisors(n)[:-1]:
        poly = _polydiv_exact(poly, list(cyclotomic_polynomial(k)))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(coeffs, level: int) -> list[Fraction]:
    """Reduce a polynomial in z modulo the level-th cyclotomic polynomial."""
    phi = cyclotomic_polynomial(level)
    deg = len(phi) - 1
    a = [Fraction(c) for c in coeffs]
    for i in range(len(a) - 1, deg - 1, -1):
        c = a[i]
        if c:
            for j in range(deg + 1):
                a[i - deg + j] -= c * phi[j]
    a = a[:deg] + [Fraction(0)] * max(0, deg - len(a))
    return a


@lru_cache(maxsize=None)
def _embedding(small: int, big: int) -> tuple[tuple[Fraction, ...], ...]:
    """Rows: images of the power basis of Q(zeta_small) inside Q(zeta_big)."""
    step = big // small
    rows = []
    for k in range(euler_phi(small)):
        poly = [0] * (k * step + 1)
        poly[k * step] = 1
        rows.append(tuple(_reduce(poly, big)))
    return tuple(rows)


def _lift(coeffs, level: int, target: int) -> list[Fraction]:
    if level == target:
        return list(coeffs)
    E = _embedding(level, target)
    out = [Fraction(0)] * euler_phi(target)
    for c, row in zip(coeffs, E):
        if c:
            for j, x in enumerate(row):
                out[j] += c * x
    return out


@lru_cache(maxsize=65536)
def _canonical(level: int, coeffs: tuple[Fraction, ...]) -> tuple[int, tuple[Fraction, ...]]:
    if not any(coeffs[1:]):
        return 1, (coeffs[0] if coeffs else Fraction(0),)
    for small in _divisors(level)[1:-1]:
        y = _linalg.solve_left([list(r) for r in _embedding(small, level)], list(coeffs))
        if y is not None:
            return small, tuple(y)
    return level, coeffs


class CyclotomicNumber:
    """An element of a cyclotomic field, stored at its minimal level."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs=()):
        if level < 1:
            raise ValueError("level must be a positive integer")
        reduced = tuple(_reduce(list(coeffs) or [0], level))
        lvl, cs = _canonical(level, reduced)
        object.__setattr__(self, "level", lvl)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    @classmethod
    def rational(cls, q) -> CyclotomicNumber:
        return cls(1, [Fraction(q)])

    @classmethod
    def root_of_unity(cls, level: int, k: int = 1) -> CyclotomicNumber:
        """``exp(2 pi i k / level)``."""
        k %= level
        poly = [0] * (k + 1)
        poly[k] = 1
        return cls(level, poly)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.level == 1 and self.coeffs[0] == 0

    def is_rational(self) -> bool:
        return self.level == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(x) -> CyclotomicNumber:
        if isinstance(x, CyclotomicNumber):
            return x
        if isinstance(x, (Rational, Fraction, int)):
            return CyclotomicNumber.rational(x)
        return NotImplemented

    def _common(self, other):
        L = lcm(self.level, other.level)
        return L, _lift(self.coeffs, self.level, L), _lift(other.coeffs, other.level, L)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.level == 1 and other.level == 1:
            return CyclotomicNumber.rational(self.coeffs[0] + other.coeffs[0])
        L, a, b = self._common(other)
        return CyclotomicNumber(L, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.level, [-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.level == 1 and other.level == 1:
            return CyclotomicNumber.rational(self.coeffs[0] * other.coeffs[0])
        if other.level == 1:
            return CyclotomicNumber(self.level, [x * other.coeffs[0] for x in self.coeffs])
        if self.level == 1:
            return other * self
        L, a, b = self._common(other)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return CyclotomicNumber(L, prod)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.level == 1:
            return CyclotomicNumber.rational(1 / self.coeffs[0])
        n = len(self.coeffs)
        # row k: coordinates of self * z^k
        rows = []
        for k in range(n):
            rows.append(_reduce([0] * k + list(self.coeffs), self.level))
        one = [Fraction(1)] + [Fraction(0)] * (n - 1)
        y = _linalg.solve_left(rows, one)
        return CyclotomicNumber(self.level, y)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> CyclotomicNumber:
        """Image under the automorphism ``z -> z^k`` (k coprime to the level)."""
        poly = [Fraction(0)] * (k * len(self.coeffs) + 1)
        for i, c in enumerate(self.coeffs):
            poly[(i * k) % self.level] += c
        return CyclotomicNumber(self.level, poly)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.level == other.level and self.coeffs == other.coeffs

    def __hash__(self):
        if self.level == 1:
            return hash(self.coeffs[0])
        return hash((self.level, self.coeffs))

    def __repr__(self):
        if self.level == 1:
            return f"CyclotomicNumber({self.coeffs[0]})"
        return f"CyclotomicNumber({self.level}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.level == 1:
            return str(self.coeffs[0])
        parts = [f"{c}*z{self.level}^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return "(" + " + ".join(parts) + ")"


ONE = CyclotomicNumber.rational(1)
ZERO = CyclotomicNumber.rational(0)
