"""Arithmetic in prime fields GF(q).

Elements are stored as least non-negative residues so equality is a plain
integer comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UsageError


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or not _is_prime(self.q):
            raise UsageError(f"field modulus must be prime, got {self.q!r}")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.q, self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.q)]

    def __repr__(self):
        return f"GF({self.q})"


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise UsageError(f"{self.value} is not a canonical residue modulo {self.field.q}")

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise UsageError(f"cannot combine elements of {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, neg(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, neg(self))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, inv(other))

    def __neg__(self):
        return neg(self)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return FieldElement(pow(inv(self).value, -exponent, self.field.q), self.field)
        return FieldElement(pow(self.value, exponent, self.field.q), self.field)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.q})"


def _check_same(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise UsageError(f"cannot combine elements of {a.field} and {b.field}")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    s = a.value + b.value
    q = a.field.q
    return FieldElement(s - q if s >= q else s, a.field)


def neg(a: FieldElement) -> FieldElement:
    return FieldElement((-a.value) % a.field.q, a.field)


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return FieldElement(a.value * b.value % a.field.q, a.field)


def inv(a: FieldElement) -> FieldElement:
    if a.value == 0:
        raise ZeroDivisionError(f"0 has no inverse in {a.field}")
    return FieldElement(pow(a.value, -1, a.field.q), a.field)
