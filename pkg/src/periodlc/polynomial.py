"""Dense univariate polynomials over GF(q) and factored products.

Coefficients are held as a tuple of canonical integer residues in ascending
degree order; the highest stored coefficient is always nonzero, so the zero
polynomial is the empty tuple.  ``Polynomial.coefficients()`` returns the same
data as ``FieldElement`` objects for callers that want them.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, inf

import numpy as np

from .errors import UsageError
from .field import FieldElement, PrimeField, _is_prime

# Products of at least this degree are expanded with numpy.
_EXPAND_NUMPY_MIN = 256

#: Degree of the zero polynomial.  Compares below every integer degree.
NEG_INF = -inf


# -- raw coefficient-list helpers (lists of ints, modulus q) -----------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _add(a, b, q: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % q
    return _trim(out)


def _mul(a, b, q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % q for v in out])


def _divmod(a, b, q: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], _trim(r)
    lead_inv = pow(b[-1], -1, q)
    quo = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        t = r[k] % q
        if t:
            t = t * lead_inv % q
            quo[k - db] = t
            off = k - db
            for j in range(db + 1):
                r[off + j] -= t * b[j]
        r[k] = 0
    rem = [v % q for v in r[:db]]
    return _trim(quo), _trim(rem)


def _rem(a, b, q: int) -> list[int]:
    """Remainder only; skips building the quotient."""
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return r
    lead_inv = pow(b[-1], -1, q)
    for k in range(len(r) - 1, db - 1, -1):
        t = r[k] % q
        if t:
            t = t * lead_inv % q
            off = k - db
            for j in range(db):
                r[off + j] -= t * b[j]
        r[k] = 0
    return _trim([v % q for v in r[:db]])


def _monic(a, q: int) -> list[int]:
    if not a or a[-1] == 1:
        return list(a)
    s = pow(a[-1], -1, q)
    return [v * s % q for v in a]


def _gcd(a, b, q: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _rem(a, b, q)
    return _monic(a, q)


# -- public polynomial type ---------------------------------------------------

class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs=()):
        q = field.q
        vals = [int(c.value if isinstance(c, FieldElement) else c) % q for c in coeffs]
        self.field = field
        self.coeffs = tuple(_trim(vals))

    @classmethod
    def _raw(cls, field: PrimeField, coeffs) -> Polynomial:
        # coeffs must already be canonical and trimmed
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def one(cls, field: PrimeField) -> Polynomial:
        return cls._raw(field, (1,))

    @classmethod
    def monomial(cls, field: PrimeField, degree: int, coeff: int = 1) -> Polynomial:
        return cls(field, [0] * degree + [coeff])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficients(self) -> list[FieldElement]:
        return [FieldElement(c, self.field) for c in self.coeffs]

    def monic(self) -> Polynomial:
        return Polynomial._raw(self.field, _monic(self.coeffs, self.field.q))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.field.q
        return acc

    def _check(self, other: Polynomial) -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise UsageError(f"cannot combine polynomials over {self.field} and {other.field}")

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_add(self, -other)

    def __neg__(self):
        q = self.field.q
        return Polynomial._raw(self.field, [(-c) % q for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.field, [c * other for c in self.coeffs])
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __pow__(self, e: int):
        result = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __repr__(self):
        return f"Polynomial({self.field}, {list(self.coeffs)})"

    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        """Ascending human-readable form, e.g. ``1 + 2*x + x^3``."""
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def to_list(self) -> list[int]:
        return list(self.coeffs) if self.coeffs else [0]


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    return Polynomial._raw(a.field, _add(a.coeffs, b.coeffs, a.field.q))


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    return Polynomial._raw(a.field, _mul(a.coeffs, b.coeffs, a.field.q))


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    a._check(b)
    quo, rem = _divmod(a.coeffs, b.coeffs, a.field.q)
    return Polynomial._raw(a.field, quo), Polynomial._raw(a.field, rem)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise UsageError("gcd(0, 0) is undefined")
    return Polynomial._raw(a.field, _gcd(a.coeffs, b.coeffs, a.field.q))


def _check_cyclotomic_args(p: int, k: int, field: PrimeField) -> None:
    if not _is_prime(p):
        raise UsageError(f"cyclotomic index base must be prime, got {p}")
    if p == field.q:
        raise UsageError(f"p must differ from the field characteristic {field.q}")
    if k < 1:
        raise UsageError(f"cyclotomic exponent must be positive, got {k}")


def _cyclotomic_dilated(p: int, stride: int, field: PrimeField) -> Polynomial:
    # 1 + x^stride + x^(2 stride) + ... + x^((p-1) stride)
    coeffs = [0] * ((p - 1) * stride + 1)
    coeffs[::stride] = [1] * p
    return Polynomial._raw(field, coeffs)


def cyclotomic_prime_power(p: int, k: int, field: PrimeField) -> Polynomial:
    """Phi_{p^k}(x) = Phi_p(x^{p^(k-1)})."""
    _check_cyclotomic_args(p, k, field)
    return _cyclotomic_dilated(p, p ** (k - 1), field)


def _q_power_exponent(e: int, q: int) -> int:
    j = 0
    while e > 1 and e % q == 0:
        e //= q
        j += 1
    if e != 1:
        return -1
    return j


def phi_frobenius_power(p: int, k: int, e: int, field: PrimeField) -> Polynomial:
    """Phi_{p^k}(x) ** e for e a power of q, built as Phi_{p^k}(x**e)."""
    _check_cyclotomic_args(p, k, field)
    if not isinstance(e, int) or e < 1 or _q_power_exponent(e, field.q) < 0:
        raise UsageError(f"exponent {e} is not a power of {field.q}")
    return _cyclotomic_dilated(p, p ** (k - 1) * e, field)


# -- factored form -------------------------------------------------------------

@dataclass(frozen=True)
class Linear:
    """The factor 1 - x."""

    def degree(self) -> int:
        return 1

    def __str__(self):
        return "(1 - x)"


@dataclass(frozen=True)
class OneMinusXPow:
    """The factor 1 - x^M."""
    M: int

    def degree(self) -> int:
        return self.M

    def __str__(self):
        return f"(1 - x^{self.M})"


@dataclass(frozen=True)
class CyclotomicPrimePower:
    """The factor Phi_{p^k}(x)."""
    p: int
    k: int

    def degree(self) -> int:
        return (self.p - 1) * self.p ** (self.k - 1)

    def __str__(self):
        return f"Phi_{self.p ** self.k}(x)"


def one_minus_x_pow(M: int):
    """Label for 1 - x^M, folding M == 1 into ``Linear`` so labels stay unique."""
    return Linear() if M == 1 else OneMinusXPow(M)


def _label_name(label) -> str:
    if isinstance(label, Linear):
        return "1-x"
    if isinstance(label, OneMinusXPow):
        return f"1-x^{label.M}"
    return f"Phi_{label.p ** label.k}"


@dataclass(frozen=True)
class FactoredPolynomial:
    field: PrimeField
    factors: tuple = ()

    def __post_init__(self):
        labels = [lab for lab, _ in self.factors]
        if len(set(labels)) != len(labels):
            raise UsageError("factor labels must be pairwise distinct")
        for lab, e in self.factors:
            if e < 1:
                raise UsageError(f"exponent of {lab} must be positive, got {e}")

    @classmethod
    def from_counts(cls, field: PrimeField, counts: dict) -> FactoredPolynomial:
        return cls(field, tuple((lab, e) for lab, e in counts.items() if e > 0))

    @property
    def degree(self) -> int:
        return sum(lab.degree() * e for lab, e in self.factors)

    def times(self, other: FactoredPolynomial) -> FactoredPolynomial:
        counts = dict(self.factors)
        for lab, e in other.factors:
            counts[lab] = counts.get(lab, 0) + e
        return FactoredPolynomial.from_counts(self.field, counts)

    def describe(self) -> list[dict]:
        return [{"label": _label_name(lab), "exponent": e} for lab, e in self.factors]

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(str(lab) if e == 1 else f"{lab}^{e}" for lab, e in self.factors)


def _sparse_power_terms(label, e: int, q: int) -> list[list[tuple[int, int]]]:
    """Split label**e into sparse factors via base-q digits of e.

    Uses (g(x))^(d q^j) = g(x^(q^j))^d, which holds because every label has
    coefficients in the prime field.
    """
    out = []
    j = 0
    while e:
        d = e % q
        e //= q
        dil = q ** j
        j += 1
        if not d:
            continue
        if isinstance(label, CyclotomicPrimePower):
            stride = label.p ** (label.k - 1) * dil
            terms = [(i * stride, 1) for i in range(label.p)]
            out.extend([terms] * d)
        else:
            M = 1 if isinstance(label, Linear) else label.M
            stride = M * dil
            # (1 - y)^d with d < q, binomial coefficients reduced mod q
            out.append([(i * stride, comb(d, i) * (-1) ** i % q) for i in range(d + 1)])
    return out


def expand(f: FactoredPolynomial) -> Polynomial:
    """Multiply out a factored polynomial.

    Every factor is sparse, so the product is accumulated by shifted adds of
    the running dense product; no dense-by-dense multiplication happens.
    """
    q = f.field.q
    sparse = [t for lab, e in f.factors for t in _sparse_power_terms(lab, e, q)]
    if f.degree < _EXPAND_NUMPY_MIN:
        acc = [1]
        for terms in sparse:
            nxt = [0] * (len(acc) + terms[-1][0])
            for shift, coef in terms:
                if coef:
                    for i, v in enumerate(acc, shift):
                        nxt[i] += coef * v
            acc = [v % q for v in nxt]
        return Polynomial._raw(f.field, _trim(acc))
    acc = np.ones(1, dtype=np.int64)
    for terms in sparse:
        nxt = np.zeros(acc.size + terms[-1][0], dtype=np.int64)
        n = acc.size
        for shift, coef in terms:
            if coef:
                nxt[shift:shift + n] += coef * acc
        acc = nxt % q
    return Polynomial._raw(f.field, _trim(acc.tolist()))
