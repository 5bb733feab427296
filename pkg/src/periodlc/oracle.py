"""Reference computations used to check the fast algorithms.

Recurrence orientation, shared by Berlekamp-Massey and the LFSR regenerator:
a connection polynomial C(x) = C_0 + C_1 x + ... + C_c x^c with C_0 != 0
generates s when

    C_0 s_k + C_1 s_{k-1} + ... + C_c s_{k-c} = 0    for every k >= c.

This is the orientation in which s(x) = g(x) / f(x) for the minimal
polynomial f computed from the gcd formula, so both oracles and the fast
path can be compared as monic polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from operator import mul

import numpy as np

from .errors import UsageError
from .fastlc import AlgorithmTrace, LinearComplexityResult, PeriodicSequence
from .field import FieldElement, PrimeField
from .polynomial import Polynomial, _divmod, _gcd, _monic

# Prefixes at least this long use the vectorized discrepancy loop.
_BM_NUMPY_MIN = 256


def naive_minpoly(s: PeriodicSequence) -> LinearComplexityResult:
    """(x^N - 1) / gcd(s^N(x), x^N - 1), made monic."""
    q, N = s.shape.q, s.N
    modulus = [q - 1] + [0] * (N - 1) + [1]
    g = _gcd(s.symbols.tolist(), modulus, q)
    quo, rem = _divmod(modulus, g, q)
    assert not rem
    f = Polynomial._raw(s.field, _monic(quo, q))
    return LinearComplexityResult(len(f.coeffs) - 1, None, AlgorithmTrace(), _expanded=f)


def _values(prefix) -> list[int]:
    return [x.value if isinstance(x, FieldElement) else int(x) for x in prefix]


def _field_of(prefix, q: int | None) -> PrimeField:
    if q is not None:
        return PrimeField(q)
    for x in prefix:
        if isinstance(x, FieldElement):
            return x.field
    raise UsageError("pass q when the prefix holds plain integers")


def berlekamp_massey(prefix, q: int | None = None) -> tuple[int, Polynomial]:
    """Shortest LFSR generating ``prefix``.

    Returns ``(L, connection)`` with the connection polynomial made monic.
    For the 2N-symbol prefix of an N-periodic sequence L is its linear
    complexity and the connection equals the monic minimal polynomial.
    """
    field = _field_of(prefix, q)
    q = field.q
    try:
        s = [v % q for v in prefix]
    except TypeError:
        s = [v % q for v in _values(prefix)]
    if len(s) >= _BM_NUMPY_MIN and q < 2 ** 20:
        L, C = _bm_numpy(s, q)
    else:
        L, C = _bm_python(s, q)
    return L, Polynomial._raw(field, _monic(C, q))


def _bm_python(s: list[int], q: int) -> tuple[int, list[int]]:
    C, B = [1], [1]
    L, shift, b_inv = 0, 1, 1
    for n, sn in enumerate(s):
        d = (sn + sum(map(mul, C[1:L + 1], reversed(s[n - L:n])))) % q if L else sn
        if d == 0:
            shift += 1
            continue
        coef = d * b_inv % q
        T = C
        if len(B) + shift > len(C):
            C = C + [0] * (len(B) + shift - len(C))
        else:
            C = list(C)
        C[shift:shift + len(B)] = [(c - coef * v) % q for c, v in zip(C[shift:], B)]
        if 2 * L <= n:
            L = n + 1 - L
            B = T
            b_inv = pow(d, -1, q)
            shift = 1
        else:
            shift += 1
    while len(C) > 1 and C[-1] == 0:
        C.pop()
    return L, C


def _bm_numpy(s: list[int], q: int) -> tuple[int, list[int]]:
    N = len(s)
    rev = np.array(s[::-1], dtype=np.int64)
    C = np.zeros(N + 1, dtype=np.int64)
    B = np.zeros(N + 1, dtype=np.int64)
    C[0] = B[0] = 1
    lc, lb = 1, 1  # used lengths of C and B
    L, shift, b_inv = 0, 1, 1
    for n in range(N):
        start = N - 1 - n
        d = int(C[:L + 1] @ rev[start:start + L + 1]) % q
        if d == 0:
            shift += 1
            continue
        coef = d * b_inv % q
        if 2 * L <= n:
            T = C[:lc].copy()
            C[shift:shift + lb] -= coef * B[:lb]
            C[shift:shift + lb] %= q
            lc = max(lc, shift + lb)
            B[:lb] = 0
            B[:T.size] = T
            lb = T.size
            L = n + 1 - L
            b_inv = pow(d, -1, q)
            shift = 1
        else:
            C[shift:shift + lb] -= coef * B[:lb]
            C[shift:shift + lb] %= q
            lc = max(lc, shift + lb)
            shift += 1
    out = C[:lc].tolist()
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return L, out


@dataclass(frozen=True)
class LfsrSpec:
    connection: Polynomial
    initial_state: tuple

    def __post_init__(self):
        deg = len(self.connection.coeffs) - 1
        if deg != len(self.initial_state):
            raise UsageError(
                f"connection degree {deg} != state length {len(self.initial_state)}"
            )
        if deg > 0 and self.connection.coeffs[0] == 0:
            raise UsageError("connection polynomial needs a nonzero constant term")


def lfsr_regenerate(spec: LfsrSpec, count: int) -> list[int]:
    """Initial state followed by the recurrence output, ``count`` symbols total."""
    q = spec.connection.field.q
    C = spec.connection.coeffs
    c = len(C) - 1
    out = [v % q for v in _values(spec.initial_state)][:count]
    if c <= 0:
        return out + [0] * (count - len(out))
    scale = (-pow(C[0], -1, q)) % q
    taps = [(i, C[i] * scale % q) for i in range(1, c + 1) if C[i]]
    for k in range(c, count):
        out.append(sum(t * out[k - i] for i, t in taps) % q)
    return out
