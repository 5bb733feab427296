"""Block-recursive linear complexity for periods N = q**n * p**m.

The working period is held as an int64 numpy array of residues modulo q.
Every level views it as a grid of equal blocks and either compares, sums or
running-sums those blocks, so each level costs time linear in the current
length and the length shrinks by a factor of q or p between levels.

Loop accounting: every block level costs one loop, or one loop per division
pass when a level divides more than once; reaching a nonzero scalar (or the
final p-block comparison) costs one more.  With this accounting the period
q**n costs at most n(q-1)+1 loops and the general period at most
[n(q-1)+1](m+1).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .errors import ContractViolation, InternalError, UsageError
from .field import FieldElement, PrimeField
from .numtheory import PeriodShape, factor_period
from .polynomial import (
    CyclotomicPrimePower,
    FactoredPolynomial,
    Linear,
    Polynomial,
    expand,
    one_minus_x_pow,
)

# Block sums and running sums hold at most q * (q - 1) before reduction.
MAX_MODULUS = 2 ** 31


@dataclass(frozen=True, eq=False)
class PeriodicSequence:
    """First period of a periodic sequence together with its certified shape."""
    symbols: np.ndarray
    shape: PeriodShape

    def __post_init__(self):
        if self.symbols.ndim != 1 or self.symbols.size != self.shape.N:
            raise UsageError(
                f"period length {self.symbols.size} does not match shape N={self.shape.N}"
            )

    @classmethod
    def from_values(cls, values, q: int) -> PeriodicSequence:
        """Reduce ``values`` modulo q and certify the period length."""
        if q >= MAX_MODULUS:
            raise UsageError(f"q must be below {MAX_MODULUS}, got {q}")
        if isinstance(values, np.ndarray):
            arr = values.astype(np.int64) % q
        else:
            arr = np.array([int(v) % q for v in values], dtype=np.int64)
        return cls._trusted(arr, factor_period(arr.size, q))

    @classmethod
    def _trusted(cls, arr: np.ndarray, shape: PeriodShape) -> PeriodicSequence:
        arr.flags.writeable = False
        return cls(arr, shape)

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.shape.q)

    @property
    def N(self) -> int:
        return self.symbols.size

    def __len__(self):
        return self.symbols.size

    def tolist(self) -> list[int]:
        return self.symbols.tolist()

    def elements(self) -> list[FieldElement]:
        f = self.field
        return [FieldElement(v, f) for v in self.symbols.tolist()]

    def polynomial(self) -> Polynomial:
        """The generating polynomial s_0 + s_1 x + ... + s_{N-1} x^{N-1}."""
        return Polynomial(self.field, self.symbols.tolist())

    def __repr__(self):
        head = self.symbols[:12].tolist()
        more = ", ..." if self.N > 12 else ""
        return f"PeriodicSequence(GF({self.shape.q}), N={self.N}, {head}{more})"


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    """Equal-length blocks A_1..A_k of a working buffer (rows of ``blocks``)."""
    M: int
    blocks: np.ndarray
    modulus: int

    @property
    def count(self) -> int:
        return self.blocks.shape[0]

    def __getitem__(self, i: int) -> np.ndarray:
        return self.blocks[i]

    def flatten(self) -> np.ndarray:
        return self.blocks.reshape(-1)


class TraceStep(NamedTuple):
    stage: str
    block_length: int
    branch: str


@dataclass
class AlgorithmTrace:
    loop_count: int = 0
    branch_log: list[TraceStep] = dc_field(default_factory=list)

    def log(self, stage: str, block_length: int, branch: str) -> None:
        self.branch_log.append(TraceStep(stage, block_length, branch))


@dataclass(frozen=True, eq=False)
class LinearComplexityResult:
    """Complexity plus minimal polynomial.

    ``min_poly`` is None for results from oracles that only know the expanded
    polynomial; those pass it in as ``_expanded``.
    """
    complexity: int
    min_poly: FactoredPolynomial | None
    trace: AlgorithmTrace
    _expanded: Polynomial | None = dc_field(default=None, repr=False)

    @cached_property
    def expanded(self) -> Polynomial:
        """Monic minimal polynomial, multiplied out on first access."""
        if self._expanded is not None:
            return self._expanded
        return expand(self.min_poly).monic()


# -- block operations ----------------------------------------------------------

def split_blocks(working, M: int, modulus: int | None = None) -> BlockDecomposition:
    if isinstance(working, PeriodicSequence):
        modulus = working.shape.q if modulus is None else modulus
        working = working.symbols
    arr = np.asarray(working, dtype=np.int64)
    if modulus is None:
        raise UsageError("modulus is required when splitting a raw buffer")
    if M < 1 or arr.size % M:
        raise InternalError(f"block length {M} does not divide buffer length {arr.size}")
    return BlockDecomposition(M, arr.reshape(-1, M), modulus)


def _grid(d: BlockDecomposition, rows: int, cols: int) -> np.ndarray:
    if d.count != rows * cols:
        raise InternalError(f"expected {rows * cols} blocks, found {d.count}")
    return d.blocks.reshape(rows, cols, d.M)


def _column_sums(grid: np.ndarray, q: int) -> np.ndarray:
    return np.add.reduce(grid, axis=0) % q


def _all_rows_equal(rows: np.ndarray) -> bool:
    return not np.count_nonzero(rows != rows[0])


def _prime_update(grid: np.ndarray, q: int) -> np.ndarray:
    # A'_t = S_t - S_{t-1}, S_t being the column running sum A_t + A_{t-p} + ...
    rows, cols, M = grid.shape
    run = (np.cumsum(grid, axis=0) % q).reshape(rows * cols, M)
    out = run.copy()
    out[1:] -= run[:-1]
    out %= q
    return out.reshape(rows, cols, M)


def column_sums(d: BlockDecomposition, p: int, q: int) -> np.ndarray:
    """Row i-1 is A_i + A_{p+i} + ... + A_{(q-1)p+i}, for q rows of p blocks."""
    return _column_sums(_grid(d, q, p), d.modulus)


def phi_divisibility_holds(d: BlockDecomposition, p: int, q: int) -> bool:
    return _all_rows_equal(column_sums(d, p, q))


def prime_update(d: BlockDecomposition, p: int, q: int) -> BlockDecomposition:
    """Blocks of a(x) / Phi_{p^m}(x)^{q^(n-1)}; requires the divisibility test to pass."""
    grid = _grid(d, q, p)
    if not _all_rows_equal(_column_sums(grid, d.modulus)):
        raise ContractViolation("prime_update needs equal column sums")
    new = _prime_update(grid, d.modulus)
    return BlockDecomposition(d.M, new.reshape(q * p, d.M), d.modulus)


def _b_values(a: np.ndarray, p: int, q: int, M: int) -> np.ndarray:
    # block i of b is A_i + A_{q+i} + ... + A_{(p-1)q+i}
    return (np.add.reduce(a.reshape(p, q, M), axis=0) % q).reshape(-1)


def b_sequence(d: BlockDecomposition, p: int, q: int) -> PeriodicSequence:
    if d.count != q * p:
        raise InternalError(f"expected {q * p} blocks, found {d.count}")
    vals = _b_values(d.flatten(), p, q, d.M)
    return PeriodicSequence._trusted(vals, factor_period(vals.size, d.modulus))


# -- algorithm bodies on raw buffers ---------------------------------------------

def _run_qn(a: np.ndarray, q: int, n: int, counts: Counter, trace: AlgorithmTrace) -> int:
    c = 0
    l = q ** n
    while np.count_nonzero(a):
        if l == 1:
            c += 1
            counts[Linear()] += 1
            trace.loop_count += 1
            trace.log("qn", 1, "scalar")
            break
        l //= q
        M = l
        blocks = a.reshape(q, M)
        count = 0
        while True:
            total = np.add.reduce(blocks, axis=0) % q
            if np.count_nonzero(total):
                e = q - count - 1
                a = total
                c += e * M
                if e:
                    counts[one_minus_x_pow(M)] += e
                trace.log("qn", M, f"reduce count={count}")
                break
            count += 1
            if count == q:
                raise InternalError("(1 - x^qM) divides a nonzero buffer of degree < qM")
            blocks = np.cumsum(blocks, axis=0) % q
        trace.loop_count += max(1, count)
    return c


def _run_phi(a: np.ndarray, q: int, p: int, n: int, m: int, trace: AlgorithmTrace) -> int:
    """Exponent z of Phi_{p^m} in the minimal polynomial of the period ``a``."""
    k = p ** (m - 1)
    l = q ** n
    z = 0
    while np.count_nonzero(a):
        if l == 1:
            trace.loop_count += 1
            if _all_rows_equal(a.reshape(p, k)):
                trace.log(f"phi{m}", k, "blocks equal")
            else:
                z += 1
                trace.log(f"phi{m}", k, "blocks differ")
            break
        l //= q
        M = l * k
        grid = a.reshape(q, p, M)
        count = 0
        exhausted = False
        while True:
            sums = _column_sums(grid, q)
            if not _all_rows_equal(sums):
                z += (q - count - 1) * l
                a = sums.reshape(-1)
                trace.log(f"phi{m}", M, f"reduce count={count}")
                break
            count += 1
            if count == q:
                exhausted = True
                trace.log(f"phi{m}", M, "fully divisible")
                break
            grid = _prime_update(grid, q)
        trace.loop_count += max(1, count - 1 if exhausted else count)
        if exhausted:
            break
    return z


def _run_pm(a: np.ndarray, q: int, p: int, m: int, counts: Counter, trace: AlgorithmTrace) -> int:
    c = 0
    j = m
    while np.count_nonzero(a):
        trace.loop_count += 1
        if j == 0:
            c += 1
            counts[Linear()] += 1
            trace.log("pm", 1, "scalar")
            break
        k = p ** (j - 1)
        blocks = a.reshape(p, k)
        if _all_rows_equal(blocks):
            a = blocks[0]
            trace.log("pm", k, "blocks equal")
        else:
            a = np.add.reduce(blocks, axis=0) % q
            c += (p - 1) * k
            counts[CyclotomicPrimePower(p, j)] += 1
            trace.log("pm", k, "blocks differ")
        j -= 1
    return c


def _finish(s: PeriodicSequence, c: int, counts: Counter, trace: AlgorithmTrace) -> LinearComplexityResult:
    f = FactoredPolynomial.from_counts(s.field, counts)
    if f.degree != c:
        raise InternalError(f"complexity {c} disagrees with factored degree {f.degree}")
    return LinearComplexityResult(c, f, trace)


# -- public algorithms -----------------------------------------------------------

def lc_period_pm(s: PeriodicSequence) -> LinearComplexityResult:
    """Linear complexity for period p**m (no factor of q in N)."""
    sh = s.shape
    if sh.n != 0:
        raise UsageError(f"period {sh.N} has a factor {sh.q}; use lc_general")
    counts, trace = Counter(), AlgorithmTrace()
    if sh.m == 0:
        c = _run_qn(s.symbols, sh.q, 0, counts, trace)
    else:
        c = _run_pm(s.symbols, sh.q, sh.p, sh.m, counts, trace)
    return _finish(s, c, counts, trace)


def lc_period_qn(s: PeriodicSequence) -> LinearComplexityResult:
    """Linear complexity for period q**n, q the field characteristic."""
    sh = s.shape
    if sh.m != 0:
        raise UsageError(f"period {sh.N} has a factor {sh.p}; use lc_general")
    counts, trace = Counter(), AlgorithmTrace()
    c = _run_qn(s.symbols, sh.q, sh.n, counts, trace)
    return _finish(s, c, counts, trace)


def phi_part(s: PeriodicSequence) -> tuple[int, FactoredPolynomial, int]:
    """The Phi_{p^m} power dividing the minimal polynomial.

    Returns ``(z, Phi_{p^m}(x)^z, (p-1) p^(m-1) z)``.
    """
    sh = s.shape
    if sh.m < 1:
        raise UsageError(f"period {sh.N} has no factor p")
    z = _run_phi(s.symbols, sh.q, sh.p, sh.n, sh.m, AlgorithmTrace())
    label = CyclotomicPrimePower(sh.p, sh.m)
    f = FactoredPolynomial.from_counts(s.field, {label: z})
    return z, f, label.degree() * z


def lc_general(s: PeriodicSequence) -> LinearComplexityResult:
    """Linear complexity and factored minimal polynomial for any certified shape.

    For n, m >= 1 each p-level contributes Phi_{p^level}^z and hands the
    folded sequence b (period q**n * p**(level-1)) to the next level; b is
    taken from the buffer before the Phi search rewrites its blocks.
    """
    sh = s.shape
    if not isinstance(s, PeriodicSequence):
        raise UsageError("lc_general needs a PeriodicSequence")
    if sh.m == 0:
        return lc_period_qn(s)
    if sh.n == 0:
        return lc_period_pm(s)
    q, p, n = sh.q, sh.p, sh.n
    counts, trace = Counter(), AlgorithmTrace()
    c = 0
    a = s.symbols
    for level in range(sh.m, 0, -1):
        if not np.count_nonzero(a):
            break
        M = q ** (n - 1) * p ** (level - 1)
        b = _b_values(a, p, q, M)
        z = _run_phi(a, q, p, n, level, trace)
        if z:
            label = CyclotomicPrimePower(p, level)
            counts[label] += z
            c += label.degree() * z
        a = b
    else:
        c += _run_qn(a, q, n, counts, trace)
    return _finish(s, c, counts, trace)
