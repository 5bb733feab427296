"""Integer predicates behind the period preconditions."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError, ShapeError, UsageError
from .field import _is_prime


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    return _is_prime(n)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as {prime: exponent}."""
    if n < 1:
        raise UsageError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi_prime_power(p: int, n: int) -> int:
    if not is_prime(p) or n < 1:
        raise UsageError(f"need prime p and n >= 1, got p={p}, n={n}")
    return p ** n - p ** (n - 1)


def euler_phi(n: int) -> int:
    result = 1
    for p, e in factorize(n).items():
        result *= euler_phi_prime_power(p, e)
    return result


def multiplicative_order(a: int, n: int) -> int:
    """Smallest t >= 1 with a**t == 1 (mod n).

    Starts from phi(n) and strips prime factors while the power stays 1.
    """
    if n < 2:
        raise UsageError(f"modulus must be at least 2, got {n}")
    if gcd(a, n) != 1:
        raise UsageError(f"{a} is not a unit modulo {n}")
    t = euler_phi(n)
    for r in factorize(t):
        while t % r == 0 and pow(a, t // r, n) == 1:
            t //= r
    return t


def is_primitive_root_mod_p2(q: int, p: int) -> bool:
    if p == q:
        raise UsageError(f"p and q must differ, both are {p}")
    if not (is_prime(p) and is_prime(q)):
        raise UsageError(f"p and q must be prime, got p={p}, q={q}")
    n = p * p
    return multiplicative_order(q, n) == n - p


@dataclass(frozen=True)
class PeriodShape:
    """A certified factorization N = q**n * p**m.

    ``p`` is None when m == 0.
    """
    q: int
    n: int
    p: int | None
    m: int

    @property
    def N(self) -> int:
        return self.q ** self.n * (self.p ** self.m if self.m else 1)

    def loop_bound(self) -> int:
        """Upper bound on the fast algorithm's loop count for this shape."""
        return (self.n * (self.q - 1) + 1) * (self.m + 1)

    def as_dict(self) -> dict:
        return {"q": self.q, "p": self.p, "n": self.n, "m": self.m, "N": self.N}


def factor_period(N: int, q: int) -> PeriodShape:
    """Certify that N = q**n * p**m with q a primitive root modulo p**2.

    For p == 2 the cyclotomic factors Phi_{2^k} are only irreducible over an
    odd prime field for k <= 2, so periods with 2**3 | N are refused as well.
    """
    if not isinstance(N, int) or N < 1:
        raise UsageError(f"period must be a positive integer, got {N!r}")
    if not is_prime(q):
        raise UsageError(f"q must be prime, got {q}")
    n = 0
    rest = N
    while rest % q == 0:
        rest //= q
        n += 1
    if rest == 1:
        return PeriodShape(q, n, None, 0)
    primes = factorize(rest)
    if len(primes) != 1:
        raise ShapeError(
            f"period {N} = {q}^{n} * {rest}, and {rest} is not a prime power"
        )
    (p, m), = primes.items()
    if not is_primitive_root_mod_p2(q, p):
        raise PreconditionError(f"{q} is not a primitive root modulo {p * p}")
    if p == 2 and m > 2:
        raise PreconditionError(
            f"Phi_{2 ** m}(x) is reducible over GF({q}); 2^{m} cannot divide the period"
        )
    return PeriodShape(q, n, p, m)
