"""Exact rationals, p-adic valuations, factorization and power-free representatives.

Rationals are :class:`fractions.Fraction` throughout.  Integers are Python ints,
so nothing ever overflows.
"""
from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

from sympy import isprime as _isprime

from .errors import FactorizationError, InvalidInput, UndefinedValuation

TRIAL_DIVISION_BOUND = 10**6
DEFAULT_FACTOR_EFFORT = 2_000_000
EFFORT_ENV = "TWISTPARITY_FACTOR_EFFORT"


def reduce(numerator: int, denominator: int) -> Fraction:
    """Canonical reduced fraction with a positive denominator."""
    if denominator == 0:
        raise InvalidInput("zero denominator")
    return Fraction(int(numerator), int(denominator))


def as_rational(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, bool) or not isinstance(q, (int, _RationalABC)):
        raise InvalidInput(f"expected an exact rational, got {q!r}")
    return Fraction(q)


def parse_rational(text: str) -> Fraction:
    """Parse ``a`` or ``a/b`` (optional leading sign on ``a``)."""
    s = text.strip().replace("−", "-")
    num, sep, den = s.partition("/")
    try:
        n = int(num, 10)
        d = int(den, 10) if sep else 1
    except ValueError:
        raise InvalidInput(f"not a rational number: {text!r}") from None
    if sep and den.strip().startswith(("-", "+")):
        raise InvalidInput(f"sign belongs on the numerator: {text!r}")
    return reduce(n, d)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def is_prime(n: int) -> bool:
    # sympy: deterministic below 2**64, BPSW beyond
    return n >= 2 and bool(_isprime(n))


def _check_prime(p):
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidInput(f"{p!r} is not a prime")


def _vint(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ord_p(q, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    q = as_rational(q)
    _check_prime(p)
    if q == 0:
        raise UndefinedValuation("valuation of 0 is undefined")
    return _vint(q.numerator, p) - _vint(q.denominator, p)


def unit_part(q, p: int) -> Fraction:
    """q / p**ord_p(q)."""
    q = as_rational(q)
    v = ord_p(q, p)
    return q / Fraction(p) ** v


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    n = TRIAL_DIVISION_BOUND
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return tuple(i for i in range(n + 1) if sieve[i])


def _factor_effort() -> int:
    raw = os.environ.get(EFFORT_ENV)
    if not raw:
        return DEFAULT_FACTOR_EFFORT
    try:
        effort = int(raw)
    except ValueError:
        raise InvalidInput(f"{EFFORT_ENV} must be an integer, got {raw!r}") from None
    if effort < 1:
        raise InvalidInput(f"{EFFORT_ENV} must be positive")
    return effort


def _brent(n: int, budget: list[int], rng: random.Random) -> int | None:
    """One Pollard-Brent run; returns a nontrivial factor or None. ``budget`` is shared."""
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        budget[0] -= r
        if budget[0] <= 0 and g == 1:
            return None
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _split(n: int, budget: list[int], rng: random.Random, out: dict[int, int]):
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, budget, rng, out)
        _split(r, budget, rng, out)
        return
    while True:
        if budget[0] <= 0:
            raise FactorizationError(f"factorization effort exhausted on cofactor {n}")
        f = _brent(n, budget, rng)
        if f is not None:
            break
    _split(f, budget, rng, out)
    _split(n // f, budget, rng, out)


def factorize(n: int, effort: int | None = None) -> Factorization:
    """Complete factorization of a nonzero integer.

    Trial division by primes below 10**6, then Pollard-Brent rho on what is left.
    ``effort`` bounds the total number of rho iterations; default from the
    TWISTPARITY_FACTOR_EFFORT environment variable.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidInput(f"expected an integer, got {n!r}")
    if n == 0:
        raise InvalidInput("cannot factor 0")
    return _factorize_abs(abs(n), effort if effort is not None else _factor_effort(), 1 if n > 0 else -1)


@lru_cache(maxsize=4096)
def _factorize_abs(m: int, effort: int, sign: int) -> Factorization:
    found: dict[int, int] = {}
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        # deterministic seed: same input, same work, same result
        _split(m, [effort], random.Random(m), found)
    return Factorization(sign, tuple(sorted(found.items())))


def power_free_representative(q, n: int) -> int:
    """The n-th-power-free integer in the class of q modulo (Q*)**n.

    For odd n the sign is an n-th power, so the result is positive.
    """
    q = as_rational(q)
    if n not in (2, 3, 4, 6):
        raise InvalidInput(f"unsupported power {n}")
    if q == 0:
        raise InvalidInput("0 has no power class")
    m = q.numerator * q.denominator ** (n - 1)  # q * den**n
    f = factorize(m)
    r = f.sign if n % 2 == 0 else 1
    for p, e in f:
        r *= p ** (e % n)
    return r
