"""Quadratic characters and the ramified supports S(d), T(d), U(d).

A support is the sorted tuple of good odd primes at which the twisting
extension ramifies in the way that flips parity.  The character term of a
support is (1 - prod (a/p)) / 2, one factor per prime regardless of exponent.
"""
from __future__ import annotations

from .arith import as_rational, factorize, power_free_representative
from .errors import InvalidInput


def kronecker(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise InvalidInput(f"Jacobi symbol needs an odd positive modulus, got {n!r}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _support(d, degree: int, excluded: tuple[int, ...], keep) -> tuple[int, ...]:
    d = as_rational(d)
    if d == 0:
        raise InvalidInput("support of 0 is undefined")
    r = power_free_representative(d, degree)
    return tuple(p for p, e in factorize(r) if p not in excluded and keep(e % degree))


def support_S(d) -> tuple[int, ...]:
    """Odd primes p with ord_p(d) = 2 mod 4."""
    return _support(d, 4, (2,), lambda e: e == 2)


def support_T(d) -> tuple[int, ...]:
    """Primes p not dividing 6 with ord_p(d) not divisible by 3."""
    return _support(d, 3, (2, 3), lambda e: e != 0)


def support_U(d) -> tuple[int, ...]:
    """Primes p not dividing 6 with ord_p(d) = 2 or 4 mod 6."""
    return _support(d, 6, (2, 3), lambda e: e in (2, 4))


def character_term(a: int, support) -> int:
    if a not in (-1, -3):
        raise InvalidInput(f"character must be (-1/.) or (-3/.), got a={a}")
    prod = 1
    for p in support:
        if p % 2 == 0:
            raise InvalidInput(f"even prime {p} in a ramified support")
        s = kronecker(a, p)
        if s == 0:
            raise InvalidInput(f"prime {p} divides {a}: support contains a bad place")
        prod *= s
    return (1 - prod) // 2
