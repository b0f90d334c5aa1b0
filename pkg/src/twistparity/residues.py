"""Class keys of twist parameters at the bad places of each family.

At a finite bad place p the key is (ord_p(d) mod n, class of the unit part of d
in (Z/p^m)* modulo n-th powers), with m the class modulus.  At the real place
it is the sign of d.  Two parameters with equal keys at a place are equal
modulo n-th powers of the completion there.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import as_rational, is_prime, ord_p, unit_part
from .errors import InvalidInput

INF = "inf"

DEGREE = {"quadratic": 2, "quartic": 4, "sextic": 6}

BAD_PLACES = {
    "quadratic": (2, INF),
    "quartic": (2, INF),
    "sextic": (2, 3, INF),
}

# unit-class representatives printed for the tables over Q
LISTED_REPRESENTATIVES = {
    ("quadratic", 2): (1, 3, 5, 7),
    ("quartic", 2): (1, 3, 5, 7, 9, 11, 13, 15),
    ("sextic", 2): (1, 3, 5, 7),
    ("sextic", 3): (1, 2, 4, 5, 8, 16),
}


def degree(family: str) -> int:
    try:
        return DEGREE[family]
    except KeyError:
        raise InvalidInput(f"unknown family {family!r}") from None


@dataclass(frozen=True, order=True)
class PlaceClassKey:
    """``place`` is a prime or ``"inf"``; ``ord_residue`` is None at the real place
    and ``unit`` is then the sign (+1/-1)."""

    place: int | str
    ord_residue: int | None
    unit: int

    @property
    def is_real(self) -> bool:
        return self.place == INF


def class_modulus(p: int, family: str, e: int = 1) -> int:
    """Exponent m such that unit classes are read in (O_v / v^m)*.

    ``e`` is the ramification index over p; it is 1 over Q but the general
    formulas are kept.
    """
    degree(family)
    if e < 1:
        raise InvalidInput("ramification index must be >= 1")
    if family == "quadratic":
        if p == 2:
            return 2 * e + 1
        if is_prime(p):
            return 1
    elif family == "quartic" and p == 2:
        return 3 * e + 1
    elif family == "sextic":
        if p == 2:
            return 2 * e + 1
        if p == 3:
            return -(-3 * e // 2) + 1
    raise InvalidInput(f"no class modulus for family {family} at p={p}")


@dataclass(frozen=True)
class UnitClassTable:
    p: int
    modulus: int  # p**m
    representatives: tuple[int, ...]
    class_of: dict  # unit residue -> representative
    nth_powers: frozenset

    def representative(self, u: int) -> int:
        return self.class_of[u % self.modulus]


def _default_representatives(p, modulus, powers):
    reps, covered = [], set()
    for u in range(1, modulus):
        if u % p and u not in covered:
            reps.append(u)
            covered.update(u * w % modulus for w in powers)
    return tuple(reps)


@lru_cache(maxsize=None)
def unit_class_table(p: int, family: str) -> UnitClassTable:
    n = degree(family)
    modulus = p ** class_modulus(p, family)
    units = [u for u in range(1, modulus) if u % p]
    powers = frozenset(pow(w, n, modulus) for w in units)
    reps = LISTED_REPRESENTATIVES.get((family, p)) or _default_representatives(p, modulus, powers)
    class_of = {}
    for r in reps:
        for w in powers:
            u = r * w % modulus
            if u in class_of:
                raise AssertionError(f"representatives {class_of[u]} and {r} share a class mod {modulus}")
            class_of[u] = r
    if len(class_of) != len(units):
        raise AssertionError(f"representatives for {family} at {p} do not exhaust the units mod {modulus}")
    return UnitClassTable(p, modulus, tuple(reps), class_of, powers)


def _residue(u: Fraction, modulus: int) -> int:
    return u.numerator * pow(u.denominator, -1, modulus) % modulus


def unit_class_representative(u, p: int, family: str) -> int:
    u = as_rational(u)
    if u == 0 or ord_p(u, p) != 0:
        raise InvalidInput(f"{u} is not a unit at {p}")
    table = unit_class_table(p, family)
    return table.representative(_residue(u, table.modulus))


def place_class_key(d, place, family: str) -> PlaceClassKey:
    d = as_rational(d)
    n = degree(family)
    if d == 0:
        raise InvalidInput("0 is not a twist parameter")
    if place == INF:
        return PlaceClassKey(INF, None, 1 if d > 0 else -1)
    v = ord_p(d, place)
    return PlaceClassKey(place, v % n, unit_class_representative(unit_part(d, place), place, family))


def all_keys(place, family: str) -> list[PlaceClassKey]:
    """Every possible key at ``place``, in table order."""
    if place == INF:
        return [PlaceClassKey(INF, None, 1), PlaceClassKey(INF, None, -1)]
    reps = unit_class_table(place, family).representatives
    return [PlaceClassKey(place, r, u) for r in range(degree(family)) for u in reps]


def equivalent(c, d, family: str, places=None) -> bool:
    """Whether c and d share a class key at every bad place of ``family``.

    ``places`` overrides the built-in bad set (used for quadratic fixtures
    whose curve has extra bad primes).
    """
    places = BAD_PLACES[family] if places is None else places
    return all(place_class_key(c, v, family) == place_class_key(d, v, family) for v in places)
