"""Closed-form conjectural rank parities of quartic, cubic and sextic twists.

For y^2 = x^3 + d*x (quartic) the parity of the rank is

    delta_2(d) + delta_inf(d) + (1 - (-1/S(d))) / 2   (mod 2)

and for y^2 = x^3 + d (sextic)

    eps_2(d) + eps_3(d) + eps_inf(d) + (1 - (-3/U(d))) / 2   (mod 2),

with the local bits read from the built-in tables.  Both base curves have
rank 0, so these are parities of the twisted curves themselves.  Everything
here assumes finiteness of Sha; breakdowns carry ``conjectural=True``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import as_rational, power_free_representative
from .characters import character_term, support_S, support_U
from .errors import IncompleteFixture, InvalidInput
from .residues import BAD_PLACES, place_class_key
from .tables import LocalInvariantTable, builtin_table


@dataclass(frozen=True)
class LocalTerm:
    name: str  # e.g. "delta_2", "eps_inf"
    key: object  # PlaceClassKey
    bit: int


@dataclass(frozen=True)
class ParityBreakdown:
    family: str
    d: Fraction
    representative: int
    terms: tuple[LocalTerm, ...]
    character: int | None = None  # -1 or -3, None when no character term
    support: tuple[int, ...] = ()
    character_bit: int = 0
    base_parity: int = 0
    conjectural: bool = True
    total: int = field(init=False)

    def __post_init__(self):
        s = self.base_parity + self.character_bit + sum(t.bit for t in self.terms)
        object.__setattr__(self, "total", s % 2)

    @property
    def parity(self) -> str:
        return "odd" if self.total else "even"


def _nonzero(d) -> Fraction:
    d = as_rational(d)
    if d == 0:
        raise InvalidInput("twist parameter must be nonzero")
    return d


def _local_terms(prefix, rep, family, table):
    return tuple(
        LocalTerm(f"{prefix}_{v}", key, table[key])
        for v in BAD_PLACES[family]
        for key in [place_class_key(rep, v, family)]
    )


def classify_quartic(d) -> ParityBreakdown:
    d = _nonzero(d)
    rep = power_free_representative(d, 4)
    support = support_S(rep)
    return ParityBreakdown(
        family="quartic",
        d=d,
        representative=rep,
        terms=_local_terms("delta", rep, "quartic", builtin_table("quartic")),
        character=-1,
        support=support,
        character_bit=character_term(-1, support),
    )


def classify_sextic(d) -> ParityBreakdown:
    d = _nonzero(d)
    rep = power_free_representative(d, 6)
    support = support_U(rep)
    return ParityBreakdown(
        family="sextic",
        d=d,
        representative=rep,
        terms=_local_terms("eps", rep, "sextic", builtin_table("sextic")),
        character=-3,
        support=support,
        character_bit=character_term(-3, support),
    )


def classify_cubic(d) -> ParityBreakdown:
    """Parity of rk(y^2 = x^3 + d^2), i.e. the cubic twist of y^2 = x^3 + 1 by d.

    Evaluated as the sextic twist by d^2: the per-place invariants of the
    cubic formula are not tabulated, the sextic ones are.
    """
    d = _nonzero(d)
    b = classify_sextic(d * d)
    return ParityBreakdown(
        family="cubic",
        d=d,
        representative=b.representative,
        terms=b.terms,
        character=b.character,
        support=b.support,
        character_bit=b.character_bit,
    )


def classify_quadratic(d, fixture: LocalInvariantTable) -> ParityBreakdown:
    """Parity of a quadratic twist read off a user-supplied fixture.

    The fixture gives one bit per class key at each of its places plus the
    parity of the untwisted curve; the answer is their sum mod 2.
    """
    d = _nonzero(d)
    if fixture.family != "quadratic":
        raise InvalidInput(f"expected a quadratic fixture, got {fixture.family}")
    if fixture.base_parity is None:
        raise IncompleteFixture("quadratic fixture has no 'quadratic base - - <bit>' line")
    rep = power_free_representative(d, 2)
    terms = []
    for v in fixture.places:
        key = place_class_key(rep, v, "quadratic")
        terms.append(LocalTerm(f"delta_{v}", key, fixture[key]))
    return ParityBreakdown(
        family="quadratic",
        d=d,
        representative=rep,
        terms=tuple(terms),
        base_parity=fixture.base_parity,
    )


CLASSIFIERS = {
    "quartic": classify_quartic,
    "sextic": classify_sextic,
    "cubic": classify_cubic,
}


def classify(family: str, d, fixture: LocalInvariantTable | None = None) -> ParityBreakdown:
    if family == "quadratic":
        if fixture is None:
            raise InvalidInput("the quadratic family needs a fixture")
        return classify_quadratic(d, fixture)
    try:
        fn = CLASSIFIERS[family]
    except KeyError:
        raise InvalidInput(f"unknown family {family!r}") from None
    return fn(d)
