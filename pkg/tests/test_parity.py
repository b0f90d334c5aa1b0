from fractions import Fraction

import pytest

from twistparity.descent import lambda_parity
from twistparity.errors import IncompleteFixture, InvalidInput
from twistparity.parity import classify, classify_cubic, classify_quadratic, classify_quartic, classify_sextic
from twistparity.residues import equivalent
from twistparity.tables import load_table


@pytest.fixture(scope="module")
def x3_plus_x(fixtures_dir):
    return load_table((fixtures_dir / "quadratic_x3_plus_x.txt").read_text())


@pytest.mark.parametrize("d, parity", [(1, "even"), (-1, "even"), (9, "odd"), (5, "odd"), (Fraction(9, 16), "odd")])
def test_quartic_examples(d, parity):
    assert classify_quartic(d).parity == parity


def test_quartic_d9_breakdown_and_rational_point():
    b = classify_quartic(9)
    assert [t.bit for t in b.terms] == [0, 0]
    assert b.support == (3,) and b.character_bit == 1
    x, y = 4, 10
    assert y * y == x**3 + 9 * x  # non-torsion point, rank >= 1


def test_quartic_minus_one_terms():
    b = classify_quartic(-1)
    assert [(t.key.unit, t.bit) for t in b.terms] == [(15, 1), (-1, 1)]
    assert b.total == 0


@pytest.mark.parametrize("d, parity", [(1, "even"), (2, "odd"), (-1, "even"), (17, "even"), (-432, "even")])
def test_sextic_examples(d, parity):
    assert classify_sextic(d).parity == parity


def test_sextic_d2_breakdown():
    b = classify_sextic(2)
    assert [(t.key.ord_residue, t.key.unit, t.bit) for t in b.terms] == [(1, 1, 1), (0, 2, 0), (None, 1, 0)]
    assert b.support == ()


def test_sextic_minus_one_uses_class_8_at_3():
    assert classify_sextic(-1).terms[1].key.unit == 8


@pytest.mark.parametrize("k", [1, 2, -3, Fraction(5, 7)])
def test_cubic_trivial_on_cubes(k):
    assert classify_cubic(k**3).total == classify_cubic(1).total == 0


@pytest.mark.parametrize("d", [2, 3, -5, Fraction(7, 2), 30])
def test_cubic_is_sextic_of_square(d):
    assert classify_cubic(d).total == classify_sextic(d * d).total


@pytest.mark.parametrize("family, n", [("quartic", 4), ("sextic", 6)])
def test_exact_powers_have_zero_terms(family, n):
    for k in (1, 2, -3, Fraction(2, 5)):
        b = classify(family, k**n)
        assert b.representative == 1 and b.total == 0
        assert all(t.bit == 0 for t in b.terms) and b.character_bit == 0


@pytest.mark.parametrize("fn", [classify_quartic, classify_sextic, classify_cubic])
def test_zero_rejected(fn):
    with pytest.raises(InvalidInput):
        fn(0)


def test_breakdown_total_is_sum_of_terms():
    for fn in (classify_quartic, classify_sextic, classify_cubic):
        for d in range(-300, 301):
            if d:
                b = fn(d)
                assert b.total == (b.base_parity + b.character_bit + sum(t.bit for t in b.terms)) % 2
                assert b.conjectural


def test_quartic_formula_matches_pari_ranks(quartic_ranks):
    bad = [(d, r) for d, r in quartic_ranks if classify_quartic(d).total != r % 2]
    assert bad == []


def test_quadratic_identity_class_gives_base(x3_plus_x):
    for d in (1, 17, 41, Fraction(1, 9)):
        assert classify_quadratic(d, x3_plus_x).total == x3_plus_x.base_parity


def test_quadratic_minus_one_even(x3_plus_x):
    assert classify_quadratic(-1, x3_plus_x).parity == "even"


def test_quadratic_is_class_function(x3_plus_x):
    for c in range(-60, 61):
        for d in range(-60, 61):
            if c and d and equivalent(c, d, "quadratic"):
                assert classify_quadratic(c, x3_plus_x).total == classify_quadratic(d, x3_plus_x).total


def test_quadratic_fixture_agrees_with_descent_on_x3_plus_d2x(x3_plus_x):
    # twist of y^2 = x^3 + x by d is y^2 = x^3 + d^2 x
    for d in range(-80, 81):
        if d:
            assert classify_quadratic(d, x3_plus_x).total == lambda_parity(d * d), d


def test_quadratic_fixture_agrees_with_quartic_formula(x3_plus_x):
    for d in range(-200, 201):
        if d:
            assert classify_quadratic(d, x3_plus_x).total == classify_quartic(d * d).total


def test_quadratic_needs_base_line(fixtures_dir):
    text = (fixtures_dir / "quadratic_x3_plus_x.txt").read_text().replace("quadratic base - - 0\n", "")
    with pytest.raises(IncompleteFixture):
        classify_quadratic(3, load_table(text))


def test_quadratic_needs_fixture():
    with pytest.raises(InvalidInput):
        classify("quadratic", 3)


def test_quadratic_rejects_other_family_table():
    from twistparity.tables import builtin_table

    with pytest.raises(InvalidInput):
        classify_quadratic(3, builtin_table("quartic"))
