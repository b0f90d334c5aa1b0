"""Exit criteria.  Each test tags itself with ``criterion`` so that the
terminal summary prints one PASS/FAIL line per criterion."""
import random
import time
from fractions import Fraction
from itertools import combinations

import pytest
from sympy import primerange

from twistparity.characters import character_term, kronecker, support_S, support_U
from twistparity.descent import fourth_power_free_in, lambda_parity, regenerate_quartic_table
from twistparity.parity import classify, classify_quadratic, classify_quartic, classify_sextic
from twistparity.residues import PlaceClassKey, equivalent, unit_class_table
from twistparity.tables import builtin_table, diff_tables, load_table


@pytest.fixture
def criterion(record_property):
    def tag(name, detail=""):
        record_property("criterion", name)
        record_property("detail", detail)
    return tag


def test_1_quartic_oracle_agreement(criterion):
    t0 = time.perf_counter()
    ds = fourth_power_free_in(-200, 200)
    bad = [d for d in ds if classify_quartic(d).total != lambda_parity(d)]
    elapsed = time.perf_counter() - t0
    criterion("1 quartic oracle agreement", f"{len(ds)} values, {len(bad)} disagreements, {elapsed:.1f}s")
    assert bad == []
    assert elapsed < 60


def test_2_quartic_table_regeneration(criterion):
    table, conflicts = regenerate_quartic_table(reps_per_class=3)
    diff = diff_tables(builtin_table("quartic"), table)
    criterion("2 quartic table regeneration", f"{len(table)} bits recovered, {len(diff)} differ, {len(conflicts)} conflicts")
    assert len(table) == 34
    assert conflicts == [] and diff == []


def test_3_sextic_fixture_agreement(criterion, sextic_ranks, fixtures_dir):
    header = (fixtures_dir / "sextic_ranks.txt").read_text()
    assert "# provenance:" in header
    bad = [(d, r) for d, r in sextic_ranks if classify_sextic(d).total != r % 2]
    criterion("3 sextic fixture agreement", f"{len(sextic_ranks)} curves, {len(bad)} mismatches")
    assert len(sextic_ranks) >= 40
    assert bad == []


def _rand_rational(rng, top=10**5, bottom=10**3):
    return Fraction(rng.randint(1, top) * rng.choice((1, -1)), rng.randint(1, bottom))


def test_4_class_function_property(criterion, fixtures_dir):
    rng = random.Random(20190530)
    quad = load_table((fixtures_dir / "quadratic_x3_plus_x.txt").read_text())
    families = {"quadratic": 2, "quartic": 4, "sextic": 6, "cubic": 3}
    failures = 0
    for family, n in families.items():
        for _ in range(1000):
            d, k = _rand_rational(rng), _rand_rational(rng, 10**3, 50)
            fixture = quad if family == "quadratic" else None
            if classify(family, d * k**n, fixture).total != classify(family, d, fixture).total:
                failures += 1
    criterion("4 class-function property", f"4 x 1000 pairs, {failures} failures")
    assert failures == 0


def _equivalent_pairs(rng, family, count):
    """Pairs (c, d) with equal class keys: d = c * t * k^n with t = 1 mod 432, t > 0."""
    n = {"quartic": 4, "sextic": 6}[family]
    pairs = []
    while len(pairs) < count:
        c = _rand_rational(rng, 10**4, 20)
        t = 1 + 432 * rng.randint(0, 10**4)
        k = Fraction(rng.randint(1, 30), rng.randint(1, 30))
        pairs.append((c, c * t * k**n))
    return pairs


@pytest.mark.parametrize("family, a, support", [("quartic", -1, support_S), ("sextic", -3, support_U)])
def test_5_equivalence_soundness(criterion, family, a, support):
    rng = random.Random(len(family) * 1009)
    fn = classify_quartic if family == "quartic" else classify_sextic
    agreeing = failures = 0
    for c, d in _equivalent_pairs(rng, family, 15_000):
        assert equivalent(c, d, family)
        same_char = character_term(a, support(c)) == character_term(a, support(d))
        same_total = fn(c).total == fn(d).total
        if same_char:
            agreeing += 1
            failures += not same_total
        else:
            failures += same_total  # equal keys: only the character can differ
    criterion(f"5 equivalence soundness ({family})", f"{agreeing} pairs with equal characters, {failures} failures")
    assert agreeing >= 10_000
    assert failures == 0


def test_6_residue_class_partition(criterion):
    t0 = time.perf_counter()
    cases = [("quartic", 2, 4, 4, tuple(range(1, 16, 2))), ("sextic", 2, 3, 6, (1, 3, 5, 7)), ("sextic", 3, 3, 6, (1, 2, 4, 5, 8, 16))]
    for family, p, m, n, reps in cases:
        mod = p**m
        units = {u for u in range(1, mod) if u % p}
        powers = {pow(w, n, mod) for w in units}
        for x, y in combinations(reps, 2):
            assert all(x * w % mod != y for w in powers)
        assert {r * w % mod for r in reps for w in powers} == units
        assert unit_class_table(p, family).representatives == reps
        assert all(unit_class_table(p, family).representative(u) == r for r in reps for u in (r * w % mod for w in powers))
    elapsed = time.perf_counter() - t0
    criterion("6 residue-class partition", f"{elapsed * 1000:.1f} ms")
    assert elapsed < 1.0


def test_7_character_correctness(criterion):
    primes = list(primerange(3, 10**4))
    bad = [p for p in primes if kronecker(-1, p) != (-1) ** ((p - 1) // 2)]
    bad += [p for p in primes if (kronecker(-3, p) == 1) != (p % 3 == 1)]
    criterion("7 character correctness", f"{len(primes)} odd primes, {len(bad)} failures")
    assert bad == []


def test_8_base_points(criterion):
    q, s = classify_quartic(1), classify_sextic(1)
    criterion("8 base points", f"quartic(1) {q.parity}, sextic(1) {s.parity}")
    assert q.parity == "even" and s.parity == "even"
    assert builtin_table("quartic")[PlaceClassKey(2, 0, 1)] == 0
