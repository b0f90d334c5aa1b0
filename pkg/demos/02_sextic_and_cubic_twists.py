"""Rank parities of the sextic twists y^2 = x^3 + d and the cubic twists y^2 = x^3 + d^2.

Run:  python demos/02_sextic_and_cubic_twists.py
"""
from twistparity import classify_cubic, classify_sextic

# %% Sextic twists: three local bits (2, 3, sign) plus the (-3/U(d)) character.
for d in (1, 2, -1, 17, 25, -432):
    b = classify_sextic(d)
    bits = " ".join(f"{t.name}={t.bit}" for t in b.terms)
    print(f"d={d:5d}  rep={b.representative:5d}  {bits}  U={b.support}  -> {b.parity}")

# %% Cubic twists are sextic twists by a square.
for d in (2, 3, 5, 7):
    assert classify_cubic(d).total == classify_sextic(d * d).total
    print(f"rk(y^2 = x^3 + {d*d}) is {classify_cubic(d).parity}")

# %% Checking against PARI-proven ranks shipped in tests/fixtures.
from pathlib import Path

rows = [tuple(map(int, ln.split())) for ln in (Path(__file__).parents[1] / "tests/fixtures/sextic_ranks.txt").read_text().splitlines() if ln and ln[0] != "#"]
print(sum(classify_sextic(d).total == r % 2 for d, r in rows), "of", len(rows), "ranks have the predicted parity")
