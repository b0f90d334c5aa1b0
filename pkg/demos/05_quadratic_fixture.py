"""Classifying quadratic twists from a user-supplied table of local bits.

The fixture in tests/fixtures/quadratic_x3_plus_x.txt describes quadratic twists
of y^2 = x^3 + x (bad places 2 and inf).  The twist by d is y^2 = x^3 + d^2 x,
which is also the quartic twist by d^2, so three routes must agree.

Run:  python demos/05_quadratic_fixture.py
"""
from pathlib import Path

from twistparity import classify_quadratic, classify_quartic, lambda_parity, load_table

fixture = load_table((Path(__file__).parents[1] / "tests/fixtures/quadratic_x3_plus_x.txt").read_text())
print("places:", fixture.places, "base parity:", fixture.base_parity)

# %%
for d in (-7, -1, 2, 3, 5, 6, 10, 14):
    routes = (classify_quadratic(d, fixture).total, classify_quartic(d * d).total, lambda_parity(d * d))
    print(f"d={d:3d}  fixture/quartic/descent = {routes}")
    assert len(set(routes)) == 1
