"""Build tests/fixtures/quadratic_x3_plus_x.txt from the descent oracle.

The quadratic twist of y^2 = x^3 + x by d is y^2 = x^3 + d^2 x, so its
conjectural rank parity is lambda_parity(d^2).  Bad places are 2 and inf.
One positive representative per class at 2 fixes delta_2 (delta_inf(+) = 0),
and the twist by -1 fixes delta_inf(-).
"""
from pathlib import Path

from twistparity.descent import lambda_parity
from twistparity.residues import INF, PlaceClassKey, place_class_key
from twistparity.tables import LocalInvariantTable, dump_table

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "quadratic_x3_plus_x.txt"


def build():
    base = lambda_parity(1)
    entries = {PlaceClassKey(INF, None, 1): 0}
    for o in (0, 1):
        for u in (1, 3, 5, 7):
            d = 2**o * u
            entries[PlaceClassKey(2, o, u)] = (lambda_parity(d * d) - base) % 2
    key = place_class_key(-1, 2, "quadratic")
    entries[PlaceClassKey(INF, None, -1)] = (lambda_parity(1) - base - entries[key]) % 2
    return LocalInvariantTable("quadratic", entries, base)


if __name__ == "__main__":
    header = (
        "# Quadratic twists of y^2 = x^3 + x over Q (bad places 2, inf).\n"
        "# Bits derived with tools/make_quadratic_fixture.py from the two-isogeny descent\n"
        "# parity of y^2 = x^3 + d^2 x; base line = parity of the untwisted curve.\n"
    )
    OUT.write_text(header + dump_table(build()))
    print(OUT.read_text())
