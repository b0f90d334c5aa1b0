"""Regenerate the rank fixtures in tests/fixtures/ with PARI/GP (via cypari2).

Only curves whose rank PARI proves (ellrank lower bound == upper bound) are
kept.  cypari2 is a development-time dependency of this script alone; the
package itself never imports it.

    python tools/make_rank_fixtures.py
"""
from pathlib import Path

import cypari2

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9, silent=True)

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures"


def power_free(d, n):
    sign = -1 if d < 0 else 1
    m = abs(d)
    for p, e in pari.factor(m).mattranspose():
        p, e = int(p), int(e)
        m //= p ** (e - e % n)
    return sign * m


def proven_rank(a4, a6):
    E = pari.ellinit([0, 0, 0, a4, a6])
    lo, hi = (int(x) for x in pari.ellrank(E, 2)[:2])
    return lo if lo == hi else None


def build(family, values, n, coeffs):
    rows, skipped = [], []
    seen = set()
    for d in values:
        if d == 0 or power_free(d, n) != d or d in seen:
            continue
        seen.add(d)
        r = proven_rank(*coeffs(d))
        if r is None:
            skipped.append(d)
        else:
            rows.append((d, r))
    return rows, skipped


def write(name, family, curve, rows, skipped):
    lines = [
        f"# {family} rank fixture for {curve}",
        f"# provenance: PARI/GP {'.'.join(map(str, pari.version()))} ellrank(E, 2), "
        "rows kept only when the lower and upper rank bounds agree",
        f"# skipped (rank not proven): {' '.join(map(str, skipped)) or 'none'}",
        "# d rank",
    ]
    lines += [f"{d} {r}" for d, r in rows]
    (OUT / name).write_text("\n".join(lines) + "\n")
    print(name, len(rows), "rows,", len(skipped), "skipped")


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    sextic_vals = list(range(-120, 121)) + [2**k * 3**j for k in range(6) for j in range(6)]
    sextic_vals += [-v for v in sextic_vals]
    rows, skipped = build("sextic", sorted(set(sextic_vals)), 6, lambda d: (0, d))
    write("sextic_ranks.txt", "sextic", "y^2 = x^3 + d", rows, skipped)

    quartic_vals = list(range(-150, 151)) + [2**k * u for k in range(4) for u in (1, 3, 5, 7, 9, 11, 13, 15)]
    quartic_vals += [-v for v in quartic_vals]
    rows, skipped = build("quartic", sorted(set(quartic_vals)), 4, lambda d: (d, 0))
    write("quartic_ranks.txt", "quartic", "y^2 = x^3 + d*x", rows, skipped)
