"""Rank parities of the quartic twists y^2 = x^3 + d*x.

Run:  python demos/01_quartic_twists.py
"""
from fractions import Fraction

from twistparity import classify_quartic

# %% A single twist, with its breakdown.
# d = 9: the class of 9 at 2 contributes 0, the sign contributes 0, and 3 divides
# 9 exactly twice with (-1/3) = -1, which flips the parity to odd.  Indeed
# (4, 10) is a point of infinite order on y^2 = x^3 + 9x.
b = classify_quartic(9)
for term in b.terms:
    print(f"{term.name:10s} key={term.key} bit={term.bit}")
print("support S(d):", b.support, "character bit:", b.character_bit)
print("total:", b.total, "->", b.parity)

# %% The answer depends only on d modulo fourth powers.
for d in (3, 3 * 2**4, Fraction(3, 5**4), 3 * 7**8):
    print(d, classify_quartic(d).parity)

# %% A quick census of |d| <= 100.
from collections import Counter

census = Counter(classify_quartic(d).parity for d in range(-100, 101) if d)
print(census)
