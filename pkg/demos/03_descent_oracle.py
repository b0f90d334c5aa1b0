"""The two-isogeny descent used to check the quartic formula independently.

Run:  python demos/03_descent_oracle.py
"""
from twistparity.descent import CurveModel, cross_check, descent_report, locally_soluble, torsor_classes

# %% Torsors for y^2 = x^3 + 5x: w^2 = d1 u^4 + (5/d1) v^4 for d1 in {+-1, +-5}.
for t in torsor_classes(5):
    places = {v: locally_soluble(t.d1, t.d2, v) for v in ("inf", 2, 5)}
    print(t, places)

# %% Selmer ranks for both isogenous curves and the resulting parity.
for d in (1, 4, 5, 9, -1, 34):
    r = descent_report(d)
    print(f"d={d:3d}  sel(E)={r.phi_selmer_rank}  sel(E')={r.phihat_selmer_rank}  parity={r.lambda_parity}")

# %% The closed form and the descent agree on every fourth-power-free |d| <= 200.
report = cross_check(-200, 200)
print(len(report.rows), "values checked,", len(report.disagreements), "disagreements")
