"""Cross-checking the double-point class against a resultant computation.

For a parametrized plane curve the divided-difference resultant counts
double points with multiplicity (twice the delta invariant), with no input
from the expansion engine.  The engine's prediction comes from evaluating
the double-point class on the degree-d rational curve model: (d-1)(d-2).
"""

import random

from tpcalc.oracle import CurveParam, double_point_degree, poly, poly_str
from tpcalc.verify import engine_double_point_degree

print("Hand-picked curves:")
for label, text in [
    ("smooth conic", "t, t^2"),
    ("nodal cubic", "t^2 - 1, t^3 - t"),
    ("cuspidal cubic", "t^2, t^3"),
]:
    curve = CurveParam.parse(text)
    print(f"   {label:15s} ({text}):  2*delta = {double_point_degree(curve)}"
          f"   engine: {engine_double_point_degree(curve.degree)}")

print("\nRandom quartics and quintics (immersive, regular at infinity):")
rng = random.Random(5)
shown = 0
while shown < 6:
    d = rng.choice([4, 5])
    x = [rng.randint(-3, 3) for _ in range(d + 1)]
    y = [rng.randint(-3, 3) for _ in range(d + 1)]
    if x[d] == 0 or y[d] == 0 or x[d] * y[d - 1] == x[d - 1] * y[d]:
        continue
    curve = CurveParam(poly(x), poly(y))
    if not curve.is_immersive():
        continue
    got = double_point_degree(curve)
    want = engine_double_point_degree(d)
    print(f"   d={d}: x = {poly_str(curve.x)}")
    print(f"        y = {poly_str(curve.y)}")
    print(f"        2*delta = {got}, engine predicts {want},"
          f" agree: {got == want}")
    shown += 1
