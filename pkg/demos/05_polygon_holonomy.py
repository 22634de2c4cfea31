"""Horizontal lifts of base polygons and the area law of their holonomy.

Lifting the sides of a closed base polygon along R-lines does not close
up: the endpoint is shifted vertically by minus four times the enclosed
signed area.  The shift is additive under subdivision, scales
quadratically under homotheties, and splits evenly along a diagonal.
"""

import numpy as np

from chgeom.foliation import Polygon, horizontal_lift, signed_area, tau

print("== lifting a single segment ==")
print(f"  over [0, 1+i] from height 0.5: {horizontal_lift([0.0], [1 + 1j], 0.5)}")
print(f"  over [1, i] from height 0:     {horizontal_lift([1.0], [1j], 0.0)}")

print("\n== the unit square ==")
square = Polygon(vertices=np.array([[0], [1], [1 + 1j], [1j]], dtype=complex))
t_end, disp = tau(square, 0.0)
print(f"  area {signed_area(square):+.1f}, height change {t_end:+.1f}, "
      f"displacement {disp:.1f}")

print("\n== additivity under splitting ==")
rng = np.random.default_rng(5)
v = rng.standard_normal((5, 1)) + 1j * rng.standard_normal((5, 1))
Q = Polygon(vertices=v)
first = Polygon(vertices=v[0:3])
second = Polygon(vertices=np.vstack([v[2:], v[:1]]))
print(f"  shift of the pentagon:          {tau(Q, 0.0)[0]:+.6f}")
print(f"  sum of the two split polygons:  "
      f"{tau(first, 0.0)[0] + tau(second, 0.0)[0]:+.6f}")

print("\n== scaling law ==")
for lam in (0.5, 2.0, 3.0):
    scaled = square.scaled(lam)
    print(f"  lambda = {lam}: height change {tau(scaled, 0.0)[0]:+.2f}"
          f"  (= -4 lambda^2)")

print("\n== diagonal split of a parallelogram ==")
p, a, b = (rng.standard_normal(1) + 1j * rng.standard_normal(1) for _ in range(3))
T1 = Polygon(vertices=np.vstack([p, p + a, p + a + b]))
T2 = Polygon(vertices=np.vstack([p, p + a + b, p + b]))
print(f"  triangle shifts: {tau(T1, 0.0)[0]:+.6f} and {tau(T2, 0.0)[0]:+.6f}")
