"""Walkthrough: intrinsic volumes by random-projection averaging.

Intrinsic volumes grade a body by dimension: V_1 is proportional to mean
width, V_{n-1} to surface area, V_n is the volume.  For boxes they have a
closed form (the elementary symmetric polynomials of the side lengths),
which makes boxes a sharp test of the projection-averaging estimator: this
script prints the Monte Carlo estimate, its standard error, and the oracle
for boxes in dimensions 2 to 4, then shows that V_1 of a fixed segment does
not care which space it is embedded in.

Run:  python demos/intrinsic_volumes.py
"""

import numpy as np

from convexsym import RngStream, box_intrinsic_oracle, cube, intrinsic_volume, segment

print(f"{'box':28s} {'j':>2s} {'estimate':>12s} {'std err':>10s} {'oracle':>10s}")
for n in (2, 3, 4):
    sides = 0.5 + 1.5 * RngStream(7, n).generator().random(n)
    box = cube(n).linear_image(np.diag(sides))
    label = "x".join(f"{s:.3f}" for s in sides)
    for j in range(1, n + 1):
        est = intrinsic_volume(box, j, samples=50_000, rng=RngStream(8, 10 * n + j))
        oracle = box_intrinsic_oracle(sides, j)
        flag = "exact" if est.method == "exact" else f"{est.std_error:10.5f}"
        print(f"{label:28s} {j:2d} {est.value:12.6f} {flag:>10s} {oracle:10.6f}")

print()
print("V_1 of one segment of length 2, embedded in growing ambient spaces:")
for n in (2, 3, 4):
    e = np.zeros(n)
    e[0] = 2.0
    est = intrinsic_volume(segment(np.zeros(n), e), 1,
                           samples=50_000, rng=RngStream(9, n))
    print(f"  R^{n}: {est.value:.5f} +- {est.std_error:.5f}   (length 2)")
