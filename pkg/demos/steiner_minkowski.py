"""Walkthrough: the two classical symmetrals and what each one preserves.

Builds a random polygon, symmetrizes it about the horizontal axis with the
Steiner and Minkowski constructions, and prints the measures each operator
is supposed to keep fixed (volume for Steiner, mean width for Minkowski),
plus the properties both share: the result is symmetric about the axis and
has the same shadow on it.

Run:  python demos/steiner_minkowski.py
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from convexsym import (
    Polytope,
    RngStream,
    coordinate_subspace,
    hausdorff,
    mean_width,
    minkowski_symmetral,
    project_body,
    reflect,
    steiner,
    volume_exact,
)

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

H = coordinate_subspace(2, [0])  # symmetrize about the x-axis
K = Polytope(RngStream(2024, 0).generator().standard_normal((9, 2)))

S = steiner(K, H)
M = minkowski_symmetral(K, H)

print("body                volume      mean width")
for name, body in [("original", K), ("steiner", S), ("minkowski", M)]:
    print(f"{name:10s}    {volume_exact(body).value:12.8f}  {mean_width(body).value:12.8f}")

print()
print("volume drift under Steiner:   ", abs(volume_exact(S).value - volume_exact(K).value))
print("width drift under Minkowski:  ", abs(mean_width(M).value - mean_width(K).value))
print("Steiner output mirror defect: ", hausdorff(S, reflect(S, H)))
print("shadow preserved (Steiner):   ", hausdorff(project_body(S, H), project_body(K, H)))
print("shadow preserved (Minkowski): ", hausdorff(project_body(M, H), project_body(K, H)))

fig, axes = plt.subplots(1, 3, figsize=(12, 4), sharex=True, sharey=True)
for ax, (name, body) in zip(axes, [("original", K), ("Steiner", S), ("Minkowski", M)]):
    ring = body.vertices[body.boundary_ring]
    ring = np.vstack([ring, ring[:1]])
    ax.fill(ring[:, 0], ring[:, 1], alpha=0.4)
    ax.plot(ring[:, 0], ring[:, 1])
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.set_title(name)
    ax.set_aspect("equal")
fig.tight_layout()
fig.savefig(OUT / "symmetrals.svg", metadata={"Date": None})
print(f"\nwrote {OUT / 'symmetrals.svg'}")
