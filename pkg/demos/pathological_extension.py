"""Walkthrough: an operator whose natural extension disagrees with it.

The volume-matching ball operator sends a body to the origin-centered ball
of the same volume, doubled once the volume exceeds one.  It is strictly
monotonic, yet the case split ruins idempotence, and extending it to all
compact convex sets by intersecting images of shrinking outer parallel
bodies lands on TWICE the ball whenever the input volume sits exactly on
the threshold: every perturbed volume is above one, so every image in the
intersection is doubled.

This script runs the extension on the unit square and cube, prints the
defect against the doubled ball together with the truncation residual, and
plots the convergence curve of the iteration.

Run:  python demos/pathological_extension.py
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from convexsym import (
    Ball,
    cube,
    hausdorff,
    natural_extension,
    pathological,
    pathological_op,
)

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

K2 = cube(2)
print("idempotence break on a large box:")
big = cube(2, side=2.0)
once = pathological(big)
twice = pathological(once)
print(f"  radius after one application:  {once.radius:.6f}")
print(f"  radius after two applications: {twice.radius:.6f}  (doubled again)")

fig, ax = plt.subplots(figsize=(6, 4))
for n in (2, 3):
    K = cube(n)  # volume exactly one: the boundary case
    res = natural_extension(pathological_op(), K, m_max=64)
    target = Ball(np.zeros(n), 2.0 * pathological(K).radius)
    defect = hausdorff(res.body, target)
    print(f"\nn={n}: extension stopped at m={res.m_final}")
    print(f"  distance to the doubled ball: {defect:.6f}")
    print(f"  reported residual:            {res.residual:.6f}")
    ax.semilogy(range(2, len(res.curve) + 2), res.curve, marker=".", label=f"n={n}")

ax.set_xlabel("m")
ax.set_ylabel("distance between consecutive images")
ax.set_title("natural extension of the ball operator on the unit cube")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "ne_convergence.svg", metadata={"Date": None})
print(f"\nwrote {OUT / 'ne_convergence.svg'}")
