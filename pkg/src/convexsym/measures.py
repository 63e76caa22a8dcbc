"""Volumes, intrinsic volumes (Kubota averaging), and mean width.

Exact where the geometry allows it: polytope volume by a fan triangulation
inside the affine hull, planar mean width by the perimeter rule, balls and
spherical cylinders analytically.  Everything else is seeded Monte Carlo
with a reported standard error; statistical acceptance thresholds downstream
are three standard errors.

The Kubota normalization used here is

    V_j(K) = binom(n, j) * kappa_n / (kappa_j * kappa_{n-j})
             * average over Haar j-subspaces H of vol_j(K|H),

the constant fixed by the requirement V_1(segment) = length, which the test
suite checks directly against segment and box oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.spatial import ConvexHull

from .core import (
    InvalidInputError,
    RngStream,
    Subspace,
    haar_frames,
    kappa,
    sphere_sample,
)
from .bodies import (
    Ball,
    Body,
    Polytope,
    SpecialForm,
    SphericalCylinder,
    as_polytope,
    reflection_matrix,
)

SHARD_SIZE = 16384


@dataclass(frozen=True)
class MeasureEstimate:
    """A measure value with its uncertainty: exact results carry std_error 0."""

    value: float
    std_error: float
    samples: int
    method: str  # "exact" | "mc"

    def __post_init__(self):
        if self.method not in ("exact", "mc"):
            raise InvalidInputError(f"unknown method {self.method!r}")
        if self.method == "exact" and self.std_error != 0.0:
            raise InvalidInputError("exact estimates have zero std_error")
        if self.method == "mc" and self.samples < 1:
            raise InvalidInputError("monte carlo estimates need samples >= 1")
        if self.std_error < 0:
            raise InvalidInputError("std_error must be nonnegative")

    def to_dict(self) -> dict:
        return {"value": self.value, "std_error": self.std_error,
                "samples": self.samples, "method": self.method}


def _exact(value: float) -> MeasureEstimate:
    return MeasureEstimate(float(value), 0.0, 0, "exact")


def _from_samples(vals: np.ndarray, scale: float = 1.0) -> MeasureEstimate:
    n = len(vals)
    mean = float(vals.mean())
    std = float(vals.std(ddof=1)) / math.sqrt(n) if n > 1 else 0.0
    return MeasureEstimate(scale * mean, scale * std, n, "mc")


# -- exact volumes ---------------------------------------------------------------

def volume_exact(K: Polytope) -> MeasureEstimate:
    """Volume of K inside its affine hull, by a centroid fan over facet simplices."""
    d = K.affine_dim
    if d == 0:
        return _exact(1.0)
    T = K.affine_coords
    if d == 1:
        return _exact(T[:, 0].max() - T[:, 0].min())
    apex = T.mean(axis=0)
    corners = T[K.facet_simplices] - apex
    return _exact(np.abs(np.linalg.det(corners)).sum() / math.factorial(d))


def body_volume(K: Body) -> float:
    """Exact ambient-dimension volume of any supported body (0 if degenerate)."""
    n = K.dim
    if isinstance(K, Polytope):
        return volume_exact(K).value if K.affine_dim == n else 0.0
    if isinstance(K, Ball):
        return kappa(n) * K.radius ** n
    if isinstance(K, SphericalCylinder):
        i = K.H.dim
        return kappa(i) * K.r ** i * kappa(n - i) * K.s ** (n - i)
    if isinstance(K, SpecialForm):
        i = K.H.dim
        base = volume_exact(K.L).value if K.L.affine_dim == i else 0.0
        return base * kappa(n - i) * K.s ** (n - i)
    raise InvalidInputError(f"unsupported body {type(K).__name__}")


def perimeter(K: Polytope) -> float:
    """Boundary length of a body in the plane (2*length for a segment)."""
    if K.dim != 2:
        raise InvalidInputError("perimeter is a planar notion here")
    if K.affine_dim == 0:
        return 0.0
    if K.affine_dim == 1:
        return 2.0 * volume_exact(K).value
    ring = K.vertices[K.boundary_ring]
    edges = np.diff(np.vstack([ring, ring[:1]]), axis=0)
    return float(np.linalg.norm(edges, axis=1).sum())


def box_intrinsic_oracle(side_lengths, j: int) -> float:
    """Elementary symmetric polynomial e_j of the sides: V_j of a box, exactly."""
    sides = [float(s) for s in side_lengths]
    if not 0 <= j <= len(sides):
        raise InvalidInputError(f"j={j} outside 0..{len(sides)}")
    if j == 0:
        return 1.0
    return float(sum(math.prod(c) for c in combinations(sides, j)))


def kubota_constant(n: int, j: int) -> float:
    return math.comb(n, j) * kappa(n) / (kappa(j) * kappa(n - j))


# -- projected-volume integrands -------------------------------------------------

def _hull_area_2d(points) -> float:
    """Area of the convex hull of 2-d points (monotone chain + shoelace)."""
    pts = points.tolist() if isinstance(points, np.ndarray) else list(points)
    pts = sorted(map(tuple, pts))
    k = len(pts)
    if k < 3:
        return 0.0

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2:
                ox, oy = out[-2]
                ax, ay = out[-1]
                if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) <= 0.0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    ring = lower[:-1] + upper[:-1]
    area = 0.0
    for (x0, y0), (x1, y1) in zip(ring, ring[1:] + ring[:1]):
        area += x0 * y1 - x1 * y0
    return 0.5 * abs(area)


def _facet_pieces(K: Polytope):
    """(areas, outward unit normals) of the triangulated boundary pieces."""
    T = K.affine_coords
    d = K.affine_dim
    apex = T.mean(axis=0)
    areas = []
    normals = []
    for simp in K.facet_simplices:
        pts = T[simp]
        E = pts[1:] - pts[0]
        gram = E @ E.T
        area = math.sqrt(max(0.0, np.linalg.det(gram))) / math.factorial(d - 1)
        _, _, vt = np.linalg.svd(E, full_matrices=True)
        nrm = vt[-1]
        if nrm @ (pts[0] - apex) < 0:
            nrm = -nrm
        areas.append(area)
        normals.append(nrm @ K.affine_tangent)  # lift to ambient coordinates
    return np.asarray(areas), np.asarray(normals)


def _projected_volumes(K: Polytope, j: int, rng: RngStream, size: int) -> np.ndarray:
    """vol_j(K|H) for ``size`` Haar j-subspaces H, vectorized by case."""
    n, d = K.dim, K.affine_dim
    V = K.vertices
    if d < j:
        return np.zeros(size)
    if d == j:
        # The shadow is a linear image of the body inside its affine hull.
        frames = haar_frames(n, j, rng, size)
        M = frames @ K.affine_tangent.T  # (size, j, d=j)
        return np.abs(np.linalg.det(M)) * volume_exact(K).value
    if j == 1:
        axes = haar_frames(n, 1, rng, size)[:, 0, :]
        t = axes @ V.T
        return t.max(axis=1) - t.min(axis=1)
    if j == n - 1 and d == n:
        # Cauchy projection: the shadow on u^perp has volume
        # (1/2) sum over boundary pieces of area * |<normal, u>|.
        areas, normals = _facet_pieces(K)
        u = sphere_sample(n, rng, size=size)
        return 0.5 * np.abs(u @ normals.T) @ areas
    if j == 2:
        frames = haar_frames(n, 2, rng, size)
        W = np.einsum("sjn,kn->skj", frames, V)
        return np.array([_hull_area_2d(W[i]) for i in range(size)])
    # Exotic fallback (degenerate high-dimensional input): hull per sample.
    frames = haar_frames(n, j, rng, size)
    vals = np.empty(size)
    for i in range(size):
        vals[i] = ConvexHull(V @ frames[i].T).volume
    return vals


def intrinsic_volume(K: Body, j: int, samples: int = 100_000,
                     rng: RngStream | None = None) -> MeasureEstimate:
    """j-th intrinsic volume via Kubota averaging of projected volumes.

    j = n short-circuits to the exact volume; balls are exact analytically.
    Monte Carlo runs are sharded: shard s draws from rng.child(s), and the
    reduction keeps shard order, so results are reproducible bit for bit.
    """
    n = K.dim
    if not 1 <= j <= n:
        raise InvalidInputError(f"j={j} outside 1..{n}")
    if j == n:
        return _exact(body_volume(K))
    if isinstance(K, Ball):
        return _exact(kubota_constant(n, j) * kappa(j) * K.radius ** j)
    if not isinstance(K, Polytope):
        return intrinsic_volume(as_polytope(K), j, samples, rng)
    if samples < 1:
        raise InvalidInputError("samples must be positive")
    rng = rng or RngStream(0)
    chunks = []
    for s in range(0, samples, SHARD_SIZE):
        count = min(SHARD_SIZE, samples - s)
        chunks.append(_projected_volumes(K, j, rng.child(s // SHARD_SIZE), count))
    vals = np.concatenate(chunks)
    return _from_samples(vals, scale=kubota_constant(n, j))


# -- mean width -------------------------------------------------------------------

def mean_width(K: Body, samples: int = 100_000, rng: RngStream | None = None,
               mirror: Subspace | None = None) -> MeasureEstimate:
    """Mean width W(K) = 2 * average of the support function over the sphere.

    Exact branches: any ball (W = 2r), and polytopes in the plane via the
    Cauchy perimeter rule W = perimeter / pi.  Otherwise Monte Carlo.  With
    ``mirror`` set to a subspace, directions are drawn in reflected pairs
    (u, u^mirror): the estimator stays unbiased and width comparisons
    between a body and its mirror-symmetrization share every direction.
    """
    if isinstance(K, Ball):
        return _exact(2.0 * K.radius)
    if isinstance(K, Polytope) and K.dim == 2 and mirror is None:
        return _exact(perimeter(K) / math.pi)
    rng = rng or RngStream(0)
    R = reflection_matrix(mirror) if mirror is not None else None
    chunks = []
    for s in range(0, samples, SHARD_SIZE):
        count = min(SHARD_SIZE, samples - s)
        u = sphere_sample(K.dim, rng.child(s // SHARD_SIZE), size=count)
        h = K.support_batch(u)
        if R is not None:
            h = 0.5 * (h + K.support_batch(u @ R.T))
        chunks.append(h)
    return _from_samples(np.concatenate(chunks), scale=2.0)


def v1(K: Body, samples: int = 100_000, rng: RngStream | None = None,
       mirror: Subspace | None = None) -> MeasureEstimate:
    """First intrinsic volume, normalized so a segment measures its length."""
    n = K.dim
    const = n * kappa(n) / (2.0 * kappa(n - 1))
    w = mean_width(K, samples=samples, rng=rng, mirror=mirror)
    return MeasureEstimate(const * w.value, const * w.std_error, w.samples, w.method)
