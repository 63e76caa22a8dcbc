"""Symmetrization operators behind one descriptor type.

Four operators are provided: the Steiner symmetral about a hyperplane
(exact in the plane, inner chord-sampling approximation in dimensions 3-4),
the Minkowski symmetral (1/2)(K + K^H) about a subspace of any dimension
(exact on polytopes), a deliberately ill-behaved volume-matching ball
operator whose case split at volume one breaks idempotence, and the natural
extension that turns an operator on full-dimensional bodies into one on all
compact convex sets by intersecting images of outer parallel bodies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import HalfspaceIntersection

from .core import (
    InternalError,
    InvalidInputError,
    RngStream,
    Subspace,
    UnsupportedDimensionError,
    kappa,
    orthonormalize,
    sphere_sample,
)
from .bodies import (
    DIRECTION_SEED,
    Ball,
    Body,
    Polytope,
    _ball_directions,
    _covering_cos,
    approx_ball,
    approx_ball_error,
    as_polytope,
    chord,
    hausdorff,
    minkowski_sum,
    project_body,
    reflection_matrix,
)
from .measures import body_volume

# The ill-behaved operator doubles its ball exactly when the volume exceeds
# this threshold; both constants are part of its definition.
PATHOLOGICAL_VOLUME_THRESHOLD = 1.0
PATHOLOGICAL_FACTOR = 2.0


def steiner(K: Polytope, H: Subspace, grid: int = 12) -> Polytope:
    """Steiner symmetral about the hyperplane H (dim H must be n-1).

    Every chord of K parallel to H^perp is re-centered onto H.  In the
    plane the result is exact: chord length is piecewise linear between
    the projections of vertices onto H, so symmetrizing only those chords
    and taking the hull reproduces the symmetral.  In dimensions 3-4 the
    same construction runs on the projected vertices plus a regular grid
    over the shadow K|H, giving an inner approximation; use
    :func:`steiner_support_defect` for an error estimate.
    """
    n = K.dim
    if H.ambient_dim != n:
        raise InvalidInputError("subspace has wrong ambient dimension")
    if H.dim != n - 1:
        raise InvalidInputError("Steiner symmetrization needs a hyperplane (dim n-1)")
    if n > 4:
        raise UnsupportedDimensionError("Steiner pipeline capped at dimension 4")
    u = H.complement_basis[0]

    if n == 2:
        h = H.basis[0]
        breaks = np.unique(K.vertices @ h)
        base_points = np.outer(breaks, h)
    else:
        shadow = project_body(K, H)
        base_points = _shadow_samples(shadow, grid)

    out = []
    for x in base_points:
        span = chord(K, x, u)
        if span is None:
            continue
        half = 0.5 * (span[1] - span[0])
        out.append(x + half * u)
        out.append(x - half * u)
    if not out:
        raise InternalError("no chords found while symmetrizing")
    return Polytope(np.asarray(out))


def _shadow_samples(shadow: Polytope, grid: int) -> np.ndarray:
    """Projected vertices plus an interior grid over the shadow polytope."""
    pts = [shadow.vertices]
    if shadow.affine_dim >= 1 and grid >= 2:
        T = shadow.affine_coords
        lo, hi = T.min(axis=0), T.max(axis=0)
        axes = [np.linspace(a, b, grid) for a, b in zip(lo, hi)]
        mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, T.shape[1])
        normals, offsets = shadow.facets
        lifted = shadow.affine_center + mesh @ shadow.affine_tangent
        if len(normals):
            inside = np.all(lifted @ normals.T <= offsets + 1e-12, axis=1)
            lifted = lifted[inside]
        pts.append(lifted)
    return np.vstack(pts)


def steiner_support_defect(K: Polytope, result: Polytope, H: Subspace,
                           directions: int = 512, interior: int = 4096,
                           rng: RngStream | None = None) -> float:
    """Estimated max support deviation of the inner Steiner approximation.

    Chords through a dense seeded sample of the shadow give a lower model
    of the true symmetral's support; the defect is its largest excess over
    the approximation's support in seeded directions.
    """
    n = K.dim
    u = H.complement_basis[0]
    rng = rng or RngStream(DIRECTION_SEED, 97)
    shadow = project_body(K, H)
    T = shadow.affine_coords
    lo, hi = T.min(axis=0), T.max(axis=0)
    gen = rng.generator()
    raw = gen.uniform(lo, hi, size=(interior, T.shape[1]))
    lifted = shadow.affine_center + raw @ shadow.affine_tangent
    normals, offsets = shadow.facets
    if len(normals):
        inside = np.all(lifted @ normals.T <= offsets + 1e-12, axis=1)
        lifted = lifted[inside]
    samples = np.vstack([shadow.vertices, lifted])

    centers, halves = [], []
    for x in samples:
        span = chord(K, x, u)
        if span is None:
            continue
        centers.append(x)
        halves.append(0.5 * (span[1] - span[0]))
    centers = np.asarray(centers)
    halves = np.asarray(halves)

    dirs = sphere_sample(n, rng.child(1), size=directions)
    model = (dirs @ centers.T + np.abs(dirs @ u)[:, None] * halves[None, :]).max(axis=1)
    actual = result.support_batch(dirs)
    return max(0.0, float((model - actual).max()))


def minkowski_symmetral(K: Polytope, H: Subspace) -> Polytope:
    """(1/2)(K + K^H): hull of the midpoints (v + w^H)/2, exact on polytopes."""
    if H.ambient_dim != K.dim:
        raise InvalidInputError("subspace has wrong ambient dimension")
    R = reflection_matrix(H)
    mirrored = K.vertices @ R.T
    sums = 0.5 * (K.vertices[:, None, :] + mirrored[None, :, :])
    return Polytope(sums.reshape(-1, K.dim))


def pathological(K: Body) -> Ball:
    """Origin-centered ball of matching volume, doubled above volume one.

    Strictly monotonic, but the jump of the case split makes it neither
    idempotent nor projection invariant; its natural extension differs from
    it exactly on the volume-one boundary.
    """
    n = K.dim
    vol = body_volume(K)
    radius = (vol / kappa(n)) ** (1.0 / n)
    if vol > PATHOLOGICAL_VOLUME_THRESHOLD:
        radius *= PATHOLOGICAL_FACTOR
    return Ball(np.zeros(n), radius)


@dataclass(frozen=True)
class ExtensionResult:
    """Outcome of a truncated natural-extension computation."""

    body: Polytope
    m_final: int
    residual: float
    curve: tuple  # hausdorff(A_{m-1}, A_m) for m = 2..m_final
    iterates: tuple = field(repr=False, default=())


def _reconstruction_directions(n: int) -> int:
    return {1: 2, 2: 512, 3: 4096}[n]


def natural_extension(inner: "Symmetrizer", K: Body, m_max: int = 64,
                      tol: float = 1e-6) -> ExtensionResult:
    """Truncated intersection of inner(K + (1/m)B) for m = 1..m_max.

    The unit ball is replaced by its inner polytope approximation so the
    whole iteration stays in the hull pipeline; that substitution error is
    folded into the reported residual.  The sequence of images is monotone
    decreasing whenever the inner operator is monotonic, so the truncation
    is an outer bound of the true extension.  Iteration stops early once
    consecutive images are closer than ``tol``; the residual combines a
    first-order tail estimate of the remaining shrink with the ball and
    reconstruction errors.
    """
    n = K.dim
    if n > 3:
        raise UnsupportedDimensionError("intersection reconstruction capped at dimension 3")
    if m_max < 1:
        raise InvalidInputError("m_max must be at least 1")
    ball_dirs = 64 * n
    unit = approx_ball(n, directions=ball_dirs)
    K_poly = as_polytope(K)

    iterates: list[Body] = []
    curve: list[float] = []
    for m in range(1, m_max + 1):
        grown = minkowski_sum(K_poly, Polytope(unit.vertices / m))
        A_m = apply(inner, grown)
        if iterates:
            d = hausdorff(iterates[-1], A_m, vertex_diffs=False)
            curve.append(d)
            iterates.append(A_m)
            if d < tol:
                break
        else:
            iterates.append(A_m)
    m_final = len(iterates)

    # Accumulated direction samples: the uniform low-discrepancy set plus
    # facet normals from a geometric subsequence of iterates (keeping every
    # iterate's normals is quadratic work for no reconstruction gain).
    dirs = [_ball_directions(n, _reconstruction_directions(n))]
    picks = sorted({0, m_final - 1} | {2 ** k - 1 for k in range(1, 12) if 2 ** k <= m_final})
    for idx in picks:
        if isinstance(iterates[idx], Polytope):
            dirs.append(iterates[idx].halfspace_directions())
    D = np.vstack(dirs)
    h_star = np.min(np.vstack([A.support_batch(D) for A in iterates]), axis=0)

    body = _polytope_from_supports(D, h_star)
    ball_err = approx_ball_error(n, 1.0 / m_final, ball_dirs)
    recon_err = float(h_star.max()) * (1.0 / _covering_cos(n, _reconstruction_directions(n)) - 1.0)
    tail = curve[-1] * m_final if curve else math.inf
    return ExtensionResult(body, m_final, tail + ball_err + recon_err,
                           tuple(curve), tuple(iterates))


def _polytope_from_supports(D: np.ndarray, h: np.ndarray) -> Polytope:
    """Vertices of the half-space intersection <u, y> <= h(u), u in D."""
    n = D.shape[1]
    res = linprog(
        c=np.concatenate([np.zeros(n), [-1.0]]),
        A_ub=np.column_stack([D, np.linalg.norm(D, axis=1)]),
        b_ub=h,
        bounds=[(None, None)] * n + [(0, None)],
        method="highs",
    )
    if not res.success or res.x[-1] <= 1e-12:
        raise InternalError("intersection has empty interior; cannot reconstruct")
    interior = res.x[:n]
    hs = HalfspaceIntersection(np.column_stack([D, -h]), interior)
    return Polytope(hs.intersections)


# -- descriptor ---------------------------------------------------------------


@dataclass(frozen=True)
class Symmetrizer:
    """Descriptor of one operator: kind plus the data needed to apply it."""

    kind: str  # "steiner" | "minkowski" | "pathological" | "natural"
    H: Subspace | None = None
    inner: "Symmetrizer | None" = None
    m_max: int = 64
    tol: float = 1e-6

    def __post_init__(self):
        if self.kind not in ("steiner", "minkowski", "pathological", "natural"):
            raise InvalidInputError(f"unknown operator kind {self.kind!r}")
        if self.kind in ("steiner", "minkowski") and self.H is None:
            raise InvalidInputError(f"{self.kind} needs a subspace")
        if self.kind == "natural" and self.inner is None:
            raise InvalidInputError("natural extension needs an inner operator")

    def symmetry_subspace(self, n: int) -> Subspace:
        """The subspace the output is symmetric about ({o} for pathological)."""
        if self.kind == "pathological":
            return orthonormalize([], ambient_dim=n)
        if self.kind == "natural":
            return self.inner.symmetry_subspace(n)
        return self.H

    def to_dict(self) -> dict:
        if self.kind == "pathological":
            return {"op": "pathological"}
        if self.kind == "natural":
            return {"op": "natural", "inner": self.inner.to_dict(),
                    "m_max": self.m_max, "tol": self.tol}
        data = {"op": self.kind, "H": {"basis": self.H.basis.tolist()}}
        if self.H.dim == 0:
            data["H"]["ambient_dim"] = self.H.ambient_dim
        return data


def steiner_op(H: Subspace) -> Symmetrizer:
    return Symmetrizer("steiner", H=H)


def minkowski_op(H: Subspace) -> Symmetrizer:
    return Symmetrizer("minkowski", H=H)


def pathological_op() -> Symmetrizer:
    return Symmetrizer("pathological")


def natural_op(inner: Symmetrizer, m_max: int = 64, tol: float = 1e-6) -> Symmetrizer:
    return Symmetrizer("natural", inner=inner, m_max=m_max, tol=tol)


def symmetrizer_from_dict(data: dict) -> Symmetrizer:
    try:
        op = data["op"]
        if op == "pathological":
            return pathological_op()
        if op == "natural":
            return natural_op(symmetrizer_from_dict(data["inner"]),
                              int(data.get("m_max", 64)), float(data.get("tol", 1e-6)))
        if op in ("steiner", "minkowski"):
            basis = np.asarray(data["H"]["basis"], dtype=float)
            if basis.size == 0:
                H = orthonormalize([], ambient_dim=int(data["H"]["ambient_dim"]))
            else:
                H = orthonormalize(basis)
            return Symmetrizer(op, H=H)
    except KeyError as exc:
        raise InvalidInputError(f"operator record missing field {exc}") from exc
    raise InvalidInputError(f"unknown operator {op!r}")


def apply(op: Symmetrizer, K: Body) -> Body:
    """Apply a symmetrizer to a body, polytope-approximating when hulls are needed."""
    if op.kind == "steiner":
        return steiner(as_polytope(K), op.H)
    if op.kind == "minkowski":
        return minkowski_symmetral(as_polytope(K), op.H)
    if op.kind == "pathological":
        return pathological(K)
    if op.kind == "natural":
        return natural_extension(op.inner, K, op.m_max, op.tol).body
    raise InvalidInputError(f"unknown operator kind {op.kind!r}")
