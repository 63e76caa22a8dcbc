"""Shared geometric primitives: subspaces, seeded sampling, ball volumes.

Everything downstream (bodies, symmetrization operators, measures) is built
on three ingredients defined here: orthonormal subspace frames of R^n,
counter-based random streams that make Monte Carlo runs reproducible shard
by shard, and the unit-ball volume sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_AMBIENT_DIM = 8
MAX_EXACT_DIM = 4  # hull / facet pipeline cap

# Orthonormality is enforced to 1e-12; rank decisions use 1e-10 on the
# residual norm left after modified Gram-Schmidt.
ORTHO_TOL = 1e-12
RANK_TOL = 1e-10

_MASK64 = (1 << 64) - 1


class InvalidInputError(ValueError):
    """Raised for malformed geometric input (non-finite, wrong dims, ...)."""


class UnsupportedDimensionError(InvalidInputError):
    """Raised when an exact pipeline is asked to run above its dimension cap."""


class ConfigurationError(ValueError):
    """Raised when a check is configured with an incompatible operator."""


class InternalError(RuntimeError):
    """Raised when an internal construction produces an unusable result."""


def as_vector(x, dim: int | None = None) -> np.ndarray:
    """Validate and return ``x`` as a finite 1-d float array."""
    v = np.asarray(x, dtype=float)
    if v.ndim != 1:
        raise InvalidInputError(f"expected a vector, got array of shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise InvalidInputError("vector has non-finite coordinates")
    n = v.shape[0]
    if not 1 <= n <= MAX_AMBIENT_DIM:
        raise UnsupportedDimensionError(f"ambient dimension {n} outside 1..{MAX_AMBIENT_DIM}")
    if dim is not None and n != dim:
        raise InvalidInputError(f"expected dimension {dim}, got {n}")
    return v


@dataclass(frozen=True)
class RngStream:
    """A (master_seed, stream_id) pair naming one reproducible random stream.

    Streams are realized with the counter-based Philox generator, so the pair
    fully determines the sample sequence and disjoint stream ids can be
    handed to parallel shards without coordination.
    """

    master_seed: int
    stream_id: int = 0

    def generator(self) -> np.random.Generator:
        key = np.array(
            [self.master_seed & _MASK64, self.stream_id & _MASK64], dtype=np.uint64
        )
        return np.random.Generator(np.random.Philox(key=key))

    def child(self, offset: int) -> "RngStream":
        return RngStream(self.master_seed, self.stream_id + offset)


class Subspace:
    """A linear subspace of R^n held as orthonormal basis rows.

    ``basis`` has shape (dim, n) and ``complement_basis`` (n - dim, n);
    stacked they form an orthonormal basis of R^n.  ``dim == 0`` encodes the
    trivial subspace {o}.  Instances are immutable.
    """

    __slots__ = ("basis", "complement_basis")

    def __init__(self, basis: np.ndarray, complement_basis: np.ndarray):
        basis = np.atleast_2d(np.asarray(basis, dtype=float))
        complement = np.atleast_2d(np.asarray(complement_basis, dtype=float))
        n = basis.shape[1] if basis.size else complement.shape[1]
        if basis.size == 0:
            basis = basis.reshape(0, n)
        if complement.size == 0:
            complement = complement.reshape(0, n)
        full = np.vstack([basis, complement])
        if full.shape[0] != n:
            raise InvalidInputError("basis plus complement must span R^n")
        gram = full @ full.T
        if not np.allclose(gram, np.eye(n), atol=1e-11):
            raise InvalidInputError("subspace frame is not orthonormal")
        basis.setflags(write=False)
        complement.setflags(write=False)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "complement_basis", complement)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("Subspace is immutable")

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[1]

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def orthogonal(self) -> "Subspace":
        """The orthogonal complement H^perp (basis and complement swapped)."""
        return Subspace(self.complement_basis, self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def _mgs(rows: np.ndarray, basis: list[np.ndarray]) -> None:
    """Append orthonormalized rows to ``basis`` (modified Gram-Schmidt).

    Each candidate goes through two projection passes; the second pass mops
    up the rounding left by the first, which keeps pairwise dots near 1e-16
    without resorting to higher precision.
    """
    for v in rows:
        w = v.copy()
        for _ in range(2):
            for q in basis:
                w -= np.dot(w, q) * q
        norm = np.linalg.norm(w)
        if norm > RANK_TOL * max(1.0, np.linalg.norm(v)):
            basis.append(w / norm)


def orthonormalize(vectors, ambient_dim: int | None = None) -> Subspace:
    """Build the Subspace spanned by ``vectors``.

    Rank-deficient input collapses to the actual span; the complement basis
    is completed from the standard basis via the same Gram-Schmidt sweep.
    """
    rows = [as_vector(v) for v in vectors]
    if rows:
        n = rows[0].shape[0]
        if any(r.shape[0] != n for r in rows):
            raise InvalidInputError("vectors must share one ambient dimension")
    elif ambient_dim is not None:
        n = ambient_dim
    else:
        raise InvalidInputError("empty input needs an explicit ambient_dim")

    basis: list[np.ndarray] = []
    _mgs(np.asarray(rows).reshape(-1, n), basis)
    dim = len(basis)
    _mgs(np.eye(n), basis)
    if len(basis) != n:
        raise InternalError("Gram-Schmidt failed to complete a full frame")
    frame = np.asarray(basis)
    return Subspace(frame[:dim], frame[dim:])


def coordinate_subspace(n: int, axes) -> Subspace:
    """Span of the given standard axes, e.g. coordinate_subspace(3, [0, 1])."""
    axes = list(axes)
    if any(not 0 <= a < n for a in axes):
        raise InvalidInputError(f"axis out of range for R^{n}")
    return orthonormalize([np.eye(n)[a] for a in axes], ambient_dim=n)


def project(x, H: Subspace) -> np.ndarray:
    """Orthogonal projection of the point ``x`` onto H."""
    v = as_vector(x, dim=H.ambient_dim)
    if H.dim == 0:
        return np.zeros_like(v)
    return H.basis.T @ (H.basis @ v)


def sphere_sample(n: int, rng: RngStream, size: int | None = None) -> np.ndarray:
    """Uniform unit vector(s) on S^{n-1}: normalized standard Gaussians.

    With ``size`` set, returns a (size, n) array drawn from a single stream;
    repeated calls with the same stream reproduce the same output.
    """
    if not 1 <= n <= MAX_AMBIENT_DIM:
        raise UnsupportedDimensionError(f"ambient dimension {n} outside 1..{MAX_AMBIENT_DIM}")
    gen = rng.generator()
    m = 1 if size is None else int(size)
    g = gen.standard_normal((m, n))
    norms = np.linalg.norm(g, axis=1, keepdims=True)
    # Resample the (measure-zero) underflow case rather than dividing by ~0.
    bad = norms[:, 0] < 1e-12
    while np.any(bad):
        g[bad] = gen.standard_normal((int(bad.sum()), n))
        norms = np.linalg.norm(g, axis=1, keepdims=True)
        bad = norms[:, 0] < 1e-12
    u = g / norms
    return u[0] if size is None else u


def haar_subspace(n: int, j: int, rng: RngStream) -> Subspace:
    """A Haar-distributed j-dimensional subspace of R^n.

    The span of j independent standard Gaussian vectors is rotation
    invariant, which is exactly the Haar law on the Grassmannian.
    """
    if not 1 <= j <= n:
        raise InvalidInputError(f"subspace dimension {j} outside 1..{n}")
    gen = rng.generator()
    g = gen.standard_normal((j, n))
    H = orthonormalize(g)
    if H.dim != j:
        raise InternalError("degenerate Gaussian draw")  # probability zero
    return H


def haar_frames(n: int, j: int, rng: RngStream, size: int) -> np.ndarray:
    """Batched orthonormal frames (size, j, n) of Haar subspaces.

    Vectorized companion to :func:`haar_subspace` for Monte Carlo loops:
    the span of the Q-factor columns of a Gaussian (n, j) sample does not
    depend on the QR sign convention, so batched LAPACK QR is safe here.
    """
    if not 1 <= j <= n:
        raise InvalidInputError(f"subspace dimension {j} outside 1..{n}")
    g = rng.generator().standard_normal((size, n, j))
    q, _ = np.linalg.qr(g)
    return np.transpose(q, (0, 2, 1))


@lru_cache(maxsize=None)
def kappa(n: int) -> float:
    """Volume of the unit Euclidean ball in R^n (kappa_0 = 1, kappa_1 = 2)."""
    if not 0 <= n <= MAX_AMBIENT_DIM:
        raise InvalidInputError(f"dimension {n} outside 0..{MAX_AMBIENT_DIM}")
    if n == 0:
        return 1.0
    if n == 1:
        return 2.0
    return kappa(n - 2) * 2.0 * math.pi / n
