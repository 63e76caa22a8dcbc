import math

import numpy as np
import pytest

from convexsym.core import (
    InvalidInputError,
    RngStream,
    coordinate_subspace,
    haar_frames,
    haar_subspace,
    kappa,
    orthonormalize,
    project,
    sphere_sample,
)


class TestOrthonormalize:
    def test_independent_pair(self):
        H = orthonormalize([(1, 0), (1, 1)])
        assert H.dim == 2
        assert np.allclose(H.basis, [[1, 0], [0, 1]], atol=1e-12)

    def test_normalization_and_complement(self):
        H = orthonormalize([(3, 4)])
        assert H.dim == 1
        assert np.allclose(H.basis[0], [0.6, 0.8], atol=1e-12)
        comp = H.complement_basis[0]
        assert np.allclose(np.abs(comp), [0.8, 0.6], atol=1e-12)
        assert abs(comp @ H.basis[0]) < 1e-12

    def test_dependent_input_collapses(self):
        H = orthonormalize([(1, 0), (2, 0)])
        assert H.dim == 1
        assert np.allclose(np.abs(H.basis[0]), [1, 0], atol=1e-12)

    def test_nonfinite_rejected(self):
        with pytest.raises(InvalidInputError):
            orthonormalize([(np.nan, 1.0)])

    def test_random_inputs_stay_orthonormal(self):
        # Frame quality over many seeded draws, including rank-deficient ones.
        for i in range(1000):
            g = RngStream(11, i).generator()
            n = int(g.integers(1, 6))
            k = int(g.integers(1, n + 2))
            vecs = g.standard_normal((k, n))
            if i % 3 == 0 and k > 1:
                vecs[-1] = vecs[0] * g.standard_normal()
            H = orthonormalize(vecs)
            full = np.vstack([H.basis, H.complement_basis])
            assert np.allclose(full @ full.T, np.eye(n), atol=1e-12)


class TestProject:
    def test_coordinate_projection(self):
        H = coordinate_subspace(3, [0, 1])
        assert np.allclose(project([1, 2, 3], H), [1, 2, 0])

    def test_point_already_in_subspace(self):
        H = orthonormalize([np.array([1.0, 1.0]) / math.sqrt(2)])
        assert np.allclose(project([1, 1], H), [1, 1], atol=1e-12)

    def test_idempotent_and_complement(self):
        for i in range(200):
            g = RngStream(12, i).generator()
            n = int(g.integers(2, 6))
            H = orthonormalize(g.standard_normal((int(g.integers(1, n)), n)))
            x = g.standard_normal(n)
            p = project(x, H)
            assert np.allclose(project(p, H), p, atol=1e-12)
            assert np.allclose(p + project(x, H.orthogonal()), x, atol=1e-10)

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInputError):
            project([1, 2, 3], coordinate_subspace(2, [0]))


class TestSampling:
    def test_sphere_sample_unit_norm(self):
        u = sphere_sample(4, RngStream(1, 0))
        assert abs(np.linalg.norm(u) - 1.0) < 1e-12

    def test_sphere_sample_symmetry(self):
        u = sphere_sample(2, RngStream(1, 1), size=100_000)
        se = u.std(axis=0, ddof=1) / math.sqrt(len(u))
        assert np.all(np.abs(u.mean(axis=0)) <= 3 * se)

    def test_sphere_sample_reproducible(self):
        a = sphere_sample(3, RngStream(7, 5), size=10)
        b = sphere_sample(3, RngStream(7, 5), size=10)
        c = sphere_sample(3, RngStream(7, 6), size=10)
        assert np.array_equal(a, b)
        assert not np.array_equal(a, c)

    def test_haar_line_cosine_mean(self):
        # Oracle: the Haar average of |cos| between a random line in the
        # plane and a fixed axis is the analytic integral 2/pi.
        frames = haar_frames(2, 1, RngStream(2, 0), 100_000)
        vals = np.abs(frames[:, 0, 0])
        se = vals.std(ddof=1) / math.sqrt(len(vals))
        assert abs(vals.mean() - 2.0 / math.pi) <= 3 * se
        # The public single-draw API follows the same law.
        single = np.array([abs(haar_subspace(2, 1, RngStream(2, i)).basis[0][0])
                           for i in range(3000)])
        se1 = single.std(ddof=1) / math.sqrt(len(single))
        assert abs(single.mean() - 2.0 / math.pi) <= 4 * se1

    def test_haar_full_space(self):
        H = haar_subspace(3, 3, RngStream(3, 0))
        assert H.dim == 3
        assert H.complement_basis.shape == (0, 3)

    def test_haar_deterministic(self):
        H1 = haar_subspace(4, 2, RngStream(9, 3))
        H2 = haar_subspace(4, 2, RngStream(9, 3))
        assert np.array_equal(H1.basis, H2.basis)

    def test_haar_rejects_bad_j(self):
        with pytest.raises(InvalidInputError):
            haar_subspace(3, 4, RngStream(0, 0))


class TestKappa:
    def test_small_dims(self):
        assert kappa(1) == 2.0
        assert kappa(2) == pytest.approx(math.pi, abs=1e-15)
        assert kappa(3) == pytest.approx(kappa(1) * 2 * math.pi / 3, abs=1e-15)
        assert kappa(0) == 1.0

    def test_out_of_range(self):
        with pytest.raises(InvalidInputError):
            kappa(9)
