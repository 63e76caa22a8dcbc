import json
import math

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from convexsym.core import RngStream, coordinate_subspace, kappa
from convexsym.core import InvalidInputError
from convexsym.bodies import Ball, Polytope, contains, convex_hull, cube, segment
from convexsym.measures import (
    MeasureEstimate,
    body_volume,
    box_intrinsic_oracle,
    intrinsic_volume,
    kubota_constant,
    mean_width,
    perimeter,
    v1,
    volume_exact,
)


def seeded_polytope(seed, trial, dim=2, points=8):
    g = RngStream(seed, trial).generator()
    return Polytope(g.standard_normal((points, dim)))


def combined(*ests):
    return math.hypot(*(e.std_error for e in ests))


class TestVolumeExact:
    def test_unit_cube(self):
        assert volume_exact(cube(3)).value == pytest.approx(1.0, abs=1e-12)

    def test_simplex(self):
        S = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert volume_exact(S).value == pytest.approx(1 / 6, abs=1e-12)

    def test_cross_polytope(self):
        # oracle: conv(+-e_i) has volume 2^n / n!
        pts = np.vstack([np.eye(3), -np.eye(3)])
        assert volume_exact(Polytope(pts)).value == pytest.approx(4 / 3, abs=1e-12)

    def test_matches_qhull_volume(self):
        for i in range(40):
            dim = 2 + (i % 3)
            K = seeded_polytope(41, i, dim=dim, points=12)
            assert volume_exact(K).value == pytest.approx(
                ConvexHull(K.vertices).volume, rel=1e-10)

    def test_lower_dimensional_measured_in_affine_hull(self):
        S = segment([0, 0, 0], [3, 4, 0])
        assert volume_exact(S).value == pytest.approx(5.0, abs=1e-12)

    def test_exact_estimate_shape(self):
        est = volume_exact(cube(2))
        assert est.method == "exact" and est.std_error == 0.0


class TestBoxOracle:
    def test_unit_cube_values(self):
        assert box_intrinsic_oracle((1, 1, 1), 1) == 3.0
        assert box_intrinsic_oracle((1, 1, 1), 2) == 3.0

    def test_segment(self):
        assert box_intrinsic_oracle((2.5,), 1) == 2.5

    def test_range_check(self):
        with pytest.raises(InvalidInputError):
            box_intrinsic_oracle((1, 1), 3)


class TestIntrinsicVolume:
    def test_kubota_constant_segment_normalization(self):
        # c_{2,1} must turn the analytic Haar average (2/pi) * length into
        # the length itself.
        assert kubota_constant(2, 1) * (2 / math.pi) == pytest.approx(1.0, abs=1e-12)

    def test_segment_any_dimension(self):
        for n in (2, 3, 4):
            e = np.zeros(n)
            e[0] = 1.7
            I = segment(-0.5 * e, 0.5 * e)
            est = intrinsic_volume(I, 1, samples=40_000, rng=RngStream(42, n))
            assert abs(est.value - 1.7) <= 3 * est.std_error

    def test_cube_matches_box_oracle(self):
        for j in (1, 2):
            est = intrinsic_volume(cube(3), j, samples=100_000, rng=RngStream(43, j))
            assert abs(est.value - 3.0) <= 3 * est.std_error

    def test_planar_ball_half_perimeter(self):
        est = intrinsic_volume(Ball(np.zeros(2), 1.0), 1)
        assert est.method == "exact"
        assert est.value == pytest.approx(math.pi, abs=1e-12)

    def test_top_index_short_circuits(self):
        est = intrinsic_volume(cube(3), 3)
        assert est.method == "exact" and est.value == pytest.approx(1.0)

    def test_j_out_of_range(self):
        with pytest.raises(InvalidInputError):
            intrinsic_volume(cube(3), 5)

    def test_reproducible(self):
        a = intrinsic_volume(cube(3), 2, samples=5000, rng=RngStream(44, 0))
        b = intrinsic_volume(cube(3), 2, samples=5000, rng=RngStream(44, 0))
        assert a == b

    def test_monotone_under_inclusion(self):
        # paired Haar streams make per-sample shadows nested, so the
        # estimates themselves are ordered
        for i in range(10):
            g = RngStream(45, i).generator()
            core = g.standard_normal((8, 3))
            K = Polytope(core)
            L = Polytope(np.vstack([core, 2.0 * g.standard_normal((3, 3))]))
            assert contains(L, K, 1e-12)
            for j in (1, 2):
                a = intrinsic_volume(K, j, samples=4000, rng=RngStream(46, i))
                b = intrinsic_volume(L, j, samples=4000, rng=RngStream(46, i))
                assert a.value <= b.value + 3 * combined(a, b)

    def test_translation_invariance(self):
        K = seeded_polytope(47, 0, dim=3)
        for j in (1, 2):
            a = intrinsic_volume(K, j, samples=40_000, rng=RngStream(48, j))
            b = intrinsic_volume(K.translate([2.0, -1.0, 0.5]), j,
                                 samples=40_000, rng=RngStream(49, j))
            assert abs(a.value - b.value) <= 3 * combined(a, b)

    def test_v1_dimension_independence(self):
        # a fixed segment embedded in R^2..R^4 keeps its first intrinsic volume
        ests = []
        for n in (2, 3, 4):
            e = np.zeros(n)
            e[0] = 2.0
            I = segment(np.zeros(n), e)
            ests.append(intrinsic_volume(I, 1, samples=40_000, rng=RngStream(50, n)))
        for a, b in [(0, 1), (1, 2), (0, 2)]:
            assert abs(ests[a].value - ests[b].value) <= 3 * combined(ests[a], ests[b])

    def test_kubota_consistency_small_sweep(self):
        for i in range(6):
            n = 2 + (i % 3)
            g = RngStream(51, i).generator()
            sides = 0.5 + 1.5 * g.random(n)
            box = cube(n).linear_image(np.diag(sides))
            for j in range(1, n + 1):
                est = intrinsic_volume(box, j, samples=20_000, rng=RngStream(52, 10 * i + j))
                oracle = box_intrinsic_oracle(sides, j)
                assert abs(est.value - oracle) <= 3 * est.std_error + 1e-9 * oracle


class TestMeanWidth:
    def test_ball_exact(self):
        for n in (2, 3, 4):
            est = mean_width(Ball(np.zeros(n), 1.0))
            assert est.method == "exact" and est.value == 2.0

    def test_segment_exact_branch(self):
        I = segment([0, 0], [1.5, 0])
        est = mean_width(I)
        assert est.method == "exact"
        assert est.value == pytest.approx(2 * 1.5 / math.pi, abs=1e-12)

    def test_unit_square_exact_branch(self):
        est = mean_width(cube(2))
        assert est.value == pytest.approx(4 / math.pi, abs=1e-12)

    def test_exact_branch_agrees_with_monte_carlo(self):
        # forcing the sampled path through the mirror option must agree
        # with the perimeter rule
        for i in range(5):
            K = seeded_polytope(53, i)
            exact = mean_width(K)
            mc = mean_width(K, samples=60_000, rng=RngStream(54, i),
                            mirror=coordinate_subspace(2, [0]))
            assert abs(mc.value - exact.value) <= 3 * mc.std_error

    def test_perimeter_degenerate(self):
        assert perimeter(Polytope([[0.0, 0.0]])) == 0.0
        assert perimeter(segment([0, 0], [2, 0])) == 4.0


class TestV1:
    def test_segment_constant_fixed(self):
        est = v1(segment([0, 0], [1.25, 0]))
        assert est.value == pytest.approx(1.25, abs=1e-12)

    def test_cube3_matches_oracle(self):
        est = v1(cube(3), samples=100_000, rng=RngStream(55, 0))
        assert abs(est.value - 3.0) <= 3 * est.std_error

    def test_planar_disc(self):
        est = v1(Ball(np.zeros(2), 1.0))
        assert est.value == pytest.approx(math.pi, abs=1e-12)


class TestEstimateType:
    def test_invariants(self):
        with pytest.raises(InvalidInputError):
            MeasureEstimate(1.0, 0.1, 100, "exact")
        with pytest.raises(InvalidInputError):
            MeasureEstimate(1.0, 0.1, 0, "mc")

    def test_serialization(self):
        est = MeasureEstimate(3.0, 0.01, 1000, "mc")
        data = json.loads(json.dumps(est.to_dict()))
        assert data == {"value": 3.0, "std_error": 0.01, "samples": 1000, "method": "mc"}


class TestBodyVolume:
    def test_cylinder_product(self):
        H = coordinate_subspace(3, [0])
        from convexsym.bodies import SphericalCylinder
        C = SphericalCylinder(H, 2.0, 0.5, np.zeros(3))
        assert body_volume(C) == pytest.approx(kappa(1) * 2.0 * kappa(2) * 0.25)

    def test_degenerate_polytope_is_null(self):
        assert body_volume(segment([0, 0], [1, 0])) == 0.0


class TestAnalyticBodies:
    def test_cylinder_first_intrinsic_volume(self):
        # planar cylinder is a rectangle with sides (2r, 2s)
        from convexsym.bodies import SphericalCylinder
        C = SphericalCylinder(coordinate_subspace(2, [0]), 0.75, 0.5, np.zeros(2))
        est = intrinsic_volume(C, 1, samples=30_000, rng=RngStream(56, 0))
        oracle = box_intrinsic_oracle((1.5, 1.0), 1)
        assert abs(est.value - oracle) <= 3 * est.std_error + 1e-3

    def test_special_form_volume(self):
        from convexsym.bodies import SpecialForm
        H = coordinate_subspace(3, [0, 1])
        L = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
        T = SpecialForm(L, H, 0.5)
        assert body_volume(T) == pytest.approx(1.0 * kappa(1) * 0.5)
