"""Symmetrization operators on convex bodies, with measures and a verification harness.

The package splits into five layers:

- :mod:`convexsym.core` - subspaces, seeded sampling, ball volumes;
- :mod:`convexsym.bodies` - polytopes and analytic bodies with hulls,
  supports, chords, projections, Hausdorff comparisons;
- :mod:`convexsym.symmetrize` - Steiner, Minkowski, the volume-matching
  ball operator, and the natural-extension construction;
- :mod:`convexsym.measures` - exact and Monte Carlo volume, intrinsic
  volumes by Kubota averaging, mean width;
- :mod:`convexsym.harness` - seeded property suites and the executable
  fixtures behind the verification CLI (`convexsym verify`).
"""

from .core import (
    ConfigurationError,
    InternalError,
    InvalidInputError,
    RngStream,
    Subspace,
    UnsupportedDimensionError,
    coordinate_subspace,
    haar_subspace,
    kappa,
    orthonormalize,
    project,
    sphere_sample,
)
from .bodies import (
    Ball,
    Body,
    Polytope,
    SpecialForm,
    SphericalCylinder,
    approx_ball,
    approx_ball_error,
    as_polytope,
    body_from_dict,
    body_to_dict,
    chord,
    contains,
    convex_hull,
    cube,
    hausdorff,
    load_body,
    minkowski_sum,
    project_body,
    reflect,
    save_body,
    segment,
    support,
)
from .measures import (
    MeasureEstimate,
    body_volume,
    box_intrinsic_oracle,
    intrinsic_volume,
    kubota_constant,
    mean_width,
    v1,
    volume_exact,
)
from .symmetrize import (
    ExtensionResult,
    Symmetrizer,
    apply,
    minkowski_op,
    minkowski_symmetral,
    natural_extension,
    natural_op,
    pathological,
    pathological_op,
    steiner,
    steiner_op,
    steiner_support_defect,
    symmetrizer_from_dict,
)
from .harness import (
    BodyGenerator,
    PropertyReport,
    check_property,
    fixture_box_support,
    fixture_cone_invariance,
    fixture_cylinder_cone,
    fixture_hexagon_ratio,
    fixture_natural_pathological,
    fixture_parallelogram,
    fixture_segment_translation,
    fixture_thmvj_body,
)

__version__ = "0.1.0"
