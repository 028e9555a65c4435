"""Root-of-a-simplex construction, iteration and checks."""

from ._core import (
    ConvergenceReport,
    DegenerateSimplex,
    DimensionMismatch,
    GeometryError,
    Hyperplane,
    IterationConfig,
    OverflowGuard,
    RootResult,
    Sphere,
    StopReason,
    Trajectory,
    TrajectoryRecord,
    __version__,
    barycentric,
    check_containment,
    check_gram_identity,
    check_incenter_interior,
    check_root_circumsphere,
    circumsphere,
    contact_points,
    estimate_rho,
    facet_hyperplane,
    gram_matrix,
    insphere,
    iterate,
    mc_ball_in_simplex,
    named_simplex,
    radius_chain,
    random_simplex,
    root,
    signed_volume,
    subsequence_limits,
    triangle_angle_deviations,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
