"""Relative equilibria of point vortices on concentric regular polygons."""

from ._core import (  # noqa: F401
    AbsoluteEquilibriumResult,
    Alignment,
    AnalyticCount,
    CirculantKind,
    CirculantSpectrum,
    ConservedQuantities,
    CorotatingPoint,
    CountRange,
    EquilibriumKind,
    EquilibriumReport,
    NestedPolygonConfig,
    NestedSolution,
    PolygonRing,
    PolynomialInstance,
    RayKind,
    RegimeClassification,
    RegimeScanRow,
    RingCase,
    Trajectory,
    ValidationError,
    VortexSystem,
    VorticitySolutionSpace,
    __version__,
    absolute_equilibrium,
    circulant_spectrum,
    classify,
    classify_regime,
    conserved,
    corotating_absolute,
    corotating_nested,
    corotating_single,
    corotating_to_json,
    count_roots_analytic,
    equation_coefficients,
    f_eval,
    g_eval,
    integrate,
    lambda_n,
    mu,
    mutual_distances,
    oneil_sum,
    polygon_field,
    polygon_omega,
    positive_roots,
    ring_to_system,
    scan_regimes,
    solve_nested,
    velocities,
    vorticity_solution_space,
)
