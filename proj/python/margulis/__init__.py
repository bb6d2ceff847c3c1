"""Displacement bounds for two-generator Moebius groups."""

from ._margulis import (
    INF,
    MoebiusMap,
    axes_distance,
    b,
    beta,
    c,
    chordal_norm,
    classify,
    d,
    delta_point_axis,
    extremal_elliptic_config,
    gamma,
    high_precision_table,
    hyp_distance,
    hyperbolic_norm,
    joint_rho_lower,
    matrix_norm,
    min_t_from_beta,
    modular_pair,
    n6_joint_min,
    parabolic_displacement,
    parabolic_min_t,
    params,
    phi,
    psi,
    rho_from_beta_delta,
    run_all_cases,
    solve_t,
    translation_rotation,
    verify_suite,
    yamada_cF,
)

__all__ = [
    "INF",
    "MoebiusMap",
    "axes_distance",
    "b",
    "beta",
    "c",
    "chordal_norm",
    "classify",
    "d",
    "delta_point_axis",
    "extremal_elliptic_config",
    "gamma",
    "high_precision_table",
    "hyp_distance",
    "hyperbolic_norm",
    "joint_rho_lower",
    "matrix_norm",
    "min_t_from_beta",
    "modular_pair",
    "n6_joint_min",
    "parabolic_displacement",
    "parabolic_min_t",
    "params",
    "phi",
    "psi",
    "rho_from_beta_delta",
    "run_all_cases",
    "solve_t",
    "translation_rotation",
    "verify_suite",
    "yamada_cF",
]
