"""Convex graph invariants: exact values, relaxations, projections, experiments."""

from ._core import (
    ConvergenceError,
    TooLargeError,
    builtin_graph,
    constraint_residual,
    deconvolve,
    degree_sequence,
    edge_sum,
    fiedler_value,
    format_graph,
    generate,
    hull_membership,
    hypothesis_test,
    isoperimetric_exact,
    lambda_bound,
    majorizes,
    max_degree,
    maxcut_exact,
    maxcut_sdp,
    maxcut_sdp_bound,
    motzkin_straus,
    parse_graph,
    project_onto,
    project_permutahedron,
    qap_sdp,
    run_cli,
    spectrum,
    stability_exact,
    stability_sdp,
    theta_exact,
)

__all__ = [
    "ConvergenceError",
    "TooLargeError",
    "builtin_graph",
    "constraint_residual",
    "deconvolve",
    "degree_sequence",
    "edge_sum",
    "fiedler_value",
    "format_graph",
    "generate",
    "hull_membership",
    "hypothesis_test",
    "isoperimetric_exact",
    "lambda_bound",
    "majorizes",
    "max_degree",
    "maxcut_exact",
    "maxcut_sdp",
    "maxcut_sdp_bound",
    "motzkin_straus",
    "parse_graph",
    "project_onto",
    "project_permutahedron",
    "qap_sdp",
    "run_cli",
    "spectrum",
    "stability_exact",
    "stability_sdp",
    "theta_exact",
]
