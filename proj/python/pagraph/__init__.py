"""Preferential-attachment graph models.

Exact vertex and arc/edge endpoint degree distributions, graph growth with
linear, hybrid, and general weight functions, mean-field asymptotics, and
calibration of models to empirical degree histograms.
"""

from ._core import (  # noqa: F401
    CalibratedModel,
    DegreeDistribution,
    EmpiricalDistribution,
    FitDiagnostics,
    GrowingGraph,
    IncrementSpec,
    JointDistribution,
    MeanWeightPolicy,
    ModelSpec,
    ValidationReport,
    WeightFunction,
    alpha_to_s,
    arc_endpoint_histogram,
    calibrate,
    classify,
    degree_histogram,
    edge_from_arc,
    eval_weight,
    exact_vdd,
    fit_tail_exponent,
    grow,
    joint_general,
    joint_L,
    joint_P,
    l_to_p,
    load_degree_file,
    loglog_slope,
    meanfield_cdf,
    meanfield_degree,
    meanfield_vdd,
    p_to_l,
    replication_seed,
    s_to_alpha,
    solve_mean_weight,
    total_variation,
    total_variation_window,
    validate,
    vdd_const,
    vdd_general,
    vdd_L,
    vdd_L_closed,
    vdd_P,
    vdd_stochastic,
)
