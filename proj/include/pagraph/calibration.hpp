#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pagraph/empirical.hpp"
#include "pagraph/exact_vdd.hpp"
#include "pagraph/model.hpp"

namespace pagraph {

// Tail exponent alpha by unweighted least squares on (ln k, ln Q^_k) over
// degrees in [k_lo, k_hi] with n_k > 0; needs at least 3 such points.
double fit_tail_exponent(const EmpiricalDistribution& emp, int k_lo, int k_hi);

struct FitDiagnostics {
    int fit_lo = 0;
    int fit_hi = 0;
    double residual = 0.0;        // rms log-log fit residual
    double tv_exact_vs_emp = 0.0; // forward-run VDD vs the data
    bool converged = false;
    // Degrees whose solved head weight came out negative and was clamped to
    // zero (the head fit is infeasible there with the given r).
    std::vector<int> clamped;
};

struct CalibratedModel {
    double m = 0.0;      // mean increment size (E/N unless overridden)
    double alpha = 0.0;  // fitted tail exponent
    double s = 0.0;      // displacement, s = (alpha - 3) m
    int k_head = 0;
    std::vector<double> head_f;  // f(k_min_arcs .. k_head-1)
    IncrementSpec increments = IncrementSpec::fixed(1);
    double mean_weight = 0.0;  // <f> used in the inversion (2m + s)
    FitDiagnostics diagnostics;

    ModelSpec to_model_spec() const;
    std::string to_json() const;
};

struct CalibrationOptions {
    std::optional<double> edge_count;     // E; m = E/N
    std::optional<double> mean_override;  // use this m instead of E/N
    int k_head = 11;
    // Fit range; defaults to [k_head, largest k with n_k >= 3].
    std::optional<std::pair<int, int>> fit_range;
    // Increment distribution; omitted = auto heuristic (r_x = Q^_x for
    // x <= j, remainder split over {j+1, j+2} to match total mass and mean).
    std::optional<IncrementSpec> increments;
    int k_max = 100000;  // forward-run resolution for diagnostics
};

// Fits a growth model to an empirical degree histogram: tail exponent by
// least squares, displacement via s = (alpha-3)m, head weights by inverting
// the stochastic-increment balance with <f> = 2m + s.
CalibratedModel calibrate(const EmpiricalDistribution& emp, const CalibrationOptions& opts);

struct ValidationOptions {
    int n_sim = 100000;
    int replications = 1;
    std::uint64_t seed = 1;
    int k_max = 100000;      // exact-VDD resolution
    int slope_lo = 50;       // tail-slope fit window
    int slope_hi = 1000;
};

struct ValidationReport {
    double tv_exact_vs_reference = 0.0;
    double tv_sim_vs_exact = 0.0;
    double chi_square_head = 0.0;  // simulated vs exact over the head degrees
    int chi_square_cells = 0;
    double slope_exact = 0.0;
    double slope_sim = 0.0;
    double slope_reference = 0.0;
    // Curves on a common grid k = 1..k_hi for plotting.
    int curve_k_hi = 0;
    std::vector<double> q_reference;
    std::vector<double> q_exact;
    std::vector<double> q_simulated;
};

// Compares a model's exact VDD against a reference distribution and against
// its own simulation (mean over replications at n_sim vertices).
ValidationReport validate(const ModelSpec& model, const DegreeDistribution& reference,
                          const ValidationOptions& opts);
ValidationReport validate(const ModelSpec& model, const EmpiricalDistribution& reference,
                          const ValidationOptions& opts);

// The validate curves as CSV: "k,Q_reference,Q_exact,Q_simulated".
void write_validation_csv(std::ostream& os, const ValidationReport& report);

}  // namespace pagraph
