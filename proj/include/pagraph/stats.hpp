#pragma once

#include <span>
#include <vector>

#include "pagraph/degree_distribution.hpp"
#include "pagraph/joint_distribution.hpp"

namespace pagraph {

// Total variation distance 0.5 sum_k |a_k - b_k| over the union of the two
// degree ranges, with the truncated-away masses compared as one lumped bin.
double total_variation(const DegreeDistribution& a, const DegreeDistribution& b);

// Total variation restricted to the window l, k <= k_cap (no tail term).
double total_variation_window(const JointDistribution& a, const JointDistribution& b, int k_cap);

// Least-squares slope of ln q against ln k over k in [k_lo, k_hi], skipping
// zero entries. Requires at least 3 usable points.
double loglog_slope(const DegreeDistribution& d, int k_lo, int k_hi);
double loglog_slope(std::span<const double> k, std::span<const double> q);

// Pearson chi-square statistic sum (obs - N p)^2 / (N p) over cells with
// p > 0; observed are raw counts totalling n_total.
double chi_square_statistic(std::span<const double> observed_counts,
                            std::span<const double> expected_probabilities, double n_total);

}  // namespace pagraph
