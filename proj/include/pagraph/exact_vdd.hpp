#pragma once

#include "pagraph/degree_distribution.hpp"
#include "pagraph/model.hpp"
#include "pagraph/weight_function.hpp"

namespace pagraph {

// Exact final vertex degree distributions, computed by the stationary balance
// recurrences. All functions are pure; k_max is the truncation degree and the
// probability beyond it is reported as tail_mass.

// How the stationary mean weight <f> is chosen for tabulated-head weights.
//
// TailPinned (default): <f> = 2m + tail_s, the mean weight of the pure linear
// model the tail belongs to. Under this convention the tail ratio
// Q_k/Q_{k-1} -> (k-1+s)/(k+s+2+s/m) exactly, the tail exponent is
// alpha = 3 + tail_s/m, and the alpha <-> s conversion is exactly invertible,
// which is what head/tail calibration relies on.
//
// SelfConsistent: <f> solves <f> = sum_k f(k) Q_k(<f>) (plus a power-law tail
// estimate beyond k_max). This is the mean weight the growth process itself
// settles at; a nonzero head perturbation shifts it away from 2m + tail_s and
// with it the realized tail exponent (alpha = 1 + <f>/m).
//
// For linear and constant weights the two conventions coincide.
enum class MeanWeightPolicy { TailPinned, SelfConsistent };

// Linear weight f(k) = k + s, fixed increment m:
//   Q_m = (2m+s) / (2m+s + m(m+s)),
//   Q_k = m(k-1+s) / (2m+s + m(k+s)) * Q_{k-1}.
DegreeDistribution vdd_L(int m, double s, int k_max);

// Hybrid rule with mixing a, fixed increment m:
//   Q_m = 2 / (2 + am + m),
//   Q_k = [2am + (1-a)(k-1)] / [2 + 2am + (1-a)k] * Q_{k-1}.
DegreeDistribution vdd_P(int m, double a, int k_max);

// Constant weight f = 1: geometric with Q_m = 1/(1+m), ratio m/(1+m).
DegreeDistribution vdd_const(int m, int k_max);

// Closed form of the linear-weight distribution,
//   Q_k = (2m+s) G(m+s+2+s/m) G(k+s) / [m G(m+s) G(k+s+3+s/m)],
// evaluated in log-Gamma space so large k never overflows.
double vdd_L_closed(int m, double s, int k);

// General nonnegative weight, fixed increment m:
//   Q_m = <f> / (<f> + m f(m)),
//   Q_k = m f(k-1) / (<f> + m f(k)) * Q_{k-1}.
DegreeDistribution vdd_general(const WeightFunction& f, int m, int k_max,
                               MeanWeightPolicy policy = MeanWeightPolicy::TailPinned);

// Stochastic increment x ~ r with mean m and smallest size g:
//   Q_g = r_g <f> / (<f> + m f(g)),
//   Q_k = [r_k <f> + m f(k-1) Q_{k-1}] / (<f> + m f(k)).
DegreeDistribution vdd_stochastic(const WeightFunction& f, const IncrementSpec& increment,
                                  int k_max,
                                  MeanWeightPolicy policy = MeanWeightPolicy::TailPinned);

// Stationary mean weight <f> for the given weight/increment pair under the
// chosen policy. Analytic for linear (2m+s) and constant (1) weights; for
// tabulated weights TailPinned returns 2m + tail_s and SelfConsistent solves
// the consistency equation by bracketed bisection to |delta| < 1e-12 (the
// residual sum uses a fitted power-law estimate for the mass beyond k_max).
// Throws if the self-consistent root cannot be bracketed.
double solve_mean_weight(const WeightFunction& f, const IncrementSpec& increment, int k_max,
                         MeanWeightPolicy policy = MeanWeightPolicy::TailPinned);

// Residual <f> - sum_k f(k) Q_k(<f>) - tail estimate of the consistency
// equation at the given mean weight (zero at the self-consistent point).
double mean_weight_residual(const WeightFunction& f, const IncrementSpec& increment,
                            double mean_weight, int k_max);

// Dispatch on a full model: hybrid rules go through the P recurrence, linear
// and general rules through their weight function (stochastic increments
// included).
DegreeDistribution exact_vdd(const ModelSpec& model, int k_max,
                             MeanWeightPolicy policy = MeanWeightPolicy::TailPinned);

}  // namespace pagraph
