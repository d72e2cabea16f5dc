#include "pagraph/exact_vdd.hpp"

#include <cmath>
#include <stdexcept>

#include "pagraph/gamma.hpp"

namespace pagraph {

namespace {

void require_positive_m(int m) {
    if (m < 1)
        throw std::invalid_argument("vdd: m must be a positive integer");
}

void require_range(int k_min, int k_max) {
    if (k_max < k_min)
        throw std::invalid_argument("vdd: k_max must be >= the smallest degree");
}

// Shared balance recurrence for nonnegative-weight rules; fixed increments
// are the degenerate r = {m: 1} case.
std::vector<double> balance_recurrence(const WeightFunction& f, const IncrementSpec& inc,
                                       double mean_weight, int k_max) {
    const int g = inc.min_arcs();
    const double m = inc.mean();
    std::vector<double> q(static_cast<std::size_t>(k_max - g + 1));
    q[0] = inc.probability(g) * mean_weight / (mean_weight + m * f(g));
    for (int k = g + 1; k <= k_max; ++k) {
        const double inflow = inc.probability(k) * mean_weight + m * f(k - 1) * q[k - g - 1];
        q[static_cast<std::size_t>(k - g)] = inflow / (mean_weight + m * f(k));
    }
    return q;
}

// sum_{k > k_max} f(k) Q_k for a weight with linear tail k + tail_s, fitting
// the power-law decay Q_k ~ c k^-alpha at the last computed point. The
// realized exponent depends on the mean weight in use: alpha = 1 + <f>/m.
double tail_weight_estimate(const std::vector<double>& q, int k_max, double tail_s,
                            double alpha) {
    const double q_last = q.back();
    if (!(q_last > 0.0) || !(alpha > 2.0))
        return 0.0;
    const double c = q_last * std::pow(static_cast<double>(k_max), alpha);
    const double edge = k_max + 0.5;
    return c * (std::pow(edge, 2.0 - alpha) / (alpha - 2.0) +
                tail_s * std::pow(edge, 1.0 - alpha) / (alpha - 1.0));
}

}  // namespace

DegreeDistribution vdd_L(int m, double s, int k_max) {
    require_positive_m(m);
    if (!(s > -static_cast<double>(m)))
        throw std::domain_error("vdd_L: s must exceed -m");
    require_range(m, k_max);
    std::vector<double> q(static_cast<std::size_t>(k_max - m + 1));
    q[0] = (2.0 * m + s) / (2.0 * m + s + m * (m + s));
    for (int k = m + 1; k <= k_max; ++k)
        q[static_cast<std::size_t>(k - m)] =
            m * (k - 1 + s) / (2.0 * m + s + m * (k + s)) * q[static_cast<std::size_t>(k - m - 1)];
    return DegreeDistribution(m, std::move(q), 2.0 * m + s);
}

DegreeDistribution vdd_P(int m, double a, int k_max) {
    require_positive_m(m);
    if (!(a >= 0.0 && a <= 1.0))
        throw std::invalid_argument("vdd_P: a must lie in [0, 1]");
    require_range(m, k_max);
    std::vector<double> q(static_cast<std::size_t>(k_max - m + 1));
    q[0] = 2.0 / (2.0 + a * m + m);
    for (int k = m + 1; k <= k_max; ++k)
        q[static_cast<std::size_t>(k - m)] = (2.0 * a * m + (1.0 - a) * (k - 1)) /
                                             (2.0 + 2.0 * a * m + (1.0 - a) * k) *
                                             q[static_cast<std::size_t>(k - m - 1)];
    // Mean weight of the equivalent L-graph: 2m + 2am/(1-a) = 2m/(1-a), or 1
    // in the a = 1 constant-weight limit.
    const double mean_weight = a < 1.0 ? 2.0 * m / (1.0 - a) : 1.0;
    return DegreeDistribution(m, std::move(q), mean_weight);
}

DegreeDistribution vdd_const(int m, int k_max) {
    require_positive_m(m);
    require_range(m, k_max);
    std::vector<double> q(static_cast<std::size_t>(k_max - m + 1));
    q[0] = 1.0 / (1.0 + m);
    for (std::size_t i = 1; i < q.size(); ++i)
        q[i] = q[i - 1] * m / (1.0 + m);
    return DegreeDistribution(m, std::move(q), 1.0);
}

double vdd_L_closed(int m, double s, int k) {
    require_positive_m(m);
    if (!(s > -static_cast<double>(m)))
        throw std::domain_error("vdd_L_closed: s must exceed -m");
    if (k < m)
        throw std::invalid_argument("vdd_L_closed: k must be >= m");
    // Gamma-argument positivity: m + s > 0 by the check above, k + s >= m + s,
    // and both increments 2 + s/m, 3 + s/m are positive.
    const double sm = s / m;
    return (2.0 * m + s) / m *
           std::exp(lgamma_diff(m + s, 2.0 + sm) - lgamma_diff(k + s, 3.0 + sm));
}

double mean_weight_residual(const WeightFunction& f, const IncrementSpec& inc,
                            double mean_weight, int k_max) {
    const int g = inc.min_arcs();
    const double m = inc.mean();
    const std::vector<double> q = balance_recurrence(f, inc, mean_weight, k_max);
    double total = 0.0;
    for (int k = g; k <= k_max; ++k)
        total += f(k) * q[static_cast<std::size_t>(k - g)];
    if (const auto s = f.asymptotic_displacement())
        total += tail_weight_estimate(q, k_max, *s, 1.0 + mean_weight / m);
    return mean_weight - total;
}

double solve_mean_weight(const WeightFunction& f, const IncrementSpec& inc, int k_max,
                         MeanWeightPolicy policy) {
    const double m = inc.mean();
    if (f.is_linear())
        return 2.0 * m + f.linear_displacement();
    if (f.is_constant())
        return 1.0;

    const auto& tab = f.tabulated_parts();
    require_range(inc.min_arcs(), k_max);
    if (policy == MeanWeightPolicy::TailPinned)
        return 2.0 * m + tab.tail_s;

    // Self-consistent root of g(x) = x - sum f(k) Q_k(x) - tail(x). g is
    // +inf-ish as x -> m (the recurrence piles mass at low degrees where the
    // head keeps weights small) and grows like x for large x, so a sign
    // change brackets the root. A plain damped iteration is useless here:
    // d/dx of the refresh sum is about -m/(x-m)^2 times the sum, far below -1
    // for head-calibrated weights.
    double lo = m * (1.0 + 1e-9);
    double hi = 2.0 * m + std::max(1.0, tab.tail_s + m) + 1.0;
    double g_lo = mean_weight_residual(f, inc, lo, k_max);
    double g_hi = mean_weight_residual(f, inc, hi, k_max);
    int expand = 0;
    while (g_lo * g_hi > 0.0 && expand++ < 60) {
        hi *= 2.0;
        g_hi = mean_weight_residual(f, inc, hi, k_max);
    }
    if (g_lo * g_hi > 0.0)
        throw std::runtime_error("solve_mean_weight: could not bracket the self-consistent root");
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = mean_weight_residual(f, inc, mid, k_max);
        if ((g_mid > 0.0) == (g_lo > 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

DegreeDistribution vdd_general(const WeightFunction& f, int m, int k_max,
                               MeanWeightPolicy policy) {
    require_positive_m(m);
    require_range(m, k_max);
    const auto inc = IncrementSpec::fixed(m);
    const double mean = solve_mean_weight(f, inc, k_max, policy);
    return DegreeDistribution(m, balance_recurrence(f, inc, mean, k_max), mean);
}

DegreeDistribution vdd_stochastic(const WeightFunction& f, const IncrementSpec& inc, int k_max,
                                  MeanWeightPolicy policy) {
    const int g = inc.min_arcs();
    require_range(g, k_max);
    const double mean = solve_mean_weight(f, inc, k_max, policy);
    return DegreeDistribution(g, balance_recurrence(f, inc, mean, k_max), mean);
}

DegreeDistribution exact_vdd(const ModelSpec& model, int k_max, MeanWeightPolicy policy) {
    switch (model.rule()) {
    case AttachmentRule::Hybrid:
        return vdd_P(model.increment().min_arcs(), model.mixing_a(), k_max);
    case AttachmentRule::Linear:
        if (model.increment().is_fixed()) {
            const int m = model.increment().min_arcs();
            if (model.weight().is_constant())
                return vdd_const(m, k_max);
            return vdd_L(m, model.weight().linear_displacement(), k_max);
        }
        return vdd_stochastic(model.weight(), model.increment(), k_max, policy);
    case AttachmentRule::General:
        if (model.increment().is_fixed())
            return vdd_general(model.weight(), model.increment().min_arcs(), k_max, policy);
        return vdd_stochastic(model.weight(), model.increment(), k_max, policy);
    }
    throw std::logic_error("exact_vdd: unhandled rule");
}

}  // namespace pagraph
