#include "pagraph/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pagraph {

double total_variation(const DegreeDistribution& a, const DegreeDistribution& b) {
    const int lo = std::min(a.k_min(), b.k_min());
    const int hi = std::max(a.k_max(), b.k_max());
    double acc = 0.0;
    for (int k = lo; k <= hi; ++k) {
        const double pa = k <= a.k_max() ? a[k] : 0.0;
        const double pb = k <= b.k_max() ? b[k] : 0.0;
        acc += std::abs(pa - pb);
    }
    acc += std::abs(a.tail_mass() - b.tail_mass());
    return 0.5 * acc;
}

double total_variation_window(const JointDistribution& a, const JointDistribution& b, int k_cap) {
    if (k_cap > a.k_max() || k_cap > b.k_max())
        throw std::invalid_argument("total_variation_window: window exceeds computed range");
    double acc = 0.0;
    for (int l = 1; l <= k_cap; ++l)
        for (int k = 1; k <= k_cap; ++k)
            acc += std::abs(a.at(l, k) - b.at(l, k));
    return 0.5 * acc;
}

double loglog_slope(std::span<const double> k, std::span<const double> q) {
    if (k.size() != q.size() || k.size() < 3)
        throw std::invalid_argument("loglog_slope: need at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        const double x = std::log(k[i]);
        const double y = std::log(q[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(k.size());
    const double denom = n * sxx - sx * sx;
    if (!(std::abs(denom) > 0.0))
        throw std::invalid_argument("loglog_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

double loglog_slope(const DegreeDistribution& d, int k_lo, int k_hi) {
    std::vector<double> ks, qs;
    k_lo = std::max(k_lo, d.k_min());
    k_hi = std::min(k_hi, d.k_max());
    for (int k = k_lo; k <= k_hi; ++k) {
        const double q = d[k];
        if (q > 0.0) {
            ks.push_back(k);
            qs.push_back(q);
        }
    }
    return loglog_slope(ks, qs);
}

double chi_square_statistic(std::span<const double> observed, std::span<const double> expected,
                            double n_total) {
    if (observed.size() != expected.size())
        throw std::invalid_argument("chi_square_statistic: size mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!(expected[i] > 0.0))
            continue;
        const double e = n_total * expected[i];
        const double d = observed[i] - e;
        acc += d * d / e;
    }
    return acc;
}

}  // namespace pagraph
