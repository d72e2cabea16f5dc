#include "pagraph/joint_distribution.hpp"

#include <stdexcept>

#include "pagraph/exact_vdd.hpp"

namespace pagraph {

JointDistribution::JointDistribution(Kind kind, int k_min, int k_max, std::vector<double> values)
    : kind_(kind), k_min_(k_min), k_max_(k_max), values_(std::move(values)) {
    if (k_min_ < 1 || k_max_ < k_min_)
        throw std::invalid_argument("joint distribution: bad degree range");
    if (values_.size() != width() * width())
        throw std::invalid_argument("joint distribution: value array does not match range");
    double total = 0.0, carry = 0.0;  // Kahan; the array can hold ~1e7 cells
    for (double v : values_) {
        const double y = v - carry;
        const double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
    tail_mass_ = 1.0 - total;
}

double JointDistribution::at(int l, int k) const {
    if (l < 0 || k < 0)
        throw std::out_of_range("joint distribution: negative degree");
    if (l < k_min_ || k < k_min_)
        return 0.0;
    if (l > k_max_ || k > k_max_)
        throw std::out_of_range("joint distribution: degree beyond computed range");
    return values_[index(l, k)];
}

std::span<const double> JointDistribution::row(int l) const {
    if (l < k_min_ || l > k_max_)
        throw std::out_of_range("joint distribution: row outside computed range");
    return {values_.data() + index(l, k_min_), width()};
}

std::vector<double> JointDistribution::source_marginal() const {
    std::vector<double> out(width(), 0.0);
    for (std::size_t i = 0; i < width(); ++i) {
        double acc = 0.0;
        const double* r = values_.data() + i * width();
        for (std::size_t j = 0; j < width(); ++j)
            acc += r[j];
        out[i] = acc;
    }
    return out;
}

std::vector<double> JointDistribution::target_marginal() const {
    std::vector<double> out(width(), 0.0);
    for (std::size_t i = 0; i < width(); ++i) {
        const double* r = values_.data() + i * width();
        for (std::size_t j = 0; j < width(); ++j)
            out[j] += r[j];
    }
    return out;
}

namespace {

void require_joint_range(int m, int k_max) {
    if (m < 1)
        throw std::invalid_argument("joint: m must be a positive integer");
    if (k_max < m + 1)
        throw std::invalid_argument("joint: k_max must be at least m + 1");
}

}  // namespace

JointDistribution joint_P(int m, double a, int k_max) {
    require_joint_range(m, k_max);
    if (!(a >= 0.0 && a <= 1.0))
        throw std::invalid_argument("joint_P: a must lie in [0, 1]");
    const DegreeDistribution q1 = vdd_P(m, a, k_max);

    const std::size_t w = static_cast<std::size_t>(k_max - m + 1);
    std::vector<double> q(w * w, 0.0);
    auto cell = [&](int l, int k) -> double& {
        return q[static_cast<std::size_t>(l - m) * w + static_cast<std::size_t>(k - m)];
    };

    // Row l = m; the k = m+1 cell has no west neighbour (structurally zero).
    for (int k = m + 1; k <= k_max; ++k) {
        const double west = k == m + 1 ? 0.0 : cell(m, k - 1);
        cell(m, k) = (2.0 * a * m + (1.0 - a) * (k - 1)) * (q1[k - 1] + m * west) /
                     (2.0 * m + (3.0 * a + 1.0) * m * m + m * (1.0 - a) * k);
    }
    for (int l = m + 1; l <= k_max; ++l) {
        for (int k = m + 1; k <= k_max; ++k) {
            const double west = k == m + 1 ? 0.0 : cell(l, k - 1);
            const double north = cell(l - 1, k);
            cell(l, k) = ((2.0 * a * m + (1.0 - a) * (k - 1)) * west +
                          (2.0 * a * m + (1.0 - a) * (l - 1)) * north) /
                         (2.0 + 4.0 * a * m + (1.0 - a) * (k + l));
        }
    }
    return JointDistribution(JointDistribution::Kind::Arc, m, k_max, std::move(q));
}

JointDistribution joint_general(const WeightFunction& f, int m, double mean_weight, int k_max) {
    require_joint_range(m, k_max);
    if (!(mean_weight > 0.0))
        throw std::invalid_argument("joint_general: mean weight must be positive");
    const auto inc = IncrementSpec::fixed(m);
    const DegreeDistribution q1(
        m, [&] {
            // Marginal consistent with the supplied mean weight.
            std::vector<double> v(static_cast<std::size_t>(k_max - m + 1));
            v[0] = mean_weight / (mean_weight + m * f(m));
            for (int k = m + 1; k <= k_max; ++k)
                v[static_cast<std::size_t>(k - m)] = m * f(k - 1) /
                                                     (mean_weight + m * f(k)) *
                                                     v[static_cast<std::size_t>(k - m - 1)];
            return v;
        }(),
        mean_weight);

    const std::size_t w = static_cast<std::size_t>(k_max - m + 1);
    std::vector<double> q(w * w, 0.0);
    auto cell = [&](int l, int k) -> double& {
        return q[static_cast<std::size_t>(l - m) * w + static_cast<std::size_t>(k - m)];
    };

    cell(m, m + 1) = f(m) * q1[m] / (mean_weight + m * (f(m) + f(m + 1)));
    for (int k = m + 2; k <= k_max; ++k)
        cell(m, k) =
            f(k - 1) * (q1[k - 1] + m * cell(m, k - 1)) / (mean_weight + m * (f(m) + f(k)));
    for (int l = m + 1; l <= k_max; ++l) {
        for (int k = m + 1; k <= k_max; ++k) {
            const double west = k == m + 1 ? 0.0 : cell(l, k - 1);
            const double north = cell(l - 1, k);
            cell(l, k) = (f(l - 1) * north + f(k - 1) * west) / (mean_weight / m + f(l) + f(k));
        }
    }
    return JointDistribution(JointDistribution::Kind::Arc, m, k_max, std::move(q));
}

JointDistribution joint_L(int m, double s, int k_max) {
    require_joint_range(m, k_max);
    if (!(s > -static_cast<double>(m)))
        throw std::domain_error("joint_L: s must exceed -m");
    const DegreeDistribution q1 = vdd_L(m, s, k_max);

    const std::size_t w = static_cast<std::size_t>(k_max - m + 1);
    std::vector<double> q(w * w, 0.0);
    auto cell = [&](int l, int k) -> double& {
        return q[static_cast<std::size_t>(l - m) * w + static_cast<std::size_t>(k - m)];
    };

    cell(m, m + 1) = (m + s) * q1[m] / (2.0 * m + s + m * (2.0 * m + 2.0 * s + 1.0));
    for (int k = m + 2; k <= k_max; ++k)
        cell(m, k) = (k - 1 + s) * (q1[k - 1] + m * cell(m, k - 1)) /
                     (2.0 * m + s + m * (m + 2.0 * s + k));
    for (int l = m + 1; l <= k_max; ++l) {
        for (int k = m + 1; k <= k_max; ++k) {
            const double west = k == m + 1 ? 0.0 : cell(l, k - 1);
            const double north = cell(l - 1, k);
            cell(l, k) = ((l - 1 + s) * north + (k - 1 + s) * west) /
                         ((2.0 * m + s) / m + l + 2.0 * s + k);
        }
    }
    return JointDistribution(JointDistribution::Kind::Arc, m, k_max, std::move(q));
}

JointDistribution edge_from_arc(const JointDistribution& arc) {
    if (arc.kind() != JointDistribution::Kind::Arc)
        throw std::invalid_argument("edge_from_arc: input must be an arc distribution");
    const int lo = arc.k_min(), hi = arc.k_max();
    const std::size_t w = static_cast<std::size_t>(hi - lo + 1);
    std::vector<double> q(w * w);
    for (int l = lo; l <= hi; ++l)
        for (int k = lo; k <= hi; ++k)
            q[static_cast<std::size_t>(l - lo) * w + static_cast<std::size_t>(k - lo)] =
                0.5 * (arc.at(l, k) + arc.at(k, l));
    return JointDistribution(JointDistribution::Kind::Edge, lo, hi, std::move(q));
}

}  // namespace pagraph
