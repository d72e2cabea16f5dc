#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace pagraph {

// Final vertex degree distribution Q_k over k = k_min .. k_max, with the
// truncated-away probability reported explicitly as tail_mass. Degrees below
// k_min are structural zeros and are not stored.
class DegreeDistribution {
public:
    DegreeDistribution(int k_min, std::vector<double> q,
                       double mean_weight = std::numeric_limits<double>::quiet_NaN())
        : k_min_(k_min), q_(std::move(q)), mean_weight_(mean_weight) {
        if (k_min_ < 1)
            throw std::invalid_argument("degree distribution: k_min must be >= 1");
        if (q_.empty())
            throw std::invalid_argument("degree distribution: empty");
        // Kahan sum: tail_mass must stay meaningful at 1e-12 even for 1e5+
        // entries.
        double total = 0.0, carry = 0.0;
        for (double v : q_) {
            if (!(v >= 0.0))
                throw std::invalid_argument("degree distribution: negative probability");
            const double y = v - carry;
            const double t = total + y;
            carry = (t - total) - y;
            total = t;
        }
        tail_mass_ = 1.0 - total;
    }

    int k_min() const { return k_min_; }
    int k_max() const { return k_min_ + static_cast<int>(q_.size()) - 1; }

    // Q_k; zero below k_min, out_of_range above k_max (that mass is only
    // known in aggregate, via tail_mass()).
    double operator[](int k) const {
        if (k < k_min_) {
            if (k < 0)
                throw std::out_of_range("degree distribution: negative degree");
            return 0.0;
        }
        if (k > k_max())
            throw std::out_of_range("degree distribution: degree beyond computed range");
        return q_[static_cast<std::size_t>(k - k_min_)];
    }

    std::span<const double> probabilities() const { return q_; }
    double tail_mass() const { return tail_mass_; }
    // <f> used to produce the distribution (NaN for empirical histograms).
    double mean_weight() const { return mean_weight_; }

private:
    int k_min_;
    std::vector<double> q_;
    double mean_weight_;
    double tail_mass_;
};

}  // namespace pagraph
