#pragma once

#include <span>
#include <vector>

#include "pagraph/degree_distribution.hpp"
#include "pagraph/weight_function.hpp"

namespace pagraph {

// Two-dimensional endpoint degree distribution of a random arc (ordered: the
// probability a uniformly random arc runs from a degree-l to a degree-k
// vertex) or of a random edge traversed in a random direction (symmetric).
// Stored dense over [k_min, k_max]^2; everything below k_min is a structural
// zero.
class JointDistribution {
public:
    enum class Kind { Arc, Edge };

    JointDistribution(Kind kind, int k_min, int k_max, std::vector<double> values);

    Kind kind() const { return kind_; }
    int k_min() const { return k_min_; }
    int k_max() const { return k_max_; }
    double tail_mass() const { return tail_mass_; }

    double at(int l, int k) const;

    // Row l as a contiguous span over k = k_min .. k_max.
    std::span<const double> row(int l) const;

    // sum_k q[l][k] for each l (probability the arc source has degree l).
    std::vector<double> source_marginal() const;
    // sum_l q[l][k] for each k (probability the arc target has degree k).
    std::vector<double> target_marginal() const;

private:
    std::size_t index(int l, int k) const {
        return static_cast<std::size_t>(l - k_min_) * width() + static_cast<std::size_t>(k - k_min_);
    }
    std::size_t width() const { return static_cast<std::size_t>(k_max_ - k_min_ + 1); }

    Kind kind_;
    int k_min_;
    int k_max_;
    double tail_mass_;
    std::vector<double> values_;
};

// Arc endpoint distribution of the hybrid P(m, a) model. Rows are filled
// bottom-up, each left to right: the l = m row from the vertex distribution,
// interior cells from their west and north neighbours.
JointDistribution joint_P(int m, double a, int k_max);

// Arc endpoint distribution for a general nonnegative weight function with
// stationary mean weight <f> (as produced by vdd_general / solve_mean_weight).
JointDistribution joint_general(const WeightFunction& f, int m, double mean_weight, int k_max);

// Arc endpoint distribution of the linear-weight L(m, s) model.
JointDistribution joint_L(int m, double s, int k_max);

// Edge endpoint distribution Theta = (Q + Q^T) / 2 of an arc distribution.
JointDistribution edge_from_arc(const JointDistribution& arc);

}  // namespace pagraph
