#pragma once

#include <cstddef>
#include <vector>

#include "pagraph/rng.hpp"

namespace pagraph {

// Dynamically weighted sampler over vertex indices: a Fenwick tree of weights
// supporting point updates and weight-proportional draws in O(log n).
// Zero-weight entries are never drawn.
class WeightedSampler {
public:
    explicit WeightedSampler(std::size_t capacity = 0);

    // Appends an entry; index = previous size(). Grows the tree if needed.
    void push_back(double weight);
    void set(std::size_t i, double weight);
    double weight(std::size_t i) const { return weights_[i]; }
    double total_weight() const;
    std::size_t size() const { return size_; }

    // Index i with probability weight(i)/total_weight(). Throws when the
    // total weight is zero (no attachable entry).
    std::size_t sample(Rng& rng) const;

private:
    void rebuild(std::size_t capacity);
    void add(std::size_t i, double delta);

    std::size_t size_ = 0;
    std::vector<double> weights_;  // plain copy, for exact reads
    std::vector<double> tree_;     // 1-based Fenwick partial sums
    std::size_t top_bit_ = 0;      // largest power of two <= tree capacity
};

}  // namespace pagraph
