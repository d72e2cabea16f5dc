#include "pagraph/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace pagraph {

WeightedSampler::WeightedSampler(std::size_t capacity) {
    rebuild(capacity);
}

void WeightedSampler::rebuild(std::size_t capacity) {
    if (capacity < 1)
        capacity = 1;
    tree_.assign(capacity + 1, 0.0);
    top_bit_ = 1;
    while (top_bit_ * 2 <= capacity)
        top_bit_ *= 2;
    for (std::size_t i = 0; i < size_; ++i)
        add(i, weights_[i]);
}

void WeightedSampler::add(std::size_t i, double delta) {
    for (std::size_t j = i + 1; j < tree_.size(); j += j & (0 - j))
        tree_[j] += delta;
}

void WeightedSampler::push_back(double w) {
    if (!(w >= 0.0))
        throw std::invalid_argument("sampler: weights must be >= 0");
    weights_.push_back(w);
    ++size_;
    if (size_ + 1 > tree_.size())
        rebuild(tree_.size() * 2);
    else
        add(size_ - 1, w);
}

void WeightedSampler::set(std::size_t i, double w) {
    if (i >= size_)
        throw std::out_of_range("sampler: index out of range");
    if (!(w >= 0.0))
        throw std::invalid_argument("sampler: weights must be >= 0");
    add(i, w - weights_[i]);
    weights_[i] = w;
}

double WeightedSampler::total_weight() const {
    double total = 0.0;
    // prefix(size_): sum of tree nodes covering [1, size_]
    for (std::size_t j = size_; j > 0; j -= j & (0 - j))
        total += tree_[j];
    return total;
}

std::size_t WeightedSampler::sample(Rng& rng) const {
    const double total = total_weight();
    if (!(total > 0.0))
        throw std::runtime_error("sampler: total weight is zero, nothing attachable");
    double u = rng.uniform01() * total;
    if (!(u < total))
        u = std::nextafter(total, 0.0);

    // Classic Fenwick descent: find the smallest index whose prefix sum
    // exceeds u. Empty (zero-weight) slots have empty prefix intervals.
    std::size_t pos = 0;
    for (std::size_t bit = top_bit_; bit != 0; bit >>= 1) {
        const std::size_t next = pos + bit;
        if (next < tree_.size() && tree_[next] <= u) {
            u -= tree_[next];
            pos = next;
        }
    }
    // pos entries lie strictly below the draw. Rounding in the partial sums
    // can park the descent on an empty (zero-weight) slot boundary; the draw
    // belongs to the next occupied slot.
    if (pos >= size_)
        pos = size_ - 1;
    if (weights_[pos] == 0.0) {
        std::size_t fwd = pos + 1;
        while (fwd < size_ && weights_[fwd] == 0.0)
            ++fwd;
        if (fwd < size_) {
            pos = fwd;
        } else {
            while (pos > 0 && weights_[pos] == 0.0)
                --pos;
        }
    }
    if (weights_[pos] == 0.0)
        throw std::runtime_error("sampler: no positive weight found");
    return pos;
}

}  // namespace pagraph
