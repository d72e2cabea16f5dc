#pragma once

#include <optional>
#include <variant>
#include <vector>

namespace pagraph {

// f(k) = k + s. The displacement s may be negative; whether a given s is
// admissible depends on the smallest reachable degree, which only the model
// (via its increment spec) knows, so range checks happen there and at
// evaluation time.
struct LinearWeight {
    double s = 0.0;
};

// f(k) = 1, the s -> infinity limit of the linear family.
struct ConstantWeight {};

// Explicit head values f(k_min) .. f(k_head - 1), then a linear tail
// f(k) = k + tail_s for k >= k_head. Zero head values are legal: a
// zero-weight degree is simply never attached to.
struct TabulatedWeight {
    int k_min = 1;
    int k_head = 1;
    std::vector<double> head;  // size k_head - k_min
    double tail_s = 0.0;
};

class WeightFunction {
public:
    static WeightFunction linear(double s) { return WeightFunction{LinearWeight{s}}; }
    static WeightFunction constant() { return WeightFunction{ConstantWeight{}}; }
    static WeightFunction tabulated(std::vector<double> head, double tail_s, int k_head,
                                    int k_min = 1);

    // f(k). Throws std::domain_error when the linear part is non-positive
    // at k (the attachment rule is then undefined).
    double operator()(int k) const;

    bool is_linear() const { return std::holds_alternative<LinearWeight>(v_); }
    bool is_constant() const { return std::holds_alternative<ConstantWeight>(v_); }
    bool is_tabulated() const { return std::holds_alternative<TabulatedWeight>(v_); }

    // Displacement of the linear variant; throws for other variants.
    double linear_displacement() const;

    // The displacement governing the large-k behaviour: s for linear, tail_s
    // for tabulated, nothing for constant weights (exponential class).
    std::optional<double> asymptotic_displacement() const;

    const TabulatedWeight& tabulated_parts() const;

private:
    template <typename V>
    explicit WeightFunction(V v) : v_(std::move(v)) {}

    std::variant<LinearWeight, ConstantWeight, TabulatedWeight> v_;
};

// Attachment weight of a degree-k vertex under f (rule form p_i ~ f(k_i)).
double eval_weight(const WeightFunction& f, int k);

}  // namespace pagraph
