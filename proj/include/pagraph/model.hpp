#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pagraph/weight_function.hpp"

namespace pagraph {

// Number of outgoing arcs carried by each new vertex: either a fixed m or a
// random x ~ r over a contiguous range g..h (mean m = sum x r_x).
class IncrementSpec {
public:
    struct Fixed {
        int m = 1;
    };
    struct Stochastic {
        int g = 1;              // smallest arc count
        std::vector<double> r;  // r[i] = P(x = g + i), sums to 1
        double mean = 0.0;
    };

    static IncrementSpec fixed(int m);
    static IncrementSpec stochastic(int g, std::vector<double> r);
    static IncrementSpec stochastic(std::vector<std::pair<int, double>> entries);

    bool is_fixed() const { return std::holds_alternative<Fixed>(v_); }
    double mean() const;
    int min_arcs() const;
    int max_arcs() const;
    // P(x = arcs); zero outside the support.
    double probability(int arcs) const;
    const Stochastic& stochastic_parts() const;

private:
    template <typename V>
    explicit IncrementSpec(V v) : v_(std::move(v)) {}
    std::variant<Fixed, Stochastic> v_;
};

struct AutoSeed {};
struct CompleteGraphSeed {
    int n0 = 3;
};
struct ExplicitSeed {
    std::vector<std::pair<int, int>> arcs;
};
using SeedPolicy = std::variant<AutoSeed, CompleteGraphSeed, ExplicitSeed>;

enum class AttachmentRule {
    Linear,  // p_i ~ f(k_i), f linear or constant
    Hybrid,  // per arc: uniform with prob a, else ~ degree
    General, // p_i ~ f(k_i), arbitrary nonnegative f
};

// A full growth model. Immutable after construction; construction validates
// every cross-field constraint (hybrid needs a fixed increment, displacements
// must keep all reachable degrees attachable, ...).
class ModelSpec {
public:
    static ModelSpec linear(IncrementSpec inc, double s, SeedPolicy seed = AutoSeed{});
    static ModelSpec constant_weight(IncrementSpec inc, SeedPolicy seed = AutoSeed{});
    static ModelSpec hybrid(int m, double a, SeedPolicy seed = AutoSeed{});
    static ModelSpec general(WeightFunction f, IncrementSpec inc, SeedPolicy seed = AutoSeed{});

    AttachmentRule rule() const { return rule_; }
    const WeightFunction& weight() const { return weight_; }
    // Mixing probability of the uniform branch; only meaningful for Hybrid.
    double mixing_a() const { return a_; }
    const IncrementSpec& increment() const { return increment_; }
    const SeedPolicy& seed_policy() const { return seed_; }

    std::string to_json() const;
    static ModelSpec from_json(const std::string& text);

private:
    ModelSpec(AttachmentRule rule, WeightFunction f, double a, IncrementSpec inc, SeedPolicy seed)
        : rule_(rule), weight_(std::move(f)), a_(a), increment_(std::move(inc)),
          seed_(std::move(seed)) {}

    AttachmentRule rule_;
    WeightFunction weight_;
    double a_;
    IncrementSpec increment_;
    SeedPolicy seed_;
};

// P(m, a) -> equivalent L weight function: f(k) = k + 2am/(1-a) for a < 1,
// the constant function for a = 1 (the s -> infinity limit).
WeightFunction p_to_l(double m, double a);

// L(m, s) -> mixing parameter a = s/(s + 2m) of the equivalent P-graph, or
// nullopt when s < 0 (no P-graph exists). Throws for s <= -m.
std::optional<double> l_to_p(double m, double s);

}  // namespace pagraph
