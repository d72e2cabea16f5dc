#include "pagraph/generator.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

#include "pagraph/sampler.hpp"

namespace pagraph {

namespace {

GrowingGraph complete_graph(int n0) {
    if (n0 < 2)
        throw std::invalid_argument("seed: a complete seed graph needs at least 2 vertices");
    GrowingGraph g;
    g.degree.assign(static_cast<std::size_t>(n0), n0 - 1);
    g.arcs.reserve(static_cast<std::size_t>(n0) * (n0 - 1) / 2);
    for (int j = 1; j < n0; ++j)
        for (int i = 0; i < j; ++i)
            g.arcs.emplace_back(j, i);
    return g;
}

}  // namespace

GrowingGraph make_seed(const SeedPolicy& policy, const ModelSpec& model) {
    if (std::holds_alternative<AutoSeed>(policy)) {
        const auto& inc = model.increment();
        const int n0 = inc.is_fixed()
                           ? 2 * inc.min_arcs() + 1
                           : 2 * static_cast<int>(std::ceil(inc.mean())) + 1;
        return complete_graph(n0);
    }
    if (const auto* c = std::get_if<CompleteGraphSeed>(&policy))
        return complete_graph(c->n0);

    const auto& e = std::get<ExplicitSeed>(policy);
    if (e.arcs.empty())
        throw std::invalid_argument("seed: explicit seed has no arcs");
    int max_vertex = 0;
    for (const auto& [u, v] : e.arcs) {
        if (u < 0 || v < 0)
            throw std::invalid_argument("seed: negative vertex index");
        max_vertex = std::max({max_vertex, u, v});
    }
    GrowingGraph g;
    g.arcs = e.arcs;
    g.degree.assign(static_cast<std::size_t>(max_vertex) + 1, 0);
    for (const auto& [u, v] : e.arcs) {
        ++g.degree[static_cast<std::size_t>(u)];
        ++g.degree[static_cast<std::size_t>(v)];
    }
    for (std::size_t v = 0; v < g.degree.size(); ++v)
        if (g.degree[v] == 0)
            throw std::invalid_argument("seed: vertex " + std::to_string(v) + " is isolated");
    return g;
}

int draw_increment_size(const IncrementSpec& inc, Rng& rng) {
    if (inc.is_fixed())
        return inc.min_arcs();
    const auto& st = inc.stochastic_parts();
    const double u = rng.uniform01();
    double cum = 0.0;
    for (std::size_t i = 0; i < st.r.size(); ++i) {
        cum += st.r[i];
        if (u < cum)
            return st.g + static_cast<int>(i);
    }
    return st.g + static_cast<int>(st.r.size()) - 1;
}

namespace {

enum class DrawKind {
    UniformVertex,  // constant weight: every vertex equally likely
    EndpointMix,    // mixture of uniform-vertex and uniform-arc-endpoint draws
    Tree,           // weight-proportional via prefix-sum tree
};

struct TargetDrawer {
    DrawKind kind;
    const GrowingGraph& g;
    WeightedSampler& tree;
    // EndpointMix state, frozen per increment.
    double p_uniform = 0.0;
    std::size_t n_before = 0;
    std::size_t arcs_before = 0;

    int operator()(Rng& rng) const {
        switch (kind) {
        case DrawKind::UniformVertex:
            return static_cast<int>(rng.below(n_before));
        case DrawKind::EndpointMix: {
            if (rng.uniform01() < p_uniform)
                return static_cast<int>(rng.below(n_before));
            const std::size_t end = rng.below(2 * arcs_before);
            const auto& arc = g.arcs[end >> 1];
            return (end & 1) ? arc.second : arc.first;
        }
        case DrawKind::Tree:
            return static_cast<int>(tree.sample(rng));
        }
        throw std::logic_error("unreachable");
    }
};

}  // namespace

GrowingGraph grow(const ModelSpec& model, std::size_t target_n, std::uint64_t rng_seed,
                  const GrowOptions& options) {
    GrowingGraph g = make_seed(model.seed_policy(), model);
    if (target_n < g.n())
        throw std::invalid_argument("grow: target_n is smaller than the seed graph");

    Rng rng(splitmix64(rng_seed));
    const auto& inc = model.increment();
    const WeightFunction& f = model.weight();

    DrawKind kind;
    double linear_s = 0.0;
    switch (model.rule()) {
    case AttachmentRule::Hybrid:
        kind = DrawKind::EndpointMix;
        break;
    case AttachmentRule::Linear:
        if (f.is_constant()) {
            kind = DrawKind::UniformVertex;
        } else {
            linear_s = f.linear_displacement();
            kind = linear_s >= 0.0 ? DrawKind::EndpointMix : DrawKind::Tree;
        }
        break;
    case AttachmentRule::General:
    default:
        kind = DrawKind::Tree;
        break;
    }

    WeightedSampler tree(kind == DrawKind::Tree ? target_n : 0);
    if (kind == DrawKind::Tree)
        for (std::size_t v = 0; v < g.n(); ++v)
            tree.push_back(f(g.degree[v]));

    std::vector<int> targets;
    while (g.n() < target_n) {
        const int x = draw_increment_size(inc, rng);
        const std::size_t n0 = g.n();
        const std::size_t r0 = g.arc_count();
        if (options.distinct_targets && static_cast<std::size_t>(x) > n0)
            throw std::runtime_error("grow: increment larger than the graph in distinct-target mode");

        TargetDrawer draw{kind, g, tree, 0.0, n0, r0};
        if (kind == DrawKind::EndpointMix) {
            if (model.rule() == AttachmentRule::Hybrid)
                draw.p_uniform = model.mixing_a();
            else  // linear s >= 0 splits as degree-part 2R, uniform part sN
                draw.p_uniform = linear_s * static_cast<double>(n0) /
                                 (2.0 * static_cast<double>(r0) + linear_s * static_cast<double>(n0));
        }

        // All x targets are drawn against the pre-increment state; repeats
        // allowed unless distinct-target mode asks for redraws.
        targets.clear();
        for (int arc = 0; arc < x; ++arc) {
            int t = draw(rng);
            if (options.distinct_targets) {
                int attempts = 0;
                while (std::find(targets.begin(), targets.end(), t) != targets.end()) {
                    if (++attempts > 100000)
                        throw std::runtime_error("grow: cannot find a distinct target");
                    t = draw(rng);
                }
            }
            targets.push_back(t);
        }

        const int v = static_cast<int>(n0);
        for (int t : targets) {
            g.arcs.emplace_back(v, t);
            ++g.degree[static_cast<std::size_t>(t)];
        }
        g.degree.push_back(x);
        if (kind == DrawKind::Tree) {
            for (int t : targets)
                tree.set(static_cast<std::size_t>(t), f(g.degree[static_cast<std::size_t>(t)]));
            tree.push_back(f(x));
        }
    }
    return g;
}

std::vector<double> replicated_degree_counts(const ModelSpec& model, std::size_t target_n,
                                             std::uint64_t base_seed, int replications,
                                             const GrowOptions& options) {
    if (replications < 1)
        throw std::invalid_argument("replicated_degree_counts: need at least one replication");
    auto count_one = [&](int rep) {
        const GrowingGraph g = grow(model, target_n, replication_seed(base_seed, rep), options);
        std::vector<double> local;
        for (int d : g.degree) {
            if (local.size() <= static_cast<std::size_t>(d))
                local.resize(static_cast<std::size_t>(d) + 1, 0.0);
            local[static_cast<std::size_t>(d)] += 1.0;
        }
        return local;
    };

    std::vector<double> counts;
    auto merge = [&counts](const std::vector<double>& local) {
        if (counts.size() < local.size())
            counts.resize(local.size(), 0.0);
        for (std::size_t d = 0; d < local.size(); ++d)
            counts[d] += local[d];
    };

    // Waves of futures, merged in replication order: counts are integral in
    // doubles, so the grouping cannot change the result either way.
    const int workers =
        std::min(replications, static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
    for (int base = 0; base < replications; base += workers) {
        const int end = std::min(replications, base + workers);
        std::vector<std::future<std::vector<double>>> wave;
        wave.reserve(static_cast<std::size_t>(end - base));
        for (int rep = base; rep < end; ++rep)
            wave.push_back(std::async(std::launch::async, count_one, rep));
        for (auto& f : wave)
            merge(f.get());
    }
    return counts;
}

DegreeDistribution degree_histogram(const GrowingGraph& g) {
    if (g.n() == 0)
        throw std::invalid_argument("degree_histogram: empty graph");
    int k_min = g.degree[0], k_max = g.degree[0];
    for (int d : g.degree) {
        k_min = std::min(k_min, d);
        k_max = std::max(k_max, d);
    }
    if (k_min < 1)
        throw std::invalid_argument("degree_histogram: graph has an isolated vertex");
    std::vector<double> q(static_cast<std::size_t>(k_max - k_min + 1), 0.0);
    const double unit = 1.0 / static_cast<double>(g.n());
    for (int d : g.degree)
        q[static_cast<std::size_t>(d - k_min)] += unit;
    return DegreeDistribution(k_min, std::move(q));
}

JointDistribution arc_endpoint_histogram(const GrowingGraph& g, int k_max) {
    if (g.arc_count() == 0)
        throw std::invalid_argument("arc_endpoint_histogram: graph has no arcs");
    const int k_min = 1;
    const std::size_t w = static_cast<std::size_t>(k_max - k_min + 1);
    std::vector<double> q(w * w, 0.0);
    const double unit = 1.0 / static_cast<double>(g.arc_count());
    for (const auto& [src, tgt] : g.arcs) {
        const int dl = g.degree[static_cast<std::size_t>(src)];
        const int dk = g.degree[static_cast<std::size_t>(tgt)];
        if (dl <= k_max && dk <= k_max)
            q[static_cast<std::size_t>(dl - k_min) * w + static_cast<std::size_t>(dk - k_min)] +=
                unit;
    }
    return JointDistribution(JointDistribution::Kind::Arc, k_min, k_max, std::move(q));
}

}  // namespace pagraph
