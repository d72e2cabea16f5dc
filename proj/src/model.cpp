#include "pagraph/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace pagraph {

using nlohmann::json;

IncrementSpec IncrementSpec::fixed(int m) {
    if (m < 1)
        throw std::invalid_argument("increment: fixed m must be a positive integer");
    return IncrementSpec{Fixed{m}};
}

IncrementSpec IncrementSpec::stochastic(int g, std::vector<double> r) {
    if (g < 1)
        throw std::invalid_argument("increment: smallest arc count must be >= 1");
    if (r.empty())
        throw std::invalid_argument("increment: empty distribution");
    double total = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] >= 0.0))
            throw std::invalid_argument("increment: probabilities must be >= 0");
        total += r[i];
        mean += (g + static_cast<double>(i)) * r[i];
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("increment: probabilities must sum to 1");
    return IncrementSpec{Stochastic{g, std::move(r), mean}};
}

IncrementSpec IncrementSpec::stochastic(std::vector<std::pair<int, double>> entries) {
    if (entries.empty())
        throw std::invalid_argument("increment: empty distribution");
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].first == entries[i - 1].first)
            throw std::invalid_argument("increment: duplicate arc count");
    const int g = entries.front().first;
    const int h = entries.back().first;
    std::vector<double> r(static_cast<std::size_t>(h - g + 1), 0.0);
    for (const auto& [x, p] : entries)
        r[static_cast<std::size_t>(x - g)] = p;
    return stochastic(g, std::move(r));
}

double IncrementSpec::mean() const {
    if (const auto* f = std::get_if<Fixed>(&v_))
        return f->m;
    return std::get<Stochastic>(v_).mean;
}

int IncrementSpec::min_arcs() const {
    if (const auto* f = std::get_if<Fixed>(&v_))
        return f->m;
    return std::get<Stochastic>(v_).g;
}

int IncrementSpec::max_arcs() const {
    if (const auto* f = std::get_if<Fixed>(&v_))
        return f->m;
    const auto& st = std::get<Stochastic>(v_);
    return st.g + static_cast<int>(st.r.size()) - 1;
}

double IncrementSpec::probability(int arcs) const {
    if (const auto* f = std::get_if<Fixed>(&v_))
        return arcs == f->m ? 1.0 : 0.0;
    const auto& st = std::get<Stochastic>(v_);
    if (arcs < st.g || arcs > max_arcs())
        return 0.0;
    return st.r[static_cast<std::size_t>(arcs - st.g)];
}

const IncrementSpec::Stochastic& IncrementSpec::stochastic_parts() const {
    if (const auto* st = std::get_if<Stochastic>(&v_))
        return *st;
    throw std::logic_error("increment is not stochastic");
}

namespace {

void check_weight_covers_increment(const WeightFunction& f, const IncrementSpec& inc) {
    // Smallest reachable degree is the smallest increment size g; the rule
    // needs f(k) defined (linear part positive) for every k >= g.
    const int g = inc.min_arcs();
    if (f.is_linear() && !(g + f.linear_displacement() > 0.0))
        throw std::invalid_argument("model: displacement s <= -g makes degree-g weights non-positive");
    if (f.is_tabulated()) {
        const auto& tab = f.tabulated_parts();
        if (tab.k_min > g)
            throw std::invalid_argument("model: tabulated head must start at or below the smallest increment");
    }
}

}  // namespace

ModelSpec ModelSpec::linear(IncrementSpec inc, double s, SeedPolicy seed) {
    auto f = WeightFunction::linear(s);
    check_weight_covers_increment(f, inc);
    return ModelSpec(AttachmentRule::Linear, std::move(f), 0.0, std::move(inc), std::move(seed));
}

ModelSpec ModelSpec::constant_weight(IncrementSpec inc, SeedPolicy seed) {
    return ModelSpec(AttachmentRule::Linear, WeightFunction::constant(), 0.0, std::move(inc),
                     std::move(seed));
}

ModelSpec ModelSpec::hybrid(int m, double a, SeedPolicy seed) {
    if (!(a >= 0.0 && a <= 1.0))
        throw std::invalid_argument("model: hybrid mixing a must lie in [0, 1]");
    // P-graphs are defined for fixed increments only.
    auto inc = IncrementSpec::fixed(m);
    return ModelSpec(AttachmentRule::Hybrid, WeightFunction::linear(0.0), a, std::move(inc),
                     std::move(seed));
}

ModelSpec ModelSpec::general(WeightFunction f, IncrementSpec inc, SeedPolicy seed) {
    check_weight_covers_increment(f, inc);
    return ModelSpec(AttachmentRule::General, std::move(f), 0.0, std::move(inc), std::move(seed));
}

WeightFunction p_to_l(double m, double a) {
    if (!(m > 0.0))
        throw std::invalid_argument("p_to_l: m must be positive");
    if (!(a >= 0.0 && a <= 1.0))
        throw std::invalid_argument("p_to_l: a must lie in [0, 1]");
    if (a == 1.0)
        return WeightFunction::constant();
    return WeightFunction::linear(2.0 * a * m / (1.0 - a));
}

std::optional<double> l_to_p(double m, double s) {
    if (!(m > 0.0))
        throw std::invalid_argument("l_to_p: m must be positive");
    if (!(s > -m))
        throw std::domain_error("l_to_p: s must exceed -m");
    if (s < 0.0)
        return std::nullopt;  // no P-graph has a negative displacement
    return s / (s + 2.0 * m);
}

namespace {

json seed_to_json(const SeedPolicy& seed) {
    json j;
    if (std::holds_alternative<AutoSeed>(seed)) {
        j["type"] = "auto";
    } else if (const auto* c = std::get_if<CompleteGraphSeed>(&seed)) {
        j["type"] = "complete";
        j["n0"] = c->n0;
    } else {
        const auto& e = std::get<ExplicitSeed>(seed);
        j["type"] = "explicit";
        json arcs = json::array();
        for (const auto& [u, v] : e.arcs)
            arcs.push_back(json::array({u, v}));
        j["edges"] = std::move(arcs);
    }
    return j;
}

SeedPolicy seed_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "auto")
        return AutoSeed{};
    if (type == "complete")
        return CompleteGraphSeed{j.at("n0").get<int>()};
    if (type == "explicit") {
        ExplicitSeed e;
        for (const auto& arc : j.at("edges"))
            e.arcs.emplace_back(arc.at(0).get<int>(), arc.at(1).get<int>());
        return e;
    }
    throw std::invalid_argument("model json: unknown seed type '" + type + "'");
}

json increment_to_json(const IncrementSpec& inc) {
    json j;
    if (inc.is_fixed()) {
        j["fixed_m"] = inc.min_arcs();
    } else {
        const auto& st = inc.stochastic_parts();
        json r = json::array();
        for (std::size_t i = 0; i < st.r.size(); ++i)
            r.push_back(json::array({st.g + static_cast<int>(i), st.r[i]}));
        j["r"] = std::move(r);
    }
    return j;
}

IncrementSpec increment_from_json(const json& j) {
    if (j.contains("fixed_m"))
        return IncrementSpec::fixed(j.at("fixed_m").get<int>());
    std::vector<std::pair<int, double>> entries;
    for (const auto& row : j.at("r"))
        entries.emplace_back(row.at(0).get<int>(), row.at(1).get<double>());
    return IncrementSpec::stochastic(std::move(entries));
}

}  // namespace

std::string ModelSpec::to_json() const {
    json j;
    switch (rule_) {
    case AttachmentRule::Linear:
        if (weight_.is_constant()) {
            j["rule"] = "const";
        } else {
            j["rule"] = "L";
            j["s"] = weight_.linear_displacement();
        }
        break;
    case AttachmentRule::Hybrid:
        j["rule"] = "P";
        j["a"] = a_;
        break;
    case AttachmentRule::General: {
        j["rule"] = "general";
        const auto& tab = weight_.tabulated_parts();
        j["weight"] = {{"k_min", tab.k_min},
                       {"k_head", tab.k_head},
                       {"head", tab.head},
                       {"tail_s", tab.tail_s}};
        break;
    }
    }
    j["increment"] = increment_to_json(increment_);
    j["seed"] = seed_to_json(seed_);
    return j.dump(2);
}

ModelSpec ModelSpec::from_json(const std::string& text) {
    const json j = json::parse(text);
    const std::string rule = j.at("rule").get<std::string>();
    IncrementSpec inc = increment_from_json(j.at("increment"));
    SeedPolicy seed = j.contains("seed") ? seed_from_json(j.at("seed")) : SeedPolicy{AutoSeed{}};
    if (rule == "L")
        return ModelSpec::linear(std::move(inc), j.at("s").get<double>(), std::move(seed));
    if (rule == "const")
        return ModelSpec::constant_weight(std::move(inc), std::move(seed));
    if (rule == "P") {
        if (!inc.is_fixed())
            throw std::invalid_argument("model json: P rule requires a fixed increment");
        return ModelSpec::hybrid(inc.min_arcs(), j.at("a").get<double>(), std::move(seed));
    }
    if (rule == "general") {
        const json& w = j.at("weight");
        auto f = WeightFunction::tabulated(w.at("head").get<std::vector<double>>(),
                                           w.at("tail_s").get<double>(), w.at("k_head").get<int>(),
                                           w.value("k_min", 1));
        return ModelSpec::general(std::move(f), std::move(inc), std::move(seed));
    }
    throw std::invalid_argument("model json: unknown rule '" + rule + "'");
}

}  // namespace pagraph
