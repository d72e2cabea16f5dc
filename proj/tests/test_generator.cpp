#include <doctest.h>

#include <cmath>
#include <map>

#include "pagraph/exact_vdd.hpp"
#include "pagraph/generator.hpp"
#include "pagraph/joint_distribution.hpp"
#include "pagraph/stats.hpp"

using namespace pagraph;

namespace {

const IncrementSpec kSec8Increments = IncrementSpec::stochastic(
    {{1, 0.34145}, {2, 0.42246}, {3, 0.09664}, {4, 0.09433}, {5, 0.01504}, {6, 0.03008}});

}  // namespace

TEST_CASE("auto seeds") {
    const auto g2 = make_seed(AutoSeed{}, ModelSpec::linear(IncrementSpec::fixed(2), 0.0));
    CHECK(g2.n() == 5);
    CHECK(g2.arc_count() == 10);  // K_5: edges = m * vertices
    for (int d : g2.degree)
        CHECK(d == 4);

    const auto g1 = make_seed(AutoSeed{}, ModelSpec::linear(IncrementSpec::fixed(1), 0.0));
    CHECK(g1.n() == 3);
    CHECK(g1.arc_count() == 3);

    // stochastic mean 2.1...: complete graph on 2*ceil(m)+1 = 7
    const auto g8 = make_seed(AutoSeed{},
                              ModelSpec::linear(kSec8Increments, 0.0));
    CHECK(g8.n() == 7);
    CHECK(g8.arc_count() == 21);
}

TEST_CASE("explicit seeds") {
    const auto g = make_seed(ExplicitSeed{{{0, 1}}}, ModelSpec::linear(IncrementSpec::fixed(1), 0.0));
    CHECK(g.n() == 2);
    CHECK(g.arc_count() == 1);
    CHECK_THROWS_AS(make_seed(ExplicitSeed{}, ModelSpec::linear(IncrementSpec::fixed(1), 0.0)),
                    std::invalid_argument);
    // vertex 1 isolated
    CHECK_THROWS_AS(make_seed(ExplicitSeed{{{0, 2}}}, ModelSpec::linear(IncrementSpec::fixed(1), 0.0)),
                    std::invalid_argument);
}

TEST_CASE("increment size draws") {
    Rng rng(3);
    CHECK(draw_increment_size(IncrementSpec::fixed(3), rng) == 3);
    CHECK(draw_increment_size(IncrementSpec::stochastic({{1, 1.0}}), rng) == 1);

    double mean = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i)
        mean += draw_increment_size(kSec8Increments, rng);
    mean /= n;
    CHECK(mean == doctest::Approx(2.1093).epsilon(0.005 / 2.1093));
}

TEST_CASE("growth is deterministic and structurally sound") {
    const auto model = ModelSpec::linear(IncrementSpec::fixed(2), 0.0);
    const auto a = grow(model, 5000, 12345);
    const auto b = grow(model, 5000, 12345);
    CHECK(a.arcs == b.arcs);
    const auto c = grow(model, 5000, 12346);
    CHECK(a.arcs != c.arcs);

    // degree bookkeeping: sum of degrees = 2 |arcs|
    long long deg_sum = 0;
    for (int d : a.degree)
        deg_sum += d;
    CHECK(deg_sum == 2 * static_cast<long long>(a.arc_count()));

    // every non-seed vertex emits exactly its increment of arcs
    std::map<int, int> out_arcs;
    for (const auto& [src, tgt] : a.arcs)
        ++out_arcs[src];
    for (int v = 5; v < 5000; ++v)
        CHECK(out_arcs[v] == 2);

    // no self-loops
    for (const auto& [src, tgt] : a.arcs)
        CHECK(src != tgt);

    // target_n equal to the seed size leaves the seed untouched
    const auto seed_only = grow(model, 5, 1);
    CHECK(seed_only.arc_count() == 10);
}

TEST_CASE("distinct-target mode removes parallel arcs") {
    const auto model = ModelSpec::linear(IncrementSpec::fixed(3), 0.0);
    GrowOptions opt;
    opt.distinct_targets = true;
    const auto g = grow(model, 3000, 777, opt);
    std::map<std::pair<int, int>, int> seen;
    for (const auto& [src, tgt] : g.arcs)
        if (src >= 7)  // seed arcs are unique already
            CHECK(++seen[{src, tgt}] == 1);
}

TEST_CASE("histogram primitives") {
    GrowingGraph tiny;
    tiny.arcs = {{0, 1}};
    tiny.degree = {1, 1};
    const auto d = degree_histogram(tiny);
    CHECK(d.k_min() == 1);
    CHECK(d[1] == 1.0);
    const auto j = arc_endpoint_histogram(tiny, 10);
    CHECK(j.at(1, 1) == 1.0);

    const auto k5 = make_seed(AutoSeed{}, ModelSpec::linear(IncrementSpec::fixed(2), 0.0));
    const auto dk5 = degree_histogram(k5);
    CHECK(dk5[4] == 1.0);
}

TEST_CASE("empirical degree frequencies track the exact distribution") {
    const auto model = ModelSpec::linear(IncrementSpec::fixed(2), 0.0);
    std::vector<double> counts;
    double total = 0.0;
    for (int rep = 0; rep < 4; ++rep) {
        const auto g = grow(model, 30000, replication_seed(2024, rep));
        for (int d : g.degree) {
            if (counts.size() <= static_cast<std::size_t>(d))
                counts.resize(static_cast<std::size_t>(d) + 1, 0.0);
            counts[static_cast<std::size_t>(d)] += 1.0;
        }
        total += static_cast<double>(g.n());
    }
    CHECK(counts[2] / total == doctest::Approx(0.5).epsilon(0.01));

    std::vector<double> q(counts.begin() + 2, counts.end());
    for (double& v : q)
        v /= total;
    const DegreeDistribution emp(2, std::move(q));
    CHECK(total_variation(emp, vdd_L(2, 0.0, 30000)) < 0.02);
}

TEST_CASE("hybrid growth matches its linear twin empirically") {
    const int n = 30000;
    auto empirical = [&](const ModelSpec& model, std::uint64_t seed) {
        const auto g = grow(model, n, seed);
        return degree_histogram(g);
    };
    const auto emp_p = empirical(ModelSpec::hybrid(2, 0.75), 501);
    const auto emp_l = empirical(ModelSpec::linear(IncrementSpec::fixed(2), 12.0), 502);
    const auto exact = vdd_P(2, 0.75, n);
    CHECK(total_variation(emp_p, exact) < 0.02);
    CHECK(total_variation(emp_l, exact) < 0.02);
    CHECK(total_variation(emp_p, emp_l) < 0.02);
}

TEST_CASE("negative displacement goes through the weight tree") {
    const auto model = ModelSpec::linear(IncrementSpec::fixed(2), -1.0);
    const auto g = grow(model, 30000, 99);
    const auto emp = degree_histogram(g);
    CHECK(total_variation(emp, vdd_L(2, -1.0, 30000)) < 0.02);
}

TEST_CASE("general tabulated weights grow (calibrated model)") {
    const auto f = WeightFunction::tabulated(
        {0.0, 0.0, 0.0, 1.38802, 2.40613, 5.28966, 6.67, 6.71098, 7.79545, 8.10619}, -1.9655, 11);
    const auto model = ModelSpec::general(f, kSec8Increments);
    const auto g = grow(model, 20000, 4242);
    const auto emp = degree_histogram(g);
    // zero-weight degrees are never attached to, so their mass stays at the
    // arrival probabilities
    CHECK(emp[1] == doctest::Approx(0.34145).epsilon(0.05));
    CHECK(emp[2] == doctest::Approx(0.42246).epsilon(0.05));
    // the self-consistent solution is what the process realizes
    const auto self = vdd_stochastic(f, kSec8Increments, 20000, MeanWeightPolicy::SelfConsistent);
    const auto pinned = vdd_stochastic(f, kSec8Increments, 20000, MeanWeightPolicy::TailPinned);
    CHECK(total_variation(emp, self) < total_variation(emp, pinned));
    CHECK(total_variation(emp, pinned) < 0.02);
}
