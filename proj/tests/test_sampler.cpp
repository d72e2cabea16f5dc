#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pagraph/rng.hpp"
#include "pagraph/sampler.hpp"

using namespace pagraph;

namespace {

// 0.999 quantile of chi-square with the given dof (draws with p < 0.001 fail).
double chi2_crit_999(int dof) {
    switch (dof) {
    case 1: return 10.827566170662733;
    case 2: return 13.815510557964274;
    case 3: return 16.26623619623813;
    default: FAIL("no frozen critical value for dof"); return 0;
    }
}

}  // namespace

TEST_CASE("proportional draw frequencies") {
    WeightedSampler s;
    for (double w : {1.0, 0.0, 3.0})
        s.push_back(w);
    CHECK(s.total_weight() == doctest::Approx(4.0));

    Rng rng(42);
    std::vector<int> hits(3, 0);
    const int n = 200000;
    for (int i = 0; i < n; ++i)
        ++hits[s.sample(rng)];
    CHECK(hits[1] == 0);  // zero weight is never drawn
    CHECK(hits[0] / double(n) == doctest::Approx(0.25).epsilon(0.02));
    CHECK(hits[2] / double(n) == doctest::Approx(0.75).epsilon(0.02));
}

TEST_CASE("single positive weight always wins") {
    WeightedSampler s;
    s.push_back(0.0);
    s.push_back(0.0);
    s.push_back(2.5);
    s.push_back(0.0);
    Rng rng(7);
    for (int i = 0; i < 1000; ++i)
        CHECK(s.sample(rng) == 2);
}

TEST_CASE("zero total weight raises") {
    WeightedSampler s;
    s.push_back(0.0);
    Rng rng(1);
    CHECK_THROWS_AS(s.sample(rng), std::runtime_error);
}

TEST_CASE("chi-square goodness of fit over [1,2,3,4]") {
    const std::vector<double> w{1.0, 2.0, 3.0, 4.0};
    const double crit = chi2_crit_999(3);
    int passes = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        WeightedSampler s;
        for (double v : w)
            s.push_back(v);
        Rng rng(replication_seed(1009, seed));
        std::vector<double> hits(4, 0.0);
        const int n = 100000;
        for (int i = 0; i < n; ++i)
            hits[s.sample(rng)] += 1.0;
        double stat = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double expect = n * w[i] / 10.0;
            stat += (hits[i] - expect) * (hits[i] - expect) / expect;
        }
        if (stat < crit)
            ++passes;
    }
    CHECK(passes >= 19);
}

TEST_CASE("updates keep the tree consistent") {
    WeightedSampler s;
    Rng rng(99);
    std::vector<double> mirror;
    for (int i = 0; i < 500; ++i) {
        mirror.push_back(rng.uniform01());
        s.push_back(mirror.back());
    }
    for (int step = 0; step < 2000; ++step) {
        const auto i = static_cast<std::size_t>(rng.below(mirror.size()));
        const double w = step % 5 == 0 ? 0.0 : 10.0 * rng.uniform01();
        mirror[i] = w;
        s.set(i, w);
    }
    double total = 0.0;
    for (double v : mirror)
        total += v;
    CHECK(s.total_weight() == doctest::Approx(total).epsilon(1e-12));
    for (std::size_t i = 0; i < mirror.size(); ++i)
        CHECK(s.weight(i) == mirror[i]);
    // draws only land on positive weights
    for (int i = 0; i < 5000; ++i)
        CHECK(mirror[s.sample(rng)] > 0.0);
}

TEST_CASE("growth past the initial capacity") {
    WeightedSampler s(2);
    for (int i = 0; i < 100; ++i)
        s.push_back(1.0);
    CHECK(s.size() == 100);
    CHECK(s.total_weight() == doctest::Approx(100.0));
    Rng rng(5);
    std::vector<int> hits(100, 0);
    for (int i = 0; i < 100000; ++i)
        ++hits[s.sample(rng)];
    for (int h : hits)
        CHECK(h > 500);  // roughly uniform
}
