#include <doctest.h>

#include <cmath>
#include <string>

#include "pagraph/exact_vdd.hpp"
#include "pagraph/mean_field.hpp"
#include "pagraph/stats.hpp"

using namespace pagraph;

TEST_CASE("mean-field degree growth") {
    CHECK(meanfield_degree(3, 1.5, 7, 7) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(meanfield_degree(2, 0.0, 1, 16) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(meanfield_degree(2, 12.0, 1, 256) == doctest::Approx(16.0).epsilon(1e-13));

    // nondecreasing in t
    double prev = 0.0;
    for (double t = 5; t <= 500; t += 5) {
        const double k = meanfield_degree(2, -1.0, 5, t);
        CHECK(k >= prev);
        prev = k;
    }
    CHECK_THROWS_AS(meanfield_degree(2, 0.0, 10, 5), std::domain_error);
    CHECK_THROWS_AS(meanfield_degree(2, -2.0, 1, 5), std::domain_error);
}

TEST_CASE("mean-field density values") {
    CHECK(meanfield_vdd(2, 0.0, 10) == doctest::Approx(0.008).epsilon(1e-14));
    // (2m+s)/m = 1.5, (m+s)^{...} = 1, (k+s)^{-2.5} with k+s = 99
    CHECK(meanfield_vdd(2, -1.0, 100) ==
          doctest::Approx(1.5 * std::pow(99.0, -2.5)).epsilon(1e-14));
    CHECK(meanfield_vdd(3, 0.0, 7) == doctest::Approx(2.0 * 9.0 / 343.0).epsilon(1e-13));
    CHECK_THROWS_AS(meanfield_vdd(2, -1.0, 1), std::domain_error);
}

TEST_CASE("density is the derivative of the distribution function") {
    for (auto [m, s] : {std::pair{2.0, 0.0}, {2.0, -1.0}, {3.0, 4.5}}) {
        for (double k : {5.0, 20.0, 300.0}) {
            const double h = 1e-4 * k;
            const double fd = (meanfield_cdf(m, s, k + h) - meanfield_cdf(m, s, k - h)) / (2 * h);
            CHECK(meanfield_vdd(m, s, k) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
    // a distribution function: increasing, 1 at infinity
    CHECK(meanfield_cdf(2, 0.0, 2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(meanfield_cdf(2, 0.0, 1e9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(meanfield_cdf(2, 0.0, 50) > meanfield_cdf(2, 0.0, 10));
}

TEST_CASE("alpha <-> s conversion") {
    CHECK(alpha_to_s(2.0682, 2.1093) == doctest::Approx(-1.9655).epsilon(3e-4));
    CHECK(alpha_to_s(3.0, 7.0) == 0.0);
    CHECK(alpha_to_s(4.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s_to_alpha(0.0, 2.0) == 3.0);
    CHECK(s_to_alpha(-1.0, 2.0) == doctest::Approx(2.5).epsilon(1e-15));

    try {
        alpha_to_s(2.0, 2.0);
        FAIL("alpha = 2 must be rejected");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("unattainable") != std::string::npos);
    }
}

TEST_CASE("asymptotic classification") {
    const auto ba = classify(ModelSpec::linear(IncrementSpec::fixed(2), 0.0));
    CHECK(std::get<PowerLaw>(ba).alpha == doctest::Approx(3.0));

    const auto heavy = classify(ModelSpec::linear(IncrementSpec::fixed(2), -1.0));
    CHECK(std::get<PowerLaw>(heavy).alpha == doctest::Approx(2.5));

    CHECK(std::holds_alternative<Exponential>(
        classify(ModelSpec::constant_weight(IncrementSpec::fixed(2)))));
    CHECK(std::holds_alternative<Exponential>(classify(ModelSpec::hybrid(3, 1.0))));

    const auto hyb = classify(ModelSpec::hybrid(2, 0.75));
    CHECK(std::get<PowerLaw>(hyb).alpha == doctest::Approx(9.0));  // s = 12, m = 2

    // tabulated weights classify by their tail displacement only
    const auto tab = classify(ModelSpec::general(
        WeightFunction::tabulated({0.0, 0.0, 0.0, 1.38802, 2.40613, 5.28966, 6.67, 6.71098,
                                   7.79545, 8.10619},
                                  -1.9655, 11),
        IncrementSpec::stochastic({{1, 0.34145},
                                   {2, 0.42246},
                                   {3, 0.09664},
                                   {4, 0.09433},
                                   {5, 0.01504},
                                   {6, 0.03008}})));
    CHECK(std::get<PowerLaw>(tab).alpha == doctest::Approx(3.0 - 1.9655 / 2.10929).epsilon(1e-10));
}

TEST_CASE("exact tails decay at the mean-field rate") {
    // least-squares slope of the exact distribution vs -(3 + s/m)
    for (auto [m, s] : {std::pair{2, -1.0}, {2, 0.0}, {1, 0.5}, {3, 6.0}}) {
        const auto d = vdd_L(m, s, 10000);
        const double slope = loglog_slope(d, 100, 10000);
        CHECK(slope == doctest::Approx(-(3.0 + s / m)).epsilon(0.02));
    }
    // ratio trend Q_k / Q_2k -> 2^{3 + s/m}
    const auto d = vdd_L(2, -1.0, 4000);
    CHECK(d[1000] / d[2000] == doctest::Approx(std::pow(2.0, 2.5)).epsilon(0.01));
    CHECK(meanfield_vdd(2, -1.0, 1000) / meanfield_vdd(2, -1.0, 2000) ==
          doctest::Approx(std::pow(2.0, 2.5)).epsilon(0.01));
}
