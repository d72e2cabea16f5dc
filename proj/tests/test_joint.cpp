#include <doctest.h>

#include <cmath>
#include <vector>

#include "pagraph/exact_vdd.hpp"
#include "pagraph/joint_distribution.hpp"

using namespace pagraph;

TEST_CASE("constant-weight joint entries, m = 1") {
    const auto j = joint_general(WeightFunction::constant(), 1, 1.0, 50);
    // Q_1 = 1/2: Q_{1,2} = 1 * (1/2) / (1 + 1*(1+1)) = 1/6
    CHECK(j.at(1, 2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    // Q_2 = 1/4: Q_{1,3} = (1/4 + 1/6) / 3 = 5/36
    CHECK(j.at(1, 3) == doctest::Approx(5.0 / 36.0).epsilon(1e-15));
    CHECK(j.at(1, 1) == 0.0);  // targets have degree > m
    CHECK(j.at(3, 1) == 0.0);
}

TEST_CASE("linear joint entry, m = 1, s = 0") {
    const auto j = joint_L(1, 0.0, 50);
    // Q_1 = 2/3; second branch gives Q_1/5
    CHECK(j.at(1, 2) == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("structural zeros") {
    const auto j = joint_P(2, 0.75, 60);
    for (int k = 1; k <= 60; ++k) {
        CHECK(j.at(1, k) == 0.0);  // l < m
        CHECK(j.at(k, 1) == 0.0);
        CHECK(j.at(k, 2) == 0.0);  // k <= m
    }
}

TEST_CASE("hybrid joint coincides with the general recurrence at a = 0 and a = 1") {
    const auto p0 = joint_P(2, 0.0, 300);
    const auto g0 = joint_general(WeightFunction::linear(0.0), 2, 4.0, 300);
    double worst = 0.0;
    for (int l = 2; l <= 300; ++l)
        for (int k = 2; k <= 300; ++k)
            worst = std::max(worst, std::abs(p0.at(l, k) - g0.at(l, k)));
    CHECK(worst < 1e-12);

    const auto p1 = joint_P(1, 1.0, 300);
    const auto g1 = joint_general(WeightFunction::constant(), 1, 1.0, 300);
    worst = 0.0;
    for (int l = 1; l <= 300; ++l)
        for (int k = 1; k <= 300; ++k)
            worst = std::max(worst, std::abs(p1.at(l, k) - g1.at(l, k)));
    CHECK(worst < 1e-12);
}

TEST_CASE("linear joint equals the general recurrence with f(k) = k + s") {
    const auto jl = joint_L(2, 0.0, 200);
    const auto jg = joint_general(WeightFunction::linear(0.0), 2, 4.0, 200);
    double worst = 0.0;
    for (int l = 2; l <= 200; ++l)
        for (int k = 2; k <= 200; ++k)
            worst = std::max(worst, std::abs(jl.at(l, k) - jg.at(l, k)));
    CHECK(worst < 1e-14);
}

TEST_CASE("hybrid and linear joints coincide under the parameter map") {
    for (auto [m, a] : {std::pair{2, 0.75}, {1, 0.5}}) {
        const double s = 2.0 * a * m / (1.0 - a);
        const auto jp = joint_P(m, a, 300);
        const auto jl = joint_L(m, s, 300);
        double worst = 0.0;
        for (int l = m; l <= 300; ++l)
            for (int k = m; k <= 300; ++k)
                worst = std::max(worst, std::abs(jp.at(l, k) - jl.at(l, k)));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("edge symmetrization") {
    const auto arc = joint_general(WeightFunction::constant(), 1, 1.0, 40);
    const auto edge = edge_from_arc(arc);
    CHECK(edge.kind() == JointDistribution::Kind::Edge);
    CHECK(edge.at(1, 2) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(edge.at(2, 1) == edge.at(1, 2));
    for (int l = 1; l <= 40; ++l)
        for (int k = 1; k <= 40; ++k)
            CHECK(edge.at(l, k) == edge.at(k, l));  // exact by construction

    // symmetric input is a fixed point
    const auto twice = edge_from_arc(
        JointDistribution(JointDistribution::Kind::Arc, edge.k_min(), edge.k_max(),
                          [&] {
                              std::vector<double> v;
                              for (int l = edge.k_min(); l <= edge.k_max(); ++l)
                                  for (int k = edge.k_min(); k <= edge.k_max(); ++k)
                                      v.push_back(edge.at(l, k));
                              return v;
                          }()));
    for (int l = 1; l <= 40; ++l)
        for (int k = 1; k <= 40; ++k)
            CHECK(twice.at(l, k) == edge.at(l, k));

    CHECK_THROWS_AS(edge_from_arc(edge), std::invalid_argument);
    const double total_arc = 1.0 - arc.tail_mass();
    const double total_edge = 1.0 - edge.tail_mass();
    CHECK(total_arc == doctest::Approx(total_edge).epsilon(1e-12));
}

TEST_CASE("target marginal matches (k - m) Q_k / m") {
    const int K = 2000;
    const auto j = joint_L(2, 0.0, K);
    const auto q = vdd_L(2, 0.0, K);
    const auto cols = j.target_marginal();
    double worst = 0.0;
    for (int k = 3; k <= 500; ++k)
        worst = std::max(worst,
                         std::abs(cols[static_cast<std::size_t>(k - 2)] - (k - 2) * q[k] / 2.0));
    CHECK(worst < 1e-6);
}

TEST_CASE("row sums obey the exact truncation identity") {
    // Summing the recurrence over k <= K gives, per row l > m,
    //   (<f>/m + f_l) S_l = f_{l-1} S_{l-1} - f_K Q_{l,K},
    // and for the l = m row
    //   (<f> + m f_m) S_m = sum_{k<K} f_k Q_k - m f_K Q_{m,K}.
    // This pins the truncated sums exactly, so the infinite-K marginal is
    // Q_l; the deficit at finite K is pure boundary flux.
    const int m = 2, K = 600;
    const double s = 0.0, fmean = 2.0 * m + s;
    const auto j = joint_L(m, s, K);
    const auto q = vdd_L(m, s, K);
    const auto rows = j.source_marginal();
    auto row_sum = [&](int l) { return rows[static_cast<std::size_t>(l - m)]; };

    double vdd_weight = 0.0;  // sum_{k <= K-1} f(k) Q_k
    for (int k = m; k <= K - 1; ++k)
        vdd_weight += (k + s) * q[k];
    const double want_m = (vdd_weight - m * (K + s) * j.at(m, K)) / (fmean + m * (m + s));
    CHECK(row_sum(m) == doctest::Approx(want_m).epsilon(1e-11));

    for (int l = m + 1; l <= 60; ++l) {
        const double want =
            ((l - 1 + s) * row_sum(l - 1) - (K + s) * j.at(l, K)) / (fmean / m + l + s);
        CHECK(row_sum(l) == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("row-sum deficit decays like 1/K") {
    const auto q = vdd_L(2, 0.0, 4000);
    for (int K : {500, 1000, 2000}) {
        const auto j = joint_L(2, 0.0, K);
        double row2 = 0.0;
        for (double v : j.row(2))
            row2 += v;
        const double err = std::abs(row2 - q[2]);
        CHECK(err * K == doctest::Approx(2.0).epsilon(0.02));
    }
}
