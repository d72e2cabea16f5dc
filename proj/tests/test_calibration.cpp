#include <doctest.h>

#include <cmath>
#include <sstream>

#include "pagraph/calibration.hpp"
#include "pagraph/empirical.hpp"
#include "pagraph/exact_vdd.hpp"
#include "pagraph/mean_field.hpp"
#include "pagraph/stats.hpp"

using namespace pagraph;

namespace {

EmpiricalDistribution from_distribution(const DegreeDistribution& d, double scale = 1.0) {
    std::vector<std::pair<int, double>> counts;
    for (int k = d.k_min(); k <= d.k_max(); ++k)
        if (d[k] > 0.0)
            counts.emplace_back(k, scale * d[k]);
    return EmpiricalDistribution(std::move(counts));
}

}  // namespace

TEST_CASE("degree file parsing") {
    std::istringstream ok("1 3\n2 1\n");
    const auto emp = load_degree_file(ok);
    CHECK(emp.total() == 4.0);
    CHECK(emp.qhat(1) == 0.75);
    CHECK(emp.qhat(2) == 0.25);
    CHECK(emp.qhat(3) == 0.0);

    std::istringstream commented("# c\n5,10\n");
    const auto single = load_degree_file(commented);
    CHECK(single.counts().size() == 1);
    CHECK(single.qhat(5) == 1.0);

    std::istringstream bad("1 2\nx y\n");
    CHECK_THROWS_WITH_AS(load_degree_file(bad), doctest::Contains("line 2"), std::runtime_error);
    std::istringstream dup("1 2\n1 3\n");
    CHECK_THROWS_AS(load_degree_file(dup), std::runtime_error);
    std::istringstream neg("1 -2\n");
    CHECK_THROWS_AS(load_degree_file(neg), std::runtime_error);
    std::istringstream extra("1 2 3\n");
    CHECK_THROWS_AS(load_degree_file(extra), std::runtime_error);
}

TEST_CASE("tail exponent fitting") {
    // exact log-log line
    std::vector<std::pair<int, double>> counts;
    for (int k = 10; k <= 1000; ++k)
        counts.emplace_back(k, 1e9 * std::pow(k, -2.5));
    const EmpiricalDistribution synth(std::move(counts));
    CHECK(fit_tail_exponent(synth, 10, 1000) == doctest::Approx(2.5).epsilon(1e-9));

    // exact linear-rule tail
    const auto emp = from_distribution(vdd_L(2, -1.0, 10000), 1e9);
    CHECK(fit_tail_exponent(emp, 100, 5000) == doctest::Approx(2.5).epsilon(0.02));

    std::vector<std::pair<int, double>> two = {{10, 5.0}, {20, 1.0}};
    CHECK_THROWS_AS(fit_tail_exponent(EmpiricalDistribution(two), 1, 100), std::runtime_error);
}

TEST_CASE("calibration round trip on a linear model") {
    // data generated by vdd_L(2, 0) with r = {2: 1}; the head is f(2) = 2
    const auto data = from_distribution(vdd_L(2, 0.0, 100000), 1e9);
    CalibrationOptions opts;
    opts.mean_override = 2.0;
    opts.k_head = 3;
    opts.fit_range = {{100, 5000}};
    opts.increments = IncrementSpec::fixed(2);
    const auto cal = calibrate(data, opts);
    CHECK(std::abs(cal.s) < 0.02);
    REQUIRE(cal.head_f.size() == 1);
    CHECK(cal.head_f[0] == doctest::Approx(2.0).epsilon(0.01));
    CHECK(cal.diagnostics.converged);
    CHECK(cal.diagnostics.clamped.empty());
    CHECK(cal.diagnostics.tv_exact_vs_emp < 1e-3);
}

TEST_CASE("calibration round trip on a tabulated stochastic model") {
    const auto f_true = WeightFunction::tabulated({1.5, 2.5}, -0.5, 3);
    const auto r_true = IncrementSpec::stochastic({{1, 0.4}, {2, 0.3}, {3, 0.3}});
    const auto data = from_distribution(vdd_stochastic(f_true, r_true, 100000), 1e9);

    CalibrationOptions opts;
    opts.mean_override = r_true.mean();
    opts.k_head = 3;
    opts.fit_range = {{100, 5000}};
    opts.increments = r_true;
    const auto cal = calibrate(data, opts);
    CHECK(std::abs(cal.s - (-0.5)) < 0.05);
    REQUIRE(cal.head_f.size() == 2);
    CHECK(std::abs(cal.head_f[0] - 1.5) / 1.5 < 0.02);
    CHECK(std::abs(cal.head_f[1] - 2.5) / 2.5 < 0.02);

    // the calibrated model reproduces the data
    const auto forward = exact_vdd(cal.to_model_spec(), 100000);
    CHECK(total_variation(forward, data.to_degree_distribution()) < 1e-3);
}

TEST_CASE("auto increment heuristic") {
    // vdd of the sec-8-style model has Q_1 = r_1 etc. where weights vanish;
    // feed a distribution whose head the heuristic must reproduce
    const auto f = WeightFunction::tabulated({0.0, 1.2}, -0.4, 3);
    const auto r = IncrementSpec::stochastic({{1, 0.6}, {2, 0.25}, {3, 0.15}});
    const auto data = from_distribution(vdd_stochastic(f, r, 50000), 22963.0);
    CalibrationOptions opts;
    opts.mean_override = r.mean();
    opts.k_head = 3;
    opts.fit_range = {{50, 2000}};
    const auto cal = calibrate(data, opts);
    // r_1 = Q^_1 exactly (f(1) = 0 pins them equal)
    CHECK(cal.increments.probability(1) == doctest::Approx(0.6).epsilon(1e-6));
    CHECK(cal.increments.mean() == doctest::Approx(r.mean()).epsilon(1e-9));
    double total = 0.0;
    for (int x = cal.increments.min_arcs(); x <= cal.increments.max_arcs(); ++x)
        total += cal.increments.probability(x);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("calibrate error paths") {
    std::vector<std::pair<int, double>> single = {{5, 100.0}};
    const EmpiricalDistribution degenerate(single);
    CalibrationOptions opts;
    opts.mean_override = 2.0;
    CHECK_THROWS(calibrate(degenerate, opts));  // insufficient tail

    const auto data = from_distribution(vdd_L(2, 0.0, 10000), 1e9);
    CalibrationOptions no_m;
    CHECK_THROWS_AS(calibrate(data, no_m), std::invalid_argument);
}

TEST_CASE("calibrated model serializes with diagnostics") {
    const auto data = from_distribution(vdd_L(2, 0.0, 50000), 1e9);
    CalibrationOptions opts;
    opts.mean_override = 2.0;
    opts.k_head = 3;
    opts.fit_range = {{100, 2000}};
    opts.increments = IncrementSpec::fixed(2);
    const auto cal = calibrate(data, opts);
    const auto json = cal.to_json();
    CHECK(json.find("fit_diagnostics") != std::string::npos);
    CHECK(json.find("alpha") != std::string::npos);
    // the embedded model round-trips through the ModelSpec schema
    CHECK_NOTHROW(ModelSpec::from_json(json));
}

TEST_CASE("validate reports") {
    const auto model = ModelSpec::linear(IncrementSpec::fixed(2), 0.0);
    const auto exact = exact_vdd(model, 20000);

    ValidationOptions opts;
    opts.n_sim = 20000;
    opts.replications = 2;
    opts.seed = 31337;
    opts.k_max = 20000;
    const auto rep = validate(model, exact, opts);
    CHECK(rep.tv_exact_vs_reference == 0.0);  // reference is the model itself
    CHECK(rep.tv_sim_vs_exact < 0.02);
    CHECK(rep.slope_exact == doctest::Approx(-3.0).epsilon(0.05));
    CHECK(rep.chi_square_cells == 10);
    CHECK(rep.chi_square_head < 100.0);

    // identical formulas at a = 0
    const auto p0 = vdd_P(2, 0.0, 20000);
    CHECK(total_variation(exact, p0) < 1e-12);
}

TEST_CASE("classification of a calibrated model reproduces the fitted exponent") {
    const auto data = from_distribution(vdd_L(2, -1.0, 50000), 1e9);
    CalibrationOptions opts;
    opts.mean_override = 2.0;
    opts.k_head = 3;
    opts.fit_range = {{100, 5000}};
    opts.increments = IncrementSpec::fixed(2);
    const auto cal = calibrate(data, opts);
    const auto cls = classify(cal.to_model_spec());
    CHECK(std::get<PowerLaw>(cls).alpha == doctest::Approx(cal.alpha).epsilon(0.01));
}

TEST_CASE("total variation is a metric") {
    const auto a = vdd_L(2, 0.0, 5000);
    const auto b = vdd_L(2, 3.0, 5000);
    const auto c = vdd_P(2, 0.3, 5000);
    CHECK(total_variation(a, a) == 0.0);
    CHECK(total_variation(a, b) == total_variation(b, a));
    CHECK(total_variation(a, c) <= total_variation(a, b) + total_variation(b, c) + 1e-15);
    CHECK(total_variation(a, b) > 0.0);
}
