#include "pagraph/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "pagraph/csv.hpp"
#include "pagraph/generator.hpp"
#include "pagraph/mean_field.hpp"
#include "pagraph/stats.hpp"

namespace pagraph {

namespace {

struct LineFit {
    double slope;
    double rms_residual;
    int points;
};

LineFit fit_loglog(const EmpiricalDistribution& emp, int k_lo, int k_hi) {
    std::vector<double> xs, ys;
    for (const auto& [k, n] : emp.counts()) {
        if (k < k_lo || k > k_hi || !(n > 0.0))
            continue;
        xs.push_back(std::log(static_cast<double>(k)));
        ys.push_back(std::log(n / emp.total()));
    }
    if (xs.size() < 3)
        throw std::runtime_error("fit_tail_exponent: fewer than 3 usable points in range");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double n = static_cast<double>(xs.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icept = (sy - slope * sx) / n;
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - slope * xs[i] - icept;
        rss += r * r;
    }
    return {slope, std::sqrt(rss / n), static_cast<int>(xs.size())};
}

}  // namespace

double fit_tail_exponent(const EmpiricalDistribution& emp, int k_lo, int k_hi) {
    return -fit_loglog(emp, k_lo, k_hi).slope;
}

namespace {

// r_x = Q^_x for x <= j, remainder over {j+1, j+2} chosen to satisfy
// sum r = 1 and sum x r_x = m; the smallest j making both residuals
// nonnegative wins.
IncrementSpec auto_increments(const EmpiricalDistribution& emp, double m) {
    double head_mass = 0.0, head_mean = 0.0;
    for (int j = 1; j <= 64; ++j) {
        head_mass += emp.qhat(j);
        head_mean += j * emp.qhat(j);
        const double p = 1.0 - head_mass;
        const double mu = m - head_mean;
        if (!(p >= 0.0))
            break;
        const double r_hi = mu - (j + 1) * p;  // weight at j+2
        const double r_lo = (j + 2) * p - mu;  // weight at j+1
        if (r_hi >= 0.0 && r_lo >= 0.0) {
            std::vector<std::pair<int, double>> entries;
            for (int x = 1; x <= j; ++x)
                entries.emplace_back(x, emp.qhat(x));
            entries.emplace_back(j + 1, r_lo);
            entries.emplace_back(j + 2, r_hi);
            // drop leading zero-probability sizes so min_arcs is meaningful
            while (!entries.empty() && entries.front().second == 0.0)
                entries.erase(entries.begin());
            return IncrementSpec::stochastic(std::move(entries));
        }
    }
    throw std::runtime_error("calibrate: no feasible automatic increment distribution");
}

}  // namespace

CalibratedModel calibrate(const EmpiricalDistribution& emp, const CalibrationOptions& opts) {
    CalibratedModel out;

    // (1) mean increment size
    if (opts.mean_override) {
        out.m = *opts.mean_override;
    } else if (opts.edge_count || emp.edge_count()) {
        const double e = opts.edge_count ? *opts.edge_count : *emp.edge_count();
        out.m = e / emp.total();
    } else if (opts.increments) {
        out.m = opts.increments->mean();
    } else {
        throw std::invalid_argument("calibrate: need an edge count, a mean override, or increments");
    }
    if (!(out.m > 0.0))
        throw std::invalid_argument("calibrate: mean increment size must be positive");

    // (2) tail exponent
    int fit_lo, fit_hi;
    if (opts.fit_range) {
        fit_lo = opts.fit_range->first;
        fit_hi = opts.fit_range->second;
    } else {
        fit_lo = opts.k_head;
        fit_hi = 0;
        for (const auto& [k, n] : emp.counts())
            if (n >= 3.0)
                fit_hi = std::max(fit_hi, k);
    }
    const LineFit fit = fit_loglog(emp, fit_lo, fit_hi);
    out.alpha = -fit.slope;
    out.diagnostics.fit_lo = fit_lo;
    out.diagnostics.fit_hi = fit_hi;
    out.diagnostics.residual = fit.rms_residual;

    // (3) displacement; rejects alpha <= 2 with the mean-degree explanation
    out.s = alpha_to_s(out.alpha, out.m);
    out.k_head = opts.k_head;
    out.mean_weight = 2.0 * out.m + out.s;

    // increments: as given, or the documented heuristic
    if (opts.increments) {
        if (std::abs(opts.increments->mean() - out.m) > 1e-9 && !opts.mean_override &&
            (opts.edge_count || emp.edge_count()))
            throw std::invalid_argument(
                "calibrate: increment distribution mean disagrees with E/N");
        out.increments = *opts.increments;
    } else {
        out.increments = auto_increments(emp, out.m);
    }

    // (4) head inversion with <f> pinned to 2m + s: the convention under
    // which the fitted alpha and Eq-form s = (alpha-3)m are exactly the
    // model's tail behaviour, making calibration self-inverse.
    const int g = out.increments.min_arcs();
    if (g >= out.k_head)
        throw std::invalid_argument("calibrate: k_head must exceed the smallest increment size");
    const double fmean = out.mean_weight;
    const double m = out.m;
    out.head_f.clear();
    for (int k = g; k < out.k_head; ++k) {
        const double qk = emp.qhat(k);
        if (!(qk > 0.0))
            throw std::runtime_error("calibrate: empirical Q(" + std::to_string(k) +
                                     ") is zero inside the head range");
        double fk;
        if (k == g) {
            fk = fmean * (out.increments.probability(g) - qk) / (m * qk);
        } else {
            const double inflow = out.increments.probability(k) * fmean +
                                  m * out.head_f.back() * emp.qhat(k - 1);
            fk = (inflow - qk * fmean) / (m * qk);
        }
        if (fk < 0.0) {
            // infeasible at this degree with the given r; clamped, reported
            out.diagnostics.clamped.push_back(k);
            fk = 0.0;
        }
        out.head_f.push_back(fk);
    }

    // (5) forward-consistency diagnostics
    const ModelSpec model = out.to_model_spec();
    const DegreeDistribution forward = exact_vdd(model, opts.k_max);
    out.diagnostics.tv_exact_vs_emp = total_variation(forward, emp.to_degree_distribution());
    out.diagnostics.converged = true;
    return out;
}

ModelSpec CalibratedModel::to_model_spec() const {
    auto f = WeightFunction::tabulated(head_f, s, k_head, increments.min_arcs());
    return ModelSpec::general(std::move(f), increments);
}

std::string CalibratedModel::to_json() const {
    nlohmann::json j = nlohmann::json::parse(to_model_spec().to_json());
    j["m"] = m;
    j["alpha"] = alpha;
    j["s"] = s;
    j["fit_diagnostics"] = {
        {"fit_lo", diagnostics.fit_lo},
        {"fit_hi", diagnostics.fit_hi},
        {"residual", diagnostics.residual},
        {"tv_exact_vs_emp", diagnostics.tv_exact_vs_emp},
        {"converged", diagnostics.converged},
        {"clamped", diagnostics.clamped},
    };
    return j.dump(2);
}

ValidationReport validate(const ModelSpec& model, const DegreeDistribution& reference,
                          const ValidationOptions& opts) {
    ValidationReport rep;
    const DegreeDistribution exact = exact_vdd(model, opts.k_max);
    rep.tv_exact_vs_reference = total_variation(exact, reference);

    // mean empirical VDD over replications (grown in parallel, merged
    // deterministically)
    std::vector<double> counts = replicated_degree_counts(
        model, static_cast<std::size_t>(opts.n_sim), opts.seed, opts.replications);
    double total = 0.0;
    for (double c : counts)
        total += c;
    int sim_min = 1;
    while (sim_min < static_cast<int>(counts.size()) && counts[sim_min] == 0.0)
        ++sim_min;
    std::vector<double> sim_q(counts.begin() + sim_min, counts.end());
    for (double& v : sim_q)
        v /= total;
    const DegreeDistribution sim(sim_min, std::move(sim_q));
    rep.tv_sim_vs_exact = total_variation(sim, exact);

    // chi-square over the first ten model degrees
    const int head_lo = exact.k_min();
    const int head_hi = std::min(exact.k_min() + 9, std::min(exact.k_max(), sim.k_max()));
    std::vector<double> obs, expd;
    for (int k = head_lo; k <= head_hi; ++k) {
        obs.push_back(k <= sim.k_max() ? sim[k] * total : 0.0);
        expd.push_back(exact[k]);
    }
    rep.chi_square_head = chi_square_statistic(obs, expd, total);
    rep.chi_square_cells = static_cast<int>(obs.size());

    auto slope_or_nan = [&](const DegreeDistribution& d) {
        try {
            return loglog_slope(d, opts.slope_lo, opts.slope_hi);
        } catch (const std::exception&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    rep.slope_exact = slope_or_nan(exact);
    rep.slope_reference = slope_or_nan(reference);
    // The simulated curve is fitted over the contiguous run of bins holding
    // at least 3 vertices. Keeping isolated up-fluctuated bins from the
    // sparse tail would select only outliers there and flatten the fit; a
    // run too short to span a factor of 2 in degree carries no slope
    // information at all and reports NaN.
    try {
        std::vector<double> ks, qs;
        for (int k = std::max(opts.slope_lo, sim.k_min());
             k <= std::min(opts.slope_hi, sim.k_max()); ++k) {
            if (sim[k] * total < 3.0)
                break;
            ks.push_back(k);
            qs.push_back(sim[k]);
        }
        if (ks.size() < 10 || ks.back() < 2.0 * ks.front())
            throw std::runtime_error("undersampled");
        rep.slope_sim = loglog_slope(ks, qs);
    } catch (const std::exception&) {
        rep.slope_sim = std::numeric_limits<double>::quiet_NaN();
    }

    rep.curve_k_hi = std::min(2000, exact.k_max());
    for (int k = 1; k <= rep.curve_k_hi; ++k) {
        rep.q_reference.push_back(k <= reference.k_max() ? reference[k] : 0.0);
        rep.q_exact.push_back(exact[k]);
        rep.q_simulated.push_back(k <= sim.k_max() ? sim[k] : 0.0);
    }
    return rep;
}

ValidationReport validate(const ModelSpec& model, const EmpiricalDistribution& reference,
                          const ValidationOptions& opts) {
    return validate(model, reference.to_degree_distribution(), opts);
}

void write_validation_csv(std::ostream& os, const ValidationReport& rep) {
    os << "k,Q_reference,Q_exact,Q_simulated\n";
    for (int k = 1; k <= rep.curve_k_hi; ++k) {
        const std::size_t i = static_cast<std::size_t>(k - 1);
        os << k << ',' << format_g17(rep.q_reference[i]) << ',' << format_g17(rep.q_exact[i])
           << ',' << format_g17(rep.q_simulated[i]) << '\n';
    }
}

}  // namespace pagraph
