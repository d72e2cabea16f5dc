// pagraph: preferential-attachment graph models — exact degree
// distributions, growth simulation, asymptotics, and calibration.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pagraph/calibration.hpp"
#include "pagraph/csv.hpp"
#include "pagraph/empirical.hpp"
#include "pagraph/exact_vdd.hpp"
#include "pagraph/generator.hpp"
#include "pagraph/joint_distribution.hpp"
#include "pagraph/mean_field.hpp"
#include "pagraph/model.hpp"
#include "pagraph/stats.hpp"

namespace {

using namespace pagraph;

struct ModelFlags {
    std::string model;  // L | P | const | general
    double m = 0.0;
    double s = 0.0;
    double a = 0.0;
    std::string increment_dist;  // inline "x:p,..." or a file of "x p" lines
    std::string weights_file;    // json {head, tail_s, k_head[, k_min]}
    CLI::App* app = nullptr;

    bool has_m() const { return app != nullptr && app->count("--m") > 0; }
    bool has_a() const { return app != nullptr && app->count("--a") > 0; }
};

void add_model_flags(CLI::App* sub, ModelFlags& f) {
    f.app = sub;
    sub->add_option("--model", f.model, "Model class: L, P, const, or general")
        ->check(CLI::IsMember({"L", "P", "const", "general"}));
    sub->add_option("--m", f.m, "Arcs per increment (mean for stochastic increments)");
    sub->add_option("--s", f.s, "Displacement of the linear weight f(k) = k + s");
    sub->add_option("--a", f.a, "Uniform-attachment probability of the hybrid rule");
    sub->add_option("--increment-dist", f.increment_dist,
                    "Increment-size distribution: inline x:p,... or a file of 'x p' lines");
    sub->add_option("--weights-file", f.weights_file,
                    "Tabulated weight function (json: head, tail_s, k_head, optional k_min)");
}

IncrementSpec parse_increment_dist(const std::string& text) {
    std::vector<std::pair<int, double>> entries;
    if (text.find(':') != std::string::npos) {
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw std::runtime_error("increment-dist: expected x:p, got '" + item + "'");
            entries.emplace_back(std::stoi(item.substr(0, colon)),
                                 std::stod(item.substr(colon + 1)));
        }
    } else {
        std::ifstream in(text);
        if (!in)
            throw std::runtime_error("increment-dist: cannot open " + text);
        std::string line;
        while (std::getline(in, line)) {
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.resize(hash);
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream fields(line);
            int x;
            double p;
            if (fields >> x >> p)
                entries.emplace_back(x, p);
        }
    }
    return IncrementSpec::stochastic(std::move(entries));
}

WeightFunction parse_weights_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("weights-file: cannot open " + path);
    nlohmann::json j;
    in >> j;
    return WeightFunction::tabulated(j.at("head").get<std::vector<double>>(),
                                     j.at("tail_s").get<double>(), j.at("k_head").get<int>(),
                                     j.value("k_min", 1));
}

int require_integer_m(double m) {
    if (!(m > 0.0) || m != std::floor(m))
        throw std::runtime_error("--m must be a positive integer here (non-integer mean "
                                 "increments go through --increment-dist)");
    return static_cast<int>(m);
}

IncrementSpec build_increment(const ModelFlags& f) {
    if (!f.increment_dist.empty())
        return parse_increment_dist(f.increment_dist);
    if (!f.has_m())
        throw std::runtime_error("need --m or --increment-dist");
    return IncrementSpec::fixed(require_integer_m(f.m));
}

ModelSpec build_model(const ModelFlags& f) {
    if (f.model == "L")
        return ModelSpec::linear(build_increment(f), f.s);
    if (f.model == "const")
        return ModelSpec::constant_weight(build_increment(f));
    if (f.model == "P") {
        if (!f.increment_dist.empty())
            throw std::runtime_error("model P is defined for fixed increments only (use --m)");
        if (!f.has_m() || !f.has_a())
            throw std::runtime_error("model P needs --m and --a");
        return ModelSpec::hybrid(require_integer_m(f.m), f.a);
    }
    if (f.model == "general") {
        if (f.weights_file.empty())
            throw std::runtime_error("model general needs --weights-file");
        return ModelSpec::general(parse_weights_file(f.weights_file), build_increment(f));
    }
    throw std::runtime_error("unknown --model '" + f.model + "'");
}

// Writes through a file or stdout; never leaves a partial file on throw.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(std::cout);
        return;
    }
    std::ostringstream buf;
    body(buf);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file " + path);
    out << buf.str();
}

std::pair<int, int> parse_fit_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("--fit-range expects lo:hi");
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

std::string model_params_comment(const ModelFlags& f) {
    std::ostringstream os;
    os << "model=" << f.model;
    if (f.has_m())
        os << " m=" << format_g17(f.m);
    if (f.model == "L")
        os << " s=" << format_g17(f.s);
    if (f.model == "P")
        os << " a=" << format_g17(f.a);
    return os.str();
}

// ---- subcommands ----

int run_exact_vdd(const ModelFlags& f, int kmax, bool self_consistent, const std::string& out) {
    const ModelSpec model = build_model(f);
    const auto policy =
        self_consistent ? MeanWeightPolicy::SelfConsistent : MeanWeightPolicy::TailPinned;
    const DegreeDistribution d = exact_vdd(model, kmax, policy);
    with_output(out, [&](std::ostream& os) { write_vdd_csv(os, d); });
    return 0;
}

int run_exact_joint(const ModelFlags& f, int kmax_joint, const std::string& kind,
                    bool self_consistent, const std::string& out) {
    if (!f.increment_dist.empty())
        throw std::runtime_error("exact-joint is defined for fixed increments only");
    if (!f.has_m())
        throw std::runtime_error("exact-joint needs --m");
    const int m = require_integer_m(f.m);

    JointDistribution j = [&] {
        if (f.model == "P")
            return joint_P(m, f.a, kmax_joint);
        if (f.model == "L")
            return joint_L(m, f.s, kmax_joint);
        if (f.model == "const")
            return joint_general(WeightFunction::constant(), m, 1.0, kmax_joint);
        if (f.model == "general") {
            auto w = parse_weights_file(f.weights_file);
            const auto policy = self_consistent ? MeanWeightPolicy::SelfConsistent
                                                : MeanWeightPolicy::TailPinned;
            const double mw = solve_mean_weight(w, IncrementSpec::fixed(m), kmax_joint, policy);
            return joint_general(w, m, mw, kmax_joint);
        }
        throw std::runtime_error("exact-joint needs --model");
    }();
    if (kind == "edge")
        j = edge_from_arc(j);
    with_output(out, [&](std::ostream& os) { write_joint_csv(os, j, model_params_comment(f)); });
    return 0;
}

int run_generate(const ModelFlags& f, std::size_t n, std::uint64_t seed, int replications,
                 bool distinct, int hist_kmax, const std::string& out, const std::string& vdd_out,
                 const std::string& joint_out, const std::string& joint_kind) {
    const ModelSpec model = build_model(f);
    GrowOptions opt;
    opt.distinct_targets = distinct;

    std::vector<double> degree_counts;
    double vertices = 0.0;
    const std::size_t w = static_cast<std::size_t>(hist_kmax);
    std::vector<double> joint_counts(w * w, 0.0);
    double arcs_total = 0.0;

    // Edge-list and joint exports need the graphs themselves; a plain
    // degree histogram can use the parallel replication path (identical
    // counts either way).
    const bool need_graphs = !out.empty() || !joint_out.empty();
    if (need_graphs) {
        for (int rep = 0; rep < replications; ++rep) {
            const GrowingGraph g = grow(model, n, replication_seed(seed, rep), opt);
            if (!out.empty()) {
                std::string path = out;
                if (replications > 1)
                    path += ".rep" + std::to_string(rep);
                std::ofstream os(path, std::ios::binary);
                if (!os)
                    throw std::runtime_error("cannot open output file " + path);
                write_edge_list(os, g);
            }
            if (!vdd_out.empty()) {
                for (int d : g.degree) {
                    if (degree_counts.size() <= static_cast<std::size_t>(d))
                        degree_counts.resize(static_cast<std::size_t>(d) + 1, 0.0);
                    degree_counts[static_cast<std::size_t>(d)] += 1.0;
                }
                vertices += static_cast<double>(g.n());
            }
            if (!joint_out.empty()) {
                for (const auto& [src, tgt] : g.arcs) {
                    const int dl = g.degree[static_cast<std::size_t>(src)];
                    const int dk = g.degree[static_cast<std::size_t>(tgt)];
                    if (dl <= hist_kmax && dk <= hist_kmax)
                        joint_counts[static_cast<std::size_t>(dl - 1) * w +
                                     static_cast<std::size_t>(dk - 1)] += 1.0;
                }
                arcs_total += static_cast<double>(g.arc_count());
            }
        }
    } else if (!vdd_out.empty()) {
        degree_counts = replicated_degree_counts(model, n, seed, replications, opt);
        vertices = static_cast<double>(n) * replications;
    }

    if (!vdd_out.empty()) {
        int k_min = 1;
        while (k_min < static_cast<int>(degree_counts.size()) && degree_counts[k_min] == 0.0)
            ++k_min;
        std::vector<double> q(degree_counts.begin() + k_min, degree_counts.end());
        for (double& v : q)
            v /= vertices;
        const DegreeDistribution d(k_min, std::move(q));
        with_output(vdd_out, [&](std::ostream& os) { write_vdd_csv(os, d); });
    }
    if (!joint_out.empty()) {
        for (double& v : joint_counts)
            v /= arcs_total;
        JointDistribution j(JointDistribution::Kind::Arc, 1, hist_kmax, std::move(joint_counts));
        if (joint_kind == "edge")
            j = edge_from_arc(j);
        with_output(joint_out,
                    [&](std::ostream& os) { write_joint_csv(os, j, model_params_comment(f)); });
    }
    return 0;
}

int run_asymptotics(double m, std::optional<double> s, std::optional<double> a,
                    std::optional<double> alpha, int kmax, const std::string& out) {
    if (!(m > 0.0))
        throw std::runtime_error("asymptotics needs --m > 0");
    int given = (s ? 1 : 0) + (a ? 1 : 0) + (alpha ? 1 : 0);
    if (given != 1)
        throw std::runtime_error("asymptotics needs exactly one of --s, --a, --alpha");

    double disp;
    if (alpha) {
        disp = alpha_to_s(*alpha, m);
        std::cout << "s = " << format_g17(disp) << '\n';
    } else if (a) {
        if (*a == 1.0) {
            std::cout << "weight = constant (s -> infinity)\nclass = exponential\n";
            return 0;
        }
        const WeightFunction w = p_to_l(m, *a);
        disp = w.linear_displacement();
        std::cout << "s = " << format_g17(disp) << '\n';
    } else {
        disp = *s;
    }

    std::cout << "alpha = " << format_g17(s_to_alpha(disp, m)) << '\n';
    if (const auto back = l_to_p(m, disp))
        std::cout << "a = " << format_g17(*back) << '\n';
    else
        std::cout << "a = none (no P-graph for s < 0)\n";
    std::cout << "class = power-law\n";

    if (!out.empty()) {
        const int k_start = std::max(1, static_cast<int>(std::floor(-disp)) + 1);
        with_output(out, [&](std::ostream& os) {
            os << "k,Q\n";
            for (int k = k_start; k <= kmax; ++k)
                os << k << ',' << format_g17(meanfield_vdd(m, disp, k)) << '\n';
        });
    }
    return 0;
}

int run_equivalence_check(int m, double a, int kmax, int kmax_joint, std::size_t n,
                          std::uint64_t seed, int replications) {
    bool ok = true;

    // Theorem 1: final VDDs coincide under s = 2am/(1-a).
    const DegreeDistribution p = vdd_P(m, a, kmax);
    const WeightFunction twin = p_to_l(m, a);
    const DegreeDistribution l = twin.is_constant() ? vdd_const(m, kmax)
                                                    : vdd_L(m, twin.linear_displacement(), kmax);
    double t1 = 0.0;
    for (int k = m; k <= kmax; ++k)
        t1 = std::max(t1, std::abs(p[k] - l[k]));
    const bool t1_ok = t1 < 1e-12;
    ok = ok && t1_ok;
    std::cout << "theorem1 max_abs_diff=" << format_g17(t1) << " kmax=" << kmax
              << " tol=1e-12 " << (t1_ok ? "PASS" : "FAIL") << '\n';

    // Theorem 2: arc endpoint distributions coincide.
    const JointDistribution jp = joint_P(m, a, kmax_joint);
    const JointDistribution jl = twin.is_constant()
                                     ? joint_general(twin, m, 1.0, kmax_joint)
                                     : joint_L(m, twin.linear_displacement(), kmax_joint);
    double t2 = 0.0;
    for (int i = m; i <= kmax_joint; ++i)
        for (int k = m; k <= kmax_joint; ++k)
            t2 = std::max(t2, std::abs(jp.at(i, k) - jl.at(i, k)));
    const bool t2_ok = t2 < 1e-12;
    ok = ok && t2_ok;
    std::cout << "theorem2 sup_norm=" << format_g17(t2) << " window=" << kmax_joint
              << " tol=1e-12 " << (t2_ok ? "PASS" : "FAIL") << '\n';

    // Theorem 3: the growth rules themselves are equivalent; simulated VDDs
    // agree with each other and with the shared exact VDD.
    if (n > 0) {
        const ModelSpec mp = ModelSpec::hybrid(m, a);
        const ModelSpec ml = twin.is_constant()
                                 ? ModelSpec::constant_weight(IncrementSpec::fixed(m))
                                 : ModelSpec::linear(IncrementSpec::fixed(m),
                                                     twin.linear_displacement());
        auto mean_vdd = [&](const ModelSpec& model, std::uint64_t salt) {
            std::vector<double> counts;
            double total = 0.0;
            for (int rep = 0; rep < replications; ++rep) {
                const GrowingGraph g =
                    grow(model, n, replication_seed(seed ^ salt, rep));
                for (int d : g.degree) {
                    if (counts.size() <= static_cast<std::size_t>(d))
                        counts.resize(static_cast<std::size_t>(d) + 1, 0.0);
                    counts[static_cast<std::size_t>(d)] += 1.0;
                }
                total += static_cast<double>(g.n());
            }
            int k_min = 1;
            while (k_min < static_cast<int>(counts.size()) && counts[k_min] == 0.0)
                ++k_min;
            std::vector<double> q(counts.begin() + k_min, counts.end());
            for (double& v : q)
                v /= total;
            return DegreeDistribution(k_min, std::move(q));
        };
        const DegreeDistribution emp_p = mean_vdd(mp, 0x5031);
        const DegreeDistribution emp_l = mean_vdd(ml, 0x4c31);
        const double tv_pl = total_variation(emp_p, emp_l);
        const double tv_pe = total_variation(emp_p, p);
        const double tv_le = total_variation(emp_l, l);
        const bool t3_ok = tv_pl < 0.02 && tv_pe < 0.02 && tv_le < 0.02;
        ok = ok && t3_ok;
        std::cout << "theorem3 tv_sim_P_vs_sim_L=" << format_g17(tv_pl)
                  << " tv_sim_P_vs_exact=" << format_g17(tv_pe)
                  << " tv_sim_L_vs_exact=" << format_g17(tv_le) << " n=" << n
                  << " tol=0.02 " << (t3_ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? 0 : 1;
}

// Accepts plain 'k n_k' histograms and the k,Q CSV emitted by exact-vdd
// (its header line is skipped, so probabilities act as fractional counts).
EmpiricalDistribution load_reference(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open reference file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (text.rfind("k,Q\n", 0) == 0)
        text.erase(0, 4);
    std::istringstream stream(text);
    return load_degree_file(stream);
}

int run_calibrate(const std::string& degree_file, std::optional<double> edges,
                  std::optional<double> m_override, int k_head, const std::string& fit_range,
                  const std::string& increment_dist, int kmax, const std::string& out) {
    const EmpiricalDistribution emp = load_reference(degree_file);
    CalibrationOptions opts;
    opts.edge_count = edges;
    opts.mean_override = m_override;
    opts.k_head = k_head;
    opts.k_max = kmax;
    if (!fit_range.empty())
        opts.fit_range = parse_fit_range(fit_range);
    if (!increment_dist.empty())
        opts.increments = parse_increment_dist(increment_dist);

    const CalibratedModel cal = calibrate(emp, opts);
    std::cerr << "m = " << format_g17(cal.m) << "\nalpha = " << format_g17(cal.alpha)
              << "\ns = " << format_g17(cal.s) << "\nfit_range = [" << cal.diagnostics.fit_lo
              << ", " << cal.diagnostics.fit_hi << "]"
              << "\ntv_exact_vs_emp = " << format_g17(cal.diagnostics.tv_exact_vs_emp) << '\n';
    if (!cal.diagnostics.clamped.empty()) {
        std::cerr << "clamped head degrees:";
        for (int k : cal.diagnostics.clamped)
            std::cerr << ' ' << k;
        std::cerr << " (head fit infeasible there; weights set to 0)\n";
    }
    with_output(out, [&](std::ostream& os) { os << cal.to_json() << '\n'; });
    return 0;
}

int run_validate(const std::string& model_file, const ModelFlags& f, const std::string& ref_file,
                 int n, int replications, std::uint64_t seed, int kmax, int slope_lo, int slope_hi,
                 const std::string& out) {
    ModelSpec model = [&] {
        if (!model_file.empty()) {
            std::ifstream in(model_file);
            if (!in)
                throw std::runtime_error("cannot open model file " + model_file);
            std::ostringstream text;
            text << in.rdbuf();
            return ModelSpec::from_json(text.str());
        }
        return build_model(f);
    }();
    const EmpiricalDistribution ref = load_reference(ref_file);

    ValidationOptions opts;
    opts.n_sim = n;
    opts.replications = replications;
    opts.seed = seed;
    opts.k_max = kmax;
    opts.slope_lo = slope_lo;
    opts.slope_hi = slope_hi;
    const ValidationReport rep = validate(model, ref, opts);

    std::cout << "tv_exact_vs_reference = " << format_g17(rep.tv_exact_vs_reference) << '\n'
              << "tv_sim_vs_exact = " << format_g17(rep.tv_sim_vs_exact) << '\n'
              << "chi_square_head = " << format_g17(rep.chi_square_head) << " (cells "
              << rep.chi_square_cells << ")\n"
              << "slope_exact = " << format_g17(rep.slope_exact) << '\n'
              << "slope_sim = " << format_g17(rep.slope_sim) << '\n'
              << "slope_reference = " << format_g17(rep.slope_reference) << '\n';
    if (!out.empty())
        with_output(out, [&](std::ostream& os) { write_validation_csv(os, rep); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pagraph: growing-graph degree distributions, generation, and calibration"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::function<int()> action;

    // exact-vdd
    auto* vdd = app.add_subcommand("exact-vdd", "Exact final vertex degree distribution (CSV)");
    static ModelFlags vdd_flags;
    add_model_flags(vdd, vdd_flags);
    static int vdd_kmax = 10000;
    static bool vdd_selfc = false;
    static std::string vdd_out;
    vdd->add_option("--kmax", vdd_kmax, "Largest degree computed");
    vdd->add_flag("--self-consistent-mean", vdd_selfc,
                  "Solve <f> self-consistently instead of pinning it to 2m + tail_s");
    vdd->add_option("--out", vdd_out, "Output file (stdout if omitted)");
    vdd->callback([&] { action = [&] { return run_exact_vdd(vdd_flags, vdd_kmax, vdd_selfc, vdd_out); }; });

    // exact-joint
    auto* joint = app.add_subcommand("exact-joint", "Exact arc/edge endpoint degree distribution");
    static ModelFlags joint_flags;
    add_model_flags(joint, joint_flags);
    static int joint_kmax = 2000;
    static std::string joint_kind = "arc";
    static bool joint_selfc = false;
    static std::string joint_out;
    joint->add_option("--kmax-joint", joint_kmax, "Largest degree of the 2-D window");
    joint->add_option("--kind", joint_kind, "arc or edge")->check(CLI::IsMember({"arc", "edge"}));
    joint->add_flag("--self-consistent-mean", joint_selfc, "Self-consistent <f> for general weights");
    joint->add_option("--out", joint_out, "Output file (stdout if omitted)");
    joint->callback([&] {
        action = [&] {
            return run_exact_joint(joint_flags, joint_kmax, joint_kind, joint_selfc, joint_out);
        };
    });

    // generate
    auto* gen = app.add_subcommand("generate", "Grow graphs and export edge lists / histograms");
    static ModelFlags gen_flags;
    add_model_flags(gen, gen_flags);
    static std::size_t gen_n = 0;
    static std::uint64_t gen_seed = 0;
    static int gen_reps = 1;
    static bool gen_distinct = false;
    static int gen_hist_kmax = 2000;
    static std::string gen_out, gen_vdd_out, gen_joint_out, gen_joint_kind = "edge";
    gen->add_option("--n", gen_n, "Target vertex count")->required();
    gen->add_option("--seed", gen_seed, "RNG seed (all randomness is derived from it)")
        ->required();
    gen->add_option("--replications", gen_reps, "Independent replications");
    gen->add_flag("--distinct-targets", gen_distinct, "Redraw repeated targets in an increment");
    gen->add_option("--kmax-joint", gen_hist_kmax, "Degree window of the joint histogram");
    gen->add_option("--out", gen_out, "Edge-list output (suffix .repJ when replications > 1)");
    gen->add_option("--vdd-out", gen_vdd_out, "Aggregated empirical VDD (CSV)");
    gen->add_option("--joint-out", gen_joint_out, "Aggregated endpoint histogram (CSV)");
    gen->add_option("--joint-kind", gen_joint_kind, "arc or edge histogram")
        ->check(CLI::IsMember({"arc", "edge"}));
    gen->callback([&] {
        action = [&] {
            return run_generate(gen_flags, gen_n, gen_seed, gen_reps, gen_distinct, gen_hist_kmax,
                                gen_out, gen_vdd_out, gen_joint_out, gen_joint_kind);
        };
    });

    // asymptotics
    auto* asym = app.add_subcommand("asymptotics",
                                    "alpha <-> s conversion, classification, mean-field VDD");
    static double asym_m = 0.0;
    static std::optional<double> asym_s, asym_a, asym_alpha;
    static int asym_kmax = 10000;
    static std::string asym_out;
    asym->add_option("--m", asym_m, "Mean arcs per increment")->required();
    asym->add_option("--s", asym_s, "Displacement");
    asym->add_option("--a", asym_a, "Hybrid mixing probability");
    asym->add_option("--alpha", asym_alpha, "Target power-law exponent");
    asym->add_option("--kmax", asym_kmax, "Largest degree of the mean-field CSV");
    asym->add_option("--out", asym_out, "Mean-field VDD estimate output (CSV)");
    asym->callback([&] {
        action = [&] { return run_asymptotics(asym_m, asym_s, asym_a, asym_alpha, asym_kmax, asym_out); };
    });

    // equivalence-check
    auto* eq = app.add_subcommand("equivalence-check",
                                  "Numerical identity report for the P <-> L correspondence");
    static double eq_m = 0.0;
    static double eq_a = 0.0;
    static int eq_kmax = 10000;
    static int eq_kmax_joint = 500;
    static std::size_t eq_n = 0;
    static std::uint64_t eq_seed = 1;
    static int eq_reps = 1;
    eq->add_option("--m", eq_m, "Arcs per increment")->required();
    eq->add_option("--a", eq_a, "Hybrid mixing probability")->required();
    eq->add_option("--kmax", eq_kmax, "Degree range of the VDD comparison");
    eq->add_option("--kmax-joint", eq_kmax_joint, "Window of the joint comparison");
    eq->add_option("--n", eq_n, "Also grow both models to n vertices and compare empirically");
    eq->add_option("--seed", eq_seed, "RNG seed for the empirical comparison");
    eq->add_option("--replications", eq_reps, "Replications for the empirical comparison");
    eq->callback([&] {
        action = [&] {
            return run_equivalence_check(require_integer_m(eq_m), eq_a, eq_kmax, eq_kmax_joint,
                                         eq_n, eq_seed, eq_reps);
        };
    });

    // calibrate
    auto* cal = app.add_subcommand("calibrate", "Fit a model to an empirical degree histogram");
    static std::string cal_file;
    static std::optional<double> cal_edges, cal_m;
    static int cal_k_head = 11;
    static std::string cal_fit_range, cal_inc, cal_out;
    static int cal_kmax = 100000;
    cal->add_option("degree-file", cal_file, "Two-column 'k n_k' histogram")->required();
    cal->add_option("--edges", cal_edges, "Edge count E (m = E/N)");
    cal->add_option("--m", cal_m, "Mean increment size override");
    cal->add_option("--k-head", cal_k_head, "First tail degree (head is calibrated below it)");
    cal->add_option("--fit-range", cal_fit_range, "Tail fit range lo:hi");
    cal->add_option("--increment-dist", cal_inc, "Increment distribution (inline or file)");
    cal->add_option("--kmax", cal_kmax, "Forward-run resolution");
    cal->add_option("--out", cal_out, "Calibrated model json (stdout if omitted)");
    cal->callback([&] {
        action = [&] {
            return run_calibrate(cal_file, cal_edges, cal_m, cal_k_head, cal_fit_range, cal_inc,
                                 cal_kmax, cal_out);
        };
    });

    // validate
    auto* val = app.add_subcommand("validate", "Compare a model against data and simulation");
    static ModelFlags val_flags;
    add_model_flags(val, val_flags);
    static std::string val_model_file, val_ref, val_out;
    static int val_n = 100000;
    static int val_reps = 1;
    static std::uint64_t val_seed = 0;
    static int val_kmax = 100000;
    static std::string val_fit_range;
    val->add_option("--model-file", val_model_file, "Model json (e.g. from calibrate)");
    val->add_option("--ref", val_ref, "Reference degree histogram or k,Q CSV")->required();
    val->add_option("--n", val_n, "Simulation size");
    val->add_option("--replications", val_reps, "Simulation replications");
    val->add_option("--seed", val_seed, "RNG seed")->required();
    val->add_option("--kmax", val_kmax, "Exact-VDD resolution");
    val->add_option("--fit-range", val_fit_range, "Tail-slope window lo:hi (default 50:1000)");
    val->add_option("--out", val_out, "Curve CSV output");
    val->callback([&] {
        action = [&] {
            int lo = 50, hi = 1000;
            if (!val_fit_range.empty())
                std::tie(lo, hi) = parse_fit_range(val_fit_range);
            return run_validate(val_model_file, val_flags, val_ref, val_n, val_reps, val_seed,
                                val_kmax, lo, hi, val_out);
        };
    });

    try {
        app.parse(argc, argv);
        if (action)
            exit_code = action();
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
