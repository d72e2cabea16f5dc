#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <utility>
#include <variant>

#include "pagraph/calibration.hpp"
#include "pagraph/csv.hpp"
#include "pagraph/empirical.hpp"
#include "pagraph/exact_vdd.hpp"
#include "pagraph/generator.hpp"
#include "pagraph/joint_distribution.hpp"
#include "pagraph/mean_field.hpp"
#include "pagraph/model.hpp"
#include "pagraph/stats.hpp"

namespace py = pybind11;
using namespace pagraph;

namespace {

std::vector<double> dist_probabilities(const DegreeDistribution& d) {
    return {d.probabilities().begin(), d.probabilities().end()};
}

IncrementSpec increments_from_pairs(const std::vector<std::pair<int, double>>& r) {
    return IncrementSpec::stochastic(r);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Preferential-attachment graph models: exact degree distributions, "
              "growth simulation, asymptotics, and calibration";

    py::class_<WeightFunction>(m, "WeightFunction")
        .def_static("linear", &WeightFunction::linear, py::arg("s"))
        .def_static("constant", &WeightFunction::constant)
        .def_static("tabulated", &WeightFunction::tabulated, py::arg("head"), py::arg("tail_s"),
                    py::arg("k_head"), py::arg("k_min") = 1)
        .def("__call__", &WeightFunction::operator(), py::arg("k"))
        .def_property_readonly("is_linear", &WeightFunction::is_linear)
        .def_property_readonly("is_constant", &WeightFunction::is_constant)
        .def_property_readonly("is_tabulated", &WeightFunction::is_tabulated)
        .def_property_readonly("asymptotic_displacement", &WeightFunction::asymptotic_displacement);

    m.def("eval_weight", &eval_weight, py::arg("f"), py::arg("k"));

    py::class_<IncrementSpec>(m, "IncrementSpec")
        .def_static("fixed", &IncrementSpec::fixed, py::arg("m"))
        .def_static("stochastic", &increments_from_pairs, py::arg("r"),
                    "r: list of (x, probability) pairs")
        .def_property_readonly("is_fixed", &IncrementSpec::is_fixed)
        .def_property_readonly("mean", &IncrementSpec::mean)
        .def_property_readonly("min_arcs", &IncrementSpec::min_arcs)
        .def_property_readonly("max_arcs", &IncrementSpec::max_arcs)
        .def("probability", &IncrementSpec::probability, py::arg("arcs"));

    const auto seed_policy = [](std::optional<int> complete_n0,
                                std::optional<std::vector<std::pair<int, int>>> edges)
        -> SeedPolicy {
        if (complete_n0)
            return CompleteGraphSeed{*complete_n0};
        if (edges)
            return ExplicitSeed{std::move(*edges)};
        return AutoSeed{};
    };
    py::class_<ModelSpec>(m, "ModelSpec")
        .def_static(
            "linear",
            [seed_policy](const IncrementSpec& inc, double s, std::optional<int> seed_n0,
                          std::optional<std::vector<std::pair<int, int>>> seed_edges) {
                return ModelSpec::linear(inc, s, seed_policy(seed_n0, std::move(seed_edges)));
            },
            py::arg("increments"), py::arg("s"), py::arg("seed_n0") = std::nullopt,
            py::arg("seed_edges") = std::nullopt)
        .def_static(
            "constant_weight",
            [seed_policy](const IncrementSpec& inc, std::optional<int> seed_n0,
                          std::optional<std::vector<std::pair<int, int>>> seed_edges) {
                return ModelSpec::constant_weight(inc, seed_policy(seed_n0, std::move(seed_edges)));
            },
            py::arg("increments"), py::arg("seed_n0") = std::nullopt,
            py::arg("seed_edges") = std::nullopt)
        .def_static(
            "hybrid",
            [seed_policy](int m, double a, std::optional<int> seed_n0,
                          std::optional<std::vector<std::pair<int, int>>> seed_edges) {
                return ModelSpec::hybrid(m, a, seed_policy(seed_n0, std::move(seed_edges)));
            },
            py::arg("m"), py::arg("a"), py::arg("seed_n0") = std::nullopt,
            py::arg("seed_edges") = std::nullopt)
        .def_static(
            "general",
            [seed_policy](const WeightFunction& f, const IncrementSpec& inc,
                          std::optional<int> seed_n0,
                          std::optional<std::vector<std::pair<int, int>>> seed_edges) {
                return ModelSpec::general(f, inc, seed_policy(seed_n0, std::move(seed_edges)));
            },
            py::arg("weight"), py::arg("increments"), py::arg("seed_n0") = std::nullopt,
            py::arg("seed_edges") = std::nullopt)
        .def("to_json", &ModelSpec::to_json)
        .def_static("from_json", &ModelSpec::from_json, py::arg("text"));

    m.def("p_to_l", &p_to_l, py::arg("m"), py::arg("a"),
          "Weight function of the equivalent L-graph: linear f(k)=k+2am/(1-a), "
          "or the constant function at a=1");
    m.def("l_to_p", &l_to_p, py::arg("m"), py::arg("s"),
          "Mixing parameter a of the equivalent P-graph, or None when s < 0");

    py::class_<DegreeDistribution>(m, "DegreeDistribution")
        .def_property_readonly("k_min", &DegreeDistribution::k_min)
        .def_property_readonly("k_max", &DegreeDistribution::k_max)
        .def_property_readonly("tail_mass", &DegreeDistribution::tail_mass)
        .def_property_readonly("mean_weight", &DegreeDistribution::mean_weight)
        .def_property_readonly("probabilities", &dist_probabilities)
        .def("__getitem__", &DegreeDistribution::operator[], py::arg("k"))
        .def("to_csv", [](const DegreeDistribution& d) {
            std::ostringstream os;
            write_vdd_csv(os, d);
            return os.str();
        });

    py::enum_<MeanWeightPolicy>(m, "MeanWeightPolicy")
        .value("TailPinned", MeanWeightPolicy::TailPinned)
        .value("SelfConsistent", MeanWeightPolicy::SelfConsistent);

    m.def("vdd_L", &vdd_L, py::arg("m"), py::arg("s"), py::arg("k_max"));
    m.def("vdd_P", &vdd_P, py::arg("m"), py::arg("a"), py::arg("k_max"));
    m.def("vdd_const", &vdd_const, py::arg("m"), py::arg("k_max"));
    m.def("vdd_L_closed", &vdd_L_closed, py::arg("m"), py::arg("s"), py::arg("k"));
    m.def("vdd_general", &vdd_general, py::arg("f"), py::arg("m"), py::arg("k_max"),
          py::arg("policy") = MeanWeightPolicy::TailPinned);
    m.def("vdd_stochastic", &vdd_stochastic, py::arg("f"), py::arg("increments"),
          py::arg("k_max"), py::arg("policy") = MeanWeightPolicy::TailPinned);
    m.def("solve_mean_weight", &solve_mean_weight, py::arg("f"), py::arg("increments"),
          py::arg("k_max"), py::arg("policy") = MeanWeightPolicy::TailPinned);
    m.def("exact_vdd", &exact_vdd, py::arg("model"), py::arg("k_max"),
          py::arg("policy") = MeanWeightPolicy::TailPinned);

    py::class_<JointDistribution> joint(m, "JointDistribution");
    py::enum_<JointDistribution::Kind>(joint, "Kind")
        .value("Arc", JointDistribution::Kind::Arc)
        .value("Edge", JointDistribution::Kind::Edge);
    joint.def_property_readonly("kind", &JointDistribution::kind)
        .def_property_readonly("k_min", &JointDistribution::k_min)
        .def_property_readonly("k_max", &JointDistribution::k_max)
        .def_property_readonly("tail_mass", &JointDistribution::tail_mass)
        .def("at", &JointDistribution::at, py::arg("l"), py::arg("k"))
        .def("source_marginal", &JointDistribution::source_marginal)
        .def("target_marginal", &JointDistribution::target_marginal);

    m.def("joint_P", &joint_P, py::arg("m"), py::arg("a"), py::arg("k_max"));
    m.def("joint_L", &joint_L, py::arg("m"), py::arg("s"), py::arg("k_max"));
    m.def("joint_general", &joint_general, py::arg("f"), py::arg("m"), py::arg("mean_weight"),
          py::arg("k_max"));
    m.def("edge_from_arc", &edge_from_arc, py::arg("arc"));

    m.def("meanfield_degree", &meanfield_degree, py::arg("m"), py::arg("s"), py::arg("i"),
          py::arg("t"));
    m.def("meanfield_cdf", &meanfield_cdf, py::arg("m"), py::arg("s"), py::arg("k"));
    m.def("meanfield_vdd", &meanfield_vdd, py::arg("m"), py::arg("s"), py::arg("k"));
    m.def("alpha_to_s", &alpha_to_s, py::arg("alpha"), py::arg("m"));
    m.def("s_to_alpha", &s_to_alpha, py::arg("s"), py::arg("m"));
    m.def(
        "classify",
        [](const ModelSpec& model) -> py::object {
            const AsymptoticClass c = classify(model);
            py::dict out;
            if (std::holds_alternative<Exponential>(c)) {
                out["kind"] = "exponential";
            } else {
                out["kind"] = "power-law";
                out["alpha"] = std::get<PowerLaw>(c).alpha;
            }
            return out;
        },
        py::arg("model"));

    py::class_<GrowingGraph>(m, "GrowingGraph")
        .def_readonly("arcs", &GrowingGraph::arcs)
        .def_readonly("degree", &GrowingGraph::degree)
        .def_property_readonly("n", &GrowingGraph::n)
        .def_property_readonly("arc_count", &GrowingGraph::arc_count);

    m.def(
        "grow",
        [](const ModelSpec& model, std::size_t target_n, std::uint64_t seed,
           bool distinct_targets) {
            GrowOptions opt;
            opt.distinct_targets = distinct_targets;
            return grow(model, target_n, seed, opt);
        },
        py::arg("model"), py::arg("target_n"), py::arg("seed"),
        py::arg("distinct_targets") = false);
    m.def("degree_histogram", &degree_histogram, py::arg("graph"));
    m.def("arc_endpoint_histogram", &arc_endpoint_histogram, py::arg("graph"), py::arg("k_max"));

    py::class_<EmpiricalDistribution>(m, "EmpiricalDistribution")
        .def(py::init<std::vector<std::pair<int, double>>, std::optional<double>>(),
             py::arg("counts"), py::arg("edge_count") = std::nullopt)
        .def_property_readonly("total", &EmpiricalDistribution::total)
        .def_property_readonly("k_min", &EmpiricalDistribution::k_min)
        .def_property_readonly("k_max", &EmpiricalDistribution::k_max)
        .def("qhat", &EmpiricalDistribution::qhat, py::arg("k"))
        .def("to_degree_distribution", &EmpiricalDistribution::to_degree_distribution);

    m.def("load_degree_file",
          [](const std::string& path) { return load_degree_file(std::filesystem::path(path)); },
          py::arg("path"));

    m.def("fit_tail_exponent", &fit_tail_exponent, py::arg("emp"), py::arg("k_lo"),
          py::arg("k_hi"));

    py::class_<FitDiagnostics>(m, "FitDiagnostics")
        .def_readonly("fit_lo", &FitDiagnostics::fit_lo)
        .def_readonly("fit_hi", &FitDiagnostics::fit_hi)
        .def_readonly("residual", &FitDiagnostics::residual)
        .def_readonly("tv_exact_vs_emp", &FitDiagnostics::tv_exact_vs_emp)
        .def_readonly("converged", &FitDiagnostics::converged)
        .def_readonly("clamped", &FitDiagnostics::clamped);

    py::class_<CalibratedModel>(m, "CalibratedModel")
        .def_readonly("m", &CalibratedModel::m)
        .def_readonly("alpha", &CalibratedModel::alpha)
        .def_readonly("s", &CalibratedModel::s)
        .def_readonly("k_head", &CalibratedModel::k_head)
        .def_readonly("head_f", &CalibratedModel::head_f)
        .def_readonly("increments", &CalibratedModel::increments)
        .def_readonly("mean_weight", &CalibratedModel::mean_weight)
        .def_readonly("diagnostics", &CalibratedModel::diagnostics)
        .def("to_model_spec", &CalibratedModel::to_model_spec)
        .def("to_json", &CalibratedModel::to_json);

    m.def(
        "calibrate",
        [](const EmpiricalDistribution& emp, std::optional<double> edges,
           std::optional<double> mean_override, int k_head,
           std::optional<std::pair<int, int>> fit_range, std::optional<IncrementSpec> increments,
           int k_max) {
            CalibrationOptions opts;
            opts.edge_count = edges;
            opts.mean_override = mean_override;
            opts.k_head = k_head;
            opts.fit_range = fit_range;
            opts.increments = std::move(increments);
            opts.k_max = k_max;
            return calibrate(emp, opts);
        },
        py::arg("emp"), py::arg("edges") = std::nullopt, py::arg("m") = std::nullopt,
        py::arg("k_head") = 11, py::arg("fit_range") = std::nullopt,
        py::arg("increments") = std::nullopt, py::arg("k_max") = 100000);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("tv_exact_vs_reference", &ValidationReport::tv_exact_vs_reference)
        .def_readonly("tv_sim_vs_exact", &ValidationReport::tv_sim_vs_exact)
        .def_readonly("chi_square_head", &ValidationReport::chi_square_head)
        .def_readonly("chi_square_cells", &ValidationReport::chi_square_cells)
        .def_readonly("slope_exact", &ValidationReport::slope_exact)
        .def_readonly("slope_sim", &ValidationReport::slope_sim)
        .def_readonly("slope_reference", &ValidationReport::slope_reference);

    m.def(
        "validate",
        [](const ModelSpec& model, const EmpiricalDistribution& reference, int n_sim,
           int replications, std::uint64_t seed, int k_max) {
            ValidationOptions opts;
            opts.n_sim = n_sim;
            opts.replications = replications;
            opts.seed = seed;
            opts.k_max = k_max;
            return validate(model, reference, opts);
        },
        py::arg("model"), py::arg("reference"), py::arg("n_sim") = 100000,
        py::arg("replications") = 1, py::arg("seed") = 1, py::arg("k_max") = 100000);

    m.def("total_variation", py::overload_cast<const DegreeDistribution&,
                                               const DegreeDistribution&>(&total_variation),
          py::arg("a"), py::arg("b"));
    m.def("total_variation_window", &total_variation_window, py::arg("a"), py::arg("b"),
          py::arg("k_cap"));
    m.def("loglog_slope",
          py::overload_cast<const DegreeDistribution&, int, int>(&loglog_slope), py::arg("d"),
          py::arg("k_lo"), py::arg("k_hi"));
    m.def("replication_seed", &replication_seed, py::arg("base_seed"), py::arg("replication"));
}
