#include "pagraph/csv.hpp"

#include <cstdio>

#include "pagraph/generator.hpp"

namespace pagraph {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_vdd_csv(std::ostream& os, const DegreeDistribution& d) {
    os << "k,Q\n";
    for (int k = d.k_min(); k <= d.k_max(); ++k)
        os << k << ',' << format_g17(d[k]) << '\n';
    os << "# tail_mass=" << format_g17(d.tail_mass())
       << " mean_weight=" << format_g17(d.mean_weight()) << '\n';
}

void write_joint_csv(std::ostream& os, const JointDistribution& j, std::string_view params) {
    os << "# kind=" << (j.kind() == JointDistribution::Kind::Arc ? "arc" : "edge");
    if (!params.empty())
        os << ' ' << params;
    os << " kmax=" << j.k_max() << " tail_mass=" << format_g17(j.tail_mass()) << '\n';
    os << "l,k,value\n";
    for (int l = j.k_min(); l <= j.k_max(); ++l)
        for (int k = j.k_min(); k <= j.k_max(); ++k)
            if (const double v = j.at(l, k); v != 0.0)
                os << l << ',' << k << ',' << format_g17(v) << '\n';
}

void write_edge_list(std::ostream& os, const GrowingGraph& g) {
    for (const auto& [u, v] : g.arcs)
        os << u << ' ' << v << '\n';
}

}  // namespace pagraph
