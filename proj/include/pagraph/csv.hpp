#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "pagraph/degree_distribution.hpp"
#include "pagraph/joint_distribution.hpp"

namespace pagraph {

// Shortest round-trippable decimal (17 significant digits).
std::string format_g17(double v);

// "k,Q" header, one row per degree, then a trailing comment line
// "# tail_mass=<v> mean_weight=<v>".
void write_vdd_csv(std::ostream& os, const DegreeDistribution& d);

// Comment header (kind, caller-supplied parameter string, k_max, tail_mass),
// "l,k,value" header, then one row per nonzero entry sorted by (l, k).
void write_joint_csv(std::ostream& os, const JointDistribution& j, std::string_view params);

// Plain edge list, one "source target" pair per line, arcs in creation order.
struct GrowingGraph;
void write_edge_list(std::ostream& os, const GrowingGraph& g);

}  // namespace pagraph
