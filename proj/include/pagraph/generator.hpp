#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pagraph/degree_distribution.hpp"
#include "pagraph/joint_distribution.hpp"
#include "pagraph/model.hpp"
#include "pagraph/rng.hpp"

namespace pagraph {

// A directed multigraph built by increments: each non-seed vertex arrives
// with x outgoing arcs (x per the model's increment spec) whose targets are
// chosen by the attachment rule. Self-loops are impossible by construction:
// a new vertex only attaches to vertices that already exist.
struct GrowingGraph {
    std::vector<std::pair<int, int>> arcs;  // (source, target), creation order
    std::vector<int> degree;                // total degree per vertex

    std::size_t n() const { return degree.size(); }
    std::size_t arc_count() const { return arcs.size(); }
};

struct GrowOptions {
    // Redraw repeated targets within one increment (simple-graph mode).
    // Default allows parallel arcs; both agree asymptotically.
    bool distinct_targets = false;
};

// Seed graph for the policy: Auto builds a complete graph on 2m+1 vertices
// for fixed increments (arc count = m * vertex count) and on 2*ceil(m)+1
// vertices for stochastic ones; arcs run from the higher-numbered vertex to
// the lower.
GrowingGraph make_seed(const SeedPolicy& policy, const ModelSpec& model);

// Increment size draw: the fixed m, or x ~ r by inverse CDF.
int draw_increment_size(const IncrementSpec& increment, Rng& rng);

// Grows the model to target_n vertices. Deterministic in (model, target_n,
// rng_seed, options): identical runs produce identical arc lists.
//
// Per-arc target draws, all against the state frozen at the start of the
// increment:
//   hybrid         with prob a uniform vertex, else uniform arc endpoint
//                  (endpoint of a uniform arc = degree-proportional draw);
//   linear s >= 0  endpoint draw with prob 2R/(2R+sN), else uniform vertex;
//   linear s < 0,
//   general f      weight-proportional draw from a prefix-sum tree over
//                  f(degree).
GrowingGraph grow(const ModelSpec& model, std::size_t target_n, std::uint64_t rng_seed,
                  const GrowOptions& options = {});

// Summed degree counts (index = degree) over independent replications;
// replication j draws its stream from replication_seed(base_seed, j).
// Replications run concurrently, bounded by the hardware thread count, and
// are merged in replication order, so the result is identical however they
// are scheduled (and identical to a serial run).
std::vector<double> replicated_degree_counts(const ModelSpec& model, std::size_t target_n,
                                             std::uint64_t base_seed, int replications,
                                             const GrowOptions& options = {});

// Empirical degree distribution of the graph (mean_weight is NaN).
DegreeDistribution degree_histogram(const GrowingGraph& g);

// Empirical arc endpoint distribution over (source degree, target degree),
// truncated at k_max; mass beyond it shows up as tail_mass. Symmetrize with
// edge_from_arc for the edge-endpoint version.
JointDistribution arc_endpoint_histogram(const GrowingGraph& g, int k_max);

}  // namespace pagraph
