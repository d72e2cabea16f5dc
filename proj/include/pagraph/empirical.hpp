#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <utility>
#include <vector>

#include "pagraph/degree_distribution.hpp"

namespace pagraph {

// Empirical degree histogram: (k, n_k) pairs with N = sum n_k. Counts may be
// fractional (synthetic data scaled from exact distributions is legal input).
class EmpiricalDistribution {
public:
    EmpiricalDistribution(std::vector<std::pair<int, double>> counts,
                          std::optional<double> edge_count = std::nullopt);

    const std::vector<std::pair<int, double>>& counts() const { return counts_; }
    double total() const { return total_; }  // N
    std::optional<double> edge_count() const { return edges_; }

    // Q^_k = n_k / N; zero for degrees not present.
    double qhat(int k) const;
    double count(int k) const;
    int k_min() const { return counts_.front().first; }
    int k_max() const { return counts_.back().first; }

    // Dense probability view with zeros at missing degrees.
    DegreeDistribution to_degree_distribution() const;

private:
    std::vector<std::pair<int, double>> counts_;  // sorted by k, unique
    double total_;
    std::optional<double> edges_;
};

// Parses lines of "k n_k" (whitespace- or comma-separated); '#' starts a
// comment. Malformed lines are reported with their line number; duplicate
// degrees and negative counts are errors.
EmpiricalDistribution load_degree_file(std::istream& in);
EmpiricalDistribution load_degree_file(const std::filesystem::path& path);

}  // namespace pagraph
