#include "pagraph/empirical.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pagraph {

EmpiricalDistribution::EmpiricalDistribution(std::vector<std::pair<int, double>> counts,
                                             std::optional<double> edge_count)
    : counts_(std::move(counts)), edges_(edge_count) {
    if (counts_.empty())
        throw std::invalid_argument("empirical distribution: no entries");
    std::sort(counts_.begin(), counts_.end());
    total_ = 0.0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        const auto& [k, n] = counts_[i];
        if (k < 1)
            throw std::invalid_argument("empirical distribution: degrees must be >= 1");
        if (!(n >= 0.0))
            throw std::invalid_argument("empirical distribution: negative count at k=" +
                                        std::to_string(k));
        if (i > 0 && counts_[i - 1].first == k)
            throw std::invalid_argument("empirical distribution: duplicate degree k=" +
                                        std::to_string(k));
        total_ += n;
    }
    if (!(total_ > 0.0))
        throw std::invalid_argument("empirical distribution: total count is zero");
}

double EmpiricalDistribution::count(int k) const {
    auto it = std::lower_bound(counts_.begin(), counts_.end(), std::make_pair(k, 0.0),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it == counts_.end() || it->first != k)
        return 0.0;
    return it->second;
}

double EmpiricalDistribution::qhat(int k) const { return count(k) / total_; }

DegreeDistribution EmpiricalDistribution::to_degree_distribution() const {
    std::vector<double> q(static_cast<std::size_t>(k_max() - k_min() + 1), 0.0);
    for (const auto& [k, n] : counts_)
        q[static_cast<std::size_t>(k - k_min())] = n / total_;
    return DegreeDistribution(k_min(), std::move(q));
}

EmpiricalDistribution load_degree_file(std::istream& in) {
    std::vector<std::pair<int, double>> counts;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        if (line.find_first_not_of(" \t\r\n") == std::string::npos)
            continue;  // blank or comment-only line
        std::istringstream fields(line);
        long long k;
        double n;
        std::string trailing;
        if (!(fields >> k >> n) || (fields >> trailing)) {
            throw std::runtime_error("degree file: malformed line " + std::to_string(line_no) +
                                     ": expected 'k n_k'");
        }
        if (k < 1)
            throw std::runtime_error("degree file: line " + std::to_string(line_no) +
                                     ": degree must be >= 1");
        if (!(n >= 0.0))
            throw std::runtime_error("degree file: line " + std::to_string(line_no) +
                                     ": negative count");
        counts.emplace_back(static_cast<int>(k), n);
    }
    try {
        return EmpiricalDistribution(std::move(counts));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("degree file: ") + e.what());
    }
}

EmpiricalDistribution load_degree_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("degree file: cannot open " + path.string());
    return load_degree_file(in);
}

}  // namespace pagraph
