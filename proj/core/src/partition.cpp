#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chunkph/reduction.hpp"

namespace chunkph {

index_t chunk_partition::min_chunk_size() const {
    index_t best = 0;
    for (std::size_t b = 1; b < cuts.size(); ++b) {
        index_t len = cuts[b] - cuts[b - 1];
        best = best == 0 ? len : std::min(best, len);
    }
    return best;
}

index_t chunk_partition::max_chunk_size() const {
    index_t best = 0;
    for (std::size_t b = 1; b < cuts.size(); ++b) best = std::max(best, cuts[b] - cuts[b - 1]);
    return best;
}

std::vector<std::string> check_partition(const chunk_partition& parts, index_t n) {
    std::vector<std::string> violations;
    if (parts.cuts.empty() || parts.cuts.front() != 0)
        violations.push_back("partition must start at t_0 = 0");
    else if (parts.cuts.back() != n)
        violations.push_back("partition must end at t_m = n = " + std::to_string(n));
    for (std::size_t b = 1; b < parts.cuts.size(); ++b)
        if (parts.cuts[b] <= parts.cuts[b - 1]) {
            violations.push_back("cut points not strictly increasing at position " + std::to_string(b));
            break;
        }
    return violations;
}

chunk_partition make_sqrt_partition(index_t n) {
    if (n == 0) return chunk_partition{{0}};
    index_t len = std::max<index_t>(1, static_cast<index_t>(std::sqrt(static_cast<double>(n))));
    return make_fixed_partition(n, len);
}

chunk_partition make_fixed_partition(index_t n, index_t chunk_size) {
    if (chunk_size < 1) throw std::invalid_argument("make_fixed_partition: chunk size must be >= 1");
    chunk_partition parts;
    parts.cuts.push_back(0);
    for (index_t t = chunk_size; t < n; t += chunk_size) parts.cuts.push_back(t);
    if (n > 0) parts.cuts.push_back(n);
    return parts;
}

chunk_partition make_lower_star_partition(const std::vector<double>& labels) {
    if (labels.empty()) throw std::invalid_argument("make_lower_star_partition: labels required");
    chunk_partition parts;
    parts.cuts.push_back(0);
    for (std::size_t j = 1; j < labels.size(); ++j)
        if (labels[j] != labels[j - 1]) parts.cuts.push_back(static_cast<index_t>(j));
    parts.cuts.push_back(static_cast<index_t>(labels.size()));
    return parts;
}

}  // namespace chunkph
