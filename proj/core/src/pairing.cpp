#include "chunkph/pairing.hpp"

#include <algorithm>
#include <string>

namespace chunkph {

void persistence_pairing::canonicalize() {
    std::sort(pairs.begin(), pairs.end());
    std::sort(essential.begin(), essential.end());
}

persistence_pairing map_dual_pairing(const persistence_pairing& dual) {
    persistence_pairing out;
    out.n = dual.n;
    out.pairs.reserve(dual.pairs.size());
    out.essential.reserve(dual.essential.size());
    for (auto [i, j] : dual.pairs) out.pairs.emplace_back(dual.n + 1 - j, dual.n + 1 - i);
    for (index_t e : dual.essential) out.essential.push_back(dual.n + 1 - e);
    out.canonicalize();
    return out;
}

std::vector<std::string> check_pairing(const persistence_pairing& p, const boundary_matrix& m) {
    std::vector<std::string> violations;
    const index_t n = m.size();
    if (p.n != n) {
        violations.push_back("pairing n=" + std::to_string(p.n) + " does not match matrix n=" +
                             std::to_string(n));
        return violations;
    }
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    auto touch = [&](index_t k, const char* role) {
        if (k < 1 || k > n) {
            violations.push_back(std::string(role) + " index " + std::to_string(k) + " out of range");
            return;
        }
        if (++seen[static_cast<std::size_t>(k)] > 1)
            violations.push_back("index " + std::to_string(k) + " appears twice");
    };
    for (auto [i, j] : p.pairs) {
        touch(i, "birth");
        touch(j, "death");
        if (i >= j)
            violations.push_back("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") has birth >= death");
        else if (m.dim(j) != m.dim(i) + 1)
            violations.push_back("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") violates the dimension step");
    }
    for (index_t e : p.essential) touch(e, "essential");
    for (index_t k = 1; k <= n; ++k)
        if (seen[static_cast<std::size_t>(k)] == 0)
            violations.push_back("index " + std::to_string(k) + " appears in neither P nor E");
    return violations;
}

}  // namespace chunkph
