#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chunkph/boundary_matrix.hpp"

namespace chunkph {

using index_pair = std::pair<index_t, index_t>;

// The persistence pairs P and essential indices E of an n-column matrix.
// Canonical form: pairs sorted by birth index, essential sorted ascending.
// Every index in 1..n appears exactly once: as a birth, as a death, or in
// essential.
struct persistence_pairing {
    index_t n = 0;
    std::vector<index_pair> pairs;
    std::vector<index_t> essential;

    void canonicalize();

    bool operator==(const persistence_pairing&) const = default;
};

// Pairing of the anti-transposed matrix mapped back to the original
// filtration indices: (i, j) -> (n+1-j, n+1-i), e -> n+1-e.
persistence_pairing map_dual_pairing(const persistence_pairing& dual);

// Checks the pairing invariants against a matrix: i < j and
// dims[j] = dims[i] + 1 for every pair, and P together with E partitions 1..n.
// Returns one message per violation.
std::vector<std::string> check_pairing(const persistence_pairing& p, const boundary_matrix& m);

}  // namespace chunkph
