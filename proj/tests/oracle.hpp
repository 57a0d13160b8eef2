#pragma once

// Test-only reduction oracle, kept independent of the library's engines:
// dense Z2 columns, and left-to-right additions applied by repeatedly
// resolving a randomly chosen pivot conflict until no two non-zero columns
// share a pivot. Pairing uniqueness guarantees every maximal sequence of
// left-to-right operations ends in the same pairs, so runs with different
// seeds double as a check of that uniqueness.

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chunkph/boundary_matrix.hpp"
#include "chunkph/pairing.hpp"

namespace chunkph_test {

inline chunkph::persistence_pairing oracle_reduce(const chunkph::boundary_matrix& m,
                                                  std::uint64_t seed) {
    using chunkph::index_t;
    const index_t n = m.size();
    if (n > 400) throw std::logic_error("oracle_reduce is meant for small matrices");

    std::vector<std::vector<char>> dense(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    for (index_t j = 1; j <= n; ++j)
        for (index_t i : m.column(j)) dense[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)] = 1;

    auto column_pivot = [&](index_t j) -> index_t {
        const auto& col = dense[static_cast<std::size_t>(j - 1)];
        for (index_t i = n; i >= 1; --i)
            if (col[static_cast<std::size_t>(i)]) return i;
        return 0;
    };

    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<index_t> owner(static_cast<std::size_t>(n) + 1, 0);
        std::vector<std::pair<index_t, index_t>> conflicts;
        for (index_t j = 1; j <= n; ++j) {
            const index_t p = column_pivot(j);
            if (p == 0) continue;
            if (owner[static_cast<std::size_t>(p)] == 0)
                owner[static_cast<std::size_t>(p)] = j;
            else
                conflicts.emplace_back(owner[static_cast<std::size_t>(p)], j);
        }
        if (conflicts.empty()) break;
        const auto [k1, k2] = conflicts[rng() % conflicts.size()];
        for (index_t i = 1; i <= n; ++i)
            dense[static_cast<std::size_t>(k2 - 1)][static_cast<std::size_t>(i)] ^=
                dense[static_cast<std::size_t>(k1 - 1)][static_cast<std::size_t>(i)];
    }

    chunkph::persistence_pairing out;
    out.n = n;
    std::vector<char> paired(static_cast<std::size_t>(n) + 1, 0);
    for (index_t j = 1; j <= n; ++j) {
        const index_t p = column_pivot(j);
        if (p == 0) continue;
        out.pairs.emplace_back(p, j);
        paired[static_cast<std::size_t>(p)] = paired[static_cast<std::size_t>(j)] = 1;
    }
    for (index_t k = 1; k <= n; ++k)
        if (!paired[static_cast<std::size_t>(k)]) out.essential.push_back(k);
    out.canonicalize();
    return out;
}

}  // namespace chunkph_test
