#include <algorithm>

#include "chunkph/reduction.hpp"
#include "engine_util.hpp"

namespace chunkph {

namespace {

// Removes row i from col if present; returns whether it was.
bool erase_row(sparse_column& col, index_t i) {
    auto it = std::lower_bound(col.begin(), col.end(), i);
    if (it == col.end() || *it != i) return false;
    col.erase(it);
    return true;
}

bool has_row(const sparse_column& col, index_t i) {
    return std::binary_search(col.begin(), col.end(), i);
}

}  // namespace

// Left-to-right reduction with compression: once column j is reduced and turns
// out negative with pivot i, row j can never hold a pivot (it belongs to a
// negative column), so its entries are zeroed in all columns still to be
// processed; entries at row i are eliminated by the left-to-right addition of
// column j, which keeps the pairs unchanged.
reduction_result reduce_compress(const boundary_matrix& m) {
    detail::require_valid(m, "reduce_compress");
    detail::stopwatch timer;
    const index_t n = m.size();

    std::vector<sparse_column> work = m.columns;
    pivot_lookup lookup(n);
    std::vector<char> paired(static_cast<std::size_t>(n) + 1, 0);
    reduction_result out;
    out.pairing.n = n;
    sparse_column scratch;

    for (index_t j = 1; j <= n; ++j) {
        sparse_column& col = work[static_cast<std::size_t>(j - 1)];
        while (!col.empty() && lookup[col.back()] != 0) {
            add_columns_into(col, work[static_cast<std::size_t>(lookup[col.back()] - 1)], scratch);
            ++out.stats.additions;
        }
        if (col.empty()) continue;
        const index_t i = col.back();
        lookup.owner[static_cast<std::size_t>(i)] = j;
        paired[static_cast<std::size_t>(i)] = paired[static_cast<std::size_t>(j)] = 1;
        out.pairing.pairs.emplace_back(i, j);
        for (index_t k = j + 1; k <= n; ++k) {
            sparse_column& rest = work[static_cast<std::size_t>(k - 1)];
            if (erase_row(rest, j)) ++out.stats.compress_zeroings;
            if (has_row(rest, i)) {
                add_columns_into(rest, col, scratch);
                ++out.stats.additions;
            }
        }
    }
    for (index_t k = 1; k <= n; ++k)
        if (!paired[static_cast<std::size_t>(k)]) out.pairing.essential.push_back(k);
    out.pairing.canonicalize();
    out.stats.seconds_total = timer.seconds();
    return out;
}

}  // namespace chunkph
