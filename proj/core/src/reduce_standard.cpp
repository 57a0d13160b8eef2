#include "chunkph/reduction.hpp"

#include "engine_util.hpp"

namespace chunkph {

reduction_result reduce_standard(const boundary_matrix& m) {
    detail::require_valid(m, "reduce_standard");
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
        if (!col.empty()) {
            const index_t i = col.back();
            lookup.owner[static_cast<std::size_t>(i)] = j;
            paired[static_cast<std::size_t>(i)] = paired[static_cast<std::size_t>(j)] = 1;
            out.pairing.pairs.emplace_back(i, j);
        }
    }
    for (index_t k = 1; k <= n; ++k)
        if (!paired[static_cast<std::size_t>(k)]) out.pairing.essential.push_back(k);
    out.pairing.canonicalize();
    out.stats.seconds_total = timer.seconds();
    return out;
}

}  // namespace chunkph
