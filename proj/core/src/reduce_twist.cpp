#include "chunkph/reduction.hpp"

#include "engine_util.hpp"

namespace chunkph {

// Clearing: processing stored dimensions downward, the pivot i of every newly
// reduced column is a known positive column, so it is set to zero instead of
// being reduced in its own round. On an anti-transposed (cohomology) matrix
// the stored dimensions are codimensions, which makes this order the
// increasing-dimension traversal of the original filtration.
reduction_result reduce_twist(const boundary_matrix& m) {
    detail::require_valid(m, "reduce_twist");
    detail::stopwatch timer;
    const index_t n = m.size();
    const int d_max = m.max_dim();

    std::vector<sparse_column> work = m.columns;
    pivot_lookup lookup(n);
    std::vector<char> paired(static_cast<std::size_t>(n) + 1, 0);
    reduction_result out;
    out.pairing.n = n;
    sparse_column scratch;

    for (int delta = d_max; delta >= 0; --delta) {
        for (index_t j = 1; j <= n; ++j) {
            if (m.dim(j) != delta || paired[static_cast<std::size_t>(j)]) continue;
            sparse_column& col = work[static_cast<std::size_t>(j - 1)];
            while (!col.empty() && lookup[col.back()] != 0) {
                add_columns_into(col, work[static_cast<std::size_t>(lookup[col.back()] - 1)], scratch);
                ++out.stats.additions;
            }
            if (!col.empty()) {
                const index_t i = col.back();
                lookup.owner[static_cast<std::size_t>(i)] = j;
                work[static_cast<std::size_t>(i - 1)].clear();
                ++out.stats.clears;
                paired[static_cast<std::size_t>(i)] = paired[static_cast<std::size_t>(j)] = 1;
                out.pairing.pairs.emplace_back(i, j);
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
