#include <algorithm>
#include <cassert>

#include "chunkph/reduction.hpp"
#include "engine_util.hpp"
#include "parallel.hpp"

namespace chunkph {

column_state::column_state(index_t n)
    : partner(static_cast<std::size_t>(n) + 1, 0),
      scope(static_cast<std::size_t>(n) + 1, locality::undetermined),
      marks(static_cast<std::size_t>(n) + 1) {
    for (auto& m : marks) m.store(static_cast<unsigned char>(activity::unmarked), std::memory_order_relaxed);
}

namespace {

void set_mark(column_state& state, index_t k, activity value) {
    state.marks[static_cast<std::size_t>(k)].store(static_cast<unsigned char>(value),
                                                   std::memory_order_relaxed);
}

// Memoized activity of a column: active iff it contains an unpaired entry or
// a local positive entry whose owner column is (recursively) active. The
// recursion descends to owner columns with strictly smaller pivots, so it is
// acyclic; an explicit stack keeps the depth off the call stack. Writes are
// idempotent, so concurrent resolution of the same column is harmless.
bool resolve_activity(const std::vector<sparse_column>& reduced, column_state& state,
                      const pivot_lookup& lookup, index_t start) {
    {
        const activity known = state.mark(start);
        if (known != activity::unmarked) return known == activity::active;
    }
    struct frame {
        index_t col;
        std::size_t pos;
    };
    std::vector<frame> stack;
    stack.push_back({start, 0});
    while (!stack.empty()) {
        frame& fr = stack.back();
        const index_t k = fr.col;
        if (state.mark(k) != activity::unmarked) {
            stack.pop_back();
            continue;
        }
        const sparse_column& col = reduced[static_cast<std::size_t>(k - 1)];
        bool pushed = false;
        bool resolved = false;
        while (fr.pos < col.size()) {
            const index_t entry = col[fr.pos];
            const index_t partner = state.partner_of(entry);
            if (partner == 0) {
                set_mark(state, k, activity::active);
                resolved = true;
                break;
            }
            if (partner > entry && partner != k) {
                // local positive entry owned by another column
                const index_t owner = lookup[entry];
                const activity owner_mark = state.mark(owner);
                if (owner_mark == activity::active) {
                    set_mark(state, k, activity::active);
                    resolved = true;
                    break;
                }
                if (owner_mark == activity::unmarked) {
                    stack.push_back({owner, 0});
                    pushed = true;
                    break;
                }
            }
            ++fr.pos;
        }
        if (pushed) continue;
        if (!resolved) set_mark(state, k, activity::inactive);
        stack.pop_back();
    }
    return state.mark(start) == activity::active;
}

struct step1_totals {
    std::uint64_t additions = 0;
    std::uint64_t clears = 0;
};

// Two phases of the spectral sequence reduction per dimension. Phase 1 is
// parallel over all chunks; every pair it finds lies inside one chunk. Phase 2
// pairs reach exactly one chunk to the left, so it runs as two barrier-split
// waves (even chunks, then odd chunks): a wave never writes state another
// running wave reads. Clears are deferred to the wave barrier because the
// cleared column may belong to the left neighbor.
step1_totals run_local_reduction(const boundary_matrix& m, const chunk_partition& parts,
                                 unsigned workers, std::vector<sparse_column>& reduced,
                                 pivot_lookup& lookup, column_state& state,
                                 std::vector<index_pair>& pairs) {
    const index_t chunk_count = parts.chunk_count();
    const int d_max = m.max_dim();

    std::vector<std::uint64_t> additions_by_chunk(static_cast<std::size_t>(chunk_count) + 1, 0);
    std::vector<std::vector<index_pair>> pairs_by_chunk(static_cast<std::size_t>(chunk_count) + 1);
    std::vector<std::vector<index_t>> clears_by_chunk(static_cast<std::size_t>(chunk_count) + 1);
    std::vector<sparse_column> scratch_by_worker(std::max(1u, workers));

    auto process = [&](index_t b, int delta, int r, unsigned worker) {
        const index_t lo = parts.cuts[static_cast<std::size_t>(b - r)];
        sparse_column& scratch = scratch_by_worker[worker];
        for (index_t j = parts.chunk_begin(b); j <= parts.chunk_end(b); ++j) {
            if (m.dim(j) != delta || state.paired(j)) continue;
            sparse_column& col = reduced[static_cast<std::size_t>(j - 1)];
            while (!col.empty() && col.back() > lo && lookup[col.back()] != 0) {
                add_columns_into(col, reduced[static_cast<std::size_t>(lookup[col.back()] - 1)], scratch);
                ++additions_by_chunk[static_cast<std::size_t>(b)];
            }
            if (!col.empty() && col.back() > lo) {
                const index_t i = col.back();
                lookup.owner[static_cast<std::size_t>(i)] = j;
                state.partner[static_cast<std::size_t>(i)] = j;
                state.partner[static_cast<std::size_t>(j)] = i;
                pairs_by_chunk[static_cast<std::size_t>(b)].emplace_back(i, j);
                clears_by_chunk[static_cast<std::size_t>(b)].push_back(i);
            }
        }
    };

    step1_totals totals;
    auto flush_clears = [&] {
        for (auto& list : clears_by_chunk) {
            for (index_t i : list) reduced[static_cast<std::size_t>(i - 1)].clear();
            totals.clears += list.size();
            list.clear();
        }
    };

    for (int delta = d_max; delta >= 0; --delta) {
        // phase 1: same-chunk pairs
        detail::parallel_tasks(chunk_count, workers, [&](index_t task, unsigned worker) {
            process(task + 1, delta, 1, worker);
        });
        flush_clears();
        // phase 2: pairs into the left neighbor, even wave then odd wave
        for (int parity = 0; parity < 2; ++parity) {
            std::vector<index_t> wave;
            for (index_t b = 2; b <= chunk_count; ++b)
                if (b % 2 == parity) wave.push_back(b);
            detail::parallel_tasks(static_cast<index_t>(wave.size()), workers,
                                   [&](index_t task, unsigned worker) {
                                       process(wave[static_cast<std::size_t>(task)], delta, 2, worker);
                                   });
            flush_clears();
        }
    }

    for (index_t b = 1; b <= chunk_count; ++b) {
        totals.additions += additions_by_chunk[static_cast<std::size_t>(b)];
        auto& bucket = pairs_by_chunk[static_cast<std::size_t>(b)];
        pairs.insert(pairs.end(), bucket.begin(), bucket.end());
    }

    const index_t n = m.size();
    for (index_t j = 1; j <= n; ++j)
        state.scope[static_cast<std::size_t>(j)] =
            state.paired(j) ? locality::local : locality::global;
    return totals;
}

void require_partition(const chunk_partition& parts, index_t n, const char* who) {
    auto violations = check_partition(parts, n);
    if (!violations.empty())
        throw std::invalid_argument(std::string(who) + ": invalid partition: " + violations.front());
}

void require_workers(unsigned workers, const char* who) {
    if (workers < 1) throw std::invalid_argument(std::string(who) + ": workers must be >= 1");
}

}  // namespace

local_reduction_result local_chunk_reduction(const boundary_matrix& m, const chunk_partition& parts,
                                             unsigned workers) {
    detail::require_valid(m, "local_chunk_reduction");
    require_partition(parts, m.size(), "local_chunk_reduction");
    require_workers(workers, "local_chunk_reduction");

    const index_t n = m.size();
    local_reduction_result out{m.columns, pivot_lookup(n), {}, column_state(n), 0, 0};
    out.pairing.n = n;
    step1_totals totals =
        run_local_reduction(m, parts, workers, out.reduced, out.lookup, out.state, out.pairing.pairs);
    out.additions = totals.additions;
    out.clears = totals.clears;
    out.pairing.canonicalize();
    return out;
}

void mark_active_entries(const std::vector<sparse_column>& reduced, column_state& state,
                         const pivot_lookup& lookup, unsigned workers) {
    const index_t n = static_cast<index_t>(reduced.size());
    std::vector<index_t> unpaired;
    for (index_t k = 1; k <= n; ++k)
        if (!state.paired(k)) unpaired.push_back(k);
    detail::parallel_tasks(static_cast<index_t>(unpaired.size()), workers,
                           [&](index_t task, unsigned) {
                               resolve_activity(reduced, state, lookup,
                                                unpaired[static_cast<std::size_t>(task)]);
                           });
}

void compress_column(std::vector<sparse_column>& reduced, index_t k, column_state& state,
                     const pivot_lookup& lookup, compress_scratch& scratch,
                     std::uint64_t& additions, std::uint64_t& zeroings) {
    sparse_column& col = reduced[static_cast<std::size_t>(k - 1)];
    if (col.empty()) return;

    scratch.heap.assign(col.begin(), col.end());
    std::make_heap(scratch.heap.begin(), scratch.heap.end());
    scratch.touched.assign(col.begin(), col.end());
    for (index_t i : col) scratch.present[static_cast<std::size_t>(i)] = 1;
    scratch.kept.clear();

    while (!scratch.heap.empty()) {
        std::pop_heap(scratch.heap.begin(), scratch.heap.end());
        const index_t entry = scratch.heap.back();
        scratch.heap.pop_back();
        if (!scratch.present[static_cast<std::size_t>(entry)]) continue;  // cancelled or duplicate
        const index_t partner = state.partner_of(entry);
        if (partner == 0) {
            // global row: stays
            scratch.present[static_cast<std::size_t>(entry)] = 0;
            scratch.kept.push_back(entry);
            continue;
        }
        if (partner < entry || !resolve_activity(reduced, state, lookup, lookup[entry])) {
            // local negative row, or local positive row with inactive owner
            scratch.present[static_cast<std::size_t>(entry)] = 0;
            ++zeroings;
            continue;
        }
        // active local positive row: eliminate by adding the owner column,
        // whose pivot is exactly this entry
        const sparse_column& owner = reduced[static_cast<std::size_t>(lookup[entry] - 1)];
        for (index_t r : owner) {
            unsigned char& bit = scratch.present[static_cast<std::size_t>(r)];
            if (bit) {
                bit = 0;
            } else {
                bit = 1;
                scratch.touched.push_back(r);
                scratch.heap.push_back(r);
                std::push_heap(scratch.heap.begin(), scratch.heap.end());
            }
        }
        ++additions;
    }

    for (index_t i : scratch.touched) scratch.present[static_cast<std::size_t>(i)] = 0;
    scratch.touched.clear();
    col.assign(scratch.kept.rbegin(), scratch.kept.rend());
}

reduction_result reduce_chunk(const boundary_matrix& m, const chunk_partition& parts,
                              unsigned workers) {
    detail::require_valid(m, "reduce_chunk");
    require_partition(parts, m.size(), "reduce_chunk");
    require_workers(workers, "reduce_chunk");

    detail::stopwatch total;
    const index_t n = m.size();
    const int d_max = m.max_dim();

    reduction_result out;
    out.pairing.n = n;
    out.stats.m = parts.chunk_count();
    out.stats.l_max = parts.max_chunk_size();

    // step 1: local chunk reduction
    detail::stopwatch step1_timer;
    std::vector<sparse_column> reduced = m.columns;
    pivot_lookup lookup(n);
    column_state state(n);
    step1_totals totals = run_local_reduction(m, parts, workers, reduced, lookup, state, out.pairing.pairs);
    out.stats.additions += totals.additions;
    out.stats.clears += totals.clears;
    for (index_t j = 1; j <= n; ++j)
        if (!state.paired(j)) ++out.stats.g;
    out.stats.seconds_step1 = step1_timer.seconds();

    mark_active_entries(reduced, state, lookup, workers);

    const unsigned worker_slots = std::max(1u, workers);
    std::vector<compress_scratch> scratch_by_worker;
    scratch_by_worker.reserve(worker_slots);
    for (unsigned w = 0; w < worker_slots; ++w) scratch_by_worker.emplace_back(n);
    std::vector<std::uint64_t> additions_by_worker(worker_slots, 0);
    std::vector<std::uint64_t> zeroings_by_worker(worker_slots, 0);
    sparse_column scratch;

    for (int delta = d_max; delta >= 0; --delta) {
        // step 2: compress the still-unpaired columns of this dimension
        detail::stopwatch step2_timer;
        std::vector<index_t> to_compress;
        for (index_t j = 1; j <= n; ++j)
            if (m.dim(j) == delta && !state.paired(j)) to_compress.push_back(j);
        detail::parallel_tasks(static_cast<index_t>(to_compress.size()), workers,
                               [&](index_t task, unsigned worker) {
                                   const index_t k = to_compress[static_cast<std::size_t>(task)];
                                   compress_column(reduced, k, state, lookup,
                                                   scratch_by_worker[worker],
                                                   additions_by_worker[worker],
                                                   zeroings_by_worker[worker]);
#ifndef NDEBUG
                                   for (index_t r : reduced[static_cast<std::size_t>(k - 1)])
                                       assert(!state.paired(r) && "compressed column touches a paired row");
#endif
                               });
        out.stats.seconds_step2 += step2_timer.seconds();

        // step 3: reduce the global columns of this dimension, with clearing
        detail::stopwatch step3_timer;
        for (index_t j : to_compress) {
            if (state.paired(j)) continue;  // cleared by an earlier column of this round
            sparse_column& col = reduced[static_cast<std::size_t>(j - 1)];
            while (!col.empty() && lookup[col.back()] != 0) {
                add_columns_into(col, reduced[static_cast<std::size_t>(lookup[col.back()] - 1)], scratch);
                ++out.stats.additions;
            }
            if (!col.empty()) {
                const index_t i = col.back();
                lookup.owner[static_cast<std::size_t>(i)] = j;
                reduced[static_cast<std::size_t>(i - 1)].clear();
                ++out.stats.clears;
                state.partner[static_cast<std::size_t>(i)] = j;
                state.partner[static_cast<std::size_t>(j)] = i;
                out.pairing.pairs.emplace_back(i, j);
            }
        }
        out.stats.seconds_step3 += step3_timer.seconds();
    }

    for (unsigned w = 0; w < worker_slots; ++w) {
        out.stats.additions += additions_by_worker[w];
        out.stats.compress_zeroings += zeroings_by_worker[w];
    }
    for (index_t k = 1; k <= n; ++k)
        if (!state.paired(k)) out.pairing.essential.push_back(k);
    out.pairing.canonicalize();
    out.stats.seconds_total = total.seconds();
    return out;
}

}  // namespace chunkph
