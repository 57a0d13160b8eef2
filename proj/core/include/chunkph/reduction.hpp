#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "chunkph/boundary_matrix.hpp"
#include "chunkph/pairing.hpp"

namespace chunkph {

// Operation counters and the n/m/l/g parameters of a reduction run.
struct reduction_stats {
    std::uint64_t additions = 0;          // left-to-right column additions
    std::uint64_t clears = 0;             // columns set to zero by the clear shortcut
    std::uint64_t compress_zeroings = 0;  // entries zeroed because their row is inactive
    index_t g = 0;                        // columns left unpaired by local reduction (chunk engine)
    index_t m = 0;                        // chunk count
    index_t l_max = 0;                    // largest chunk size
    double seconds_total = 0.0;
    double seconds_step1 = 0.0;
    double seconds_step2 = 0.0;
    double seconds_step3 = 0.0;
};

struct reduction_result {
    persistence_pairing pairing;
    reduction_stats stats;
};

// L of the reduction algorithms: owner[i] is the column whose reduced form has
// pivot i, or 0 if no such column has been recorded yet.
struct pivot_lookup {
    std::vector<index_t> owner;  // size n+1, 1-based

    explicit pivot_lookup(index_t n) : owner(static_cast<std::size_t>(n) + 1, 0) {}
    index_t operator[](index_t i) const { return owner[static_cast<std::size_t>(i)]; }
};

// Cut points 0 = t_0 < t_1 < ... < t_m = n; chunk b covers columns
// t_{b-1}+1 .. t_b. For n = 0 the only partition is cuts = {0} with m = 0.
struct chunk_partition {
    std::vector<index_t> cuts;

    index_t chunk_count() const { return static_cast<index_t>(cuts.size()) - 1; }
    index_t chunk_begin(index_t b) const { return cuts[static_cast<std::size_t>(b - 1)] + 1; }
    index_t chunk_end(index_t b) const { return cuts[static_cast<std::size_t>(b)]; }
    index_t min_chunk_size() const;
    index_t max_chunk_size() const;
};

// Rejects cut sequences that are not strictly increasing from 0 to n.
std::vector<std::string> check_partition(const chunk_partition& parts, index_t n);

chunk_partition make_sqrt_partition(index_t n);
chunk_partition make_fixed_partition(index_t n, index_t chunk_size);
// One chunk per maximal run of equal labels. Labels must be given for every
// column, runs of equal labels consecutive.
chunk_partition make_lower_star_partition(const std::vector<double>& labels);

enum class locality : unsigned char { undetermined, local, global };
enum class activity : unsigned char { unmarked, inactive, active };

// Per-column bookkeeping of the chunk engine. partner[j] = 0 means unpaired.
// Activity marks are shared between workers; writes are idempotent because
// activity is a pure function of the frozen step-1 matrix.
struct column_state {
    std::vector<index_t> partner;                       // size n+1
    std::vector<locality> scope;                        // size n+1
    std::vector<std::atomic<unsigned char>> marks;      // size n+1, activity values

    explicit column_state(index_t n);

    bool paired(index_t j) const { return partner[static_cast<std::size_t>(j)] != 0; }
    index_t partner_of(index_t j) const { return partner[static_cast<std::size_t>(j)]; }
    activity mark(index_t j) const {
        return static_cast<activity>(marks[static_cast<std::size_t>(j)].load(std::memory_order_relaxed));
    }
};

// Output of the first step of the chunk algorithm: a derivation of the input
// in which every local column is reduced, the pivot lookup covering the local
// pairs, the local pairs themselves (essential indices are not known yet), and
// the paired/unpaired state.
struct local_reduction_result {
    std::vector<sparse_column> reduced;
    pivot_lookup lookup;
    persistence_pairing pairing;  // local pairs only; essential left empty
    column_state state;
    std::uint64_t additions = 0;
    std::uint64_t clears = 0;
};

// Left-to-right reduction, processing columns 1..n in order.
reduction_result reduce_standard(const boundary_matrix& m);

// Reduction with the clearing optimization: columns are processed by
// decreasing stored dimension, and the positive partner of every recorded
// pair is set to zero instead of being reduced.
reduction_result reduce_twist(const boundary_matrix& m);

// Left-to-right reduction with compression: after a negative column j with
// pivot i is reduced, entries at row j are zeroed in all unreduced columns
// and entries at row i are eliminated by adding column j.
reduction_result reduce_compress(const boundary_matrix& m);

// Step 1 of the chunk algorithm: two phases of the spectral sequence
// reduction per dimension, chunks processed concurrently by `workers`
// threads. Finds exactly the pairs lying in the same or in adjacent chunks.
local_reduction_result local_chunk_reduction(const boundary_matrix& m, const chunk_partition& parts,
                                             unsigned workers = 1);

// Classifies columns reachable from the unpaired columns as active or
// inactive. Idempotent and safe to run concurrently; compress_column resolves
// any column the eager pass left unmarked on demand through the same table.
void mark_active_entries(const std::vector<sparse_column>& reduced, column_state& state,
                         const pivot_lookup& lookup, unsigned workers = 1);

// Scratch space for compress_column: one per worker.
struct compress_scratch {
    std::vector<unsigned char> present;  // size n+1 presence bits
    std::vector<index_t> touched;
    std::vector<index_t> heap;
    std::vector<index_t> kept;

    explicit compress_scratch(index_t n) : present(static_cast<std::size_t>(n) + 1, 0) {}
};

// Step 2 for one unpaired column k: zeroes entries at inactive row indices and
// eliminates active local-positive entries by column addition, leaving
// non-zero entries only at unpaired (global) rows.
void compress_column(std::vector<sparse_column>& reduced, index_t k, column_state& state,
                     const pivot_lookup& lookup, compress_scratch& scratch,
                     std::uint64_t& additions, std::uint64_t& zeroings);

// The three-step chunk algorithm: local chunk reduction, global column
// compression, and reduction of the nested global submatrix, the last two
// interleaved per dimension with clearing. The pairing is identical to
// reduce_standard's for every worker count.
reduction_result reduce_chunk(const boundary_matrix& m, const chunk_partition& parts,
                              unsigned workers = 1);

}  // namespace chunkph
