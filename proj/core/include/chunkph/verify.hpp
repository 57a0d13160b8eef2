#pragma once

#include <string>
#include <vector>

#include "chunkph/boundary_matrix.hpp"
#include "chunkph/reduction.hpp"

namespace chunkph {

struct verify_check {
    std::string name;
    bool pass = false;
    std::string detail;  // non-empty on failure
};

struct verify_report {
    std::vector<verify_check> checks;

    bool ok() const;
};

struct verify_options {
    unsigned max_workers = 4;  // chunk engine is run with workers 1 and max_workers
};

// Cross-engine verification harness: validates the matrix, runs all four
// engines (chunk with two worker counts), and checks
//   - identical pairs-file digests across all runs,
//   - pairing geometry (i < j, dimension step, P and E partition 1..n),
//   - clearing economy: additions(twist) <= additions(standard),
//   - the duality map against the anti-transposed matrix,
//   - the global-pair persistence bound for the sqrt partition,
//   - the compression postcondition after step 2.
verify_report verify_matrix(const boundary_matrix& m, const verify_options& opts = {});

}  // namespace chunkph
