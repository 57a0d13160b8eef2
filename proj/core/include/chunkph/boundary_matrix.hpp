#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chunkph {

// 1-based index of a column (equivalently, of a row) of a boundary matrix.
using index_t = std::int64_t;

// A sparse Z2 column: the 1-based row indices of its non-zero entries,
// strictly increasing (canonical form).
using sparse_column = std::vector<index_t>;

enum class orientation : unsigned char { homology, cohomology };

// Sparse Z2 boundary matrix of a simplexwise filtration. Column j lists the
// codimension-1 faces of the j-th cell; dims[j-1] is that cell's dimension.
// A validated matrix is treated as immutable; reduction engines work on a
// private copy of the columns.
struct boundary_matrix {
    std::vector<sparse_column> columns;
    std::vector<int> dims;
    orientation orient = orientation::homology;

    index_t size() const { return static_cast<index_t>(columns.size()); }

    // 1-based accessors.
    const sparse_column& column(index_t j) const { return columns[static_cast<std::size_t>(j - 1)]; }
    int dim(index_t j) const { return dims[static_cast<std::size_t>(j - 1)]; }

    int max_dim() const;

    bool operator==(const boundary_matrix&) const = default;
};

// Largest row index of a non-zero column; empty optional for the zero column.
std::optional<index_t> pivot(const sparse_column& column);

// Z2 sum (symmetric difference) of two canonical columns; result is canonical.
sparse_column add_columns(const sparse_column& target, const sparse_column& source);

// In-place variant: target <- target + source, using scratch to avoid
// reallocating on every call.
void add_columns_into(sparse_column& target, const sparse_column& source, sparse_column& scratch);

// Checks all boundary-matrix invariants (canonical columns, upper-triangular,
// dimension consistency, boundary-of-boundary). Returns one message per
// violation, empty if the matrix is valid.
std::vector<std::string> validate(const boundary_matrix& m);

// Transpose composed with reversal of row and column order:
// result[i][j] = m[n+1-j][n+1-i]. Dimensions are relabeled as
// d_max - dims[n+1-j] so the result is again a valid boundary matrix; the
// orientation flag is flipped. Throws std::invalid_argument on invalid input.
boundary_matrix anti_transpose(const boundary_matrix& m);

}  // namespace chunkph
