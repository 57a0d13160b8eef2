#include "chunkph/boundary_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace chunkph {

int boundary_matrix::max_dim() const {
    int d = 0;
    for (int v : dims) d = std::max(d, v);
    return d;
}

std::optional<index_t> pivot(const sparse_column& column) {
    if (column.empty()) return std::nullopt;
    return column.back();
}

sparse_column add_columns(const sparse_column& target, const sparse_column& source) {
    sparse_column out;
    out.reserve(target.size() + source.size());
    auto a = target.begin(), b = source.begin();
    while (a != target.end() && b != source.end()) {
        if (*a < *b) {
            out.push_back(*a++);
        } else if (*b < *a) {
            out.push_back(*b++);
        } else {
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, target.end());
    out.insert(out.end(), b, source.end());
    return out;
}

void add_columns_into(sparse_column& target, const sparse_column& source, sparse_column& scratch) {
    scratch.clear();
    scratch.reserve(target.size() + source.size());
    auto a = target.cbegin();
    auto b = source.cbegin();
    while (a != target.end() && b != source.end()) {
        if (*a < *b) {
            scratch.push_back(*a++);
        } else if (*b < *a) {
            scratch.push_back(*b++);
        } else {
            ++a;
            ++b;
        }
    }
    scratch.insert(scratch.end(), a, target.cend());
    scratch.insert(scratch.end(), b, source.cend());
    target.swap(scratch);
}

std::vector<std::string> validate(const boundary_matrix& m) {
    std::vector<std::string> violations;
    const index_t n = m.size();
    if (m.dims.size() != m.columns.size()) {
        violations.push_back("dimension label count " + std::to_string(m.dims.size()) +
                             " does not match column count " + std::to_string(m.columns.size()));
        return violations;
    }
    for (index_t j = 1; j <= n; ++j) {
        if (m.dim(j) < 0)
            violations.push_back("negative dimension at column " + std::to_string(j));
        const sparse_column& col = m.column(j);
        bool sorted = true;
        for (std::size_t k = 0; k + 1 < col.size(); ++k) {
            if (col[k] >= col[k + 1]) {
                sorted = false;
                break;
            }
        }
        if (!sorted) {
            violations.push_back("row indices not strictly increasing at column " + std::to_string(j));
            continue;
        }
        if (!col.empty() && col.front() < 1) {
            violations.push_back("row index below 1 at column " + std::to_string(j));
            continue;
        }
        if (!col.empty() && col.back() >= j) {
            violations.push_back("not upper-triangular at column " + std::to_string(j) + " (row " +
                                 std::to_string(col.back()) + ")");
            continue;
        }
        for (index_t i : col) {
            if (m.dim(i) != m.dim(j) - 1) {
                violations.push_back("dimension consistency violated at column " + std::to_string(j) +
                                     ": row " + std::to_string(i) + " has dimension " +
                                     std::to_string(m.dim(i)) + ", expected " +
                                     std::to_string(m.dim(j) - 1));
                break;
            }
        }
    }
    if (!violations.empty()) return violations;
    // boundary of boundary: the Z2 sum of the columns listed in column j is zero
    sparse_column acc, scratch;
    for (index_t j = 1; j <= n; ++j) {
        acc.clear();
        for (index_t i : m.column(j)) add_columns_into(acc, m.column(i), scratch);
        if (!acc.empty())
            violations.push_back("boundary of boundary non-zero at column " + std::to_string(j));
    }
    return violations;
}

boundary_matrix anti_transpose(const boundary_matrix& m) {
    auto violations = validate(m);
    if (!violations.empty())
        throw std::invalid_argument("anti_transpose: invalid matrix: " + violations.front());
    const index_t n = m.size();
    const int d_max = m.max_dim();
    boundary_matrix out;
    out.columns.resize(static_cast<std::size_t>(n));
    out.dims.resize(static_cast<std::size_t>(n));
    out.orient = m.orient == orientation::homology ? orientation::cohomology : orientation::homology;
    for (index_t c = 1; c <= n; ++c) {
        for (index_t r : m.column(c)) out.columns[static_cast<std::size_t>(n - r)].push_back(n + 1 - c);
        out.dims[static_cast<std::size_t>(n - c)] = d_max - m.dim(c);
    }
    for (auto& col : out.columns) std::sort(col.begin(), col.end());
    return out;
}

}  // namespace chunkph
