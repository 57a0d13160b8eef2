#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chunkph/boundary_matrix.hpp"

namespace chunkph {

// A d-dimensional grayscale image: one scalar per vertex, row-major
// (last extent varies fastest).
struct grayscale_image {
    std::vector<index_t> shape;
    std::vector<double> values;

    index_t vertex_count() const;
};

struct point_cloud {
    std::vector<std::vector<double>> points;  // equal dimension each
};

// Per-column filtration data attached to a built matrix. Values are
// non-decreasing in column order and double as the labels of the lower-star
// chunk policy.
struct filtration_meta {
    std::vector<double> values;
    std::vector<std::vector<index_t>> labels;  // cube coordinates or vertex tuple
    orientation orient = orientation::homology;
};

struct built_filtration {
    boundary_matrix matrix;
    filtration_meta meta;
};

// Full cubical complex of the image under the lower-star filtration: every
// axis-aligned cube of dimensions 0..d, valued by the maximum over its
// vertices, ordered by (value, dimension, lexicographic cell coordinates).
// Throws std::invalid_argument on an empty image.
built_filtration lower_star_cubical(const grayscale_image& img);

// k-skeleton of the Vietoris-Rips filtration: all simplices on the points
// with at most max_dim+1 vertices and diameter at most the threshold
// (default: the maximum pairwise distance), ordered by
// (diameter, dimension, lexicographic vertex tuple).
built_filtration rips_filtration(const point_cloud& pc, int max_dim,
                                 std::optional<double> threshold = std::nullopt);

enum class synth_kind { smooth, noise, mixed };

// Deterministic synthetic test images: a low-frequency random Fourier sum,
// i.i.d. uniform noise, or the sum of the two fields after normalizing each
// to [0, 1].
grayscale_image synth_image(synth_kind kind, const std::vector<index_t>& shape, std::uint64_t seed);

synth_kind parse_synth_kind(const std::string& name);

}  // namespace chunkph
