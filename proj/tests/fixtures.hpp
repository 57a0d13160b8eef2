#pragma once

// Shared matrices and fuzz-input generators for the unit and acceptance
// suites.

#include <random>
#include <vector>

#include "chunkph/boundary_matrix.hpp"
#include "chunkph/builders.hpp"

namespace chunkph_test {

// Filtered triangle: three vertices, edges {1,2}, {2,3}, {1,3}, then the
// 2-cell. Pairing (fixed with the independent oracle): P = {(2,4), (3,5),
// (6,7)}, E = {1}.
inline chunkph::boundary_matrix triangle_matrix() {
    chunkph::boundary_matrix m;
    m.columns = {{}, {}, {}, {1, 2}, {2, 3}, {1, 3}, {4, 5, 6}};
    m.dims = {0, 0, 0, 1, 1, 1, 2};
    return m;
}

inline chunkph::point_cloud random_point_cloud(std::mt19937_64& rng, int max_points, int space_dim) {
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    chunkph::point_cloud pc;
    const int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_points));
    for (int p = 0; p < count; ++p) {
        std::vector<double> point(static_cast<std::size_t>(space_dim));
        for (auto& c : point) c = coord(rng);
        pc.points.push_back(std::move(point));
    }
    return pc;
}

// Random Rips matrix on at most max_points points, skeleton dimension 2 or 3,
// occasionally truncated by a threshold.
inline chunkph::built_filtration random_rips(std::mt19937_64& rng, int max_points = 12) {
    const auto pc = random_point_cloud(rng, max_points, 2 + static_cast<int>(rng() % 2));
    const int max_dim = 2 + static_cast<int>(rng() % 2);
    std::optional<double> threshold;
    if (rng() % 3 == 0) threshold = 0.2 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
    return chunkph::rips_filtration(pc, max_dim, threshold);
}

// Random lower-star matrix of a synthetic image with 1 to 3 axes, every
// extent at most max_extent.
inline chunkph::built_filtration random_image_filtration(std::mt19937_64& rng,
                                                         chunkph::index_t max_extent = 8) {
    const std::size_t axes = 1 + rng() % 3;
    std::vector<chunkph::index_t> shape(axes);
    for (auto& e : shape) e = 2 + static_cast<chunkph::index_t>(rng() % static_cast<unsigned>(max_extent - 1));
    const chunkph::synth_kind kind = static_cast<chunkph::synth_kind>(rng() % 3);
    const auto img = chunkph::synth_image(kind, shape, rng());
    return chunkph::lower_star_cubical(img);
}

}  // namespace chunkph_test
