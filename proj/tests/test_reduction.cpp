#include <random>

#include "chunkph/reduction.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace chunkph;
using chunkph_test::oracle_reduce;
using chunkph_test::triangle_matrix;

namespace {

const std::vector<index_pair> triangle_pairs{{2, 4}, {3, 5}, {6, 7}};

boundary_matrix isolated_vertices(index_t count) {
    boundary_matrix m;
    m.columns.assign(static_cast<std::size_t>(count), {});
    m.dims.assign(static_cast<std::size_t>(count), 0);
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("reduction");

TEST_CASE("reduce_standard on the triangle matrix") {
    const auto [pairing, stats] = reduce_standard(triangle_matrix());
    CHECK(pairing.pairs == triangle_pairs);
    CHECK(pairing.essential == std::vector<index_t>{1});
    // column 6 takes the two additions (+col5, +col4); nothing else reduces
    CHECK(stats.additions == 2);
    CHECK(oracle_reduce(triangle_matrix(), 1) == pairing);
}

TEST_CASE("reduce_standard on degenerate inputs") {
    const auto vertices = reduce_standard(isolated_vertices(3));
    CHECK(vertices.pairing.pairs.empty());
    CHECK(vertices.pairing.essential == std::vector<index_t>{1, 2, 3});

    const auto empty = reduce_standard(boundary_matrix{});
    CHECK(empty.pairing.pairs.empty());
    CHECK(empty.pairing.essential.empty());
}

TEST_CASE("engines reject an invalid matrix before any work") {
    boundary_matrix bad;
    bad.columns = {{}, {2}};
    bad.dims = {0, 1};
    CHECK_THROWS_AS(reduce_standard(bad), std::invalid_argument);
    CHECK_THROWS_AS(reduce_twist(bad), std::invalid_argument);
    CHECK_THROWS_AS(reduce_compress(bad), std::invalid_argument);
    CHECK_THROWS_AS(reduce_chunk(bad, make_sqrt_partition(2)), std::invalid_argument);
}

TEST_CASE("reduce_twist on the triangle matrix") {
    const auto [pairing, stats] = reduce_twist(triangle_matrix());
    CHECK(pairing.pairs == triangle_pairs);
    CHECK(pairing.essential == std::vector<index_t>{1});
    // columns 2, 3 and 6 are cleared, so no addition ever runs
    CHECK(stats.clears == 3);
    CHECK(stats.additions == 0);
}

TEST_CASE("reduce_twist on a single vertex") {
    const auto [pairing, stats] = reduce_twist(isolated_vertices(1));
    CHECK(pairing.pairs.empty());
    CHECK(pairing.essential == std::vector<index_t>{1});
    CHECK(stats.clears == 0);
}

TEST_CASE("clearing economy on the triangle matrix") {
    CHECK(reduce_twist(triangle_matrix()).stats.additions <=
          reduce_standard(triangle_matrix()).stats.additions);
}

TEST_CASE("reduce_compress on the triangle matrix") {
    const auto [pairing, stats] = reduce_compress(triangle_matrix());
    CHECK(pairing.pairs == triangle_pairs);
    CHECK(pairing.essential == std::vector<index_t>{1});
    // rows 4 and 5 are zeroed in column 7 once those columns turn out
    // negative; rows 2 and 3 are eliminated by one addition each
    CHECK(stats.compress_zeroings == 2);
    CHECK(stats.additions == 2);
}

TEST_CASE("reduce_compress on an all-zero matrix") {
    const auto [pairing, stats] = reduce_compress(isolated_vertices(4));
    CHECK(stats.compress_zeroings == 0);
    CHECK(pairing.essential.size() == 4);
}

TEST_CASE("all engines agree with the oracle on fuzzed inputs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const boundary_matrix m =
            trial % 2 == 0 ? chunkph_test::random_rips(rng, 7).matrix
                           : chunkph_test::random_image_filtration(rng, 4).matrix;
        if (m.size() > 300) continue;
        const persistence_pairing expected = oracle_reduce(m, static_cast<std::uint64_t>(trial));
        const auto standard = reduce_standard(m);
        CHECK(standard.pairing == expected);
        const auto twist = reduce_twist(m);
        CHECK(twist.pairing == expected);
        CHECK(twist.stats.additions <= standard.stats.additions);
        CHECK(twist.stats.clears == twist.pairing.pairs.size());
        CHECK(reduce_compress(m).pairing == expected);
        CHECK(check_pairing(expected, m).empty());
    }
}

TEST_CASE("cohomology run: engines agree on the anti-transposed matrix") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const boundary_matrix m = chunkph_test::random_rips(rng, 7).matrix;
        if (m.size() > 300) continue;
        const boundary_matrix dual = anti_transpose(m);
        const persistence_pairing expected = oracle_reduce(dual, static_cast<std::uint64_t>(trial));
        CHECK(reduce_standard(dual).pairing == expected);
        CHECK(reduce_twist(dual).pairing == expected);
        CHECK(map_dual_pairing(expected) == reduce_standard(m).pairing);
    }
}

TEST_SUITE_END();
