#include <random>

#include "chunkph/boundary_matrix.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace chunkph;
using chunkph_test::triangle_matrix;

TEST_SUITE_BEGIN("boundary_matrix");

TEST_CASE("pivot") {
    CHECK(pivot({1, 3, 5}) == 5);
    CHECK_FALSE(pivot({}).has_value());
    CHECK(pivot({2}) == 2);
}

TEST_CASE("add_columns") {
    CHECK(add_columns({1, 2}, {2, 3}) == sparse_column{1, 3});
    CHECK(add_columns({1, 2}, {1, 2}) == sparse_column{});
    CHECK(add_columns({}, {4, 7}) == sparse_column{4, 7});
}

TEST_CASE("add_columns properties") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto random_column = [&] {
            sparse_column c;
            for (index_t i = 1; i <= 30; ++i)
                if (rng() % 3 == 0) c.push_back(i);
            return c;
        };
        const sparse_column a = random_column();
        const sparse_column b = random_column();
        const sparse_column sum = add_columns(a, b);
        // canonical-form closure
        for (std::size_t k = 0; k + 1 < sum.size(); ++k) CHECK(sum[k] < sum[k + 1]);
        // involution in the second argument
        CHECK(add_columns(sum, b) == a);
        // in-place variant agrees
        sparse_column target = a, scratch;
        add_columns_into(target, b, scratch);
        CHECK(target == sum);
    }
}

TEST_CASE("validate accepts the triangle matrix") {
    CHECK(validate(triangle_matrix()).empty());
}

TEST_CASE("validate reports a diagonal entry") {
    boundary_matrix m;
    m.columns = {{}, {2}};
    m.dims = {0, 1};
    const auto violations = validate(m);
    REQUIRE(violations.size() == 1);
    CHECK(violations.front().starts_with("not upper-triangular at column 2"));
}

TEST_CASE("validate reports a dimension mismatch") {
    boundary_matrix m;
    m.columns = {{}, {1}};
    m.dims = {1, 1};  // row 1 should have dimension 0
    const auto violations = validate(m);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations.front().find("dimension consistency") != std::string::npos);
}

TEST_CASE("validate reports unsorted rows and broken boundary-of-boundary") {
    boundary_matrix unsorted;
    unsorted.columns = {{}, {}, {}, {2, 1}};
    unsorted.dims = {0, 0, 0, 1};
    REQUIRE_FALSE(validate(unsorted).empty());
    CHECK(validate(unsorted).front().find("not strictly increasing") != std::string::npos);

    // triangle cell missing one edge in its boundary
    boundary_matrix broken = triangle_matrix();
    broken.columns[6] = {4, 5};
    const auto violations = validate(broken);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations.front().find("boundary of boundary") != std::string::npos);
}

TEST_CASE("anti_transpose of the triangle matrix") {
    const boundary_matrix m = triangle_matrix();
    const boundary_matrix dual = anti_transpose(m);
    CHECK(validate(dual).empty());
    CHECK(dual.orient == orientation::cohomology);
    // row 4 of the input has its single entry in column 7; reversed, column
    // 7-4+1 = 4 of the result is {1}
    CHECK(dual.column(4) == sparse_column{1});
    CHECK(anti_transpose(dual) == m);
}

TEST_CASE("anti_transpose of the empty matrix") {
    const boundary_matrix empty;
    CHECK(anti_transpose(empty) == boundary_matrix{{}, {}, orientation::cohomology});
}

TEST_CASE("anti_transpose rejects invalid input") {
    boundary_matrix m;
    m.columns = {{2}};
    m.dims = {0};
    CHECK_THROWS_AS(anti_transpose(m), std::invalid_argument);
}

TEST_CASE("anti_transpose of builder output stays valid") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto built = chunkph_test::random_rips(rng, 8);
        const boundary_matrix dual = anti_transpose(built.matrix);
        CHECK(validate(dual).empty());
        CHECK(anti_transpose(dual).columns == built.matrix.columns);
    }
}

TEST_SUITE_END();
