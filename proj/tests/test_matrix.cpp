#include "doctest.h"

#include "lvx/errors.hpp"
#include "lvx/matrix.hpp"

#include <cmath>

using namespace lvx;

TEST_CASE("matmul multiplies small matrices correctly") {
    Matrix a = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
    Matrix b = Matrix::from_rows({{7, 8}, {9, 10}, {11, 12}});
    Matrix c = matmul(a, b);
    CHECK(c.rows == 2);
    CHECK(c.cols == 2);
    CHECK(c(0, 0) == doctest::Approx(58.0));
    CHECK(c(0, 1) == doctest::Approx(64.0));
    CHECK(c(1, 0) == doctest::Approx(139.0));
    CHECK(c(1, 1) == doctest::Approx(154.0));
}

TEST_CASE("matmul_nt and matmul_tn agree with explicit transposes") {
    Matrix a = Matrix::from_rows({{1, -2, 0.5}, {3, 4, -1}});
    Matrix b = Matrix::from_rows({{2, 1, -3}, {0, 5, 2}, {1, 1, 1}, {-2, 0, 4}});
    CHECK(bitwise_equal(matmul_nt(a, b), matmul(a, transpose(b))));

    Matrix d = Matrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
    Matrix e = Matrix::from_rows({{1, 0, 2}, {0, 1, 1}, {2, 2, 0}});
    CHECK(bitwise_equal(matmul_tn(d, e), matmul(transpose(d), e)));
}

TEST_CASE("matmul rejects incompatible shapes") {
    Matrix a(2, 3), b(4, 1);
    CHECK_THROWS_AS(matmul(a, b), DimensionError);
    CHECK_THROWS_AS(matmul_nt(a, Matrix(2, 4)), DimensionError);
    CHECK_THROWS_AS(matmul_tn(a, Matrix(3, 2)), DimensionError);
}

TEST_CASE("transpose swaps rows and columns") {
    Matrix m = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
    Matrix t = transpose(m);
    CHECK(t.rows == 3);
    CHECK(t.cols == 2);
    CHECK(t(0, 1) == doctest::Approx(4.0));
    CHECK(t(2, 0) == doctest::Approx(3.0));
}

TEST_CASE("require_finite flags NaN and Inf") {
    Matrix m(2, 2, 1.0);
    CHECK_NOTHROW(require_finite(m, "m"));
    m(1, 1) = std::nan("");
    CHECK(!all_finite(m));
    CHECK_THROWS_AS(require_finite(m, "m"), NumericError);
    m(1, 1) = INFINITY;
    CHECK_THROWS_AS(require_finite(m, "m"), NumericError);
}

TEST_CASE("bitwise_equal distinguishes shape and content") {
    Matrix a(2, 3, 0.5), b(2, 3, 0.5);
    CHECK(bitwise_equal(a, b));
    b(0, 0) = 0.5 + 1e-17; // same value after rounding
    CHECK(bitwise_equal(a, b));
    b(0, 0) = 0.25;
    CHECK(!bitwise_equal(a, b));
    CHECK(!bitwise_equal(a, Matrix(3, 2, 0.5)));
}
