#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lvx {

/// Dense row-major matrix of 64-bit reals; the carrier for every tensor in
/// the library.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data; // rows * cols, row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> init);

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::span<const double> row(std::size_t r) const {
        return {data.data() + r * cols, cols};
    }
    std::span<double> row(std::size_t r) {
        return {data.data() + r * cols, cols};
    }

    std::size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }

    bool same_shape(const Matrix& other) const {
        return rows == other.rows && cols == other.cols;
    }
};

/// c[m x n] = a[m x k] * b[k x n]
Matrix matmul(const Matrix& a, const Matrix& b);
/// c[m x n] = a[m x k] * transpose(b[n x k])
Matrix matmul_nt(const Matrix& a, const Matrix& b);
/// c[m x n] = transpose(a[k x m]) * b[k x n]
Matrix matmul_tn(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

bool all_finite(const Matrix& a);
bool all_finite(std::span<const double> v);

/// Throws NumericError when `a` contains NaN or Inf.
void require_finite(const Matrix& a, const char* what);
void require_finite(std::span<const double> v, const char* what);

bool bitwise_equal(const Matrix& a, const Matrix& b);

} // namespace lvx
