#include "lvx/matrix.hpp"

#include "lvx/errors.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace lvx {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> init) {
    Matrix m;
    m.rows = init.size();
    m.cols = init.size() ? init.begin()->size() : 0;
    m.data.reserve(m.rows * m.cols);
    for (const auto& r : init) {
        if (r.size() != m.cols)
            throw DimensionError("from_rows: ragged row lengths");
        m.data.insert(m.data.end(), r.begin(), r.end());
    }
    return m;
}

namespace {

[[noreturn]] void shape_error(const char* op, const Matrix& a, const Matrix& b) {
    throw DimensionError(std::string(op) + ": incompatible shapes " +
                         std::to_string(a.rows) + "x" + std::to_string(a.cols) + " and " +
                         std::to_string(b.rows) + "x" + std::to_string(b.cols));
}

} // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) shape_error("matmul", a, b);
    Matrix c(a.rows, b.cols);
    const std::size_t m = a.rows, k = a.cols, n = b.cols;
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = c.data.data() + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = a.data[i * k + p];
            if (aip == 0.0) continue;
            const double* brow = b.data.data() + p * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
        }
    }
    return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) shape_error("matmul_nt", a, b);
    Matrix c(a.rows, b.rows);
    const std::size_t m = a.rows, k = a.cols, n = b.rows;
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = a.data.data() + i * k;
        double* crow = c.data.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const double* brow = b.data.data() + j * k;
            double acc = 0.0;
            for (std::size_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
            crow[j] = acc;
        }
    }
    return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows) shape_error("matmul_tn", a, b);
    Matrix c(a.cols, b.cols);
    const std::size_t k = a.rows, m = a.cols, n = b.cols;
    for (std::size_t p = 0; p < k; ++p) {
        const double* arow = a.data.data() + p * m;
        const double* brow = b.data.data() + p * n;
        for (std::size_t i = 0; i < m; ++i) {
            const double aval = arow[i];
            if (aval == 0.0) continue;
            double* crow = c.data.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aval * brow[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            t(j, i) = a(i, j);
    return t;
}

bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

bool all_finite(const Matrix& a) { return all_finite(std::span<const double>(a.data)); }

void require_finite(std::span<const double> v, const char* what) {
    if (!all_finite(v))
        throw NumericError(std::string(what) + ": non-finite value");
}

void require_finite(const Matrix& a, const char* what) {
    require_finite(std::span<const double>(a.data), what);
}

bool bitwise_equal(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) return false;
    return a.data.empty() ||
           std::memcmp(a.data.data(), b.data.data(), a.data.size() * sizeof(double)) == 0;
}

} // namespace lvx
