#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "fatpix/error.hpp"

namespace fatpix {

// Small dense row-major matrix. Everything in this project that needs dense
// algebra is tiny (block filters are 4n x 4n with n in the single digits), so
// naive operations are fine.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), a(r * c, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

inline Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw StructureError("matrix product shape mismatch");
    Mat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t k = 0; k < x.cols; ++k) {
            double v = x.at(i, k);
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    }
    return z;
}

inline std::vector<double> operator*(const Mat& m, const std::vector<double>& v) {
    if (m.cols != v.size()) throw StructureError("matrix-vector shape mismatch");
    std::vector<double> out(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

inline double max_abs_diff(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw StructureError("matrix shape mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) d = std::max(d, std::fabs(x.a[i] - y.a[i]));
    return d;
}

}  // namespace fatpix
