#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "floorplan/rng.hpp"

namespace floorplan {

// Row-major dense matrix of doubles. All model numerics run in double
// precision so finite-difference gradient checks stay tight.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> d;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0)
        : rows(r), cols(c), d(static_cast<std::size_t>(r) * c, fill) {}

    double& at(int r, int c) { return d[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return d[static_cast<std::size_t>(r) * cols + c]; }

    double* row(int r) { return d.data() + static_cast<std::size_t>(r) * cols; }
    const double* row(int r) const { return d.data() + static_cast<std::size_t>(r) * cols; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && d == o.d;
    }

    static Matrix glorot(int r, int c, Rng& rng) {
        Matrix m(r, c);
        const double limit = std::sqrt(6.0 / static_cast<double>(r + c));
        for (double& v : m.d) v = rng.uniform(-limit, limit);
        return m;
    }

    static Matrix gaussian(int r, int c, Rng& rng, double scale = 1.0) {
        Matrix m(r, c);
        for (double& v : m.d) v = rng.gaussian() * scale;
        return m;
    }
};

// out = x * W^T + b(broadcast), x: n x in, W: out_dim x in, b: out_dim.
inline Matrix linear(const Matrix& x, const Matrix& w, const std::vector<double>& b) {
    assert(x.cols == w.cols);
    Matrix out(x.rows, w.rows);
    for (int i = 0; i < x.rows; ++i) {
        const double* xi = x.row(i);
        double* oi = out.row(i);
        for (int o = 0; o < w.rows; ++o) {
            const double* wo = w.row(o);
            double acc = b.empty() ? 0.0 : b[o];
            for (int k = 0; k < x.cols; ++k) acc += xi[k] * wo[k];
            oi[o] = acc;
        }
    }
    return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    assert(a.cols == b.rows);
    Matrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            const double* bk = b.row(k);
            double* oi = out.row(i);
            for (int j = 0; j < b.cols; ++j) oi[j] += aik * bk[j];
        }
    }
    return out;
}

inline void add_inplace(Matrix& a, const Matrix& b) {
    assert(a.same_shape(b));
    for (std::size_t i = 0; i < a.d.size(); ++i) a.d[i] += b.d[i];
}

inline Matrix relu(const Matrix& x) {
    Matrix out = x;
    for (double& v : out.d)
        if (v < 0.0) v = 0.0;
    return out;
}

inline bool all_finite(const Matrix& m) {
    for (double v : m.d)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace floorplan
