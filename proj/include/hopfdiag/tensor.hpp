#pragma once

#include "cyclotomic.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfdiag {

inline std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Linear map k^cols -> k^rows, row-major. A morphism V^{(x)p} -> V^{(x)q}
// uses multi-indices with the first tensor factor most significant.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Scalar& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    bool is_zero() const {
        for (const auto& s : a)
            if (!s.is_zero()) return false;
        return true;
    }
};

// x * y: apply y first, then x.
inline Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    Mat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Scalar& v = x(i, k);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j) {
                const Scalar& w = y(k, j);
                if (!w.is_zero()) r(i, j) += v * w;
            }
        }
    return r;
}

inline Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch");
    Mat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

inline Mat scale(const Scalar& s, Mat m) {
    for (auto& v : m.a) v = s * v;
    return m;
}

inline Mat kron(const Mat& x, const Mat& y) {
    Mat r(x.rows * y.rows, x.cols * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            const Scalar& v = x(i, j);
            if (v.is_zero()) continue;
            for (std::size_t k = 0; k < y.rows; ++k)
                for (std::size_t l = 0; l < y.cols; ++l) {
                    const Scalar& w = y(k, l);
                    if (!w.is_zero()) r(i * y.rows + k, j * y.cols + l) = v * w;
                }
        }
    return r;
}

inline Mat kron_all(const std::vector<Mat>& ms) {
    Mat r = Mat::identity(1);
    for (const auto& m : ms) r = kron(r, m);
    return r;
}

// id_{d^l} (x) m (x) id_{d^r}
inline Mat pad(const Mat& m, std::size_t d, int l, int r) {
    return kron(kron(Mat::identity(ipow(d, l)), m), Mat::identity(ipow(d, r)));
}

// Swap of two factors of dimensions p and q.
inline Mat swap_map(std::size_t p, std::size_t q) {
    Mat m(q * p, p * q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) m(j * p + i, i * q + j) = Scalar(1);
    return m;
}

inline Mat inverse(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows;
    std::vector<std::vector<Scalar>> w(n, std::vector<Scalar>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = m(i, j);
        w[i][n + i] = Scalar(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (!w[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(w[c], w[piv]);
        Scalar inv = w[c][c].inverse();
        for (auto& v : w[c]) v = v * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || w[r][c].is_zero()) continue;
            Scalar f = w[r][c];
            for (std::size_t k = c; k < 2 * n; ++k)
                if (!w[c][k].is_zero()) w[r][k] -= f * w[c][k];
        }
    }
    Mat r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = w[i][n + j];
    return r;
}

// Multi-index array, row-major, first index most significant.
struct DenseTensor {
    std::vector<std::size_t> shape;
    std::vector<Scalar> data;

    DenseTensor() : data(1) {}
    explicit DenseTensor(std::vector<std::size_t> s) : shape(std::move(s)) {
        std::size_t n = 1;
        for (auto d : shape) n *= d;
        data.assign(n, Scalar());
    }

    std::size_t size() const { return data.size(); }

    // A form V^{(x)n} -> 1 stored as a 1 x d^n matrix.
    static DenseTensor from_form(const Mat& m, std::size_t d, int n) {
        if (m.rows != 1 || m.cols != ipow(d, n)) throw std::invalid_argument("form shape mismatch");
        DenseTensor t(std::vector<std::size_t>(n, d));
        t.data = m.a;
        return t;
    }
    Mat as_row() const {
        Mat m(1, data.size());
        m.a = data;
        return m;
    }

    friend bool operator==(const DenseTensor& x, const DenseTensor& y) {
        return x.shape == y.shape && x.data == y.data;
    }
    friend bool operator!=(const DenseTensor& x, const DenseTensor& y) { return !(x == y); }
};

}  // namespace hopfdiag
