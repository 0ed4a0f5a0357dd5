#ifndef DDTX_MAT_HPP
#define DDTX_MAT_HPP

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ddtx {

/// Dense row-major matrix. The workhorse container for embeddings,
/// activations, and weights; kept deliberately minimal.
template <typename T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c, T fill = T(0)) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

    T* row(int r) { return a.data() + static_cast<size_t>(r) * cols; }
    const T* row(int r) const { return a.data() + static_cast<size_t>(r) * cols; }

    T& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    size_t size() const { return a.size(); }

    void zero() { std::fill(a.begin(), a.end(), T(0)); }

    void resize(int r, int c) {
        rows = r;
        cols = c;
        a.assign(static_cast<size_t>(r) * c, T(0));
    }

    bool finite() const {
        for (const T& v : a)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }

    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

template <typename T>
inline T dot(const T* x, const T* y, int n) {
    T acc = T(0);
    for (int i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

template <typename T>
inline void axpy(T alpha, const T* x, T* y, int n) {
    for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

/// Y = X * W^T + b, with W stored [out, in].  Rows of W are contiguous, so
/// each output element is a single dot product.
template <typename T>
inline void linear_forward(const Mat<T>& x, const Mat<T>& w, const std::vector<T>& b, Mat<T>& y) {
    assert(x.cols == w.cols);
    y.resize(x.rows, w.rows);
    for (int i = 0; i < x.rows; ++i) {
        const T* xi = x.row(i);
        T* yi = y.row(i);
        for (int o = 0; o < w.rows; ++o)
            yi[o] = dot(xi, w.row(o), w.cols) + b[static_cast<size_t>(o)];
    }
}

/// Backward of linear_forward. dW and db are accumulated; dX is overwritten
/// (pass nullptr to skip the input gradient).
template <typename T>
inline void linear_backward(const Mat<T>& x, const Mat<T>& w, const Mat<T>& dy,
                            Mat<T>* dx, Mat<T>& dw, std::vector<T>& db) {
    if (dx) {
        dx->resize(x.rows, x.cols);
        for (int i = 0; i < x.rows; ++i) {
            const T* dyi = dy.row(i);
            T* dxi = dx->row(i);
            for (int o = 0; o < w.rows; ++o) axpy(dyi[o], w.row(o), dxi, w.cols);
        }
    }
    for (int i = 0; i < x.rows; ++i) {
        const T* dyi = dy.row(i);
        const T* xi = x.row(i);
        for (int o = 0; o < w.rows; ++o) {
            axpy(dyi[o], xi, dw.row(o), w.cols);
            db[static_cast<size_t>(o)] += dyi[o];
        }
    }
}

}  // namespace ddtx

#endif  // DDTX_MAT_HPP
