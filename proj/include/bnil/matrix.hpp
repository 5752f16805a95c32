#pragma once

// Dense matrices over an exact scalar (Rational or Fp<P>), with exact
// elimination.  Conventions used throughout:
//
//   * row-major storage, 0-indexed internally; sizes may be zero in either
//     direction and every operation must cope with empty matrices.
//   * subspaces are given by matrices whose COLUMNS span them.
//   * submatrix_corner(A, a, b) takes the LAST a rows and FIRST b columns.
//
// Generic elimination is plain Gaussian elimination over the field.  For
// Rational there are non-template overloads (linalg.cpp) that clear row
// denominators and run fraction-free Bareiss elimination over the integers,
// which bounds intermediate entry growth; the generic path stays available
// as rank_gauss/det_gauss and the two are cross-checked in the tests.

#include "bnil/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace bnil {

template <class K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative size");
    }
    Mat(int rows, int cols, std::vector<K> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != size_t(rows) * cols) throw std::invalid_argument("Mat: entry count");
    }
    // Row-of-rows constructor, for literals in tests and examples.
    Mat(std::initializer_list<std::initializer_list<K>> rows) {
        rows_ = int(rows.size());
        cols_ = rows_ ? int(rows.begin()->size()) : 0;
        for (auto& r : rows) {
            if (int(r.size()) != cols_) throw std::invalid_argument("Mat: ragged rows");
            e_.insert(e_.end(), r.begin(), r.end());
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    K& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const K& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Mat: shape mismatch in sum");
        Mat r = *this;
        for (size_t t = 0; t < e_.size(); ++t) r.e_[t] += o.e_[t];
        return r;
    }
    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Mat: shape mismatch in difference");
        Mat r = *this;
        for (size_t t = 0; t < e_.size(); ++t) r.e_[t] -= o.e_[t];
        return r;
    }
    Mat scaled(const K& c) const {
        Mat r = *this;
        for (auto& x : r.e_) x *= c;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_square() const { return rows_ == cols_; }

    // Contiguous block: rows [r0, r0+nr), cols [c0, c0+nc).
    Mat block(int r0, int c0, int nr, int nc) const {
        if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_)
            throw std::invalid_argument("Mat: block out of range");
        Mat r(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }

    Mat col(int j) const { return block(0, j, rows_, 1); }

private:
    int rows_, cols_;
    std::vector<K> e_;
};

// [A | B] side by side; row counts must agree.
template <class K>
Mat<K> hcat(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row count mismatch");
    Mat<K> r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

// Last a rows, first b columns: the corner blocks all the invariant theory runs on.
template <class K>
Mat<K> submatrix_corner(const Mat<K>& m, int a, int b) {
    if (a < 0 || b < 0 || a > m.rows() || b > m.cols())
        throw std::invalid_argument("submatrix_corner: size out of range");
    return m.block(m.rows() - a, 0, a, b);
}

template <class K>
Mat<K> mat_pow(const Mat<K>& a, int e) {
    if (!a.is_square()) throw std::invalid_argument("mat_pow: non-square");
    if (e < 0) throw std::invalid_argument("mat_pow: negative exponent");
    Mat<K> r = Mat<K>::identity(a.rows());
    for (int t = 0; t < e; ++t) r = r * a;
    return r;
}

// P(A) for P given by coefficients in ascending powers: P[0] + P[1] x + ... (Horner).
template <class K>
Mat<K> mat_poly(const std::vector<K>& p, const Mat<K>& a) {
    if (!a.is_square()) throw std::invalid_argument("mat_poly: non-square");
    Mat<K> r(a.rows(), a.rows());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        r = r * a;
        for (int i = 0; i < a.rows(); ++i) r(i, i) += *it;
    }
    return r;
}

// Plain Gaussian elimination over the field; returns the rank.
template <class K>
int rank_gauss(Mat<K> m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            K f = m(i, c) / m(r, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

template <class K>
K det_gauss(Mat<K> m) {
    if (!m.is_square()) throw std::invalid_argument("det: non-square");
    int n = m.rows();
    K d(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) return K(0);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            d = -d;
        }
        d *= m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            K f = m(i, c) / m(c, c);
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

// Generic entry points; Rational overloads below route to Bareiss.
template <class K>
int rank(const Mat<K>& m) { return rank_gauss(m); }
template <class K>
K det(const Mat<K>& m) { return det_gauss(m); }

int rank(const Mat<Rational>& m);
Rational det(const Mat<Rational>& m);

template <class K>
int kernel_dim(const Mat<K>& m) { return m.cols() - rank(m); }

// dim(col-span(U) ∩ col-span(V)) = rk U + rk V − rk [U|V].
template <class K>
int intersection_dim(const Mat<K>& u, const Mat<K>& v) {
    if (u.rows() != v.rows())
        throw std::invalid_argument("intersection_dim: ambient dimension mismatch");
    return rank(u) + rank(v) - rank(hcat(u, v));
}

// Unique solution of A x = b when A has full column rank and the system is
// consistent; both failure modes throw.
Mat<Rational> solve_unique(const Mat<Rational>& a, const Mat<Rational>& b);

Mat<Rational> inverse(const Mat<Rational>& a);

}  // namespace bnil
