// Fraction-free elimination over the rationals.
//
// Rows are scaled to a common integer form first (rank and kernel are blind
// to row scaling; det divides the scales back out), then eliminated with the
// Bareiss one-step scheme  m(i,j) <- (m(r,c)*m(i,j) - m(i,c)*m(r,j)) / prev,
// whose divisions are exact: every intermediate entry is a minor of the
// scaled matrix, so growth stays polynomial instead of exponential.

#include "bnil/matrix.hpp"

#include <cassert>
#include <vector>

namespace bnil {

namespace {

// Matrix of integers with one scale factor per row: row i of the rational
// matrix equals (integer row i) / scale[i].
struct ScaledRows {
    std::vector<std::vector<Int>> m;
    std::vector<Int> scale;
};

ScaledRows clear_denominators(const Mat<Rational>& a) {
    ScaledRows out;
    out.m.resize(a.rows());
    out.scale.resize(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < a.cols(); ++j) l = lcm(l, a(i, j).den());
        out.scale[i] = l;
        out.m[i].resize(a.cols());
        for (int j = 0; j < a.cols(); ++j)
            out.m[i][j] = a(i, j).num() * (l / a(i, j).den());
    }
    return out;
}

// Bareiss elimination with column skipping; returns the rank.  When the
// matrix is square and nonsingular, *det_out receives the signed last pivot
// (the determinant of the integer matrix); otherwise it is set to zero.
int bareiss(std::vector<std::vector<Int>>& m, int cols, Int* det_out) {
    const int rows = int(m.size());
    Int prev = 1;
    int r = 0, sign = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            sign = -sign;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
#ifndef NDEBUG
                assert(t % prev == 0);
#endif
                m[i][j] = t / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    if (det_out) *det_out = (r == rows && rows == cols) ? Int(sign) * prev : Int(0);
    return r;
}

}  // namespace

int rank(const Mat<Rational>& a) {
    if (a.empty()) return 0;
    ScaledRows s = clear_denominators(a);
    return bareiss(s.m, a.cols(), nullptr);
}

Rational det(const Mat<Rational>& a) {
    if (!a.is_square()) throw std::invalid_argument("det: non-square");
    if (a.rows() == 0) return Rational(1);  // empty product
    ScaledRows s = clear_denominators(a);
    Int d;
    bareiss(s.m, a.cols(), &d);
    Rational r(d);
    for (const Int& l : s.scale) r /= Rational(l);
    return r;
}

namespace {

// Reduced row echelon form over Q in place; returns pivot columns.
std::vector<int> rref(Mat<Rational>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        Rational p = m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) /= p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Mat<Rational> solve_unique(const Mat<Rational>& a, const Mat<Rational>& b) {
    if (b.cols() != 1 || b.rows() != a.rows())
        throw std::invalid_argument("solve_unique: rhs shape");
    Mat<Rational> aug = hcat(a, b);
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == a.cols()) throw std::domain_error("solve_unique: inconsistent system");
    if (int(pivots.size()) != a.cols())
        throw std::domain_error("solve_unique: rank-deficient system");
    Mat<Rational> x(a.cols(), 1);
    for (int r = 0; r < int(pivots.size()); ++r) x(pivots[r], 0) = aug(r, a.cols());
    return x;
}

Mat<Rational> inverse(const Mat<Rational>& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: non-square");
    const int n = a.rows();
    Mat<Rational> aug = hcat(a, Mat<Rational>::identity(n));
    std::vector<int> pivots = rref(aug);
    // The augmented identity keeps [A | I] at full row rank, so the pivot
    // count alone proves nothing; A is invertible iff every pivot lands in
    // A's own columns.
    if (int(pivots.size()) != n || pivots.back() >= n)
        throw std::domain_error("inverse: singular matrix");
    return aug.block(0, n, n, n);
}

}  // namespace bnil
