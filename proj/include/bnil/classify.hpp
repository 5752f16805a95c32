#pragma once

// Orbit classification of square-zero matrices by intersection dimensions.
//
// For A with A^2 = 0 and the flag subspaces U_i = span(e_1..e_i), the grid
//   d[i][j] = dim(U_i  ∩  A U_j),  0 <= i, j <= n  (d zero when i or j is 0)
// is constant on the Borel orbit of A, and its second difference
//   m[i][j] = d[i][j] - d[i-1][j] - d[i][j-1] + d[i-1][j-1]
// is the multiplicity matrix of an oriented link pattern: m[i][j] = 1 reads
// "arrow j -> i".  Restricting the same second difference to the cumulative
// indices of a composition (b_1,..,b_k) of n classifies parabolic orbits by
// enhanced patterns on the blocks.
//
// Everything is templated over the scalar so the finite-field oracle can
// instantiate it over Fp<q> and compare with the exact rational route.

#include "bnil/error.hpp"
#include "bnil/matrix.hpp"
#include "bnil/olp.hpp"

#include <vector>

namespace bnil {

struct IntersectionProfile {
    int n = 0;
    // (n+1) x (n+1), indexed d(i,j) with 0 <= i,j <= n.
    std::vector<std::vector<int>> grid;

    int d(int i, int j) const { return grid[i][j]; }
};

template <class K>
void require_square_zero(const Mat<K>& a) {
    if (!a.is_square()) throw Error("not_2_nilpotent", "matrix is not square");
    if (!(a * a).is_zero()) throw Error("not_2_nilpotent", "matrix squared is nonzero");
}

template <class K>
IntersectionProfile profile_of(const Mat<K>& a) {
    require_square_zero(a);
    const int n = a.rows();
    IntersectionProfile p;
    p.n = n;
    p.grid.assign(n + 1, std::vector<int>(n + 1, 0));
    Mat<K> id = Mat<K>::identity(n);
    for (int i = 1; i <= n; ++i) {
        Mat<K> ui = id.block(0, 0, n, i);
        for (int j = 1; j <= n; ++j)
            p.grid[i][j] = intersection_dim(ui, a.block(0, 0, n, j));
    }
    return p;
}

namespace detail {

inline int second_difference(const IntersectionProfile& p, int i0, int i1, int j0, int j1) {
    return p.grid[i1][j1] - p.grid[i0][j1] - p.grid[i1][j0] + p.grid[i0][j0];
}

}  // namespace detail

template <class K>
OrientedLinkPattern classify(const Mat<K>& a) {
    IntersectionProfile p = profile_of(a);
    std::vector<Arrow> arrows;
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.n; ++j) {
            int m = detail::second_difference(p, i - 1, i, j - 1, j);
            if (m == 0) continue;
            if (m != 1 || i == j)
                throw Error("internal_error", "profile second difference is not a pattern");
            arrows.push_back({j, i});  // m[i][j] = 1 means arrow j -> i
        }
    return OrientedLinkPattern(p.n, std::move(arrows));
}

template <class K>
EnhancedPattern classify_parabolic(const Mat<K>& a, const std::vector<int>& blocks) {
    const int k = int(blocks.size());
    int n = 0;
    for (int b : blocks) {
        if (b < 1) throw Error("bad_pattern", "block sizes must be positive");
        n += b;
    }
    if (a.rows() != n)
        throw Error("dimension_mismatch", "blocks do not sum to the matrix size");
    IntersectionProfile p = profile_of(a);
    std::vector<int> c(k + 1, 0);  // cumulative block boundaries
    for (int i = 0; i < k; ++i) c[i + 1] = c[i] + blocks[i];
    std::vector<EnhancedArrow> arrows;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            int m = detail::second_difference(p, c[i - 1], c[i], c[j - 1], c[j]);
            if (m < 0) throw Error("internal_error", "negative block multiplicity");
            if (m > 0) arrows.push_back({j, i, m});  // m arrows j -> i
        }
    return EnhancedPattern(blocks, std::move(arrows));
}

}  // namespace bnil
