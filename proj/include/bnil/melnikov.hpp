#pragma once

// The involution stratum: strictly upper-triangular square-zero matrices are
// the partial permutation matrices N_sigma of involutions sigma, and closure
// order between their Borel orbits is decided by the grid of ranks of the
// "middle" submatrices u[i..j, i..j].  A combinatorial stand-in counts the
// 2-cycles of sigma nested inside [i, j]; the two grids agree and the tests
// hold them against each other and against the general degeneration order.

#include "bnil/error.hpp"
#include "bnil/matrix.hpp"
#include "bnil/olp.hpp"

#include <vector>

namespace bnil {

// Involutions are kept as the full value table sigma(1..n), fixed points
// included; construction validates sigma o sigma = id.
class Involution {
public:
    Involution() {}
    explicit Involution(std::vector<int> sigma);
    static Involution from_cycles(int n, const std::vector<std::pair<int, int>>& cycles);

    int n() const { return int(sigma_.size()); }
    int apply(int i) const { return sigma_[i - 1]; }
    const std::vector<int>& table() const { return sigma_; }

    // 2-cycles {i < j} in increasing order of i.
    std::vector<std::pair<int, int>> cycles() const;

    // N_sigma: entry (i,j) = 1 iff i < j and sigma(i) = j.
    Mat<Rational> matrix() const;

    OrientedLinkPattern pattern() const { return pattern_from_involution(sigma_); }

    friend bool operator==(const Involution&, const Involution&) = default;

private:
    std::vector<int> sigma_;
};

// All involutions of {1..n}.
std::vector<Involution> enumerate_involutions(int n);

// n x n grid of submatrix ranks, entry (i,j) = rank u[i..j, i..j] for i < j
// and 0 on and below the diagonal (1-indexed access via RankMatrix::at).
struct RankMatrix {
    int n = 0;
    std::vector<std::vector<int>> grid;

    int at(int i, int j) const { return grid[i - 1][j - 1]; }
    friend bool operator==(const RankMatrix&, const RankMatrix&) = default;
};

// Requires u strictly upper-triangular with u^2 = 0.
RankMatrix rank_matrix(const Mat<Rational>& u);

// Entry (i,j) = number of 2-cycles of sigma contained in [i, j]; the
// combinatorial route to rank_matrix(N_sigma).
RankMatrix edge_count_matrix(const Involution& sigma);

// True iff R_{tau} <= R_{sigma} entrywise: the orbit of N_tau lies in the
// closure of the orbit of N_sigma.
bool melnikov_leq(const Involution& tau, const Involution& sigma);

}  // namespace bnil
