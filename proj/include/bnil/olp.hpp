#pragma once

// Oriented link patterns: oriented graphs on vertices 1..n in which every
// vertex meets at most one arrow (so the arrows form a partial matching with
// orientations).  These index the Borel orbits on square-zero matrices; the
// bridge is the multiplicity matrix, the 0/1 matrix with entry (i,j) = 1
// exactly when the pattern has an arrow j -> i.  That matrix is itself
// square-zero, and the pattern is recovered from it by classify().
//
// Canonical form: arrows sorted by (source, target); patterns ordered by
// (arrow count, lexicographic arrow list).  The enhanced variant groups the
// vertices into blocks and allows arrow multiplicities, bounded per block by
// the block size (a loop at a block counts twice).

#include "bnil/error.hpp"
#include "bnil/matrix.hpp"

#include <compare>
#include <string>
#include <vector>

namespace bnil {

struct Arrow {
    int source = 0, target = 0;  // 1-indexed vertices
    friend bool operator==(const Arrow&, const Arrow&) = default;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct PatternVerdict {
    bool ok = true;
    int bad_vertex = 0;      // a vertex meeting two arrows, or out of range
    std::string reason;
};

class OrientedLinkPattern {
public:
    OrientedLinkPattern() : n_(0) {}
    // Throws Error("bad_pattern") unless the arrow set is a valid pattern.
    OrientedLinkPattern(int n, std::vector<Arrow> arrows);

    int n() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool vertex_free(int v) const;

    // "1>2,5>3" in canonical arrow order; "" for the empty pattern.
    std::string str() const;

    friend bool operator==(const OrientedLinkPattern&, const OrientedLinkPattern&) = default;
    // Canonical order: arrow count first, then lexicographic on the arrow list.
    friend std::strong_ordering operator<=>(const OrientedLinkPattern& a,
                                            const OrientedLinkPattern& b) {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        if (a.arrows_.size() != b.arrows_.size())
            return a.arrows_.size() <=> b.arrows_.size();
        return a.arrows_ <=> b.arrows_;
    }

private:
    int n_;
    std::vector<Arrow> arrows_;
};

// Checks the pattern axioms without constructing: vertices in range, no
// vertex on two arrows, no loops.
PatternVerdict validate_pattern(int n, const std::vector<Arrow>& arrows);

// Entry (i,j) = 1 iff arrow j -> i; always a square-zero 0/1 matrix.
Mat<Rational> to_multiplicity_matrix(const OrientedLinkPattern& p);

// Inverse of to_multiplicity_matrix.  Throws Error("bad_pattern") on a
// non-0/1 entry or an incidence-bound violation.
OrientedLinkPattern from_multiplicity_matrix(const Mat<Rational>& m);

// All patterns on n vertices in canonical order.  Guard: n <= 8.
std::vector<OrientedLinkPattern> enumerate_patterns(int n);

// Closed form sum_k n!/(k!(n-2k)!), cross-checked against enumeration.
unsigned long long count_patterns(int n);

// Involutions sigma (1-indexed, sigma[sigma[i]] = i) map to the pattern with
// an arrow j -> i for every 2-cycle {i < j}: multiplicity matrices of such
// patterns are exactly the strictly upper-triangular square-zero 0/1 ones.
OrientedLinkPattern pattern_from_involution(const std::vector<int>& sigma);

struct EnhancedArrow {
    int source = 0, target = 0;  // 1-indexed blocks; source == target is a loop
    int count = 0;
    friend bool operator==(const EnhancedArrow&, const EnhancedArrow&) = default;
    friend auto operator<=>(const EnhancedArrow&, const EnhancedArrow&) = default;
};

// Pattern on blocks b_1..b_k with arrow multiplicities; valid when each
// block i satisfies (arrows out of i) + (arrows into i) <= b_i, a loop
// contributing to both sums.
class EnhancedPattern {
public:
    EnhancedPattern() {}
    EnhancedPattern(std::vector<int> blocks, std::vector<EnhancedArrow> arrows);

    const std::vector<int>& blocks() const { return blocks_; }
    int block_count() const { return int(blocks_.size()); }
    const std::vector<EnhancedArrow>& arrows() const { return arrows_; }

    // k x k multiplicity grid, entry (i,j) = count of arrows j -> i (1-indexed args).
    int multiplicity(int i, int j) const;

    std::string str() const;

    friend bool operator==(const EnhancedPattern&, const EnhancedPattern&) = default;

private:
    std::vector<int> blocks_;
    std::vector<EnhancedArrow> arrows_;
};

PatternVerdict validate_enhanced(const std::vector<int>& blocks,
                                 const std::vector<EnhancedArrow>& arrows);

}  // namespace bnil
