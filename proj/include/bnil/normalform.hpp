#pragma once

// The Borel action on all nilpotent matrices: genericity via corner minors
// of powers, the unique strictly-lower-triangular unit-subdiagonal normal
// form of a generic nilpotent matrix, and the determinantal semiinvariants
//
//   D^P(A) = det( P_{i,j}(A)_(a_i, b_j) )_{i,j}
//
// built from corner blocks (last a_i rows, first b_j columns) of polynomial
// evaluations.  D^P rescales under conjugation by upper-triangular g by the
// diagonal character with exponent vector weight(P): the m-th diagonal entry
// of g appears once for every block row with m >= n-a_i+1 (from det of the
// trailing principal block of g) and once negatively for every block column
// with m <= b_j.

#include "bnil/error.hpp"
#include "bnil/matrix.hpp"

#include <optional>
#include <vector>

namespace bnil {

struct GenericityReport {
    bool generic = false;
    std::optional<int> failing_k;   // smallest k whose minor vanishes
    std::vector<Rational> minors;   // det((A^{n-k})_(k,k)) for k = 1..n-1
};

struct NormalForm {
    Mat<Rational> H;  // strictly lower triangular, unit subdiagonal
    Mat<Rational> g;  // upper triangular with H = g A g^{-1}
};

struct SemiinvariantDatum {
    std::vector<int> a, b;  // block heights / widths, sums equal k <= n
    // P[i][j]: coefficients of the polynomial in ascending powers.
    std::vector<std::vector<std::vector<Rational>>> P;
};

struct WeightVector {
    std::vector<int> c;  // exponent of the m-th diagonal character, 1-indexed by position
    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// Throws Error("not_nilpotent") unless A is square with A^n = 0.
void require_nilpotent(const Mat<Rational>& a);

GenericityReport genericity(const Mat<Rational>& a);

// Requires genericity(a).generic; follows the construction in the proof:
// solve A^{n-1} e_1 = sum_{i<=k} x_i A^{n-k} e_i, let v_k = sum x_i e_i,
// T = [v_1 .. v_n], H = T^{-1} A T, g = T^{-1}.
NormalForm normal_form(const Mat<Rational>& a);

void validate_datum(const SemiinvariantDatum& p, int n);

Mat<Rational> block_matrix(const Mat<Rational>& a, const SemiinvariantDatum& p);

Rational semiinvariant(const Mat<Rational>& a, const SemiinvariantDatum& p);

WeightVector weight(const SemiinvariantDatum& p, int n);

// Value of the character with exponent vector w at an upper-triangular
// invertible g: the product of g_mm^{c_m}.
Rational character(const Mat<Rational>& g, const WeightVector& w);

// The datum with D^P(H) = H_{i,j} on normal forms; requires 1 <= j <= n-2
// and j+2 <= i <= n.
SemiinvariantDatum entry_datum(int i, int j, int n);

}  // namespace bnil
