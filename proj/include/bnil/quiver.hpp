#pragma once

// Bound quiver representations for the chain quiver 1 -> 2 -> ... -> n with
// a loop at n, bound by loop^2 = 0.  A square-zero matrix A becomes the
// "injective chain" representation with coordinate embeddings and loop A;
// the indecomposables U_{i,j}, V_i, W_{i,j} are hard-coded from their
// explicit matrix pictures.  Hom dimensions are computed by solving the
// intertwiner system exactly, which makes this module an oracle that is
// independent of every combinatorial formula elsewhere: Krull-Schmidt
// multiplicities come from the linear system hom(X, M) = sum_Y mult(Y)
// hom(X, Y), and the degeneration order comes from Zwara's criterion
// (componentwise comparison of Hom vectors).

#include "bnil/error.hpp"
#include "bnil/matrix.hpp"
#include "bnil/olp.hpp"

#include <compare>
#include <string>
#include <vector>

namespace bnil {

struct BoundQuiverRep {
    std::vector<int> dims;               // d_1..d_n
    std::vector<Mat<Rational>> chain;    // chain[v] maps vertex v+1 to v+2 (d_{v+2} x d_{v+1})
    Mat<Rational> loop;                  // at vertex n, loop^2 = 0

    int vertices() const { return int(dims.size()); }
};

// Validates shapes and the relation loop^2 = 0.
BoundQuiverRep make_rep(std::vector<int> dims, std::vector<Mat<Rational>> chain,
                        Mat<Rational> loop);

// A square-zero, dims strictly increasing, dims.back() = size of A; chain
// maps are the canonical coordinate embeddings k^{d_v} -> k^{d_{v+1}}.
BoundQuiverRep rep_of_matrix(const Mat<Rational>& a, const std::vector<int>& dims);

enum class Kind { U, V, W };

struct IndecomposableId {
    Kind kind = Kind::U;
    int i = 0, j = 0;  // V uses i only; W needs 1 <= i <= j < n

    friend bool operator==(const IndecomposableId&, const IndecomposableId&) = default;
    friend auto operator<=>(const IndecomposableId&, const IndecomposableId&) = default;
    std::string str() const;
};

inline IndecomposableId idU(int i, int j) { return {Kind::U, i, j}; }
inline IndecomposableId idV(int i) { return {Kind::V, i, 0}; }
inline IndecomposableId idW(int i, int j) { return {Kind::W, i, j}; }

// The explicit representation for the id at quiver size n.
BoundQuiverRep indecomposable(const IndecomposableId& id, int n);

// All indecomposables at size n, ordered by (total dimension, kind, i, j);
// uv_indecomposables omits the W kind (whose Homs vanish on injective chains).
std::vector<IndecomposableId> all_indecomposables(int n);
std::vector<IndecomposableId> uv_indecomposables(int n);

BoundQuiverRep direct_sum(const BoundQuiverRep& x, const BoundQuiverRep& y);

// dim Hom(X, Y): kernel dimension of the stacked intertwiner system
// f_{v+1} Xchain_v = Ychain_v f_v, f_n Xloop = Yloop f_n.
int hom_dim(const BoundQuiverRep& x, const BoundQuiverRep& y);

// The closed forms [V_k,V_i] = [i<=k], [V_k,U_{i,j}] = [i<=k],
// [U_{k,l},V_i] = [i<=l], [U_{k,l},U_{i,j}] = [i<=l] + [j<=l][i<=k].
// W on either side is outside the lemma and throws.
int hom_dim_closed_form(const IndecomposableId& a, const IndecomposableId& b);

int endo_dim(const BoundQuiverRep& x);

// n(n+1)/2 minus the stabilizer dimension; the stabilizer Lie algebra is the
// endomorphism algebra of the injective-chain representation of the pattern.
int orbit_dimension(const OrientedLinkPattern& p);

struct Decomposition {
    int n = 0;
    std::vector<std::vector<int>> mU;  // mU[i-1][j-1]
    std::vector<int> nV;               // nV[i-1]
    std::vector<std::vector<int>> wW;  // wW[i-1][j-1] for i <= j < n, else 0

    int mult(const IndecomposableId& id) const;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Unique direct-sum decomposition, recovered from Hom counts against every
// indecomposable.  The Hom-count Gram matrix is checked invertible once per
// n; the solution is checked to be nonnegative integers whose dimension
// vectors sum back to dims.
Decomposition krull_schmidt(const BoundQuiverRep& m);

// Hom vector of the pattern's injective-chain representation against
// uv_indecomposables(n), computed by solving (never by closed forms).
std::vector<int> zwara_hom_vector(const OrientedLinkPattern& p);

// Zwara's criterion: p degenerates to q iff hom(X, rep(p)) <= hom(X, rep(q))
// for every X of kind U or V.
bool zwara_leq(const OrientedLinkPattern& p, const OrientedLinkPattern& q);

}  // namespace bnil
