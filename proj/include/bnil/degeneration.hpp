#pragma once

// The combinatorial side of the degeneration order.  Each pattern M gets
// the statistics
//   p_k   = #(arrows with target <= k) + #(free vertices <= k)
//   q_kl  = p_l + #(arrows with target <= k and source <= l)
// ("to the left of k" read inclusively), and M' lies in the closure of the
// orbit of M exactly when p and q grow componentwise from M to M'.  Closure
// sets, Hasse diagrams (by transitive reduction of the order), and the local
// minimal-move table transcribed from the two Hasse-diagram figures all live
// here.  The all-pairs order computation is one of the parallel kernels.

#include "bnil/exec.hpp"
#include "bnil/olp.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bnil {

struct InvariantProfile {
    int n = 0;
    std::vector<int> p;                // p[k-1] = p_k
    std::vector<std::vector<int>> q;   // q[k-1][l-1] = q_{k,l}

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile pattern_profile(const OrientedLinkPattern& m);

// True iff the orbit of mp lies in the closure of the orbit of m.
bool leq_deg(const OrientedLinkPattern& m, const OrientedLinkPattern& mp);

// All q with leq_deg(p, q), p included, canonical order.  Guard: n <= 8.
std::vector<OrientedLinkPattern> closure_set(const OrientedLinkPattern& p);

// Rows of the strict-order relation as bitsets: bit b of row a is set iff
// patterns[a] <_deg patterns[b] strictly.  The pairwise sweep runs serial or
// OpenMP-parallel by policy; results are identical.
std::vector<std::vector<uint64_t>> strict_order_bits(
    const std::vector<OrientedLinkPattern>& patterns, Exec exec = Exec::parallel);

// Hasse diagram of the order on enumerate_patterns(n): pairs (p, q) with
// p <_deg q and nothing strictly between.  Guard: n <= 6.
std::vector<std::pair<OrientedLinkPattern, OrientedLinkPattern>> covers(
    int n, Exec exec = Exec::parallel);

// A local move: replace the pre fragment by the post fragment on 2, 3 or 4
// abstract vertices 1 < 2 < ... < m; concrete instantiation maps them onto
// any increasing choice of vertices that carries exactly the pre arrows.
struct Move {
    int vertices = 0;
    std::vector<Arrow> pre, post;
};

struct MoveTable {
    std::vector<Move> entries;
};

// The transcribed table (see move_table.cpp for the reviewed source text).
const MoveTable& move_table();

// One move step: every pattern reachable from p by one instantiated move.
std::vector<OrientedLinkPattern> apply_moves(const OrientedLinkPattern& p);

// Reflexive-transitive closure of apply_moves, deduplicated, canonical
// order.  Guard: n <= 6.
std::vector<OrientedLinkPattern> move_closure(const OrientedLinkPattern& p);

// DOT rendering of the Hasse diagram, edges from dominating to degenerate
// orbit, nodes and edges in canonical order (stable output).
std::string dot_hasse(int n);

}  // namespace bnil
