#pragma once

// Brute-force ground truth over F_q, q in {2, 3}, n <= 4: enumerate every
// square-zero matrix, partition them into orbits under conjugation by the
// invertible upper-triangular group (generated by the elementary
// transvections I + E_ij, i < j, plus one diagonal generator per position
// when q > 2), and classify each orbit representative with the same
// intersection-dimension machinery instantiated over the prime field.
// Matrices travel as base-q codes so the visited structures stay dense.
//
// The square-zero scan and the orbit partition both have a serial reference
// and an OpenMP path (edge generation in parallel, then union-find); the
// tests require the two partitions to agree exactly.

#include "bnil/error.hpp"
#include "bnil/exec.hpp"
#include "bnil/olp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bnil {

struct OrbitInfo {
    uint32_t representative = 0;  // minimal code in the orbit
    uint64_t size = 0;
    OrientedLinkPattern pattern;
};

struct OrbitCensus {
    int n = 0;
    int q = 0;
    int orbit_count = 0;
    std::vector<OrbitInfo> orbits;  // sorted by classified pattern
};

struct InvarianceReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Base-q matrix codes: digit i*n+j (little-endian) is entry (i, j).
uint32_t encode_matrix(const std::vector<uint8_t>& entries, int n, int q);
std::vector<uint8_t> decode_matrix(uint32_t code, int n, int q);

// All codes of square-zero matrices, ascending.
std::vector<uint32_t> square_zero_codes(int n, int q, Exec exec = Exec::parallel);

// Guard: n <= 4 and q in {2, 3}.
OrbitCensus census(int n, int q, Exec exec = Exec::parallel);

// Verifies the intersection profile is constant on every orbit and distinct
// across orbits; violations are reported, not thrown.
InvarianceReport invariance_check(int n, int q);

}  // namespace bnil
