#include "bnil/census.hpp"

#include "bnil/classify.hpp"
#include "bnil/fp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bnil {

namespace {

void check_guard(int n, int q) {
    if (n < 1 || n > 4 || (q != 2 && q != 3))
        throw Error("guard_exceeded", "census guard is n <= 4 and q in {2, 3}");
}

uint32_t pow_u32(int b, int e) {
    uint32_t r = 1;
    while (e--) r *= uint32_t(b);
    return r;
}

// Small dense mod-q matrix helpers on flat digit vectors.
std::vector<uint8_t> mul_mod(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b,
                             int n, int q) {
    std::vector<uint8_t> c(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int av = a[size_t(i) * n + k];
            if (!av) continue;
            for (int j = 0; j < n; ++j)
                c[size_t(i) * n + j] =
                    uint8_t((c[size_t(i) * n + j] + av * b[size_t(k) * n + j]) % q);
        }
    return c;
}

bool is_square_zero(const std::vector<uint8_t>& a, int n, int q) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) s += a[size_t(i) * n + k] * a[size_t(k) * n + j];
            if (s % q != 0) return false;
        }
    return true;
}

struct Generator {
    std::vector<uint8_t> g, ginv;
};

std::vector<Generator> borel_generators(int n, int q) {
    std::vector<Generator> gens;
    auto ident = [&] {
        std::vector<uint8_t> m(size_t(n) * n, 0);
        for (int i = 0; i < n; ++i) m[size_t(i) * n + i] = 1;
        return m;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Generator t{ident(), ident()};
            t.g[size_t(i) * n + j] = 1;
            t.ginv[size_t(i) * n + j] = uint8_t(q - 1);  // -1 mod q
            gens.push_back(std::move(t));
        }
    if (q > 2) {
        // one diagonal generator per position; 2 generates F_3^* and is its
        // own inverse there
        for (int i = 0; i < n; ++i) {
            Generator d{ident(), ident()};
            d.g[size_t(i) * n + i] = 2;
            d.ginv[size_t(i) * n + i] = 2;
            gens.push_back(std::move(d));
        }
    }
    return gens;
}

uint32_t conjugate_code(uint32_t code, const Generator& gen, int n, int q) {
    std::vector<uint8_t> a = decode_matrix(code, n, q);
    std::vector<uint8_t> c = mul_mod(mul_mod(gen.g, a, n, q), gen.ginv, n, q);
    return encode_matrix(c, n, q);
}

template <uint32_t Q>
OrientedLinkPattern classify_code(uint32_t code, int n) {
    std::vector<uint8_t> d = decode_matrix(code, n, Q);
    Mat<Fp<Q>> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Fp<Q>(d[size_t(i) * n + j]);
    return classify(m);
}

template <uint32_t Q>
IntersectionProfile profile_code(uint32_t code, int n) {
    std::vector<uint8_t> d = decode_matrix(code, n, Q);
    Mat<Fp<Q>> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Fp<Q>(d[size_t(i) * n + j]);
    return profile_of(m);
}

OrientedLinkPattern classify_dispatch(uint32_t code, int n, int q) {
    return q == 2 ? classify_code<2>(code, n) : classify_code<3>(code, n);
}

IntersectionProfile profile_dispatch(uint32_t code, int n, int q) {
    return q == 2 ? profile_code<2>(code, n) : profile_code<3>(code, n);
}

// Orbit partition, serial reference: plain BFS orbit by orbit.
std::vector<std::vector<uint32_t>> partition_serial(const std::vector<uint32_t>& codes,
                                                    int n, int q) {
    const uint32_t space = pow_u32(q, n * n);
    std::vector<Generator> gens = borel_generators(n, q);
    std::vector<uint8_t> visited(space, 0);
    std::vector<std::vector<uint32_t>> orbits;
    for (uint32_t seed : codes) {
        if (visited[seed]) continue;
        std::vector<uint32_t> orbit{seed};
        visited[seed] = 1;
        for (size_t head = 0; head < orbit.size(); ++head)
            for (const Generator& g : gens) {
                uint32_t nb = conjugate_code(orbit[head], g, n, q);
                if (!visited[nb]) {
                    visited[nb] = 1;
                    orbit.push_back(nb);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

// Parallel path: conjugation edges generated independently per code, then a
// serial union-find merge; exactly the same partition as the BFS.
std::vector<std::vector<uint32_t>> partition_parallel(const std::vector<uint32_t>& codes,
                                                      int n, int q) {
    const int nc = int(codes.size());
    std::vector<Generator> gens = borel_generators(n, q);
    const int ng = int(gens.size());
    std::vector<uint32_t> targets(size_t(nc) * ng);
#pragma omp parallel for schedule(static)
    for (int t = 0; t < nc; ++t)
        for (int g = 0; g < ng; ++g)
            targets[size_t(t) * ng + g] = conjugate_code(codes[t], gens[g], n, q);

    // codes are sorted, so positions can be found by binary search
    auto index_of = [&](uint32_t code) {
        return int(std::lower_bound(codes.begin(), codes.end(), code) - codes.begin());
    };
    std::vector<int> parent(nc);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int t = 0; t < nc; ++t)
        for (int g = 0; g < ng; ++g) {
            int a = find(t), b = find(index_of(targets[size_t(t) * ng + g]));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<uint32_t>> groups;
    for (int t = 0; t < nc; ++t) groups[find(t)].push_back(codes[t]);
    std::vector<std::vector<uint32_t>> orbits;
    for (auto& [root, members] : groups) orbits.push_back(std::move(members));
    return orbits;
}

}  // namespace

uint32_t encode_matrix(const std::vector<uint8_t>& entries, int n, int q) {
    uint32_t code = 0;
    for (int t = n * n - 1; t >= 0; --t) code = code * uint32_t(q) + entries[t];
    return code;
}

std::vector<uint8_t> decode_matrix(uint32_t code, int n, int q) {
    std::vector<uint8_t> entries(size_t(n) * n);
    for (int t = 0; t < n * n; ++t) {
        entries[t] = uint8_t(code % uint32_t(q));
        code /= uint32_t(q);
    }
    return entries;
}

std::vector<uint32_t> square_zero_codes(int n, int q, Exec exec) {
    check_guard(n, q);
    const uint32_t space = pow_u32(q, n * n);
    std::vector<uint8_t> flag(space, 0);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int64_t c = 0; c < int64_t(space); ++c)
            flag[c] = is_square_zero(decode_matrix(uint32_t(c), n, q), n, q);
    } else {
        for (int64_t c = 0; c < int64_t(space); ++c)
            flag[c] = is_square_zero(decode_matrix(uint32_t(c), n, q), n, q);
    }
    std::vector<uint32_t> codes;
    for (uint32_t c = 0; c < space; ++c)
        if (flag[c]) codes.push_back(c);
    return codes;
}

OrbitCensus census(int n, int q, Exec exec) {
    check_guard(n, q);
    std::vector<uint32_t> codes = square_zero_codes(n, q, exec);
    std::vector<std::vector<uint32_t>> orbits = exec == Exec::parallel
                                                    ? partition_parallel(codes, n, q)
                                                    : partition_serial(codes, n, q);
    OrbitCensus out;
    out.n = n;
    out.q = q;
    out.orbit_count = int(orbits.size());

    uint64_t total = 0;
    for (const auto& orbit : orbits) {
        OrbitInfo info;
        info.representative = orbit.front();  // members are sorted
        info.size = orbit.size();
        info.pattern = classify_dispatch(info.representative, n, q);
        total += info.size;
        out.orbits.push_back(std::move(info));
    }
    if (total != codes.size())
        throw Error("internal_error", "census: orbit sizes do not cover the variety");

    std::sort(out.orbits.begin(), out.orbits.end(),
              [](const OrbitInfo& a, const OrbitInfo& b) { return a.pattern < b.pattern; });
    for (size_t t = 0; t + 1 < out.orbits.size(); ++t)
        if (out.orbits[t].pattern == out.orbits[t + 1].pattern)
            throw Error("classification_collision",
                        "two distinct orbits classified as " + out.orbits[t].pattern.str());
    std::vector<OrientedLinkPattern> expected = enumerate_patterns(n);
    if (int(expected.size()) != out.orbit_count)
        throw Error("classification_collision", "orbit count differs from pattern count");
    for (size_t t = 0; t < expected.size(); ++t)
        if (!(out.orbits[t].pattern == expected[t]))
            throw Error("classification_collision", "orbit patterns do not exhaust enumeration");
    return out;
}

InvarianceReport invariance_check(int n, int q) {
    check_guard(n, q);
    std::vector<uint32_t> codes = square_zero_codes(n, q);
    std::vector<std::vector<uint32_t>> orbits = partition_serial(codes, n, q);
    InvarianceReport rep;
    std::vector<IntersectionProfile> seen;
    for (const auto& orbit : orbits) {
        IntersectionProfile base = profile_dispatch(orbit.front(), n, q);
        for (uint32_t code : orbit)
            if (!(profile_dispatch(code, n, q).grid == base.grid)) {
                rep.violations.push_back("profile varies inside orbit of code " +
                                         std::to_string(orbit.front()));
                break;
            }
        for (const IntersectionProfile& other : seen)
            if (other.grid == base.grid) {
                rep.violations.push_back("profile collision between orbits (code " +
                                         std::to_string(orbit.front()) + ")");
                break;
            }
        seen.push_back(std::move(base));
    }
    return rep;
}

}  // namespace bnil
