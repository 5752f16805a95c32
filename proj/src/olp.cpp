#include "bnil/olp.hpp"

#include <algorithm>

namespace bnil {

PatternVerdict validate_pattern(int n, const std::vector<Arrow>& arrows) {
    std::vector<int> degree(n + 1, 0);
    for (const Arrow& a : arrows) {
        for (int v : {a.source, a.target})
            if (v < 1 || v > n) return {false, v, "vertex out of range"};
        if (a.source == a.target) return {false, a.source, "loop"};
        ++degree[a.source];
        ++degree[a.target];
    }
    for (int v = 1; v <= n; ++v)
        if (degree[v] > 1) return {false, v, "vertex on two arrows"};
    return {};
}

OrientedLinkPattern::OrientedLinkPattern(int n, std::vector<Arrow> arrows)
    : n_(n), arrows_(std::move(arrows)) {
    if (n < 0) throw Error("bad_pattern", "negative vertex count");
    PatternVerdict v = validate_pattern(n, arrows_);
    if (!v.ok)
        throw Error("bad_pattern", "invalid pattern: " + v.reason + " at vertex " +
                                       std::to_string(v.bad_vertex));
    std::sort(arrows_.begin(), arrows_.end());
}

bool OrientedLinkPattern::vertex_free(int v) const {
    for (const Arrow& a : arrows_)
        if (a.source == v || a.target == v) return false;
    return true;
}

std::string OrientedLinkPattern::str() const {
    std::string s;
    for (const Arrow& a : arrows_) {
        if (!s.empty()) s += ",";
        s += std::to_string(a.source) + ">" + std::to_string(a.target);
    }
    return s;
}

Mat<Rational> to_multiplicity_matrix(const OrientedLinkPattern& p) {
    Mat<Rational> m(p.n(), p.n());
    for (const Arrow& a : p.arrows()) m(a.target - 1, a.source - 1) = Rational(1);
    return m;
}

namespace {

void enumerate_rec(int n, int v, std::vector<bool>& used, std::vector<Arrow>& acc,
                   std::vector<OrientedLinkPattern>& out) {
    while (v <= n && used[v]) ++v;
    if (v > n) {
        out.emplace_back(n, acc);
        return;
    }
    used[v] = true;
    // v stays free
    enumerate_rec(n, v + 1, used, acc, out);
    // v pairs with a later vertex, in either orientation
    for (int w = v + 1; w <= n; ++w) {
        if (used[w]) continue;
        used[w] = true;
        acc.push_back({v, w});
        enumerate_rec(n, v + 1, used, acc, out);
        acc.back() = {w, v};
        enumerate_rec(n, v + 1, used, acc, out);
        acc.pop_back();
        used[w] = false;
    }
    used[v] = false;
}

}  // namespace

OrientedLinkPattern from_multiplicity_matrix(const Mat<Rational>& m) {
    if (!m.is_square()) throw Error("bad_pattern", "multiplicity matrix must be square");
    std::vector<Arrow> arrows;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& e = m(i, j);
            if (e.is_zero()) continue;
            if (e != Rational(1))
                throw Error("bad_pattern", "multiplicity matrix entries must be 0 or 1");
            arrows.push_back({j + 1, i + 1});
        }
    // The pattern constructor enforces the incidence bound.
    return OrientedLinkPattern(m.rows(), std::move(arrows));
}

std::vector<OrientedLinkPattern> enumerate_patterns(int n) {
    if (n < 0 || n > 8) throw Error("n_too_large", "enumerate_patterns: guard is n <= 8");
    std::vector<OrientedLinkPattern> out;
    std::vector<bool> used(n + 1, false);
    std::vector<Arrow> acc;
    enumerate_rec(n, 1, used, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long long count_patterns(int n) {
    if (n < 0) throw Error("bad_pattern", "count_patterns: negative n");
    // sum over k pairs: n! / (k! (n-2k)!)
    Int total = 0;
    Int nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    for (int k = 0; 2 * k <= n; ++k) {
        Int kfact = 1, rfact = 1;
        for (int i = 2; i <= k; ++i) kfact *= i;
        for (int i = 2; i <= n - 2 * k; ++i) rfact *= i;
        total += nfact / (kfact * rfact);
    }
    if (total > Int(UINT64_MAX)) throw Error("n_too_large", "count_patterns: overflow");
    return total.convert_to<unsigned long long>();
}

OrientedLinkPattern pattern_from_involution(const std::vector<int>& sigma) {
    const int n = int(sigma.size());
    std::vector<int> s(n + 1);
    for (int i = 1; i <= n; ++i) {
        s[i] = sigma[i - 1];
        if (s[i] < 1 || s[i] > n)
            throw Error("bad_involution", "value out of range at position " + std::to_string(i));
    }
    for (int i = 1; i <= n; ++i)
        if (s[s[i]] != i) throw Error("bad_involution", "not an involution");
    std::vector<Arrow> arrows;
    for (int i = 1; i <= n; ++i)
        if (s[i] > i) arrows.push_back({s[i], i});  // 2-cycle {i < j} gives j -> i
    return OrientedLinkPattern(n, std::move(arrows));
}

PatternVerdict validate_enhanced(const std::vector<int>& blocks,
                                 const std::vector<EnhancedArrow>& arrows) {
    const int k = int(blocks.size());
    for (int i = 0; i < k; ++i)
        if (blocks[i] < 1) return {false, i + 1, "block size must be positive"};
    std::vector<int> load(k + 1, 0);  // arrows out + arrows in, loops twice
    for (const EnhancedArrow& a : arrows) {
        for (int v : {a.source, a.target})
            if (v < 1 || v > k) return {false, v, "block out of range"};
        if (a.count < 1) return {false, a.source, "arrow count must be positive"};
        load[a.source] += a.count;
        load[a.target] += a.count;
    }
    for (int v = 1; v <= k; ++v)
        if (load[v] > blocks[v - 1]) return {false, v, "block capacity exceeded"};
    return {};
}

EnhancedPattern::EnhancedPattern(std::vector<int> blocks, std::vector<EnhancedArrow> arrows)
    : blocks_(std::move(blocks)), arrows_(std::move(arrows)) {
    PatternVerdict v = validate_enhanced(blocks_, arrows_);
    if (!v.ok)
        throw Error("bad_pattern", "invalid enhanced pattern: " + v.reason + " at block " +
                                       std::to_string(v.bad_vertex));
    std::sort(arrows_.begin(), arrows_.end());
}

int EnhancedPattern::multiplicity(int i, int j) const {
    int m = 0;
    for (const EnhancedArrow& a : arrows_)
        if (a.source == j && a.target == i) m += a.count;
    return m;
}

std::string EnhancedPattern::str() const {
    std::string s;
    for (const EnhancedArrow& a : arrows_) {
        if (!s.empty()) s += ",";
        s += std::to_string(a.source) + ">" + std::to_string(a.target);
        if (a.count > 1) s += "x" + std::to_string(a.count);
    }
    return s;
}

}  // namespace bnil
