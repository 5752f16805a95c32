#include "bnil/degeneration.hpp"

#include "bnil/error.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace bnil {

InvariantProfile pattern_profile(const OrientedLinkPattern& m) {
    const int n = m.n();
    InvariantProfile pr;
    pr.n = n;
    pr.p.assign(n, 0);
    pr.q.assign(n, std::vector<int>(n, 0));
    for (int k = 1; k <= n; ++k) {
        int targets = 0, free = 0;
        for (const Arrow& a : m.arrows())
            if (a.target <= k) ++targets;
        for (int v = 1; v <= k; ++v)
            if (m.vertex_free(v)) ++free;
        pr.p[k - 1] = targets + free;
    }
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            int boxed = 0;
            for (const Arrow& a : m.arrows())
                if (a.target <= k && a.source <= l) ++boxed;
            pr.q[k - 1][l - 1] = pr.p[l - 1] + boxed;
        }
    return pr;
}

namespace {

bool profile_leq(const InvariantProfile& a, const InvariantProfile& b) {
    for (int k = 0; k < a.n; ++k)
        if (a.p[k] > b.p[k]) return false;
    for (int k = 0; k < a.n; ++k)
        for (int l = 0; l < a.n; ++l)
            if (a.q[k][l] > b.q[k][l]) return false;
    return true;
}

}  // namespace

bool leq_deg(const OrientedLinkPattern& m, const OrientedLinkPattern& mp) {
    if (m.n() != mp.n())
        throw Error("dimension_mismatch", "patterns on different vertex counts");
    return profile_leq(pattern_profile(m), pattern_profile(mp));
}

std::vector<OrientedLinkPattern> closure_set(const OrientedLinkPattern& p) {
    if (p.n() > 8) throw Error("n_too_large", "closure_set: guard is n <= 8");
    InvariantProfile base = pattern_profile(p);
    std::vector<OrientedLinkPattern> out;
    for (OrientedLinkPattern& q : enumerate_patterns(p.n()))
        if (profile_leq(base, pattern_profile(q))) out.push_back(std::move(q));
    return out;  // enumerate order is canonical already
}

std::vector<std::vector<uint64_t>> strict_order_bits(
    const std::vector<OrientedLinkPattern>& patterns, Exec exec) {
    const int np = int(patterns.size());
    const int words = (np + 63) / 64;
    std::vector<InvariantProfile> prof(np);
    std::vector<std::vector<uint64_t>> bits(np, std::vector<uint64_t>(words, 0));

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int a = 0; a < np; ++a) prof[a] = pattern_profile(patterns[a]);
#pragma omp parallel for schedule(dynamic, 16)
        for (int a = 0; a < np; ++a)
            for (int b = 0; b < np; ++b)
                if (a != b && profile_leq(prof[a], prof[b]))
                    bits[a][b / 64] |= uint64_t(1) << (b % 64);
    } else {
        for (int a = 0; a < np; ++a) prof[a] = pattern_profile(patterns[a]);
        for (int a = 0; a < np; ++a)
            for (int b = 0; b < np; ++b)
                if (a != b && profile_leq(prof[a], prof[b]))
                    bits[a][b / 64] |= uint64_t(1) << (b % 64);
    }
    return bits;
}

std::vector<std::pair<OrientedLinkPattern, OrientedLinkPattern>> covers(int n, Exec exec) {
    if (n > 6) throw Error("n_too_large", "covers: guard is n <= 6");
    std::vector<OrientedLinkPattern> pats = enumerate_patterns(n);
    const int np = int(pats.size());
    const int words = (np + 63) / 64;
    std::vector<std::vector<uint64_t>> less = strict_order_bits(pats, exec);

    // Transitive reduction: b covers a iff a < b and no c with a < c < b,
    // i.e. the bits of less[a] minus the union of less[c] over c above a.
    std::vector<std::pair<OrientedLinkPattern, OrientedLinkPattern>> out;
    std::vector<uint64_t> seen(words);
    for (int a = 0; a < np; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int w = 0; w < words; ++w) {
            uint64_t row = less[a][w];
            while (row) {
                int c = w * 64 + std::countr_zero(row);
                row &= row - 1;
                for (int t = 0; t < words; ++t) seen[t] |= less[c][t];
            }
        }
        for (int w = 0; w < words; ++w) {
            uint64_t row = less[a][w] & ~seen[w];
            while (row) {
                int b = w * 64 + std::countr_zero(row);
                row &= row - 1;
                out.emplace_back(pats[a], pats[b]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// ----- move table parsing --------------------------------------------------

std::vector<Arrow> parse_fragment(const std::string& text, int vertices,
                                  const std::string& line) {
    std::vector<Arrow> arrows;
    if (text == ".") return arrows;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.size() != 3 || part[1] != '>')
            throw Error("internal_error", "move table: bad arrow '" + part + "' in: " + line);
        int s = part[0] - 'a' + 1, t = part[2] - 'a' + 1;
        if (s < 1 || s > vertices || t < 1 || t > vertices)
            throw Error("internal_error", "move table: vertex out of range in: " + line);
        arrows.push_back({s, t});
    }
    return arrows;
}

MoveTable parse_move_table(const std::string& text) {
    MoveTable table;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        // strip comments and whitespace
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::string s;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty()) continue;

        auto colon = s.find(':');
        auto arrow = s.find("->");
        if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
            throw Error("internal_error", "move table: malformed line: " + line);
        std::string verts = s.substr(0, colon);
        Move m;
        m.vertices = int(verts.size());
        for (int i = 0; i < m.vertices; ++i)
            if (verts[i] != 'a' + i)
                throw Error("internal_error", "move table: bad vertex list: " + line);
        m.pre = parse_fragment(s.substr(colon + 1, arrow - colon - 1), m.vertices, line);
        m.post = parse_fragment(s.substr(arrow + 2), m.vertices, line);
        // both fragments must be valid patterns on the abstract vertices
        for (auto* frag : {&m.pre, &m.post}) {
            PatternVerdict v = validate_pattern(m.vertices, *frag);
            if (!v.ok) throw Error("internal_error", "move table: invalid fragment: " + line);
            std::sort(frag->begin(), frag->end());
        }
        table.entries.push_back(std::move(m));
    }
    return table;
}

}  // namespace

extern const char* const kMoveTableText;

const MoveTable& move_table() {
    static const MoveTable table = parse_move_table(kMoveTableText);
    return table;
}

std::vector<OrientedLinkPattern> apply_moves(const OrientedLinkPattern& p) {
    const int n = p.n();
    std::set<OrientedLinkPattern> results;

    for (const Move& mv : move_table().entries) {
        if (mv.vertices > n) continue;
        // all increasing maps phi : {1..m} -> {1..n}
        std::vector<int> phi(mv.vertices);
        auto rec = [&](auto&& self, int pos, int low) -> void {
            if (pos == mv.vertices) {
                // participating vertices must carry exactly the mapped pre arrows
                std::vector<Arrow> incident, mapped;
                for (const Arrow& a : p.arrows()) {
                    bool touches = false;
                    for (int v : phi)
                        if (a.source == v || a.target == v) touches = true;
                    if (touches) incident.push_back(a);
                }
                for (const Arrow& a : mv.pre)
                    mapped.push_back({phi[a.source - 1], phi[a.target - 1]});
                std::sort(mapped.begin(), mapped.end());
                if (incident != mapped) return;

                std::vector<Arrow> arrows;
                for (const Arrow& a : p.arrows())
                    if (std::find(mapped.begin(), mapped.end(), a) == mapped.end())
                        arrows.push_back(a);
                for (const Arrow& a : mv.post)
                    arrows.push_back({phi[a.source - 1], phi[a.target - 1]});
                results.emplace(n, std::move(arrows));
                return;
            }
            for (int v = low; v <= n - (mv.vertices - 1 - pos); ++v) {
                phi[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 1);
    }
    return {results.begin(), results.end()};
}

std::vector<OrientedLinkPattern> move_closure(const OrientedLinkPattern& p) {
    if (p.n() > 6) throw Error("n_too_large", "move_closure: guard is n <= 6");
    std::set<OrientedLinkPattern> seen{p};
    std::vector<OrientedLinkPattern> work{p};
    while (!work.empty()) {
        OrientedLinkPattern cur = std::move(work.back());
        work.pop_back();
        for (OrientedLinkPattern& q : apply_moves(cur))
            if (seen.insert(q).second) work.push_back(std::move(q));
    }
    return {seen.begin(), seen.end()};
}

namespace {

std::string node_id(const OrientedLinkPattern& p) {
    std::string s = p.str();
    return s.empty() ? "empty" : s;
}

}  // namespace

std::string dot_hasse(int n) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=TB;\n";
    for (const OrientedLinkPattern& p : enumerate_patterns(n))
        os << "  \"" << node_id(p) << "\";\n";
    for (const auto& [p, q] : covers(n))
        os << "  \"" << node_id(p) << "\" -> \"" << node_id(q) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace bnil
