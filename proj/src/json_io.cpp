#include "bnil/json_io.hpp"

namespace bnil {

namespace {

Rational rational_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw Error("bad_json", "expected a rational as \"p/q\" string or integer");
}

}  // namespace

void to_json(nlohmann::json& j, const Mat<Rational>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c).str());
        rows.push_back(std::move(row));
    }
    j = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

void from_json(const nlohmann::json& j, Mat<Rational>& m) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw Error("bad_json", "matrix JSON needs rows, cols, entries");
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    const nlohmann::json& e = j.at("entries");
    if (rows < 0 || cols < 0 || !e.is_array() || int(e.size()) != rows)
        throw Error("bad_json", "matrix entries shape mismatch");
    m = Mat<Rational>(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!e[i].is_array() || int(e[i].size()) != cols)
            throw Error("bad_json", "matrix entries shape mismatch");
        for (int c = 0; c < cols; ++c) m(i, c) = rational_from_json(e[i][c]);
    }
}

void to_json(nlohmann::json& j, const OrientedLinkPattern& p) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const Arrow& a : p.arrows())
        arrows.push_back({{"source", a.source}, {"target", a.target}});
    j = {{"n", p.n()}, {"arrows", std::move(arrows)}};
}

void from_json(const nlohmann::json& j, OrientedLinkPattern& p) {
    if (!j.is_object() || !j.contains("n") || !j.contains("arrows"))
        throw Error("bad_json", "pattern JSON needs n and arrows");
    std::vector<Arrow> arrows;
    for (const nlohmann::json& a : j.at("arrows"))
        arrows.push_back({a.at("source").get<int>(), a.at("target").get<int>()});
    p = OrientedLinkPattern(j.at("n").get<int>(), std::move(arrows));
}

void to_json(nlohmann::json& j, const EnhancedPattern& p) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const EnhancedArrow& a : p.arrows())
        arrows.push_back({{"source", a.source}, {"target", a.target}, {"count", a.count}});
    j = {{"blocks", p.blocks()}, {"arrows", std::move(arrows)}};
}

void to_json(nlohmann::json& j, const Involution& s) {
    nlohmann::json cycles = nlohmann::json::array();
    for (auto [a, b] : s.cycles()) cycles.push_back({a, b});
    j = {{"n", s.n()}, {"cycles", std::move(cycles)}};
}

void from_json(const nlohmann::json& j, Involution& s) {
    if (!j.is_object() || !j.contains("n") || !j.contains("cycles"))
        throw Error("bad_json", "involution JSON needs n and cycles");
    std::vector<std::pair<int, int>> cycles;
    for (const nlohmann::json& c : j.at("cycles")) {
        if (!c.is_array() || c.size() != 2) throw Error("bad_json", "cycle must be a pair");
        cycles.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    s = Involution::from_cycles(j.at("n").get<int>(), cycles);
}

void to_json(nlohmann::json& j, const IntersectionProfile& p) {
    j = {{"n", p.n}, {"d", p.grid}};
}

void to_json(nlohmann::json& j, const InvariantProfile& p) {
    j = {{"n", p.n}, {"p", p.p}, {"q", p.q}};
}

void to_json(nlohmann::json& j, const RankMatrix& r) {
    j = {{"n", r.n}, {"grid", r.grid}};
}

void to_json(nlohmann::json& j, const Decomposition& d) {
    nlohmann::json u = nlohmann::json::array(), v = nlohmann::json::array(),
                   w = nlohmann::json::array();
    for (int i = 1; i <= d.n; ++i)
        for (int jj = 1; jj <= d.n; ++jj)
            if (d.mU[i - 1][jj - 1])
                u.push_back({{"i", i}, {"j", jj}, {"count", d.mU[i - 1][jj - 1]}});
    for (int i = 1; i <= d.n; ++i)
        if (d.nV[i - 1]) v.push_back({{"i", i}, {"count", d.nV[i - 1]}});
    for (int i = 1; i < d.n; ++i)
        for (int jj = i; jj < d.n; ++jj)
            if (d.wW[i - 1][jj - 1])
                w.push_back({{"i", i}, {"j", jj}, {"count", d.wW[i - 1][jj - 1]}});
    j = {{"n", d.n}, {"U", std::move(u)}, {"V", std::move(v)}, {"W", std::move(w)}};
}

void to_json(nlohmann::json& j, const GenericityReport& r) {
    nlohmann::json minors = nlohmann::json::array();
    for (const Rational& m : r.minors) minors.push_back(m.str());
    j = {{"generic", r.generic}, {"minors", std::move(minors)}};
    j["failing_k"] = r.failing_k ? nlohmann::json(*r.failing_k) : nlohmann::json();
}

void to_json(nlohmann::json& j, const NormalForm& nf) {
    j = {{"H", nf.H}, {"g", nf.g}};
}

void from_json(const nlohmann::json& j, SemiinvariantDatum& p) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("P"))
        throw Error("bad_json", "datum JSON needs a, b, P");
    p.a = j.at("a").get<std::vector<int>>();
    p.b = j.at("b").get<std::vector<int>>();
    p.P.clear();
    for (const nlohmann::json& row : j.at("P")) {
        std::vector<std::vector<Rational>> prow;
        for (const nlohmann::json& poly : row) {
            std::vector<Rational> coeffs;
            for (const nlohmann::json& c : poly) coeffs.push_back(rational_from_json(c));
            prow.push_back(std::move(coeffs));
        }
        p.P.push_back(std::move(prow));
    }
}

void to_json(nlohmann::json& j, const SemiinvariantDatum& p) {
    nlohmann::json grid = nlohmann::json::array();
    for (const auto& row : p.P) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& poly : row) {
            nlohmann::json cs = nlohmann::json::array();
            for (const Rational& c : poly) cs.push_back(c.str());
            r.push_back(std::move(cs));
        }
        grid.push_back(std::move(r));
    }
    j = {{"a", p.a}, {"b", p.b}, {"P", std::move(grid)}};
}

void to_json(nlohmann::json& j, const WeightVector& w) { j = {{"c", w.c}}; }

void to_json(nlohmann::json& j, const OrbitCensus& c) {
    nlohmann::json orbits = nlohmann::json::array();
    for (const OrbitInfo& o : c.orbits) {
        std::vector<uint8_t> d = decode_matrix(o.representative, c.n, c.q);
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < c.n; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int jj = 0; jj < c.n; ++jj) row.push_back(int(d[size_t(i) * c.n + jj]));
            rows.push_back(std::move(row));
        }
        orbits.push_back({{"representative", std::move(rows)},
                          {"size", o.size},
                          {"pattern", o.pattern}});
    }
    j = {{"n", c.n}, {"q", c.q}, {"orbit_count", c.orbit_count}, {"orbits", std::move(orbits)}};
}

}  // namespace bnil
