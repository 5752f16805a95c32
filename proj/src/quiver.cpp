#include "bnil/quiver.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace bnil {

BoundQuiverRep make_rep(std::vector<int> dims, std::vector<Mat<Rational>> chain,
                        Mat<Rational> loop) {
    const int n = int(dims.size());
    if (n == 0) throw Error("dimension_mismatch", "empty dimension vector");
    for (int d : dims)
        if (d < 0) throw Error("dimension_mismatch", "negative dimension");
    if (int(chain.size()) != n - 1)
        throw Error("dimension_mismatch", "expected n-1 chain maps");
    for (int v = 0; v + 1 < n; ++v)
        if (chain[v].rows() != dims[v + 1] || chain[v].cols() != dims[v])
            throw Error("dimension_mismatch", "chain map shape at vertex " + std::to_string(v + 1));
    if (loop.rows() != dims[n - 1] || loop.cols() != dims[n - 1])
        throw Error("dimension_mismatch", "loop shape");
    if (!(loop * loop).is_zero()) throw Error("not_2_nilpotent", "loop squared is nonzero");
    return {std::move(dims), std::move(chain), std::move(loop)};
}

BoundQuiverRep rep_of_matrix(const Mat<Rational>& a, const std::vector<int>& dims) {
    const int n = int(dims.size());
    if (n == 0 || dims[0] < 1) throw Error("dimension_mismatch", "dims must start positive");
    for (int v = 0; v + 1 < n; ++v)
        if (dims[v + 1] <= dims[v])
            throw Error("dimension_mismatch", "dims must be strictly increasing");
    if (a.rows() != dims[n - 1] || a.cols() != dims[n - 1])
        throw Error("dimension_mismatch", "matrix size must equal the last dimension");
    std::vector<Mat<Rational>> chain;
    for (int v = 0; v + 1 < n; ++v) {
        Mat<Rational> e(dims[v + 1], dims[v]);
        for (int i = 0; i < dims[v]; ++i) e(i, i) = Rational(1);
        chain.push_back(std::move(e));
    }
    return make_rep(dims, std::move(chain), a);
}

std::string IndecomposableId::str() const {
    switch (kind) {
        case Kind::U: return "U(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Kind::V: return "V(" + std::to_string(i) + ")";
        default: return "W(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
}

namespace {

void check_id(const IndecomposableId& id, int n) {
    bool ok = false;
    switch (id.kind) {
        case Kind::U: ok = 1 <= id.i && id.i <= n && 1 <= id.j && id.j <= n; break;
        case Kind::V: ok = 1 <= id.i && id.i <= n; break;
        case Kind::W: ok = 1 <= id.i && id.i <= id.j && id.j < n; break;
    }
    if (!ok) throw Error("bad_pattern", "invalid indecomposable " + id.str() +
                                            " at n=" + std::to_string(n));
}

int dim_at(const IndecomposableId& id, int v) {  // v is 1-indexed
    switch (id.kind) {
        case Kind::U: return (v >= id.i) + (v >= id.j);
        case Kind::V: return v >= id.i;
        default: return id.i <= v && v <= id.j;
    }
}

}  // namespace

BoundQuiverRep indecomposable(const IndecomposableId& id, int n) {
    check_id(id, n);
    std::vector<int> dims(n);
    for (int v = 1; v <= n; ++v) dims[v - 1] = dim_at(id, v);

    std::vector<Mat<Rational>> chain;
    for (int v = 1; v < n; ++v) {
        int dv = dims[v - 1], dw = dims[v];
        Mat<Rational> c(dw, dv);
        if (dv == dw) {
            for (int t = 0; t < dv; ++t) c(t, t) = Rational(1);
        } else if (dv == 1 && dw == 2) {
            // the 1 -> 2 jump of a U: the old line lands on e1 when j <= i,
            // on e2 when i < j
            c(id.j <= id.i ? 0 : 1, 0) = Rational(1);
        } else if (dv == 1 && dw == 0) {
            // exit of a W window: zero map to the zero space
        }
        // remaining jumps (0 -> k) have no columns
        chain.push_back(std::move(c));
    }

    int dn = dims[n - 1];
    Mat<Rational> loop(dn, dn);
    if (id.kind == Kind::U) loop(1, 0) = Rational(1);  // alpha: e1 -> e2 -> 0
    return make_rep(std::move(dims), std::move(chain), std::move(loop));
}

namespace {

int total_dim(const IndecomposableId& id, int n) {
    int t = 0;
    for (int v = 1; v <= n; ++v) t += dim_at(id, v);
    return t;
}

void sort_ids(std::vector<IndecomposableId>& ids, int n) {
    std::sort(ids.begin(), ids.end(), [n](const IndecomposableId& a, const IndecomposableId& b) {
        int ta = total_dim(a, n), tb = total_dim(b, n);
        if (ta != tb) return ta < tb;
        return a < b;  // then kind, then indices
    });
}

}  // namespace

std::vector<IndecomposableId> all_indecomposables(int n) {
    std::vector<IndecomposableId> ids;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) ids.push_back(idU(i, j));
    for (int i = 1; i <= n; ++i) ids.push_back(idV(i));
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) ids.push_back(idW(i, j));
    sort_ids(ids, n);
    return ids;
}

std::vector<IndecomposableId> uv_indecomposables(int n) {
    std::vector<IndecomposableId> ids;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) ids.push_back(idU(i, j));
    for (int i = 1; i <= n; ++i) ids.push_back(idV(i));
    sort_ids(ids, n);
    return ids;
}

BoundQuiverRep direct_sum(const BoundQuiverRep& x, const BoundQuiverRep& y) {
    if (x.vertices() != y.vertices())
        throw Error("dimension_mismatch", "direct_sum: vertex count mismatch");
    const int n = x.vertices();
    std::vector<int> dims(n);
    for (int v = 0; v < n; ++v) dims[v] = x.dims[v] + y.dims[v];
    auto block2 = [](const Mat<Rational>& a, const Mat<Rational>& b) {
        Mat<Rational> m(a.rows() + b.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
        return m;
    };
    std::vector<Mat<Rational>> chain;
    for (int v = 0; v + 1 < n; ++v) chain.push_back(block2(x.chain[v], y.chain[v]));
    return make_rep(std::move(dims), std::move(chain), block2(x.loop, y.loop));
}

int hom_dim(const BoundQuiverRep& x, const BoundQuiverRep& y) {
    if (x.vertices() != y.vertices())
        throw Error("dimension_mismatch", "hom_dim: vertex count mismatch");
    const int n = x.vertices();

    // Variable layout: f_v is dY_v x dX_v, flattened row-major per vertex.
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
    const int vars = offset[n];
    auto fidx = [&](int v, int r, int c) { return offset[v] + r * x.dims[v] + c; };

    int eqs = 0;
    for (int v = 0; v + 1 < n; ++v) eqs += y.dims[v + 1] * x.dims[v];
    eqs += y.dims[n - 1] * x.dims[n - 1];

    Mat<Rational> sys(eqs, vars);
    int row = 0;
    // chain arrows: f_{v+1} Xc_v - Yc_v f_v = 0
    for (int v = 0; v + 1 < n; ++v) {
        const Mat<Rational>& xc = x.chain[v];
        const Mat<Rational>& yc = y.chain[v];
        for (int r = 0; r < y.dims[v + 1]; ++r)
            for (int c = 0; c < x.dims[v]; ++c, ++row) {
                for (int k = 0; k < x.dims[v + 1]; ++k)
                    if (!xc(k, c).is_zero()) sys(row, fidx(v + 1, r, k)) += xc(k, c);
                for (int k = 0; k < y.dims[v]; ++k)
                    if (!yc(r, k).is_zero()) sys(row, fidx(v, k, c)) -= yc(r, k);
            }
    }
    // loop: f_n Xloop - Yloop f_n = 0
    {
        int v = n - 1;
        for (int r = 0; r < y.dims[v]; ++r)
            for (int c = 0; c < x.dims[v]; ++c, ++row) {
                for (int k = 0; k < x.dims[v]; ++k)
                    if (!x.loop(k, c).is_zero()) sys(row, fidx(v, r, k)) += x.loop(k, c);
                for (int k = 0; k < y.dims[v]; ++k)
                    if (!y.loop(r, k).is_zero()) sys(row, fidx(v, k, c)) -= y.loop(r, k);
            }
    }
    return vars - rank(sys);
}

int hom_dim_closed_form(const IndecomposableId& a, const IndecomposableId& b) {
    if (a.kind == Kind::W || b.kind == Kind::W)
        throw Error("closed_form_undefined", "closed forms do not cover the W kind");
    auto ind = [](bool c) { return c ? 1 : 0; };
    if (a.kind == Kind::V && b.kind == Kind::V) return ind(b.i <= a.i);
    if (a.kind == Kind::V && b.kind == Kind::U) return ind(b.i <= a.i);
    if (a.kind == Kind::U && b.kind == Kind::V) return ind(b.i <= a.j);
    // [U_{k,l}, U_{i,j}] with (k,l) = (a.i, a.j), (i,j) = (b.i, b.j)
    return ind(b.i <= a.j) + ind(b.j <= a.j) * ind(b.i <= a.i);
}

int endo_dim(const BoundQuiverRep& x) { return hom_dim(x, x); }

int orbit_dimension(const OrientedLinkPattern& p) {
    const int n = p.n();
    std::vector<int> dims(n);
    std::iota(dims.begin(), dims.end(), 1);
    BoundQuiverRep m = rep_of_matrix(to_multiplicity_matrix(p), dims);
    return n * (n + 1) / 2 - endo_dim(m);
}

namespace {

// Hom-count Gram matrix for all indecomposables at a given vertex count,
// with its inverse; built once per n.  Invertibility is what makes the
// Krull-Schmidt solve unique (the diagonal carries End dimensions of 2 for
// U_{i,j} with i <= j, so the matrix is not unitriangular in any order).
struct GramTable {
    std::vector<IndecomposableId> ids;
    std::vector<BoundQuiverRep> reps;
    Mat<Rational> inv;
};

const GramTable& gram_table(int n) {
    static std::mutex mu;
    static std::map<int, GramTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GramTable t;
    t.ids = all_indecomposables(n);
    for (const auto& id : t.ids) t.reps.push_back(indecomposable(id, n));
    const int m = int(t.ids.size());
    Mat<Rational> g(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) g(r, c) = Rational(hom_dim(t.reps[r], t.reps[c]));
    try {
        t.inv = inverse(g);
    } catch (const std::domain_error&) {
        throw Error("internal_error", "indecomposable Hom matrix is singular at n=" +
                                          std::to_string(n));
    }
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

int Decomposition::mult(const IndecomposableId& id) const {
    switch (id.kind) {
        case Kind::U: return mU[id.i - 1][id.j - 1];
        case Kind::V: return nV[id.i - 1];
        default: return wW[id.i - 1][id.j - 1];
    }
}

Decomposition krull_schmidt(const BoundQuiverRep& m) {
    const int n = m.vertices();
    const GramTable& t = gram_table(n);
    const int k = int(t.ids.size());

    Mat<Rational> h(k, 1);
    for (int r = 0; r < k; ++r) h(r, 0) = Rational(hom_dim(t.reps[r], m));
    Mat<Rational> mult = t.inv * h;

    Decomposition d;
    d.n = n;
    d.mU.assign(n, std::vector<int>(n, 0));
    d.nV.assign(n, 0);
    d.wW.assign(n, std::vector<int>(n, 0));
    std::vector<int> dimsum(n, 0);
    for (int r = 0; r < k; ++r) {
        const Rational& q = mult(r, 0);
        if (!q.is_integer() || q < Rational(0))
            throw Error("internal_error",
                        "Krull-Schmidt solve produced a non-natural multiplicity for " +
                            t.ids[r].str());
        int c = q.num().convert_to<int>();
        const IndecomposableId& id = t.ids[r];
        switch (id.kind) {
            case Kind::U: d.mU[id.i - 1][id.j - 1] = c; break;
            case Kind::V: d.nV[id.i - 1] = c; break;
            case Kind::W: d.wW[id.i - 1][id.j - 1] = c; break;
        }
        for (int v = 0; v < n; ++v) dimsum[v] += c * t.reps[r].dims[v];
    }
    if (dimsum != m.dims)
        throw Error("internal_error", "Krull-Schmidt dimension bookkeeping failed");
    return d;
}

std::vector<int> zwara_hom_vector(const OrientedLinkPattern& p) {
    const int n = p.n();
    std::vector<int> dims(n);
    std::iota(dims.begin(), dims.end(), 1);
    BoundQuiverRep m = rep_of_matrix(to_multiplicity_matrix(p), dims);
    std::vector<int> h;
    for (const auto& id : uv_indecomposables(n)) h.push_back(hom_dim(indecomposable(id, n), m));
    return h;
}

bool zwara_leq(const OrientedLinkPattern& p, const OrientedLinkPattern& q) {
    if (p.n() != q.n()) throw Error("dimension_mismatch", "patterns on different vertex counts");
    std::vector<int> hp = zwara_hom_vector(p), hq = zwara_hom_vector(q);
    for (size_t t = 0; t < hp.size(); ++t)
        if (hp[t] > hq[t]) return false;
    return true;
}

}  // namespace bnil
