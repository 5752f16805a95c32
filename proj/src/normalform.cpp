#include "bnil/normalform.hpp"

namespace bnil {

void require_nilpotent(const Mat<Rational>& a) {
    if (!a.is_square()) throw Error("not_nilpotent", "matrix is not square");
    if (!mat_pow(a, a.rows()).is_zero())
        throw Error("not_nilpotent", "A^n is nonzero");
}

GenericityReport genericity(const Mat<Rational>& a) {
    require_nilpotent(a);
    const int n = a.rows();
    GenericityReport rep;
    rep.generic = true;
    bool generic_by_columns = true;
    Mat<Rational> pw = Mat<Rational>::identity(n);         // A^0
    std::vector<Mat<Rational>> powers{pw};
    for (int m = 1; m < n; ++m) powers.push_back(powers.back() * a);
    for (int k = 1; k <= n - 1; ++k) {
        const Mat<Rational>& ank = powers[n - k];
        Rational minor = det(submatrix_corner(ank, k, k));
        if (minor.is_zero() && !rep.failing_k) {
            rep.generic = false;
            rep.failing_k = k;
        }
        rep.minors.push_back(std::move(minor));
        if (rank(ank.block(0, 0, n, k)) != k) generic_by_columns = false;
    }
    // The per-k statements can disagree; only the aggregate verdicts must
    // coincide (the corollary's equivalence), so that is what is checked.
    if (rep.generic != generic_by_columns)
        throw Error("internal_error", "genericity cross-check failed");
    return rep;
}

NormalForm normal_form(const Mat<Rational>& a) {
    GenericityReport rep = genericity(a);
    if (!rep.generic)
        throw Error("not_generic", "matrix is not generic (minor " +
                                       std::to_string(*rep.failing_k) + " vanishes)");
    const int n = a.rows();
    std::vector<Mat<Rational>> powers{Mat<Rational>::identity(n)};
    for (int m = 1; m < n; ++m) powers.push_back(powers.back() * a);
    Mat<Rational> rhs = powers[n - 1].col(0);  // A^{n-1} e_1

    Mat<Rational> t(n, n);
    for (int k = 1; k <= n; ++k) {
        Mat<Rational> sk = powers[n - k].block(0, 0, n, k);
        Mat<Rational> x = solve_unique(sk, rhs);  // full column rank by genericity
        for (int i = 0; i < k; ++i) t(i, k - 1) = x(i, 0);
    }
    Mat<Rational> g = inverse(t);
    Mat<Rational> h = g * a * t;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool bad = (i <= j && !h(i, j).is_zero()) ||
                       (i == j + 1 && !(h(i, j) == Rational(1)));
            if (bad) throw Error("internal_error", "normal form has wrong shape");
        }
    return {std::move(h), std::move(g)};
}

void validate_datum(const SemiinvariantDatum& p, int n) {
    const int s = int(p.a.size()), t = int(p.b.size());
    if (s == 0 || t == 0) throw Error("bad_datum", "empty block lists");
    long long ka = 0, kb = 0;
    for (int v : p.a) {
        if (v < 0) throw Error("bad_datum", "negative block height");
        ka += v;
    }
    for (int v : p.b) {
        if (v < 0) throw Error("bad_datum", "negative block width");
        kb += v;
    }
    if (ka != kb) throw Error("bad_datum", "block heights and widths sum differently");
    if (ka > n) throw Error("bad_datum", "blocks exceed the matrix size");
    if (int(p.P.size()) != s) throw Error("bad_datum", "polynomial grid has wrong height");
    for (const auto& row : p.P)
        if (int(row.size()) != t) throw Error("bad_datum", "polynomial grid has wrong width");
}

Mat<Rational> block_matrix(const Mat<Rational>& a, const SemiinvariantDatum& p) {
    require_nilpotent(a);
    const int n = a.rows();
    validate_datum(p, n);
    int k = 0;
    for (int v : p.a) k += v;

    Mat<Rational> out(k, k);
    int r0 = 0;
    for (size_t i = 0; i < p.a.size(); ++i) {
        if (p.a[i] == 0) continue;  // empty block row
        int c0 = 0;
        for (size_t j = 0; j < p.b.size(); ++j) {
            if (p.b[j] == 0) continue;  // empty block column
            Mat<Rational> blk = submatrix_corner(mat_poly(p.P[i][j], a), p.a[i], p.b[j]);
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c) out(r0 + r, c0 + c) = blk(r, c);
            c0 += p.b[j];
        }
        r0 += p.a[i];
    }
    return out;
}

Rational semiinvariant(const Mat<Rational>& a, const SemiinvariantDatum& p) {
    return det(block_matrix(a, p));
}

WeightVector weight(const SemiinvariantDatum& p, int n) {
    validate_datum(p, n);
    WeightVector w;
    w.c.assign(n, 0);
    // det(g_(>=a)) multiplies in g_mm for m = n-a+1..n; det(g_(<=b))^{-1}
    // removes g_mm for m = 1..b.  Empty blocks contribute nothing.
    for (int av : p.a)
        for (int m = n - av + 1; m <= n; ++m) ++w.c[m - 1];
    for (int bv : p.b)
        for (int m = 1; m <= bv; ++m) --w.c[m - 1];
    return w;
}

Rational character(const Mat<Rational>& g, const WeightVector& w) {
    if (!g.is_square() || g.rows() != int(w.c.size()))
        throw Error("dimension_mismatch", "character: size mismatch");
    Rational val(1);
    for (int m = 0; m < g.rows(); ++m) val *= g(m, m).pow(w.c[m]);
    return val;
}

SemiinvariantDatum entry_datum(int i, int j, int n) {
    if (!(1 <= j && j <= n - 2 && j + 2 <= i && i <= n))
        throw Error("bad_datum", "entry_datum: indices out of range");
    auto monomial = [](int e) {
        std::vector<Rational> c(e + 1);
        c[e] = Rational(1);
        return c;
    };
    SemiinvariantDatum p;
    p.a = {j - 1, n - i + 1};
    p.b = {j, n - i};
    p.P = {{monomial(n - j + 1), {}},        // x^{n-j+1}, 0
           {monomial(1), monomial(i)}};      // x, x^i
    return p;
}

}  // namespace bnil
