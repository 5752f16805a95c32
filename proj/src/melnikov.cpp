#include "bnil/melnikov.hpp"

#include <algorithm>

namespace bnil {

Involution::Involution(std::vector<int> sigma) : sigma_(std::move(sigma)) {
    const int n = int(sigma_.size());
    for (int i = 1; i <= n; ++i) {
        int v = sigma_[i - 1];
        if (v < 1 || v > n) throw Error("bad_involution", "value out of range");
    }
    for (int i = 1; i <= n; ++i)
        if (sigma_[sigma_[i - 1] - 1] != i) throw Error("bad_involution", "not an involution");
}

Involution Involution::from_cycles(int n, const std::vector<std::pair<int, int>>& cycles) {
    if (n < 0) throw Error("bad_involution", "negative n");
    std::vector<int> s(n);
    for (int i = 1; i <= n; ++i) s[i - 1] = i;
    for (auto [a, b] : cycles) {
        if (a < 1 || a > n || b < 1 || b > n || a == b)
            throw Error("bad_involution", "bad 2-cycle");
        if (s[a - 1] != a || s[b - 1] != b)
            throw Error("bad_involution", "overlapping 2-cycles");
        s[a - 1] = b;
        s[b - 1] = a;
    }
    return Involution(std::move(s));
}

std::vector<std::pair<int, int>> Involution::cycles() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n(); ++i)
        if (sigma_[i - 1] > i) out.emplace_back(i, sigma_[i - 1]);
    return out;
}

Mat<Rational> Involution::matrix() const {
    Mat<Rational> m(n(), n());
    for (auto [i, j] : cycles()) m(i - 1, j - 1) = Rational(1);
    return m;
}

std::vector<Involution> enumerate_involutions(int n) {
    std::vector<Involution> out;
    std::vector<int> s(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            out.emplace_back(s);
            return;
        }
        if (s[i - 1] != 0) {
            self(self, i + 1);
            return;
        }
        s[i - 1] = i;  // fixed point
        self(self, i + 1);
        for (int j = i + 1; j <= n; ++j) {
            if (s[j - 1] != 0) continue;
            s[i - 1] = j;
            s[j - 1] = i;
            self(self, i + 1);
            s[j - 1] = 0;
        }
        s[i - 1] = 0;
    };
    rec(rec, 1);
    return out;
}

RankMatrix rank_matrix(const Mat<Rational>& u) {
    const int n = u.rows();
    if (!u.is_square()) throw Error("not_strictly_upper_triangular", "matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (!u(i, j).is_zero())
                throw Error("not_strictly_upper_triangular",
                            "nonzero entry on or below the diagonal");
    if (!(u * u).is_zero()) throw Error("not_2_nilpotent", "matrix squared is nonzero");
    RankMatrix r;
    r.n = n;
    r.grid.assign(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            r.grid[i - 1][j - 1] = rank(u.block(i - 1, i - 1, j - i + 1, j - i + 1));
    return r;
}

RankMatrix edge_count_matrix(const Involution& sigma) {
    const int n = sigma.n();
    RankMatrix r;
    r.n = n;
    r.grid.assign(n, std::vector<int>(n, 0));
    auto cyc = sigma.cycles();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int c = 0;
            for (auto [a, b] : cyc)
                if (i <= a && b <= j) ++c;
            r.grid[i - 1][j - 1] = c;
        }
    return r;
}

bool melnikov_leq(const Involution& tau, const Involution& sigma) {
    if (tau.n() != sigma.n())
        throw Error("dimension_mismatch", "involutions on different vertex counts");
    RankMatrix rt = rank_matrix(tau.matrix());
    RankMatrix rs = rank_matrix(sigma.matrix());
    for (int i = 0; i < rt.n; ++i)
        for (int j = 0; j < rt.n; ++j)
            if (rt.grid[i][j] > rs.grid[i][j]) return false;
    return true;
}

}  // namespace bnil
