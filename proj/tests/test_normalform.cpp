#include "bnil/error.hpp"
#include "bnil/normalform.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace bnil;
using testutil::mati;
using testutil::Q;

TEST_SUITE_BEGIN("normalform");

namespace {

Mat<Rational> lambda_family(const Rational& lam) {
    Mat<Rational> a(3, 3);
    a(1, 0) = Rational(1);
    a(2, 0) = lam;
    a(2, 1) = Rational(1);
    return a;
}

bool is_normal_form_shape(const Mat<Rational>& h) {
    for (int i = 0; i < h.rows(); ++i)
        for (int j = i; j < h.cols(); ++j)
            if (!h(i, j).is_zero()) return false;
    for (int i = 1; i < h.rows(); ++i)
        if (h(i, i - 1) != Rational(1)) return false;
    return true;
}

}  // namespace

TEST_CASE("genericity: frozen examples") {
    auto g1 = genericity(mati({{0, 0}, {1, 0}}));
    CHECK(g1.generic);
    CHECK(g1.minors == std::vector<Rational>{Q(1)});

    auto g2 = genericity(mati({{0, 1}, {0, 0}}));
    CHECK_FALSE(g2.generic);
    CHECK(g2.failing_k == 1);
    CHECK(g2.minors == std::vector<Rational>{Q(0)});

    for (auto lam : {Q(0), Q(1), Q(-1), Q(2), Q(7, 3)}) {
        auto r = genericity(lambda_family(lam));
        CHECK(r.generic);
        CHECK(r.minors == std::vector<Rational>{Q(1), Q(1)});
    }

    CHECK_THROWS_AS(genericity(mati({{1, 0}, {0, 0}})), Error);  // not nilpotent
}

TEST_CASE("normal form: frozen examples") {
    auto e21 = normal_form(mati({{0, 0}, {1, 0}}));
    CHECK(e21.H == mati({{0, 0}, {1, 0}}));
    CHECK(e21.g == Mat<Rational>::identity(2));

    for (auto lam : {Q(0), Q(2), Q(7, 3)}) {
        auto nf = normal_form(lambda_family(lam));
        CHECK(nf.H == lambda_family(lam));
        CHECK(nf.g == Mat<Rational>::identity(3));
    }

    CHECK_THROWS_AS(normal_form(mati({{0, 1}, {0, 0}})), Error);  // not generic
}

TEST_CASE("normal form round-trips through conjugation") {
    std::mt19937_64 rng(601);
    for (int n = 2; n <= 6; ++n)
        for (int t = 0; t < 25; ++t) {
            auto h0 = testutil::random_normal_form(n, rng);
            auto u = testutil::random_upper_invertible(n, rng);
            auto nf = normal_form(u * h0 * inverse(u));
            CHECK(nf.H == h0);
        }
}

TEST_CASE("normal form shape, conjugator, and invariance") {
    std::mt19937_64 rng(602);
    for (int n = 3; n <= 6; ++n)
        for (int t = 0; t < 25; ++t) {
            auto a = testutil::random_generic_nilpotent(n, rng);
            auto nf = normal_form(a);
            CHECK(is_normal_form_shape(nf.H));
            CHECK(genericity(nf.H).generic);
            CHECK(nf.H == nf.g * a * inverse(nf.g));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < i; ++j) CHECK(nf.g(i, j).is_zero());

            auto b = testutil::random_upper_invertible(n, rng);
            CHECK(normal_form(b * a * inverse(b)).H == nf.H);
        }
}

TEST_CASE("genericity agrees between minors and column independence") {
    // The report builds both readings internally and throws on mismatch of
    // the aggregate verdicts, so exercising many inputs is the test.
    std::mt19937_64 rng(603);
    int generic_seen = 0, degenerate_seen = 0;
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 50; ++t) {
            auto a = testutil::random_nilpotent(n, rng);
            (genericity(a).generic ? generic_seen : degenerate_seen)++;
        }
    CHECK(generic_seen > 0);
    CHECK(degenerate_seen > 0);
}

TEST_CASE("block matrix: frozen examples") {
    auto a = mati({{0, 3}, {0, 0}});
    SemiinvariantDatum full{{2}, {2}, {{{Q(0), Q(1)}}}};
    CHECK(block_matrix(a, full) == a);

    // a=(2), b=(1,1), P = (x, x^2) on the 2x2 shift.
    auto e21 = mati({{0, 0}, {1, 0}});
    SemiinvariantDatum two{{2}, {1, 1}, {{{Q(0), Q(1)}, {Q(0), Q(0), Q(1)}}}};
    CHECK(block_matrix(e21, two) == mati({{0, 0}, {1, 0}}));
}

TEST_CASE("entry datum blocks are lower triangular with the entry at slot j") {
    std::mt19937_64 rng(604);
    for (int n = 3; n <= 6; ++n) {
        auto h = testutil::random_normal_form(n, rng);
        for (int j = 1; j + 2 <= n; ++j)
            for (int i = j + 2; i <= n; ++i) {
                auto bm = block_matrix(h, entry_datum(i, j, n));
                int k = n - (i - j);
                REQUIRE(bm.rows() == k);
                REQUIRE(bm.cols() == k);
                for (int r = 0; r < k; ++r)
                    for (int c = r + 1; c < k; ++c) CHECK(bm(r, c).is_zero());
                for (int r = 0; r < k; ++r)
                    CHECK(bm(r, r) == (r + 1 == j ? h(i - 1, j - 1) : Q(1)));
                CHECK(semiinvariant(h, entry_datum(i, j, n)) == h(i - 1, j - 1));
            }
    }
}

TEST_CASE("entry datum rejects out-of-range indices") {
    CHECK_THROWS_AS(entry_datum(2, 1, 3), Error);  // i < j+2
    CHECK_THROWS_AS(entry_datum(3, 2, 3), Error);  // j > n-2
    CHECK_THROWS_AS(entry_datum(4, 1, 3), Error);  // i > n
}

TEST_CASE("datum validation") {
    SemiinvariantDatum bad_sum{{2}, {1}, {{{Q(1)}}}};
    CHECK_THROWS_AS(validate_datum(bad_sum, 3), Error);
    SemiinvariantDatum too_big{{4}, {4}, {{{Q(1)}}}};
    CHECK_THROWS_AS(validate_datum(too_big, 3), Error);
    SemiinvariantDatum ragged{{1, 1}, {2}, {{{Q(1)}}}};  // P grid not 2x1
    CHECK_THROWS_AS(validate_datum(ragged, 3), Error);
}

TEST_CASE("zero matrix kills data whose first block row has no constant terms") {
    SemiinvariantDatum p{{1}, {1}, {{{Q(0), Q(1)}}}};
    CHECK(semiinvariant(Mat<Rational>::zero(3, 3), p) == Q(0));
}

TEST_CASE("weights: frozen examples") {
    SemiinvariantDatum full{{3}, {3}, {{{Q(0), Q(1)}}}};
    CHECK(weight(full, 3) == WeightVector{{0, 0, 0}});

    // entry_datum(3,1,3): block rows (0,3), block cols (1,2).
    CHECK(weight(entry_datum(3, 1, 3), 3) == WeightVector{{-1, 0, 1}});
}

TEST_CASE("semiinvariance identity with the diagonal character") {
    std::mt19937_64 rng(605);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 40; ++t) {
            auto a = testutil::random_nilpotent(n, rng);
            auto g = testutil::random_upper_invertible(n, rng);
            // Random small datum: k <= n, one or two blocks per side.
            int k = int(testutil::rand_int(rng, 1, n));
            auto split = [&](int total) {
                std::vector<int> parts;
                if (total >= 2 && testutil::rand_int(rng, 0, 1)) {
                    int first = int(testutil::rand_int(rng, 0, total));
                    parts = {first, total - first};
                } else {
                    parts = {total};
                }
                return parts;
            };
            SemiinvariantDatum p{split(k), split(k), {}};
            p.P.resize(p.a.size());
            for (auto& row : p.P) {
                row.resize(p.b.size());
                for (auto& poly : row) {
                    poly.resize(size_t(testutil::rand_int(rng, 1, (long long)n + 1)));
                    for (auto& c : poly) c = Q(testutil::rand_int(rng, -2, 2));
                }
            }
            auto w = weight(p, n);
            CHECK(semiinvariant(g * a * inverse(g), p) ==
                  character(g, w) * semiinvariant(a, p));
        }
}

TEST_CASE("corner blocks of a conjugate factor through the corner blocks") {
    std::mt19937_64 rng(606);
    for (int t = 0; t < 40; ++t) {
        int n = int(testutil::rand_int(rng, 2, 5));
        Mat<Rational> a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = Q(testutil::rand_int(rng, -4, 4));
        auto g = testutil::random_upper_invertible(n, rng);
        auto conj = g * a * inverse(g);
        int ra = int(testutil::rand_int(rng, 1, n));
        int cb = int(testutil::rand_int(rng, 1, n));
        auto g_low = g.block(n - ra, n - ra, ra, ra);   // trailing principal block
        auto g_top = g.block(0, 0, cb, cb);             // leading principal block
        CHECK(submatrix_corner(conj, ra, cb) ==
              g_low * submatrix_corner(a, ra, cb) * inverse(g_top));
    }
}

TEST_CASE("the length-3 family separates parameters") {
    std::vector<Rational> lams = {Q(0), Q(1), Q(-1), Q(2), Q(7, 3)};
    SemiinvariantDatum p1{{1}, {1}, {{{Q(0), Q(1)}}}};
    SemiinvariantDatum p2{{2}, {2}, {{{Q(0), Q(1)}}}};
    std::vector<std::pair<Rational, Rational>> seen;
    for (auto& lam : lams) {
        auto a = lambda_family(lam);
        auto v1 = semiinvariant(a, p1);
        auto v2 = semiinvariant(a, p2);
        CHECK(v1 == lam);
        CHECK(v2 == Q(1));
        for (auto& [u1, u2] : seen) CHECK(u1 * v2 != u2 * v1);  // distinct in P^1
        seen.push_back({v1, v2});
    }
}

TEST_SUITE_END();
