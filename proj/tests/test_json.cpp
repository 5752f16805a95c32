#include "bnil/json_io.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <json.hpp>

#include <random>

using namespace bnil;
using nlohmann::json;
using testutil::mati;
using testutil::Q;

TEST_SUITE_BEGIN("json");

TEST_CASE("matrices round-trip bit-exactly") {
    std::mt19937_64 rng(701);
    for (int t = 0; t < 40; ++t) {
        int rows = int(testutil::rand_int(rng, 0, 5));
        int cols = int(testutil::rand_int(rng, 0, 5));
        Mat<Rational> m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m(i, j) = Q(testutil::rand_int(rng, -99, 99), testutil::rand_int(rng, 1, 99));
        json j = m;
        CHECK(j.at("rows") == rows);
        CHECK(j.at("cols") == cols);
        CHECK(j.get<Mat<Rational>>() == m);
        // Serialized text is deterministic.
        CHECK(json::parse(j.dump()).get<Mat<Rational>>() == m);
    }
}

TEST_CASE("matrix JSON accepts plain integers") {
    auto j = json::parse(R"({"rows":2,"cols":2,"entries":[[0,1],["-3/2",0]]})");
    CHECK(j.get<Mat<Rational>>() == Mat<Rational>{{Q(0), Q(1)}, {Q(-3, 2), Q(0)}});
    CHECK_THROWS(json::parse(R"({"rows":2,"cols":2,"entries":[[0,1]]})").get<Mat<Rational>>());
}

TEST_CASE("patterns round-trip; arrows stay sorted") {
    auto p = OrientedLinkPattern(5, {{5, 3}, {2, 1}});
    json j = p;
    CHECK(j.at("n") == 5);
    CHECK(j.at("arrows")[0] == json({{"source", 2}, {"target", 1}}));
    CHECK(j.at("arrows")[1] == json({{"source", 5}, {"target", 3}}));
    CHECK(j.get<OrientedLinkPattern>() == p);
    CHECK_THROWS(json::parse(R"({"n":2,"arrows":[{"source":1,"target":2},
        {"source":2,"target":1}]})").get<OrientedLinkPattern>());
}

TEST_CASE("enhanced patterns serialize blocks and counts") {
    json j = EnhancedPattern({3, 1}, {{1, 1, 1}, {2, 1, 1}});
    CHECK(j.at("blocks") == json::array({3, 1}));
    CHECK(j.at("arrows").size() == 2);
    CHECK(j.at("arrows")[0].at("count") == 1);
}

TEST_CASE("involutions round-trip through cycle lists") {
    auto s = Involution::from_cycles(5, {{1, 2}, {3, 5}});
    json j = s;
    CHECK(j.at("n") == 5);
    CHECK(j.at("cycles") == json::array({json::array({1, 2}), json::array({3, 5})}));
    CHECK(j.get<Involution>() == s);
    CHECK_THROWS(json::parse(R"({"n":3,"cycles":[[1,2],[2,3]]})").get<Involution>());
}

TEST_CASE("profiles and rank matrices serialize their grids") {
    json dj = profile_of(mati({{0, 0}, {1, 0}}));
    CHECK(dj.at("n") == 2);
    CHECK(dj.at("d") == json::array({json::array({0, 0, 0}), json::array({0, 0, 0}),
                                     json::array({0, 1, 1})}));

    json pj = pattern_profile(OrientedLinkPattern(2, {{1, 2}}));
    CHECK(pj.at("p") == json::array({0, 1}));
    CHECK(pj.at("q") == json::array({json::array({0, 1}), json::array({1, 2})}));

    json rj = rank_matrix(Involution::from_cycles(3, {{1, 3}}).matrix());
    CHECK(rj.at("grid")[0][2] == 1);
    CHECK(rj.at("grid")[0][1] == 0);
}

TEST_CASE("decompositions serialize sparsely") {
    auto dec = krull_schmidt(rep_of_matrix(mati({{0, 0}, {1, 0}}), {1, 2}));
    json j = dec;
    CHECK(j.at("U") == json::array({json{{"i", 2}, {"j", 1}, {"count", 1}}}));
    CHECK(j.at("V") == json::array());
    CHECK(j.at("W") == json::array());
}

TEST_CASE("reports serialize") {
    json gj = genericity(mati({{0, 1}, {0, 0}}));
    CHECK(gj.at("generic") == false);
    CHECK(gj.at("failing_k") == 1);
    CHECK(gj.at("minors") == json::array({"0"}));

    json gj2 = genericity(mati({{0, 0}, {1, 0}}));
    CHECK(gj2.at("failing_k").is_null());

    json nj = normal_form(mati({{0, 0}, {1, 0}}));
    CHECK(nj.at("H").at("entries")[1][0] == "1");
    CHECK(nj.at("g").at("entries")[0][0] == "1");

    json wj = weight(entry_datum(3, 1, 3), 3);
    CHECK(wj.at("c") == json::array({-1, 0, 1}));
}

TEST_CASE("semiinvariant data round-trip") {
    auto d = entry_datum(4, 1, 4);
    json j = d;
    auto back = j.get<SemiinvariantDatum>();
    CHECK(back.a == d.a);
    CHECK(back.b == d.b);
    CHECK(back.P == d.P);
}

TEST_CASE("census serializes counts and representatives") {
    json j = census(2, 2);
    CHECK(j.at("n") == 2);
    CHECK(j.at("q") == 2);
    CHECK(j.at("orbit_count") == 3);
    REQUIRE(j.at("orbits").size() == 3);
    CHECK(j.at("orbits")[0].at("size") == 1);
    CHECK(j.at("orbits")[0].at("representative") ==
          json::array({json::array({0, 0}), json::array({0, 0})}));
}

TEST_SUITE_END();
