#include "dimerlab/errors.hpp"
#include "dimerlab/serialize.hpp"

#include <doctest.h>

#include <regex>

using namespace dimerlab;

TEST_CASE("triangulation spec grammar") {
    CHECK(parse_triangulation(5, "1-3,1-4") == fan_triangulation(5));
    CHECK(parse_triangulation(5, " 4-1 , 3-1 ") == fan_triangulation(5));
    CHECK(parse_triangulation(5, "fan") == fan_triangulation(5));
    CHECK(parse_triangulation(6, "fan:3") == fan_triangulation(6, 3));
    CHECK(parse_triangulation(3, "") == fan_triangulation(3));
    CHECK(parse_diagonal(5, "3-1") == Diagonal{1, 3});
}

TEST_CASE("parse errors carry a position") {
    for (const char* bad : {"1-3,x", "1-3;1-4", "1-", "fan:x", "1-3,,1-4"}) {
        CAPTURE(bad);
        try {
            parse_triangulation(5, bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(parse_triangulation(5, "1-2,1-3"), Error);
    CHECK_THROWS_AS(parse_triangulation(5, "fan:9"), Error);
}

TEST_CASE("quiver round trip") {
    for (int m = 2; m <= 4; ++m)
        for (const auto& t : enumerate_triangulations(6)) {
            QuiverWithFaces q = quiver_of(t, m);
            Json j = to_json(q);
            CHECK(quiver_from_json(Json::parse(j.dump())) == q);
        }
    CHECK_THROWS_AS(quiver_from_json(Json::parse(R"({"m":2})")), Error);
}

TEST_CASE("triangulation round trip") {
    Triangulation t = parse_triangulation(7, "1-3,3-5,5-7,1-5");
    CHECK(triangulation_from_json(to_json(t)) == t);
}

TEST_CASE("serialization is deterministic") {
    Triangulation t = fan_triangulation(5);
    CHECK(to_json(quiver_of(t, 3)).dump() == to_json(quiver_of(parse_triangulation(5, "1-3,1-4"), 3)).dump());
    CHECK(to_dot(quiver_of(t, 2)) == to_dot(quiver_of(t, 2)));
    VerifyResult a = verify_triangulation(t, 2), b = verify_triangulation(t, 2);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(to_json(a).dump().find("seconds") == std::string::npos);
}

TEST_CASE("triangle DOT has six rim vertices and nine arrows") {
    std::string dot = to_dot(quiver_of(fan_triangulation(3), 2));
    auto count = [&](const std::regex& re) {
        return std::distance(std::sregex_iterator(dot.begin(), dot.end(), re), std::sregex_iterator());
    };
    CHECK(count(std::regex("fillcolor=lightgray")) == 6);
    CHECK(count(std::regex("->")) == 9);
}

TEST_CASE("certificates serialize step by step") {
    QuiverWithFaces q = quiver_of(fan_triangulation(4), 2);
    RewriteSystem rs(q, potential_relations(q));
    const auto& rel = rs.relations().relations[0];
    Json j = to_json(rs.equal(rel.plus, rel.minus));
    CHECK(j.at("outcome") == "equal");
    REQUIRE(j.at("certificate").size() == 1);
    CHECK(j.at("certificate")[0].at("relation") == 0);
    CHECK(j.at("certificate")[0].at("direction") == 1);
}

TEST_CASE("sweep report") {
    SweepReport r = run_sweep({2}, 3, 6, {}, 3);
    CHECK(r.rows.size() == 22);
    CHECK(r.status() == 0);
    Json j = to_json(r, false);
    CHECK(j.dump().find("seconds") == std::string::npos);
    CHECK(to_json(run_sweep({2}, 3, 6, {}, 1), false) == j);
    SweepReport three = run_sweep({3}, 3, 5, {}, 2);
    CHECK(three.rows.size() == 8);
    CHECK(three.status() == 0);
    SweepReport empty = run_sweep({}, 3, 6, {}, 2);
    CHECK(empty.rows.empty());
    CHECK(empty.status() == 0);
}
