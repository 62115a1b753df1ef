#include "dimerlab/errors.hpp"
#include "dimerlab/quiver.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

using namespace dimerlab;

namespace {

using Point = std::map<int, int>; // polygon vertex -> weight
using Edge = std::pair<Point, Point>;

Point point_of(const LatticePoint& p) {
    Point out;
    for (auto [v, w] : p.weights) out[v] = w;
    return out;
}

// Triangular-lattice picture built from coordinates alone: every small upward
// triangle of every big triangle contributes its three sides, oriented
// counterclockwise around it. Sides lying on a diagonal are dropped.
std::multiset<Edge> lattice_arrows(const Triangulation& t, int m) {
    const int n = t.n();
    auto xy = [&](const Point& p) {
        double x = 0, y = 0;
        for (auto [v, w] : p) {
            double a = 2 * std::numbers::pi * v / n;
            x += w * std::cos(a);
            y += w * std::sin(a);
        }
        return std::pair{x, y};
    };
    auto make = [](int p, int q, int r, int a, int b, int c) {
        Point out;
        if (a) out[p] += a;
        if (b) out[q] += b;
        if (c) out[r] += c;
        return out;
    };
    auto on_diagonal = [&](const Point& a, const Point& b) {
        std::set<int> s;
        for (auto& [v, w] : a) s.insert(v);
        for (auto& [v, w] : b) s.insert(v);
        if (s.size() != 2) return false;
        int u = *s.begin(), v = *s.rbegin();
        return t.contains(Diagonal{u, v});
    };
    std::multiset<Edge> out;
    for (auto tri : t.triangles()) {
        auto [p, q, r] = tri;
        for (int i = 0; i < m; ++i)
            for (int j = 0; i + j < m; ++j) {
                int k = m - 1 - i - j;
                Point c[3] = {make(p, q, r, i + 1, j, k), make(p, q, r, i, j + 1, k), make(p, q, r, i, j, k + 1)};
                auto [x0, y0] = xy(c[0]);
                auto [x1, y1] = xy(c[1]);
                auto [x2, y2] = xy(c[2]);
                bool ccw = (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0) > 0;
                for (int s = 0; s < 3; ++s) {
                    Point a = c[s], b = c[(s + 1) % 3];
                    if (on_diagonal(a, b)) continue;
                    if (!ccw) std::swap(a, b);
                    out.insert({a, b});
                }
            }
    }
    return out;
}

std::multiset<Edge> quiver_arrows(const QuiverWithFaces& q) {
    std::multiset<Edge> out;
    for (const auto& a : q.arrows) out.insert({point_of(q.vertices[a.source].point), point_of(q.vertices[a.target].point)});
    return out;
}

std::size_t lattice_point_count(int n, int m) {
    return n + n * (m - 1) + (n - 3) * (m - 1) + (n - 2) * (m - 1) * (m - 2) / 2;
}

} // namespace

TEST_CASE("second-order polygonal numbers") {
    CHECK(p2(3, 1) == 0);
    CHECK(p2(4, 1) == 1);
    CHECK(p2(4, 3) == 9);
    CHECK(p2(7, 2) == 13);
    for (int n = 4; n <= 9; ++n) CHECK(p2(n, 1) == n - 3);
}

TEST_CASE("triangle of order two") {
    QuiverWithFaces q = quiver_of(fan_triangulation(3), 2);
    CHECK(q.vertices.size() == 6);
    CHECK(q.internal_count() == 0);
    CHECK(q.arrows.size() == 9);
    CHECK(q.faces.size() == 4);
    CHECK(q.count(ArrowKind::Boundary) == 6);
    CHECK(q.count(ArrowKind::Internal) == 3);
    CHECK(validate_dimer_model(q).ok());
}

TEST_CASE("arrows agree with the triangular-lattice oracle") {
    for (int m = 2; m <= 4; ++m)
        for (int n = 3; n <= 6; ++n)
            for (const auto& t : enumerate_triangulations(n)) {
                CAPTURE(m);
                CAPTURE(to_string(t));
                QuiverWithFaces q = quiver_of(t, m);
                CHECK(q.vertices.size() == lattice_point_count(n, m));
                CHECK(quiver_arrows(q) == lattice_arrows(t, m));
                CHECK(q.faces.size() == static_cast<std::size_t>((n - 2) * m * m - (n - 3) * m));
            }
}

TEST_CASE("boundary labels run counterclockwise from polygon vertex 1") {
    for (int m = 2; m <= 4; ++m) {
        QuiverWithFaces q = quiver_of(fan_triangulation(5), m);
        REQUIRE(q.boundary.size() == static_cast<std::size_t>(5 * m));
        for (int k = 1; k <= 5; ++k) {
            const auto& p = q.vertices[q.boundary_vertex((k - 1) * m + 1)].point;
            CHECK(p.weights == std::vector<std::pair<int, int>>{{k, m}});
        }
        // x arrows step from label k-1 to label k
        for (int k = 1; k <= 5 * m; ++k) {
            int prev = k == 1 ? 5 * m : k - 1;
            CHECK(q.arrows_between(q.boundary_vertex(prev), q.boundary_vertex(k)).size() == 1);
        }
    }
}

TEST_CASE("fan quiver of order two") {
    for (int n = 3; n <= 8; ++n) {
        QuiverWithFaces q = quiver_of(fan_triangulation(n), 2);
        CHECK(q.internal_count() == static_cast<std::size_t>(n - 3));
        CHECK(q.faces.size() == static_cast<std::size_t>(2 * n - 2));
        std::size_t boundary_arrows = 0;
        for (const auto& a : q.arrows)
            boundary_arrows += q.vertices[a.source].kind == VertexKind::Boundary &&
                               q.vertices[a.target].kind == VertexKind::Boundary;
        // x_1..x_2n plus the two y arrows at the fan's ends (they coincide for the triangle)
        CHECK(boundary_arrows == static_cast<std::size_t>(n == 3 ? 2 * n + 3 : 2 * n + 2));
    }
}

TEST_CASE("cyclic derivatives on the triangle") {
    QuiverWithFaces q = quiver_of(fan_triangulation(3), 2);
    RelationSet r = potential_relations(q);
    REQUIRE(r.relations.size() == 3);
    CHECK(r.max_side() == 2);
    for (const auto& rel : r.relations) {
        const Arrow& a = q.arrows[rel.arrow];
        CHECK(a.kind == ArrowKind::Internal);
        CHECK(rel.plus.source == a.target);
        CHECK(rel.plus.target == a.source);
        CHECK(rel.minus.source == a.target);
        CHECK(rel.minus.target == a.source);
        // the face minus the arrow, read from the arrow's head
        const Face& f = q.faces[a.positive_face];
        auto it = std::find(f.arrows.begin(), f.arrows.end(), rel.arrow);
        REQUIRE(it != f.arrows.end());
        std::vector<int> rest(it + 1, f.arrows.end());
        rest.insert(rest.end(), f.arrows.begin(), it);
        CHECK(rel.plus.arrows == rest);
        CHECK(q.faces[a.positive_face].sign == FaceSign::Positive);
        CHECK(q.faces[a.negative_face].sign == FaceSign::Negative);
    }
}

TEST_CASE("axioms hold for all small triangulations") {
    for (int m = 2; m <= 4; ++m)
        for (int n = 3; n <= 6; ++n)
            for (const auto& t : enumerate_triangulations(n)) {
                auto rep = validate_dimer_model(quiver_of(t, m));
                for (const auto& c : rep.checks) {
                    CAPTURE(c.name);
                    CHECK(c.passed);
                }
            }
}

TEST_CASE("axiom checker flags a broken face") {
    QuiverWithFaces q = quiver_of(fan_triangulation(4), 2);
    q.faces[0].arrows.pop_back();
    CHECK_FALSE(validate_dimer_model(q).ok());
}

TEST_CASE("paths") {
    QuiverWithFaces q = quiver_of(fan_triangulation(4), 2);
    const Face& f = q.faces[0];
    Path p = make_path(q, f.arrows);
    CHECK(p.source == p.target);
    CHECK(p.length() == f.arrows.size());
    CHECK(concat(trivial_path(p.source), p) == p);
    CHECK_THROWS_AS(make_path(q, {}), Error);
    CHECK_THROWS_AS(make_path(q, {f.arrows[0], f.arrows[0]}), Error);
    Path a = make_path(q, {f.arrows[0]});
    CHECK_THROWS_AS(concat(a, a), Error);
}

TEST_CASE("chordless cycles start at their vertex") {
    QuiverWithFaces q = quiver_of(fan_triangulation(5), 3);
    for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v) {
        auto cycles = chordless_cycles_at(q, v);
        CHECK_FALSE(cycles.empty());
        for (const auto& c : cycles) {
            CHECK(c.source == v);
            CHECK(c.target == v);
        }
        Path u = chordless_cycle_at(q, v);
        CHECK(std::find(cycles.begin(), cycles.end(), u) != cycles.end());
    }
}

TEST_CASE("dual quiver needs the reduced dimer") {
    CHECK_THROWS_AS(dual_quiver(build_dimer(fan_triangulation(5), 2)), Error);
    CHECK_NOTHROW(dual_quiver(build_dimer(fan_triangulation(3), 2)));
}
