#include "dimerlab/errors.hpp"
#include "dimerlab/polygon.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

using namespace dimerlab;

namespace {

// Interleaving test written from scratch: a < c < b < d or c < a < d < b.
bool oracle_cross(std::pair<int, int> p, std::pair<int, int> q) {
    auto [a, b] = p;
    auto [c, d] = q;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// All (n-3)-subsets of proper diagonals that are pairwise non-crossing.
std::set<std::vector<std::pair<int, int>>> brute_triangulations(int n) {
    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b)
            if (!(a == 1 && b == n)) all.emplace_back(a, b);
    std::set<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(cur.size()) == n - 3) {
            out.insert(cur);
            return;
        }
        for (std::size_t i = from; i < all.size(); ++i) {
            bool ok = std::none_of(cur.begin(), cur.end(), [&](auto d) { return oracle_cross(d, all[i]); });
            if (!ok) continue;
            cur.push_back(all[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::pair<int, int>> pairs(const Triangulation& t) {
    std::vector<std::pair<int, int>> out;
    for (auto d : t.diagonals()) out.emplace_back(d.a, d.b);
    return out;
}

long long catalan(int k) {
    std::vector<long long> c(k + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
    return c[k];
}

} // namespace

TEST_CASE("diagonals normalize and reject polygon sides") {
    CHECK(make_diagonal(6, 4, 1) == Diagonal{1, 4});
    CHECK_THROWS_AS(make_diagonal(5, 1, 2), Error);
    CHECK_THROWS_AS(make_diagonal(5, 5, 1), Error);
    CHECK_THROWS_AS(make_diagonal(5, 0, 3), Error);
    CHECK_THROWS_AS(make_diagonal(5, 2, 2), Error);
}

TEST_CASE("crossing agrees with the interleaving oracle") {
    const int n = 8;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = c + 2; d <= n; ++d) {
                    if ((a == 1 && b == n) || (c == 1 && d == n)) continue;
                    CHECK(diagonals_cross({a, b}, {c, d}) == oracle_cross({a, b}, {c, d}));
                }
}

TEST_CASE("triangulation validation") {
    CHECK_NOTHROW(Triangulation(3, {}));
    CHECK_THROWS_AS(Triangulation(2, {}), Error);
    CHECK_THROWS_AS(Triangulation(5, {{1, 3}}), Error);                 // too few
    CHECK_THROWS_AS(Triangulation(5, {{1, 3}, {2, 4}}), Error);         // crossing
    CHECK_THROWS_AS(Triangulation(6, {{1, 3}, {1, 3}, {1, 4}}), Error); // repeated
    Triangulation t(5, {{1, 3}, {1, 4}});
    CHECK(t.triangles() == std::vector<Triangle>{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}});
    CHECK(t.is_side(3, 1));
    CHECK(t.is_side(4, 5));
    CHECK_FALSE(t.is_side(2, 4));
}

TEST_CASE("fan triangulation") {
    Triangulation f = fan_triangulation(6, 3);
    CHECK(pairs(f) == std::vector<std::pair<int, int>>{{1, 3}, {3, 5}, {3, 6}});
    CHECK(fan_triangulation(5) == Triangulation(5, {{1, 3}, {1, 4}}));
    CHECK(fan_triangulation(3).diagonals().empty());
}

TEST_CASE("enumeration matches brute force and the Catalan recurrence") {
    for (int n = 3; n <= 9; ++n) {
        auto all = enumerate_triangulations(n);
        CAPTURE(n);
        CHECK(static_cast<long long>(all.size()) == catalan(n - 2));
        CHECK(std::is_sorted(all.begin(), all.end(),
                             [](const auto& a, const auto& b) { return a.diagonals() < b.diagonals(); }));
        if (n <= 8) {
            std::set<std::vector<std::pair<int, int>>> got;
            for (const auto& t : all) got.insert(pairs(t));
            CHECK(got == brute_triangulations(n));
        }
    }
}

TEST_CASE("flip replaces a diagonal by the opposite one of its quadrilateral") {
    auto [t, mv] = flip(fan_triangulation(5), {1, 3});
    CHECK(mv.removed == Diagonal{1, 3});
    CHECK(mv.inserted == Diagonal{2, 4});
    CHECK(mv.quadrilateral == std::array<int, 4>{1, 2, 3, 4});
    CHECK(t == Triangulation(5, {{1, 4}, {2, 4}}));
    CHECK_THROWS_AS(flip(t, {1, 3}), Error);
    // double flip restores
    CHECK(flip(t, mv.inserted).first == fan_triangulation(5));
}

TEST_CASE("flip sequences are shortest paths in the flip graph") {
    for (int n = 4; n <= 7; ++n) {
        auto all = enumerate_triangulations(n);
        std::map<std::vector<std::pair<int, int>>, int> index;
        for (int i = 0; i < static_cast<int>(all.size()); ++i) index[pairs(all[i])] = i;
        // adjacency by symmetric difference of size one
        std::vector<std::vector<int>> adj(all.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                auto a = pairs(all[i]), b = pairs(all[j]);
                std::vector<std::pair<int, int>> common;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
                if (static_cast<int>(common.size()) == n - 4) adj[i].push_back(static_cast<int>(j));
            }
        for (std::size_t s = 0; s < all.size(); ++s) {
            std::vector<int> dist(all.size(), -1);
            std::queue<int> bfs;
            dist[s] = 0;
            bfs.push(static_cast<int>(s));
            while (!bfs.empty()) {
                int u = bfs.front();
                bfs.pop();
                for (int v : adj[u])
                    if (dist[v] < 0) dist[v] = dist[u] + 1, bfs.push(v);
            }
            for (std::size_t t = 0; t < all.size(); t += 3) {
                auto seq = flip_sequence(all[s], all[t]);
                CHECK(static_cast<int>(seq.size()) == dist[t]);
                CHECK(apply_flips(all[s], seq) == all[t]);
            }
        }
    }
}

TEST_CASE("flip sequence rejects different polygons") {
    CHECK_THROWS_AS(flip_sequence(fan_triangulation(5), fan_triangulation(6)), Error);
}

TEST_CASE("string rendering") {
    CHECK(to_string(Diagonal{2, 5}) == "2-5");
    CHECK(to_string(fan_triangulation(5)) == "n=5 {1-3,1-4}");
}
