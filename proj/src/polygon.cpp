#include "dimerlab/polygon.hpp"

#include "dimerlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace dimerlab {

namespace {

void require_polygon(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidPolygon, "n = " + std::to_string(n) + " < 3");
}

// Strictly between a and b walking counterclockwise from a.
bool strictly_between(int a, int b, int x) {
    if (a < b) return a < x && x < b;
    return x > a || x < b;
}

} // namespace

Diagonal make_diagonal(int n, int a, int b) {
    require_polygon(n);
    if (a < 1 || a > n || b < 1 || b > n)
        throw Error(ErrorKind::InvalidDiagonal,
                    "vertex out of range in " + std::to_string(a) + "-" + std::to_string(b));
    int gap = ((a - b) % n + n) % n;
    if (gap == 0 || gap == 1 || gap == n - 1)
        throw Error(ErrorKind::InvalidDiagonal,
                    std::to_string(a) + "-" + std::to_string(b) + " is not a diagonal of the " +
                        std::to_string(n) + "-gon");
    return {std::min(a, b), std::max(a, b)};
}

bool diagonals_cross(Diagonal c, Diagonal d) {
    if (c.a == d.a || c.a == d.b || c.b == d.a || c.b == d.b) return false;
    return strictly_between(c.a, c.b, d.a) != strictly_between(c.a, c.b, d.b);
}

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
    require_polygon(n);
    for (auto& d : diagonals_) d = make_diagonal(n, d.a, d.b);
    std::sort(diagonals_.begin(), diagonals_.end());
    if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
        throw Error(ErrorKind::InvalidDiagonal, "duplicate diagonal");
    if (static_cast<int>(diagonals_.size()) != n - 3)
        throw Error(ErrorKind::InvalidDiagonal, "a triangulation of the " + std::to_string(n) +
                                                    "-gon needs " + std::to_string(n - 3) +
                                                    " diagonals, got " +
                                                    std::to_string(diagonals_.size()));
    for (std::size_t i = 0; i < diagonals_.size(); ++i)
        for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
            if (diagonals_cross(diagonals_[i], diagonals_[j]))
                throw Error(ErrorKind::InvalidDiagonal, "diagonals " + to_string(diagonals_[i]) +
                                                            " and " + to_string(diagonals_[j]) +
                                                            " cross");

    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (!is_side(a, b)) continue;
            for (int c = b + 1; c <= n; ++c)
                if (is_side(a, c) && is_side(b, c)) triangles_.push_back({a, b, c});
        }
}

bool Triangulation::contains(Diagonal d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

bool Triangulation::is_side(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (b - a == 1 || (a == 1 && b == n_)) return true;
    return contains({a, b});
}

Triangulation fan_triangulation(int n, int apex) {
    require_polygon(n);
    if (apex < 1 || apex > n)
        throw Error(ErrorKind::InvalidPolygon, "apex " + std::to_string(apex) + " out of range");
    std::vector<Diagonal> ds;
    for (int k = 2; k <= n - 2; ++k) {
        int v = (apex - 1 + k) % n + 1;
        ds.push_back({std::min(apex, v), std::max(apex, v)});
    }
    return Triangulation(n, std::move(ds));
}

namespace {

// Triangulations of the sub-polygon on the consecutive labels lo..hi, as
// diagonal lists (sides of the sub-polygon other than lo-hi excluded).
std::vector<std::vector<Diagonal>> sub_triangulations(
    int lo, int hi, std::map<std::pair<int, int>, std::vector<std::vector<Diagonal>>>& memo) {
    if (hi - lo < 2) return {{}};
    auto key = std::make_pair(lo, hi);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::vector<Diagonal>> out;
    for (int k = lo + 1; k < hi; ++k) {
        auto left = sub_triangulations(lo, k, memo);
        auto right = sub_triangulations(k, hi, memo);
        for (const auto& l : left)
            for (const auto& r : right) {
                std::vector<Diagonal> ds = l;
                ds.insert(ds.end(), r.begin(), r.end());
                if (k - lo > 1) ds.push_back({lo, k});
                if (hi - k > 1) ds.push_back({k, hi});
                out.push_back(std::move(ds));
            }
    }
    memo[key] = out;
    return out;
}

} // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
    require_polygon(n);
    std::map<std::pair<int, int>, std::vector<std::vector<Diagonal>>> memo;
    std::vector<Triangulation> out;
    for (auto& ds : sub_triangulations(1, n, memo)) out.emplace_back(n, std::move(ds));
    std::sort(out.begin(), out.end(), [](const Triangulation& x, const Triangulation& y) {
        return x.diagonals() < y.diagonals();
    });
    return out;
}

std::pair<Triangulation, FlipMove> flip(const Triangulation& t, Diagonal d) {
    if (d.a > d.b) std::swap(d.a, d.b);
    if (!t.contains(d))
        throw Error(ErrorKind::UnknownDiagonal, to_string(d) + " is not in " + to_string(t));
    std::vector<int> apexes;
    for (const auto& tri : t.triangles()) {
        bool has_a = std::find(tri.begin(), tri.end(), d.a) != tri.end();
        bool has_b = std::find(tri.begin(), tri.end(), d.b) != tri.end();
        if (!has_a || !has_b) continue;
        for (int v : tri)
            if (v != d.a && v != d.b) apexes.push_back(v);
    }
    if (apexes.size() != 2)
        throw Error(ErrorKind::MalformedQuiver, "diagonal " + to_string(d) + " borders " +
                                                    std::to_string(apexes.size()) + " triangles");
    Diagonal inserted{std::min(apexes[0], apexes[1]), std::max(apexes[0], apexes[1])};
    std::vector<Diagonal> ds;
    for (const auto& e : t.diagonals())
        if (e != d) ds.push_back(e);
    ds.push_back(inserted);
    FlipMove move{d, inserted, {d.a, d.b, inserted.a, inserted.b}};
    std::sort(move.quadrilateral.begin(), move.quadrilateral.end());
    return {Triangulation(t.n(), std::move(ds)), move};
}

std::vector<FlipMove> flip_sequence(const Triangulation& from, const Triangulation& to) {
    if (from.n() != to.n())
        throw Error(ErrorKind::IncompatiblePolygons,
                    std::to_string(from.n()) + "-gon vs " + std::to_string(to.n()) + "-gon");
    using Key = std::vector<Diagonal>;
    std::map<Key, std::pair<Key, FlipMove>> parent;
    std::deque<Triangulation> queue{from};
    parent.emplace(from.diagonals(), std::make_pair(Key{}, FlipMove{}));
    while (!queue.empty()) {
        Triangulation cur = queue.front();
        queue.pop_front();
        if (cur == to) break;
        for (const auto& d : cur.diagonals()) {
            auto [next, move] = flip(cur, d);
            if (parent.contains(next.diagonals())) continue;
            parent.emplace(next.diagonals(), std::make_pair(cur.diagonals(), move));
            queue.push_back(std::move(next));
        }
    }
    std::vector<FlipMove> moves;
    Key cur = to.diagonals();
    while (cur != from.diagonals()) {
        const auto& [prev, move] = parent.at(cur);
        moves.push_back(move);
        cur = prev;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
}

Triangulation apply_flips(Triangulation t, const std::vector<FlipMove>& moves) {
    for (const auto& mv : moves) t = flip(t, mv.removed).first;
    return t;
}

std::string to_string(Diagonal d) { return std::to_string(d.a) + "-" + std::to_string(d.b); }

std::string to_string(const Triangulation& t) {
    std::string s = "n=" + std::to_string(t.n()) + " {";
    for (std::size_t i = 0; i < t.diagonals().size(); ++i) {
        if (i) s += ",";
        s += to_string(t.diagonals()[i]);
    }
    return s + "}";
}

} // namespace dimerlab
