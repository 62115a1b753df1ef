#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dimerlab {

/// Unordered pair of polygon vertices, stored with the smaller label first.
struct Diagonal {
    int a = 0;
    int b = 0;

    auto operator<=>(const Diagonal&) const = default;
};

/// Normalizes (a, b) and checks that it is a proper diagonal of the n-gon.
Diagonal make_diagonal(int n, int a, int b);

/// True when the two diagonals intersect in the interior of the polygon.
/// Purely cyclic test: exactly one endpoint of `d` lies strictly between the
/// endpoints of `c`.
bool diagonals_cross(Diagonal c, Diagonal d);

using Triangle = std::array<int, 3>;

/// A triangulation of the convex n-gon with vertices 1..n counterclockwise.
class Triangulation {
public:
    /// Validates the diagonal set: n-3 pairwise non-crossing proper diagonals.
    Triangulation(int n, std::vector<Diagonal> diagonals);

    int n() const { return n_; }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    bool contains(Diagonal d) const;

    /// Triangles as ascending vertex triples, sorted lexicographically. The
    /// ascending order is also the counterclockwise order.
    const std::vector<Triangle>& triangles() const { return triangles_; }

    /// True if {a, b} is a side of the polygon or a diagonal of the triangulation.
    bool is_side(int a, int b) const;

    bool operator==(const Triangulation& other) const {
        return n_ == other.n_ && diagonals_ == other.diagonals_;
    }

private:
    int n_;
    std::vector<Diagonal> diagonals_;
    std::vector<Triangle> triangles_;
};

struct FlipMove {
    Diagonal removed;
    Diagonal inserted;
    /// The quadrilateral's vertices in counterclockwise (ascending) order.
    std::array<int, 4> quadrilateral{};

    bool operator==(const FlipMove&) const = default;
};

Triangulation fan_triangulation(int n, int apex = 1);

/// All triangulations of the n-gon, sorted by diagonal list.
std::vector<Triangulation> enumerate_triangulations(int n);

std::pair<Triangulation, FlipMove> flip(const Triangulation& t, Diagonal d);

/// A shortest sequence of flips turning `from` into `to` (breadth-first search
/// over the flip graph).
std::vector<FlipMove> flip_sequence(const Triangulation& from, const Triangulation& to);

Triangulation apply_flips(Triangulation t, const std::vector<FlipMove>& moves);

std::string to_string(Diagonal d);
std::string to_string(const Triangulation& t);

} // namespace dimerlab
