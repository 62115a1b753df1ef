#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace dimerlab {

/// A point of the m-subdivision of a triangulated polygon, written as a
/// barycentric combination of polygon vertices with positive integer weights
/// summing to m. The support has one element at polygon corners, two on
/// polygon sides and diagonals, three inside a triangle. Points on a shared
/// diagonal get the same key from both adjacent triangles.
struct LatticePoint {
    std::vector<std::pair<int, int>> weights; // (polygon vertex, weight), vertex-ascending

    static LatticePoint from_triangle(int p, int q, int r, int wp, int wq, int wr);

    int weight_of(int vertex) const;
    bool supported_on(const std::vector<int>& vertices) const;
    std::size_t support_size() const { return weights.size(); }

    auto operator<=>(const LatticePoint&) const = default;
};

/// "[1:2,4:1]" style rendering.
std::string to_string(const LatticePoint& p);

} // namespace dimerlab
