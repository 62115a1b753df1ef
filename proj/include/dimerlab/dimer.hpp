#pragma once

#include "dimerlab/lattice.hpp"
#include "dimerlab/polygon.hpp"
#include "dimerlab/report.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dimerlab {

enum class Color { White, Black };
enum class NodeLocation { BoundarySegment, DiagonalSegment, Interior };

struct DimerNode {
    std::string key;
    Color color = Color::White;
    NodeLocation location = NodeLocation::Interior;
    int triangle = -1;       // host triangle (interior nodes)
    std::array<int, 3> bary{}; // small-triangle index inside the host triangle
    Diagonal side{};         // host polygon side or diagonal (segment nodes)
    int segment = -1;        // 0-based position along `side`, counted from side.a
    /// Lattice points of the host small triangle(s) or of the segment ends.
    std::vector<LatticePoint> corners;
    /// Whites only: keys of the construction whites merged into this node.
    std::vector<std::string> merged;
};

struct DimerEdge {
    int white = -1;
    int black = -1;
};

/// The bipartite GL_m-dimer graph of a triangulation, embedded in the disk
/// through a rotation system (counterclockwise edge order at each node).
struct GLmDimer {
    int m = 2;
    Triangulation triangulation{3, {}};
    std::vector<DimerNode> nodes;
    std::vector<DimerEdge> edges;
    std::vector<std::vector<int>> rotation; // per node, edge ids counterclockwise
    std::vector<int> boundary;              // polygon-edge black nodes, counterclockwise from vertex 1
    bool reduced = false;

    int degree(int node) const { return static_cast<int>(rotation[node].size()); }
    int other_end(int edge, int node) const {
        return edges[edge].white == node ? edges[edge].black : edges[edge].white;
    }
    int find(const std::string& key) const;
    std::size_t count(Color c) const;
};

/// Darts encode an edge plus a direction: 2e is white->black, 2e+1 black->white.
inline int dart_tail(const GLmDimer& d, int dart) {
    const auto& e = d.edges[dart / 2];
    return dart % 2 == 0 ? e.white : e.black;
}
inline int dart_head(const GLmDimer& d, int dart) {
    const auto& e = d.edges[dart / 2];
    return dart % 2 == 0 ? e.black : e.white;
}

/// Faces of the embedded graph, each as the cyclic dart sequence that keeps the
/// face on its left. Includes the unbounded face.
std::vector<std::vector<int>> trace_faces(const GLmDimer& d);

GLmDimer build_dimer(const Triangulation& t, int m);

/// Contracts every internal black node of degree two, merging its two white
/// neighbours and splicing their rotations. Deterministic order.
GLmDimer reduce_dimer(const GLmDimer& d);

/// Same contraction with the candidate order shuffled by `seed`.
GLmDimer reduce_dimer(const GLmDimer& d, std::uint64_t seed);

ValidationReport validate_dimer(const GLmDimer& d);

/// Canonical code of the rotation system anchored at the first boundary black
/// node. Two dimers have equal codes iff an isomorphism preserving colours,
/// boundary anchor and rotations exists.
std::string canonical_code(const GLmDimer& d);

} // namespace dimerlab
