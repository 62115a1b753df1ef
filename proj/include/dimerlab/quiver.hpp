#pragma once

#include "dimerlab/dimer.hpp"
#include "dimerlab/lattice.hpp"
#include "dimerlab/report.hpp"

#include <string>
#include <vector>

namespace dimerlab {

enum class VertexKind { Boundary, Internal };
enum class ArrowKind { Boundary, Internal };
enum class FaceSign { Positive, Negative };

struct QuiverVertex {
    VertexKind kind = VertexKind::Internal;
    int label = 0;      // 1..m*n on the boundary, 0 for internal vertices
    LatticePoint point; // position in the subdivided polygon
};

struct Arrow {
    int source = -1;
    int target = -1;
    ArrowKind kind = ArrowKind::Internal;
    int dimer_edge = -1;
    int positive_face = -1;
    int negative_face = -1;
};

struct Face {
    FaceSign sign = FaceSign::Positive;
    std::vector<int> arrows; // cyclic, composable left to right
    int dimer_node = -1;
};

struct QuiverWithFaces {
    int m = 2;
    int n = 3;
    std::vector<QuiverVertex> vertices;
    std::vector<Arrow> arrows;
    std::vector<Face> faces;
    std::vector<int> boundary; // boundary[k-1] is the vertex labelled k

    int boundary_vertex(int label) const;
    std::size_t internal_count() const;
    std::size_t count(ArrowKind kind) const;
    /// Arrow ids from s to t in id order.
    std::vector<int> arrows_between(int s, int t) const;
    std::string vertex_name(int v) const;
    /// Recomputes each arrow's positive/negative face slots from `faces`.
    void index_faces();

    bool operator==(const QuiverWithFaces&) const;
};

/// A composable arrow sequence read left to right; an empty sequence is the
/// trivial path at `source`.
struct Path {
    int source = -1;
    int target = -1;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    bool operator==(const Path&) const = default;
};

Path trivial_path(int vertex);
/// Validates composability; throws malformed-quiver on a break.
Path make_path(const QuiverWithFaces& q, std::vector<int> arrows);
/// Throws incomparable-paths when a.target != b.source.
Path concat(const Path& a, const Path& b);
std::string to_string(const QuiverWithFaces& q, const Path& p);

/// One cyclic derivative: plus side (from the positive face) equals minus side.
struct Relation {
    int arrow = -1;
    Path plus;
    Path minus;
};

struct RelationSet {
    std::vector<Relation> relations;
    std::size_t max_side() const;
};

QuiverWithFaces dual_quiver(const GLmDimer& d);
ValidationReport validate_dimer_model(const QuiverWithFaces& q);
RelationSet potential_relations(const QuiverWithFaces& q);

/// Cycles of all faces through v, each rotated to start at v.
std::vector<Path> chordless_cycles_at(const QuiverWithFaces& q, int v);
/// A preferred chordless cycle at v: at a boundary vertex the face containing
/// the boundary arrow into v, elsewhere the lowest-numbered face.
Path chordless_cycle_at(const QuiverWithFaces& q, int v);

/// Second-order polygonal number (k^2 (s-2) + k (s-4)) / 2.
long long p2(long long s, long long k);

/// Reduced dual quiver of the GL_m-dimer of a triangulation.
QuiverWithFaces quiver_of(const Triangulation& t, int m);

} // namespace dimerlab
