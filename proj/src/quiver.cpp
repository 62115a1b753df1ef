#include "dimerlab/quiver.hpp"

#include "dimerlab/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace dimerlab {

int QuiverWithFaces::boundary_vertex(int label) const {
    int size = static_cast<int>(boundary.size());
    int k = ((label - 1) % size + size) % size;
    return boundary[k];
}

std::size_t QuiverWithFaces::internal_count() const {
    return static_cast<std::size_t>(std::count_if(vertices.begin(), vertices.end(), [](const QuiverVertex& v) {
        return v.kind == VertexKind::Internal;
    }));
}

std::size_t QuiverWithFaces::count(ArrowKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(arrows.begin(), arrows.end(), [kind](const Arrow& a) { return a.kind == kind; }));
}

std::vector<int> QuiverWithFaces::arrows_between(int s, int t) const {
    std::vector<int> out;
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
        if (arrows[a].source == s && arrows[a].target == t) out.push_back(a);
    return out;
}

std::string QuiverWithFaces::vertex_name(int v) const {
    const auto& x = vertices[v];
    return x.kind == VertexKind::Boundary ? std::to_string(x.label) : "i" + to_string(x.point);
}

void QuiverWithFaces::index_faces() {
    for (auto& a : arrows) a.positive_face = a.negative_face = -1;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        for (int a : faces[f].arrows) {
            auto& slot = faces[f].sign == FaceSign::Positive ? arrows[a].positive_face : arrows[a].negative_face;
            if (slot < 0) slot = f;
        }
}

bool QuiverWithFaces::operator==(const QuiverWithFaces& o) const {
    if (m != o.m || n != o.n || boundary != o.boundary || vertices.size() != o.vertices.size() ||
        arrows.size() != o.arrows.size() || faces.size() != o.faces.size())
        return false;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].kind != o.vertices[i].kind || vertices[i].label != o.vertices[i].label ||
            vertices[i].point != o.vertices[i].point)
            return false;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].source != o.arrows[i].source || arrows[i].target != o.arrows[i].target ||
            arrows[i].kind != o.arrows[i].kind)
            return false;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].sign != o.faces[i].sign || faces[i].arrows != o.faces[i].arrows) return false;
    return true;
}

Path trivial_path(int vertex) { return Path{vertex, vertex, {}}; }

Path make_path(const QuiverWithFaces& q, std::vector<int> arrows) {
    if (arrows.empty()) throw Error(ErrorKind::MalformedQuiver, "empty arrow list needs an anchor vertex");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (arrows[i] < 0 || arrows[i] >= static_cast<int>(q.arrows.size()))
            throw Error(ErrorKind::MalformedQuiver, "arrow id " + std::to_string(arrows[i]) + " out of range");
        if (i > 0 && q.arrows[arrows[i - 1]].target != q.arrows[arrows[i]].source)
            throw Error(ErrorKind::MalformedQuiver, "arrows do not compose at position " + std::to_string(i));
    }
    Path p;
    p.source = q.arrows[arrows.front()].source;
    p.target = q.arrows[arrows.back()].target;
    p.arrows = std::move(arrows);
    return p;
}

Path concat(const Path& a, const Path& b) {
    if (a.target != b.source)
        throw Error(ErrorKind::IncomparablePaths, "cannot compose: target " + std::to_string(a.target) +
                                                      " vs source " + std::to_string(b.source));
    Path p{a.source, b.target, a.arrows};
    p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
    return p;
}

std::string to_string(const QuiverWithFaces& q, const Path& p) {
    std::string s = q.vertex_name(p.source);
    for (int a : p.arrows) s += " -> " + q.vertex_name(q.arrows[a].target);
    return s;
}

std::size_t RelationSet::max_side() const {
    std::size_t best = 0;
    for (const auto& r : relations) best = std::max({best, r.plus.length(), r.minus.length()});
    return best;
}

QuiverWithFaces dual_quiver(const GLmDimer& d) {
    for (std::size_t v = 0; v < d.nodes.size(); ++v)
        if (d.nodes[v].color == Color::Black && d.nodes[v].location != NodeLocation::BoundarySegment &&
            d.degree(static_cast<int>(v)) == 2)
            throw Error(ErrorKind::MustReduceFirst, "internal black node " + d.nodes[v].key + " has degree 2");

    const int n = d.triangulation.n();
    const int m = d.m;
    const int mn = m * n;
    std::vector<int> position(d.nodes.size(), -1); // boundary position of each leaf
    for (int p = 0; p < static_cast<int>(d.boundary.size()); ++p) position[d.boundary[p]] = p;

    QuiverWithFaces q;
    q.m = m;
    q.n = n;
    q.boundary.assign(mn, -1);

    auto faces = trace_faces(d);
    std::vector<int> dart_vertex(2 * d.edges.size(), -1);

    auto point_of_label = [&](int label) {
        int t = (label - 1) % m;
        int k = (label - 1) / m + 1;
        int next = k % n + 1;
        if (t == 0) return LatticePoint::from_triangle(k, k, k, m, 0, 0);
        return LatticePoint::from_triangle(k, next, next, m - t, t, 0);
    };

    for (const auto& face : faces) {
        bool outer = std::any_of(face.begin(), face.end(), [&](int dart) {
            return position[dart_head(d, dart)] >= 0;
        });
        if (!outer) {
            // Internal vertex: the lattice point shared by every node on the face.
            std::vector<LatticePoint> common;
            for (std::size_t i = 0; i < face.size(); ++i) {
                const auto& corners = d.nodes[dart_head(d, face[i])].corners;
                if (i == 0) {
                    common = corners;
                } else {
                    std::vector<LatticePoint> next;
                    std::set_intersection(common.begin(), common.end(), corners.begin(), corners.end(),
                                          std::back_inserter(next));
                    common = std::move(next);
                }
            }
            if (common.size() != 1)
                throw Error(ErrorKind::MalformedQuiver, "face without a unique lattice point");
            int id = static_cast<int>(q.vertices.size());
            q.vertices.push_back({VertexKind::Internal, 0, common.front()});
            for (int dart : face) dart_vertex[dart] = id;
            continue;
        }
        // The unbounded face splits at every boundary leaf into one region per
        // pair of neighbouring leaves.
        std::size_t start = 0;
        while (position[dart_tail(d, face[start])] < 0) ++start;
        for (std::size_t i = 0; i < face.size();) {
            std::size_t first = (start + i) % face.size();
            int from = position[dart_tail(d, face[first])];
            std::vector<int> darts;
            int to = -1;
            while (true) {
                int dart = face[(start + i) % face.size()];
                darts.push_back(dart);
                ++i;
                to = position[dart_head(d, dart)];
                if (to >= 0) break;
            }
            int p = (from + 1) % mn == to ? from : to;
            if ((p + 1) % mn != (p == from ? to : from))
                throw Error(ErrorKind::MalformedQuiver, "outer face regions out of boundary order");
            int label = (p + 1) % mn + 1;
            int id = static_cast<int>(q.vertices.size());
            q.vertices.push_back({VertexKind::Boundary, label, point_of_label(label)});
            q.boundary[label - 1] = id;
            for (int dart : darts) dart_vertex[dart] = id;
        }
    }
    if (std::find(q.boundary.begin(), q.boundary.end(), -1) != q.boundary.end())
        throw Error(ErrorKind::MalformedQuiver, "boundary labels incomplete");

    // Renumber vertices: boundary 1..mn first, then internal by lattice point.
    std::vector<int> order(q.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& x = q.vertices[a];
        const auto& y = q.vertices[b];
        if (x.kind != y.kind) return x.kind == VertexKind::Boundary;
        if (x.kind == VertexKind::Boundary) return x.label < y.label;
        return x.point < y.point;
    });
    std::vector<int> renumber(order.size());
    std::vector<QuiverVertex> sorted;
    for (std::size_t i = 0; i < order.size(); ++i) {
        renumber[order[i]] = static_cast<int>(i);
        sorted.push_back(q.vertices[order[i]]);
    }
    q.vertices = std::move(sorted);
    for (auto& v : dart_vertex) v = renumber[v];
    for (int k = 0; k < mn; ++k) q.boundary[k] = k;

    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
        Arrow a;
        a.source = dart_vertex[2 * e + 1];
        a.target = dart_vertex[2 * e];
        a.dimer_edge = e;
        a.kind = position[d.edges[e].black] >= 0 ? ArrowKind::Boundary : ArrowKind::Internal;
        q.arrows.push_back(a);
    }
    for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v) {
        if (d.nodes[v].color == Color::White) {
            q.faces.push_back({FaceSign::Positive, d.rotation[v], v});
        } else if (position[v] < 0) {
            std::vector<int> cycle(d.rotation[v].rbegin(), d.rotation[v].rend());
            q.faces.push_back({FaceSign::Negative, std::move(cycle), v});
        }
    }
    q.index_faces();
    return q;
}

ValidationReport validate_dimer_model(const QuiverWithFaces& q) {
    ValidationReport report;
    const int nv = static_cast<int>(q.vertices.size());
    const int na = static_cast<int>(q.arrows.size());

    auto arrow_name = [&](int a) {
        return "arrow " + std::to_string(a) + " (" + q.vertex_name(q.arrows[a].source) + "->" +
               q.vertex_name(q.arrows[a].target) + ")";
    };

    auto& loops = report.add("no-loops");
    for (int a = 0; a < na; ++a)
        if (q.arrows[a].source == q.arrows[a].target) fail(loops, arrow_name(a));

    auto& cycles = report.add("face-cycles");
    for (std::size_t f = 0; f < q.faces.size(); ++f) {
        const auto& arrows = q.faces[f].arrows;
        bool ok = !arrows.empty();
        for (std::size_t i = 0; ok && i < arrows.size(); ++i)
            ok = q.arrows[arrows[i]].target == q.arrows[arrows[(i + 1) % arrows.size()]].source;
        if (!ok) fail(cycles, "face " + std::to_string(f));
    }

    std::vector<int> plus(na, 0), minus(na, 0);
    for (const auto& f : q.faces)
        for (int a : f.arrows) ++(f.sign == FaceSign::Positive ? plus : minus)[a];

    auto& mult = report.add("face-multiplicity");
    auto& signs = report.add("internal-arrow-faces");
    for (int a = 0; a < na; ++a) {
        int total = plus[a] + minus[a];
        if (total != 1 && total != 2) fail(mult, arrow_name(a));
        if (total == 2 && (plus[a] != 1 || minus[a] != 1)) fail(signs, arrow_name(a));
        ArrowKind expected = total == 1 ? ArrowKind::Boundary : ArrowKind::Internal;
        if (total <= 2 && q.arrows[a].kind != expected) fail(mult, arrow_name(a) + " kind");
    }

    // Incidence graph at v: arrows at v, joined when consecutive in a face.
    auto& incidence = report.add("incidence-graph");
    auto& per_vertex = report.add("faces-per-vertex");
    std::vector<std::set<int>> faces_at(nv);
    std::vector<std::vector<std::pair<int, int>>> links(nv);
    for (int f = 0; f < static_cast<int>(q.faces.size()); ++f) {
        const auto& arrows = q.faces[f].arrows;
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            int in = arrows[i];
            int out = arrows[(i + 1) % arrows.size()];
            int v = q.arrows[in].target;
            if (v < 0 || v >= nv) continue;
            faces_at[v].insert(f);
            links[v].emplace_back(in, out);
        }
    }
    for (int v = 0; v < nv; ++v) {
        std::map<int, int> degree;
        std::map<int, int> parent;
        std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
        for (int a = 0; a < na; ++a)
            if (q.arrows[a].source == v || q.arrows[a].target == v) {
                degree[a] = 0;
                parent[a] = a;
            }
        for (auto [x, y] : links[v]) {
            ++degree[x];
            ++degree[y];
            parent[root(x)] = root(y);
        }
        std::set<int> components;
        for (auto& [a, _] : degree) components.insert(root(a));
        bool boundary = q.vertices[v].kind == VertexKind::Boundary;
        std::size_t nodes = degree.size();
        std::size_t edges = links[v].size();
        bool shape = components.size() == 1;
        if (shape) {
            if (boundary) {
                shape = edges + 1 == nodes;
                for (auto& [a, deg] : degree) shape = shape && deg <= 2;
            } else {
                shape = edges == nodes;
                for (auto& [a, deg] : degree) shape = shape && deg == 2;
            }
        }
        if (!shape) fail(incidence, q.vertex_name(v));

        std::size_t count = faces_at[v].size();
        bool ok = boundary ? (count == 1 || count == 3) : (count == 4 || count == 6);
        if (!ok) fail(per_vertex, q.vertex_name(v) + " has " + std::to_string(count) + " faces");
    }
    return report;
}

RelationSet potential_relations(const QuiverWithFaces& q) {
    RelationSet out;
    auto complement = [&](int face, int arrow) {
        const auto& cyc = q.faces[face].arrows;
        auto it = std::find(cyc.begin(), cyc.end(), arrow);
        std::vector<int> rest(it + 1, cyc.end());
        rest.insert(rest.end(), cyc.begin(), it);
        if (rest.empty()) return trivial_path(q.arrows[arrow].target);
        return make_path(q, std::move(rest));
    };
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        const auto& arrow = q.arrows[a];
        if (arrow.kind != ArrowKind::Internal) continue;
        if (arrow.positive_face < 0 || arrow.negative_face < 0)
            throw Error(ErrorKind::MalformedQuiver, "internal arrow " + std::to_string(a) + " lacks a face");
        out.relations.push_back({a, complement(arrow.positive_face, a), complement(arrow.negative_face, a)});
    }
    return out;
}

std::vector<Path> chordless_cycles_at(const QuiverWithFaces& q, int v) {
    std::vector<Path> out;
    for (const auto& f : q.faces) {
        const auto& cyc = f.arrows;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (q.arrows[cyc[i]].source == v) {
                std::vector<int> rotated(cyc.begin() + static_cast<long>(i), cyc.end());
                rotated.insert(rotated.end(), cyc.begin(), cyc.begin() + static_cast<long>(i));
                out.push_back(make_path(q, std::move(rotated)));
            }
    }
    return out;
}

Path chordless_cycle_at(const QuiverWithFaces& q, int v) {
    int preferred = -1;
    if (q.vertices[v].kind == VertexKind::Boundary)
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
            if (q.arrows[a].kind == ArrowKind::Boundary && q.arrows[a].target == v) {
                preferred = q.arrows[a].positive_face >= 0 ? q.arrows[a].positive_face : q.arrows[a].negative_face;
                break;
            }
    for (int f = 0; f < static_cast<int>(q.faces.size()); ++f) {
        if (preferred >= 0 && f != preferred) continue;
        const auto& cyc = q.faces[f].arrows;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (q.arrows[cyc[i]].source == v) {
                std::vector<int> rotated(cyc.begin() + static_cast<long>(i), cyc.end());
                rotated.insert(rotated.end(), cyc.begin(), cyc.begin() + static_cast<long>(i));
                return make_path(q, std::move(rotated));
            }
    }
    throw Error(ErrorKind::NoCycle, "vertex " + q.vertex_name(v) + " lies on no face");
}

long long p2(long long s, long long k) { return (k * k * (s - 2) + k * (s - 4)) / 2; }

QuiverWithFaces quiver_of(const Triangulation& t, int m) {
    return dual_quiver(reduce_dimer(build_dimer(t, m)));
}

} // namespace dimerlab
