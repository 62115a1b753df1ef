#include "dimerlab/dimer.hpp"

#include "dimerlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>

namespace dimerlab {

int GLmDimer::find(const std::string& key) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].key == key) return static_cast<int>(i);
    return -1;
}

std::size_t GLmDimer::count(Color c) const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [c](const DimerNode& n) { return n.color == c; }));
}

namespace {

std::string triple(const std::array<int, 3>& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

bool polygon_edge(int n, Diagonal s) { return s.b - s.a == 1 || (s.a == 1 && s.b == n); }

class DimerBuilder {
public:
    DimerBuilder(const Triangulation& t, int m) : t_(t), m_(m) {
        d_.m = m;
        d_.triangulation = t;
    }

    GLmDimer build() {
        const auto& tris = t_.triangles();
        for (int ti = 0; ti < static_cast<int>(tris.size()); ++ti) add_triangle(ti, tris[ti]);
        const int n = t_.n();
        for (int k = 1; k <= n; ++k)
            for (int s = 0; s < m_; ++s) d_.boundary.push_back(segment_node(k, k % n + 1, s));
        return std::move(d_);
    }

private:
    int add_node(DimerNode node) {
        d_.nodes.push_back(std::move(node));
        d_.rotation.emplace_back();
        return static_cast<int>(d_.nodes.size()) - 1;
    }

    // Black node on the segment of side {u, v} whose ends have v-weights s and
    // s + 1 (so s counts from u).
    int segment_node(int u, int v, int s) {
        Diagonal side{std::min(u, v), std::max(u, v)};
        int idx = u < v ? s : m_ - 1 - s;
        auto key = std::make_tuple(side.a, side.b, idx);
        if (auto it = segments_.find(key); it != segments_.end()) return it->second;
        DimerNode node;
        node.key = "s:" + to_string(side) + ":" + std::to_string(idx);
        node.color = Color::Black;
        node.location = polygon_edge(t_.n(), side) ? NodeLocation::BoundarySegment
                                                   : NodeLocation::DiagonalSegment;
        node.side = side;
        node.segment = idx;
        node.corners = {LatticePoint::from_triangle(side.a, side.b, side.b, m_ - idx, idx, 0),
                        LatticePoint::from_triangle(side.a, side.b, side.b, m_ - idx - 1, idx + 1, 0)};
        int id = add_node(std::move(node));
        segments_.emplace(key, id);
        return id;
    }

    void add_triangle(int ti, const Triangle& tri) {
        const auto [p, q, r] = tri;
        auto point = [&](int a, int b, int c) { return LatticePoint::from_triangle(p, q, r, a, b, c); };

        std::map<std::array<int, 3>, int> up, down;
        for (int i = m_ - 1; i >= 0; --i)
            for (int j = m_ - 1 - i; j >= 0; --j) {
                int k = m_ - 1 - i - j;
                DimerNode w;
                w.key = "w:t" + std::to_string(ti) + ":" + triple({i, j, k});
                w.color = Color::White;
                w.triangle = ti;
                w.bary = {i, j, k};
                w.corners = {point(i + 1, j, k), point(i, j + 1, k), point(i, j, k + 1)};
                std::sort(w.corners.begin(), w.corners.end());
                w.merged = {w.key};
                up[{i, j, k}] = add_node(std::move(w));
            }
        for (int a = m_ - 2; a >= 0; --a)
            for (int b = m_ - 2 - a; b >= 0; --b) {
                int c = m_ - 2 - a - b;
                DimerNode blk;
                blk.key = "b:t" + std::to_string(ti) + ":" + triple({a, b, c});
                blk.color = Color::Black;
                blk.triangle = ti;
                blk.bary = {a, b, c};
                blk.corners = {point(a, b + 1, c + 1), point(a + 1, b, c + 1), point(a + 1, b + 1, c)};
                std::sort(blk.corners.begin(), blk.corners.end());
                down[{a, b, c}] = add_node(std::move(blk));
            }

        std::map<std::pair<int, int>, int> edge_of; // (white, black) -> edge
        // Neighbours of an upward triangle counterclockwise: across the side
        // opposite R (on PQ), opposite P (on QR), opposite Q (on RP).
        for (const auto& [ijk, w] : up) {
            const auto [i, j, k] = ijk;
            int across_pq = k >= 1 ? down.at({i, j, k - 1}) : segment_node(p, q, j);
            int across_qr = i >= 1 ? down.at({i - 1, j, k}) : segment_node(q, r, k);
            int across_rp = j >= 1 ? down.at({i, j - 1, k}) : segment_node(p, r, k);
            for (int b : {across_pq, across_qr, across_rp}) {
                int e = static_cast<int>(d_.edges.size());
                d_.edges.push_back({w, b});
                d_.rotation[w].push_back(e);
                edge_of[{w, b}] = e;
                if (d_.nodes[b].location != NodeLocation::Interior) d_.rotation[b].push_back(e);
            }
        }
        // A downward triangle sees its neighbours towards R, P, Q counterclockwise.
        for (const auto& [abc, b] : down) {
            const auto [a, bb, c] = abc;
            for (const auto& nb : {std::array{a, bb, c + 1}, std::array{a + 1, bb, c},
                                   std::array{a, bb + 1, c}})
                d_.rotation[b].push_back(edge_of.at({up.at(nb), b}));
        }
    }

    const Triangulation& t_;
    int m_;
    GLmDimer d_;
    std::map<std::tuple<int, int, int>, int> segments_;
};

GLmDimer contract(const GLmDimer& src, std::vector<int> order) {
    GLmDimer d = src;
    std::vector<bool> node_alive(d.nodes.size(), true), edge_alive(d.edges.size(), true);

    auto contract_one = [&](int s) {
        int e1 = d.rotation[s][0], e2 = d.rotation[s][1];
        int w1 = d.edges[e1].white, w2 = d.edges[e2].white;
        if (w1 == w2) return false;
        auto after = [&](int w, int e) {
            const auto& rot = d.rotation[w];
            auto it = std::find(rot.begin(), rot.end(), e);
            std::vector<int> seq(it + 1, rot.end());
            seq.insert(seq.end(), rot.begin(), it);
            return seq;
        };
        std::vector<int> spliced = after(w1, e1);
        auto tail = after(w2, e2);
        spliced.insert(spliced.end(), tail.begin(), tail.end());

        int keep = d.nodes[w1].key < d.nodes[w2].key ? w1 : w2;
        int gone = keep == w1 ? w2 : w1;
        for (int e : d.rotation[gone])
            if (d.edges[e].white == gone) d.edges[e].white = keep;
        auto& kn = d.nodes[keep];
        const auto& gn = d.nodes[gone];
        kn.merged.insert(kn.merged.end(), gn.merged.begin(), gn.merged.end());
        std::sort(kn.merged.begin(), kn.merged.end());
        kn.corners.insert(kn.corners.end(), gn.corners.begin(), gn.corners.end());
        std::sort(kn.corners.begin(), kn.corners.end());
        kn.corners.erase(std::unique(kn.corners.begin(), kn.corners.end()), kn.corners.end());

        d.rotation[keep] = std::move(spliced);
        d.rotation[gone].clear();
        d.rotation[s].clear();
        node_alive[gone] = node_alive[s] = false;
        edge_alive[e1] = edge_alive[e2] = false;
        return true;
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (int s : order)
            if (node_alive[s] && d.nodes[s].color == Color::Black &&
                d.nodes[s].location != NodeLocation::BoundarySegment && d.rotation[s].size() == 2)
                changed = contract_one(s) || changed;
        order.clear();
        for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v)
            if (node_alive[v]) order.push_back(v);
    }

    // Compact, keeping the relative order of surviving nodes and edges.
    std::vector<int> node_map(d.nodes.size(), -1), edge_map(d.edges.size(), -1);
    GLmDimer out;
    out.m = d.m;
    out.triangulation = d.triangulation;
    out.reduced = true;
    for (std::size_t v = 0; v < d.nodes.size(); ++v)
        if (node_alive[v]) {
            node_map[v] = static_cast<int>(out.nodes.size());
            out.nodes.push_back(d.nodes[v]);
        }
    for (std::size_t e = 0; e < d.edges.size(); ++e)
        if (edge_alive[e]) {
            edge_map[e] = static_cast<int>(out.edges.size());
            out.edges.push_back({node_map[d.edges[e].white], node_map[d.edges[e].black]});
        }
    for (std::size_t v = 0; v < d.nodes.size(); ++v) {
        if (!node_alive[v]) continue;
        std::vector<int> rot;
        for (int e : d.rotation[v]) rot.push_back(edge_map[e]);
        out.rotation.push_back(std::move(rot));
    }
    for (int b : d.boundary) out.boundary.push_back(node_map[b]);
    return out;
}

} // namespace

GLmDimer build_dimer(const Triangulation& t, int m) {
    if (m < 2) throw Error(ErrorKind::UnsupportedOrder, "m = " + std::to_string(m) + " < 2");
    return DimerBuilder(t, m).build();
}

GLmDimer reduce_dimer(const GLmDimer& d) {
    std::vector<int> order(d.nodes.size());
    std::iota(order.begin(), order.end(), 0);
    return contract(d, std::move(order));
}

GLmDimer reduce_dimer(const GLmDimer& d, std::uint64_t seed) {
    std::vector<int> order(d.nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return contract(d, std::move(order));
}

std::vector<std::vector<int>> trace_faces(const GLmDimer& d) {
    const int darts = 2 * static_cast<int>(d.edges.size());
    // Position of each edge in the rotation of each of its ends.
    std::vector<std::array<int, 2>> pos(d.edges.size(), {-1, -1});
    for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v)
        for (int i = 0; i < d.degree(v); ++i) {
            int e = d.rotation[v][i];
            pos[e][d.edges[e].white == v ? 0 : 1] = i;
        }
    auto next = [&](int dart) {
        int e = dart / 2;
        int v = dart_head(d, dart);
        int side = d.edges[e].white == v ? 0 : 1;
        int deg = d.degree(v);
        int f = d.rotation[v][(pos[e][side] - 1 + deg) % deg];
        return d.edges[f].white == v ? 2 * f : 2 * f + 1;
    };
    std::vector<bool> seen(darts, false);
    std::vector<std::vector<int>> faces;
    for (int start = 0; start < darts; ++start) {
        if (seen[start]) continue;
        std::vector<int> face;
        for (int dart = start; !seen[dart]; dart = next(dart)) {
            seen[dart] = true;
            face.push_back(dart);
        }
        faces.push_back(std::move(face));
    }
    return faces;
}

ValidationReport validate_dimer(const GLmDimer& d) {
    ValidationReport report;
    const int n = d.triangulation.n();

    auto& bip = report.add("bipartite");
    for (const auto& e : d.edges) {
        const auto& a = d.nodes[e.white];
        const auto& b = d.nodes[e.black];
        if (a.color != Color::White || b.color != Color::Black)
            fail(bip, a.key + "--" + b.key);
    }

    auto& rot = report.add("rotation");
    {
        std::vector<std::vector<int>> incident(d.nodes.size());
        for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
            incident[d.edges[e].white].push_back(e);
            incident[d.edges[e].black].push_back(e);
        }
        for (std::size_t v = 0; v < d.nodes.size(); ++v) {
            auto r = d.rotation[v];
            std::sort(r.begin(), r.end());
            if (r != incident[v]) fail(rot, d.nodes[v].key);
        }
    }

    auto& seg = report.add("segment-count");
    {
        std::map<Diagonal, int> per_side;
        for (const auto& node : d.nodes)
            if (node.color == Color::Black && node.location != NodeLocation::Interior)
                ++per_side[node.side];
        for (int k = 1; k <= n; ++k) {
            Diagonal s{std::min(k, k % n + 1), std::max(k, k % n + 1)};
            if (per_side[s] != d.m) fail(seg, "edge " + to_string(s));
        }
        for (const auto& diag : d.triangulation.diagonals()) {
            int expected = d.reduced ? 0 : d.m;
            if (per_side[diag] != expected) fail(seg, "diagonal " + to_string(diag));
        }
    }

    auto& bnd = report.add("boundary");
    if (static_cast<int>(d.boundary.size()) != d.m * n) fail(bnd, "boundary length");
    for (int b : d.boundary)
        if (b < 0 || d.nodes[b].location != NodeLocation::BoundarySegment || d.degree(b) != 1)
            fail(bnd, b < 0 ? std::string("missing") : d.nodes[b].key);

    auto& euler = report.add("euler");
    if (rot.passed && !d.edges.empty()) {
        auto faces = trace_faces(d);
        long long v = static_cast<long long>(d.nodes.size());
        long long e = static_cast<long long>(d.edges.size());
        long long f = static_cast<long long>(faces.size());
        if (v - e + (f - 1) != 1)
            fail(euler, "V-E+F_inner = " + std::to_string(v - e + f - 1));
    } else {
        fail(euler, "rotation system unusable");
    }
    return report;
}

std::string canonical_code(const GLmDimer& d) {
    if (d.boundary.empty()) return {};
    std::vector<int> label(d.nodes.size(), -1);
    std::deque<std::pair<int, int>> queue; // (node, entry edge)
    int root = d.boundary.front();
    label[root] = 0;
    queue.emplace_back(root, d.rotation[root].front());
    int next_label = 1;
    std::string code;
    while (!queue.empty()) {
        auto [v, entry] = queue.front();
        queue.pop_front();
        const auto& node = d.nodes[v];
        code += node.color == Color::White ? 'W' : 'B';
        code += std::to_string(static_cast<int>(node.location));
        code += '[';
        const auto& r = d.rotation[v];
        auto start = std::find(r.begin(), r.end(), entry) - r.begin();
        for (std::size_t i = 0; i < r.size(); ++i) {
            int e = r[(start + i) % r.size()];
            int u = d.other_end(e, v);
            if (label[u] < 0) {
                label[u] = next_label++;
                queue.emplace_back(u, e);
            }
            code += std::to_string(label[u]) + ",";
        }
        code += ']';
    }
    return code;
}

} // namespace dimerlab
