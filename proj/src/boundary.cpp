#include "dimerlab/boundary.hpp"

#include "dimerlab/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace dimerlab {

std::string_view to_string(GeneratorTag t) {
    switch (t) {
    case GeneratorTag::X: return "x";
    case GeneratorTag::Y: return "y";
    case GeneratorTag::Z: return "z";
    }
    return "?";
}

int wrap_label(int k, int boundary_count) { return ((k - 1) % boundary_count + boundary_count) % boundary_count + 1; }

GeneratorTag classify(int source, int target, int boundary_count) {
    if (wrap_label(target - source + 1, boundary_count) == 2) return GeneratorTag::X;
    if (wrap_label(source - target + 1, boundary_count) == 2) return GeneratorTag::Z;
    return GeneratorTag::Y;
}

namespace {

bool is_boundary(const QuiverWithFaces& q, int v) { return q.vertices[v].kind == VertexKind::Boundary; }

bool factors_through_boundary(const QuiverWithFaces& q, const Path& p) {
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (is_boundary(q, q.arrows[p.arrows[i]].target)) return true;
    return false;
}

bool shorter(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.arrows < b.arrows;
}

std::vector<Path> interior_paths(const QuiverWithFaces& q) {
    std::vector<std::vector<int>> out_arrows(q.vertices.size());
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) out_arrows[q.arrows[a].source].push_back(a);

    std::vector<Path> found;
    std::vector<bool> on_path(q.vertices.size(), false);
    std::vector<int> stack;
    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (int a : out_arrows[v]) {
            int t = q.arrows[a].target;
            stack.push_back(a);
            if (is_boundary(q, t)) {
                found.push_back(Path{start, t, stack});
            } else if (!on_path[t]) {
                on_path[t] = true;
                dfs(start, t);
                on_path[t] = false;
            }
            stack.pop_back();
        }
    };
    for (int v : q.boundary) dfs(v, v);
    std::sort(found.begin(), found.end(), shorter);
    return found;
}

std::string path_key(const Path& p) {
    std::string k;
    for (int a : p.arrows) {
        k.push_back(static_cast<char>(a & 0xFF));
        k.push_back(static_cast<char>((a >> 8) & 0xFF));
    }
    return k;
}

} // namespace

BoundaryPresentation boundary_generators(const RewriteSystem& rs, SearchBudget budget) {
    const auto& q = rs.quiver();
    const int count = static_cast<int>(q.boundary.size());
    BoundaryPresentation bp;
    bp.m = q.m;
    bp.n = q.n;

    std::unordered_map<std::string, int> known; // member -> generator index
    SearchBudget closure_budget{0, budget.max_visited};
    auto composite = [&](const Path& p) { return factors_through_boundary(q, p); };

    for (const Path& cand : interior_paths(q)) {
        ++bp.candidates;
        if (known.count(path_key(cand))) continue;
        auto cls = rs.closure(cand, closure_budget, composite);
        if (cls.stopped) {
            ++bp.composite_classes;
            continue;
        }
        if (!cls.complete)
            throw Error(ErrorKind::InconclusivePresentation,
                        "class of " + to_string(q, cand) + " not closed within " +
                            std::to_string(budget.max_visited) + " visited paths");
        Generator g;
        g.source = q.vertices[cand.source].label;
        g.target = q.vertices[cand.target].label;
        g.tag = classify(g.source, g.target, count);
        g.representative = *std::min_element(cls.members.begin(), cls.members.end(), shorter);
        g.class_size = cls.members.size();
        int id = static_cast<int>(bp.generators.size());
        for (const auto& member : cls.members) known.emplace(path_key(member), id);
        bp.generators.push_back(std::move(g));
    }
    std::sort(bp.generators.begin(), bp.generators.end(), [](const Generator& a, const Generator& b) {
        return std::tie(a.target, a.source, a.tag) < std::tie(b.target, b.source, b.tag);
    });
    return bp;
}

std::string GammaArrow::name() const { return std::string(to_string(tag)) + std::to_string(index); }

int GammaQuiver::find(GeneratorTag tag, int k) const {
    int kk = wrap_label(k, vertex_count());
    for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
        if (arrows[i].tag == tag && arrows[i].index == kk) return i;
    return -1;
}

int gamma_y_source(int k, int m, int boundary_count) {
    int shift = ((-k) % m + m) % m;
    return wrap_label(k + 2 + 2 * shift, boundary_count);
}

GammaQuiver build_gamma(int m, int n) {
    if (m < 2) throw Error(ErrorKind::UnsupportedOrder, "m = " + std::to_string(m) + " < 2");
    if (n < 3) throw Error(ErrorKind::InvalidPolygon, "n = " + std::to_string(n) + " < 3");
    GammaQuiver g;
    g.m = m;
    g.n = n;
    const int count = m * n;
    for (int k = 1; k <= count; ++k) {
        int r = k % m;
        g.arrows.push_back({GeneratorTag::X, k, wrap_label(k - 1, count), k});
        if (r != 1 % m) g.arrows.push_back({GeneratorTag::Y, k, gamma_y_source(k, m, count), k});
        if (r != 0 && r != 1) g.arrows.push_back({GeneratorTag::Z, k, wrap_label(k + 1, count), k});
    }
    return g;
}

int GammaMatch::presentation_label(int gamma_label, int boundary_count) const {
    return reflected ? wrap_label(rotation - gamma_label, boundary_count)
                     : wrap_label(gamma_label - rotation, boundary_count);
}

GammaMatch match_gamma(const BoundaryPresentation& bp, const GammaQuiver& g, bool allow_reflection) {
    const int count = g.vertex_count();
    if (bp.vertex_count() != count)
        throw Error(ErrorKind::Incompatible, "presentation has " + std::to_string(bp.vertex_count()) +
                                                 " boundary vertices, Gamma has " + std::to_string(count));
    GammaMatch result;
    if (bp.generators.size() != g.arrows.size()) {
        result.obstruction = "generator count " + std::to_string(bp.generators.size()) + " vs " +
                             std::to_string(g.arrows.size()) + " arrows";
        return result;
    }
    std::map<std::tuple<GeneratorTag, int, int>, int> slots;
    for (int i = 0; i < static_cast<int>(g.arrows.size()); ++i)
        slots[{g.arrows[i].tag, g.arrows[i].source, g.arrows[i].target}] = i;

    std::string first_obstruction;
    for (bool reflect : {false, true}) {
        if (reflect && !allow_reflection) break;
        for (int r = 0; r < count; ++r) {
            auto relabel = [&](int l) { return reflect ? wrap_label(r - l, count) : wrap_label(l + r, count); };
            std::vector<int> assigned(g.arrows.size(), -1);
            std::string obstruction;
            for (int i = 0; i < static_cast<int>(bp.generators.size()) && obstruction.empty(); ++i) {
                const auto& gen = bp.generators[i];
                int s = relabel(gen.source), t = relabel(gen.target);
                GeneratorTag tag = reflect ? classify(s, t, count) : gen.tag;
                auto it = slots.find({tag, s, t});
                if (it == slots.end() || assigned[it->second] >= 0)
                    obstruction = "generator " + std::string(to_string(gen.tag)) + " " + std::to_string(gen.source) +
                                  "->" + std::to_string(gen.target) + " has no image";
                else
                    assigned[it->second] = i;
            }
            if (obstruction.empty()) {
                result.matched = true;
                result.rotation = r;
                result.reflected = reflect;
                result.generator_of = std::move(assigned);
                return result;
            }
            if (first_obstruction.empty()) first_obstruction = "rotation 0: " + obstruction;
        }
    }
    result.obstruction = first_obstruction;
    return result;
}

std::size_t RelationReport::count(Outcome o) const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                  [o](const RelationInstance& r) { return r.verdict.outcome == o; }));
}

std::string to_string(const GammaWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += std::string(to_string(w[i].first)) + std::to_string(w[i].second);
    }
    return s;
}

std::vector<GammaRelation> gamma_relations(int m, int n) {
    const int count = m * n;
    auto w = [&](int k) { return wrap_label(k, count); };
    auto x = [&](int k) { return std::pair{GeneratorTag::X, w(k)}; };
    auto y = [&](int k) { return std::pair{GeneratorTag::Y, w(k)}; };
    auto z = [&](int k) { return std::pair{GeneratorTag::Z, w(k)}; };
    std::vector<GammaRelation> out;
    for (int k = 1; k <= count; ++k) {
        int r = k % m;
        int ys = gamma_y_source(k, m, count);
        if (m >= 3 && r != 0 && r != 1) out.push_back({"xy=yz", k, {x(ys), y(k)}, {y(k + 1), z(k)}});
        if (m >= 3 && r != 0 && r != 1 && r != 2 % m)
            out.push_back({"xz=zx", k, {x(k + 1), z(k)}, {z(k - 1), x(k)}});
        if (m >= 3 && r == 2 % m) out.push_back({"xz=yxx", k, {x(k + 1), z(k)}, {y(k - 2), x(k - 1), x(k)}});
        if (m >= 3 && r == 0) out.push_back({"xxy=zx", k, {x(k + 1), x(k + 2), y(k)}, {z(k - 1), x(k)}});
        if (m == 2 && r == 0) out.push_back({"xxy=yxx", k, {x(k + 1), x(k + 2), y(k)}, {y(k - 2), x(k - 1), x(k)}});
        if (r != 1 % m) {
            GammaRelation rel{"yy=x..x", k, {y(ys), y(k)}, {}};
            for (int j = k + 2 * m + 1; j <= k + count; ++j) rel.rhs.push_back(x(j));
            out.push_back(std::move(rel));
        }
    }
    return out;
}

Path realize(const GammaWord& word, const BoundaryPresentation& bp, const GammaQuiver& g, const GammaMatch& match) {
    if (!match.matched) throw Error(ErrorKind::Incompatible, "presentation is not matched to Gamma");
    std::optional<Path> out;
    for (auto [tag, k] : word) {
        int a = g.find(tag, k);
        if (a < 0) throw Error(ErrorKind::FormulaMismatch, "Gamma has no arrow " + std::string(to_string(tag)) +
                                                               std::to_string(k));
        const Path& rep = bp.generators[match.generator_of[a]].representative;
        out = out ? concat(*out, rep) : rep;
    }
    if (!out) throw Error(ErrorKind::FormulaMismatch, "empty word");
    return *out;
}

RelationReport verify_theorem_relations(const BoundaryPresentation& bp, const GammaQuiver& g,
                                        const GammaMatch& match, const RewriteSystem& rs, SearchBudget budget) {
    RelationReport report;
    for (const auto& rel : gamma_relations(g.m, g.n)) {
        RelationInstance inst{rel.family, rel.index, to_string(rel.lhs), to_string(rel.rhs), {}};
        inst.verdict = rs.equal(realize(rel.lhs, bp, g, match), realize(rel.rhs, bp, g, match), budget);
        report.instances.push_back(std::move(inst));
    }
    return report;
}

bool CentralElementReport::passed() const {
    return std::all_of(commutations.begin(), commutations.end(),
                       [](const RelationInstance& r) { return r.verdict.outcome == Outcome::Equal; });
}

bool CentralElementReport::inconclusive() const {
    return std::any_of(commutations.begin(), commutations.end(),
                       [](const RelationInstance& r) { return r.verdict.outcome == Outcome::Unknown; });
}

CentralElementReport verify_central_element(const BoundaryPresentation& bp, const RewriteSystem& rs,
                                            SearchBudget budget) {
    const auto& q = rs.quiver();
    CentralElementReport report;
    for (const auto& gen : bp.generators) {
        int s = q.boundary_vertex(gen.source), t = q.boundary_vertex(gen.target);
        Path lhs = concat(chordless_cycle_at(q, s), gen.representative);
        Path rhs = concat(gen.representative, chordless_cycle_at(q, t));
        std::string name = std::string(to_string(gen.tag)) + " " + std::to_string(gen.source) + "->" +
                           std::to_string(gen.target);
        report.commutations.push_back({"u a = a u", gen.target, "u" + std::to_string(gen.source) + " " + name,
                                       name + " u" + std::to_string(gen.target), rs.equal(lhs, rhs, budget)});
    }
    return report;
}

RelationReport verify_chordless_cycles(const RewriteSystem& rs, SearchBudget budget) {
    const auto& q = rs.quiver();
    RelationReport report;
    for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v) {
        auto cycles = chordless_cycles_at(q, v);
        for (std::size_t i = 0; i < cycles.size(); ++i)
            for (std::size_t j = i + 1; j < cycles.size(); ++j)
                report.instances.push_back({"u=u", v, to_string(q, cycles[i]), to_string(q, cycles[j]),
                                            rs.equal(cycles[i], cycles[j], budget)});
    }
    return report;
}

namespace {

class PointIndex {
public:
    explicit PointIndex(const QuiverWithFaces& q) : q_(q) {
        for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v) by_point_[q.vertices[v].point] = v;
    }

    std::optional<int> vertex(const LatticePoint& p) const {
        auto it = by_point_.find(p);
        if (it == by_point_.end()) return std::nullopt;
        return it->second;
    }

    int arrow(const LatticePoint& from, const LatticePoint& to, const std::string& what) const {
        auto s = vertex(from), t = vertex(to);
        if (!s || !t) throw Error(ErrorKind::FormulaMismatch, what + ": endpoint missing from the quiver");
        auto arrows = q_.arrows_between(*s, *t);
        if (arrows.size() != 1)
            throw Error(ErrorKind::FormulaMismatch, what + ": expected one arrow " + to_string(from) + " -> " +
                                                        to_string(to) + ", found " + std::to_string(arrows.size()));
        return arrows.front();
    }

private:
    const QuiverWithFaces& q_;
    std::map<LatticePoint, int> by_point_;
};

LatticePoint pair_point(int a, int wa, int b, int wb) { return LatticePoint::from_triangle(a, b, b, wa, wb, 0); }

int find_generator(const BoundaryPresentation& bp, int source, int target, GeneratorTag tag) {
    for (int i = 0; i < static_cast<int>(bp.generators.size()); ++i) {
        const auto& g = bp.generators[i];
        if (g.source == source && g.target == target && g.tag == tag) return i;
    }
    return -1;
}

GammaArrow gamma_image(int generator, const GammaQuiver& g, const GammaMatch& match) {
    for (int a = 0; a < static_cast<int>(g.arrows.size()); ++a)
        if (match.generator_of[a] == generator) return g.arrows[a];
    return {};
}

} // namespace

std::vector<NamedPath> fan_generator_paths(int m, int n, const RewriteSystem& rs, const BoundaryPresentation& bp,
                                           const GammaQuiver& g, const GammaMatch& match, SearchBudget budget) {
    const auto& q = rs.quiver();
    if (q.m != m || q.n != n) throw Error(ErrorKind::Incompatible, "quiver does not have the requested (m, n)");
    if (!match.matched) throw Error(ErrorKind::Incompatible, "presentation is not matched to Gamma");
    const int count = m * n;
    PointIndex index(q);
    std::vector<NamedPath> out;

    auto record = [&](std::string name, Path path) {
        int s = q.vertices[path.source].label, t = q.vertices[path.target].label;
        NamedPath np{std::move(name), {}, std::move(path), {}};
        int gen = find_generator(bp, s, t, classify(s, t, count));
        if (gen < 0) {
            np.verdict.outcome = Outcome::Distinct;
            np.verdict.reason = "no extracted generator " + std::to_string(s) + "->" + std::to_string(t);
        } else {
            np.gamma = gamma_image(gen, g, match);
            np.verdict = rs.equal(np.path, bp.generators[gen].representative, budget);
        }
        out.push_back(std::move(np));
    };
    auto boundary_point = [&](int label) { return q.vertices[q.boundary_vertex(label)].point; };

    if (m == 2) {
        // Diagonal midpoints i_k on (1, k+2); alpha runs along them from 2 to 2n.
        auto mid = [&](int k) { return pair_point(1, 1, k + 2, 1); };
        std::vector<int> alpha;
        if (n == 3) {
            alpha.push_back(index.arrow(boundary_point(2), boundary_point(2 * n), "alpha0"));
        } else {
            alpha.push_back(index.arrow(boundary_point(2), mid(1), "alpha0"));
            for (int k = 1; k <= n - 4; ++k) alpha.push_back(index.arrow(mid(k), mid(k + 1), "alpha" + std::to_string(k)));
            alpha.push_back(index.arrow(mid(n - 3), boundary_point(2 * n), "alpha" + std::to_string(n - 3)));
        }
        record("z2", make_path(q, alpha));
        record("z4", make_path(q, {index.arrow(boundary_point(4), boundary_point(2), "y4")}));
        for (int k = 3; k <= n - 1; ++k) {
            int gamma = index.arrow(boundary_point(2 * k), mid(k - 2), "gamma" + std::to_string(k - 2));
            int beta = index.arrow(mid(k - 2), boundary_point(2 * k - 2), "beta" + std::to_string(k - 3));
            record("z" + std::to_string(2 * k), make_path(q, {gamma, beta}));
        }
        if (n > 3)
            record("z" + std::to_string(2 * n),
                   make_path(q, {index.arrow(boundary_point(2 * n), boundary_point(2 * n - 2), "y" + std::to_string(2 * n))}));
    }

    // z_k: the positive face through x_{k+1} without that arrow.
    for (int k = 1; k <= count; ++k) {
        int r = k % m;
        if (r == 0 || r == 1) continue;
        auto xs = q.arrows_between(q.boundary_vertex(k), q.boundary_vertex(k + 1));
        int x = -1;
        for (int a : xs)
            if (q.arrows[a].kind == ArrowKind::Boundary) x = a;
        if (x < 0 || q.arrows[x].positive_face < 0)
            throw Error(ErrorKind::FormulaMismatch, "z" + std::to_string(k) + ": no boundary arrow into " +
                                                        std::to_string(wrap_label(k + 1, count)));
        const auto& cyc = q.faces[q.arrows[x].positive_face].arrows;
        auto it = std::find(cyc.begin(), cyc.end(), x);
        std::vector<int> rest(it + 1, cyc.end());
        rest.insert(rest.end(), cyc.begin(), it);
        record("z" + std::to_string(k), make_path(q, rest));
    }

    // y_k: the level line at distance d from the corner at k + d, walked from k + 2d.
    for (int k = 1; k <= count; ++k) {
        if (k % m == 1 % m) continue;
        int d = ((-k) % m + m) % m + 1;
        int corner_label = wrap_label(k + d, count);
        int corner = (corner_label - 1) / m + 1;
        int from = q.boundary_vertex(k + 2 * d), to = q.boundary_vertex(k);
        std::vector<int> arrows;
        std::set<int> seen{from};
        for (int cur = from; cur != to;) {
            int step = -1;
            for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
                const auto& arr = q.arrows[a];
                if (arr.source != cur || seen.count(arr.target)) continue;
                if (q.vertices[arr.target].point.weight_of(corner) != m - d) continue;
                if (step >= 0)
                    throw Error(ErrorKind::FormulaMismatch, "y" + std::to_string(k) + ": level line branches");
                step = a;
            }
            if (step < 0) throw Error(ErrorKind::FormulaMismatch, "y" + std::to_string(k) + ": level line breaks");
            arrows.push_back(step);
            cur = q.arrows[step].target;
            seen.insert(cur);
        }
        record("y" + std::to_string(k), make_path(q, arrows));
    }
    return out;
}

std::size_t FlipTransportCertificate::affected_count() const {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const TransportedClass& c) { return c.affected; }));
}

bool FlipTransportCertificate::passed() const {
    if (!before_matched || !after_matched || !relations_after.passed()) return false;
    return std::all_of(classes.begin(), classes.end(), [](const TransportedClass& c) {
        return c.affected || c.verdict.outcome == Outcome::Equal;
    });
}

bool FlipTransportCertificate::inconclusive() const {
    if (relations_after.inconclusive()) return true;
    return std::any_of(classes.begin(), classes.end(), [](const TransportedClass& c) {
        return !c.affected && c.verdict.outcome == Outcome::Unknown;
    });
}

FlipTransportCertificate verify_flip_transport(const Triangulation& t, Diagonal d, int m, SearchBudget budget) {
    auto [flipped, move] = flip(t, d);
    FlipTransportCertificate cert;
    cert.move = move;

    QuiverWithFaces q_old = quiver_of(t, m);
    QuiverWithFaces q_new = quiver_of(flipped, m);
    RewriteSystem rs_old(q_old, potential_relations(q_old));
    RewriteSystem rs_new(q_new, potential_relations(q_new));
    auto bp_old = boundary_generators(rs_old, budget);
    auto bp_new = boundary_generators(rs_new, budget);
    GammaQuiver g = build_gamma(m, t.n());
    auto match_old = match_gamma(bp_old, g);
    auto match_new = match_gamma(bp_new, g);
    cert.before_matched = match_old.matched;
    cert.after_matched = match_new.matched;
    if (!cert.before_matched || !cert.after_matched) return cert;
    cert.relations_after = verify_theorem_relations(bp_new, g, match_new, rs_new, budget);

    const auto& quad = move.quadrilateral;
    auto inside = [&](const LatticePoint& p) {
        std::vector<int> support;
        for (auto [v, w] : p.weights) support.push_back(v);
        if (!p.supported_on({quad.begin(), quad.end()})) return false;
        if (support.size() >= 3) return true;
        if (support.size() != 2) return false;
        Diagonal s{support[0], support[1]};
        return s == Diagonal{quad[0], quad[2]} || s == Diagonal{quad[1], quad[3]};
    };

    PointIndex index_new(q_new);
    for (int a = 0; a < static_cast<int>(g.arrows.size()); ++a) {
        const auto& old_gen = bp_old.generators[match_old.generator_of[a]];
        const auto& new_gen = bp_new.generators[match_new.generator_of[a]];
        TransportedClass tc;
        tc.name = g.arrows[a].name();
        tc.old_representative = old_gen.representative;
        tc.new_representative = new_gen.representative;
        tc.old_text = to_string(q_old, old_gen.representative);
        tc.new_text = to_string(q_new, new_gen.representative);

        std::vector<int> moved;
        for (int arrow : old_gen.representative.arrows) {
            const auto& arr = q_old.arrows[arrow];
            auto s = index_new.vertex(q_old.vertices[arr.source].point);
            auto e = index_new.vertex(q_old.vertices[arr.target].point);
            if (!s || !e) break;
            auto between = q_new.arrows_between(*s, *e);
            if (between.size() != 1) break;
            moved.push_back(between.front());
        }
        tc.affected = moved.size() != old_gen.representative.length() ||
                      old_gen.source != new_gen.source || old_gen.target != new_gen.target;
        if (!tc.affected) {
            tc.verdict = rs_new.equal(make_path(q_new, moved), new_gen.representative, budget);
        } else {
            std::vector<int> piece;
            auto flush = [&] {
                if (!piece.empty()) {
                    tc.connecting.push_back(make_path(q_new, piece));
                    tc.connecting_text.push_back(to_string(q_new, tc.connecting.back()));
                }
                piece.clear();
            };
            for (int arrow : new_gen.representative.arrows) {
                const auto& arr = q_new.arrows[arrow];
                if (inside(q_new.vertices[arr.source].point) || inside(q_new.vertices[arr.target].point))
                    flush();
                else
                    piece.push_back(arrow);
            }
            flush();
        }
        cert.classes.push_back(std::move(tc));
    }
    return cert;
}

} // namespace dimerlab
