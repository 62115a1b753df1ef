#include "dimerlab/serialize.hpp"

#include "dimerlab/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace dimerlab {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, std::size_t offset, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || pos - start > 6)
        throw Error(ErrorKind::Parse, "position " + std::to_string(offset + start) + ": expected a vertex number");
    return std::stoi(s.substr(start, pos - start));
}

Diagonal parse_diagonal_at(int n, const std::string& body, std::size_t base) {
    std::size_t pos = 0;
    int a = parse_int(body, base, pos);
    if (pos >= body.size() || body[pos] != '-')
        throw Error(ErrorKind::Parse, "position " + std::to_string(base + pos) + ": expected '-'");
    ++pos;
    int b = parse_int(body, base, pos);
    if (pos != body.size())
        throw Error(ErrorKind::Parse, "position " + std::to_string(base + pos) + ": unexpected character");
    return make_diagonal(n, a, b);
}

} // namespace

Diagonal parse_diagonal(int n, const std::string& spec) {
    auto lead = spec.find_first_not_of(" \t");
    return parse_diagonal_at(n, trim(spec), lead == std::string::npos ? 0 : lead);
}

Triangulation parse_triangulation(int n, const std::string& raw) {
    if (n < 3) throw Error(ErrorKind::InvalidPolygon, "n = " + std::to_string(n) + " < 3");
    std::string spec = trim(raw);
    if (spec.rfind("fan", 0) == 0) {
        if (spec == "fan") return fan_triangulation(n, 1);
        if (spec.size() > 4 && spec[3] == ':') {
            std::size_t pos = 4;
            int apex = parse_int(spec, 0, pos);
            if (pos != spec.size())
                throw Error(ErrorKind::Parse, "position " + std::to_string(pos) + ": trailing characters");
            return fan_triangulation(n, apex);
        }
        throw Error(ErrorKind::Parse, "position 3: expected ':' and an apex after 'fan'");
    }
    std::vector<Diagonal> diagonals;
    std::size_t offset = 0;
    while (offset <= spec.size() && !spec.empty()) {
        std::size_t comma = spec.find(',', offset);
        std::string token = spec.substr(offset, comma == std::string::npos ? std::string::npos : comma - offset);
        std::size_t lead = token.find_first_not_of(" \t");
        std::string body = trim(token);
        std::size_t base = offset + (lead == std::string::npos ? 0 : lead);
        diagonals.push_back(parse_diagonal_at(n, body, base));
        if (comma == std::string::npos) break;
        offset = comma + 1;
    }
    return Triangulation(n, std::move(diagonals));
}

Json to_json(const Triangulation& t) {
    Json d = Json::array();
    for (auto diag : t.diagonals()) d.push_back({diag.a, diag.b});
    return {{"n", t.n()}, {"diagonals", d}};
}

Triangulation triangulation_from_json(const Json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Diagonal> diagonals;
        for (const auto& d : j.at("diagonals")) diagonals.push_back(make_diagonal(n, d.at(0).get<int>(), d.at(1).get<int>()));
        return Triangulation(n, std::move(diagonals));
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("triangulation JSON: ") + e.what());
    }
}

namespace {

const char* name_of(Color c) { return c == Color::White ? "white" : "black"; }

const char* name_of(NodeLocation l) {
    switch (l) {
    case NodeLocation::BoundarySegment: return "boundary-edge-segment";
    case NodeLocation::DiagonalSegment: return "diagonal-segment";
    case NodeLocation::Interior: return "interior";
    }
    return "?";
}

Json point_json(const LatticePoint& p) {
    Json j = Json::array();
    for (auto [v, w] : p.weights) j.push_back({v, w});
    return j;
}

LatticePoint point_from_json(const Json& j) {
    LatticePoint p;
    for (const auto& vw : j) p.weights.emplace_back(vw.at(0).get<int>(), vw.at(1).get<int>());
    return p;
}

} // namespace

Json to_json(const GLmDimer& d) {
    Json nodes = Json::array();
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const auto& node = d.nodes[i];
        Json j = {{"id", i}, {"key", node.key}, {"color", name_of(node.color)}, {"location", name_of(node.location)}};
        if (node.location == NodeLocation::Interior) {
            j["triangle"] = node.triangle;
            j["bary"] = node.bary;
        } else {
            j["side"] = {node.side.a, node.side.b};
            j["segment"] = node.segment;
        }
        if (node.merged.size() > 1) j["merged"] = node.merged;
        nodes.push_back(std::move(j));
    }
    Json edges = Json::array();
    for (const auto& e : d.edges) edges.push_back({e.white, e.black});
    return {{"m", d.m},           {"reduced", d.reduced}, {"triangulation", to_json(d.triangulation)},
            {"nodes", nodes},     {"edges", edges},       {"rotation", d.rotation},
            {"boundary", d.boundary}};
}

Json to_json(const QuiverWithFaces& q) {
    Json vertices = Json::array();
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        const auto& x = q.vertices[v];
        vertices.push_back({{"id", v},
                            {"kind", x.kind == VertexKind::Boundary ? "boundary" : "internal"},
                            {"label", x.label},
                            {"point", point_json(x.point)}});
    }
    Json arrows = Json::array();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& x = q.arrows[a];
        arrows.push_back({{"id", a},
                          {"source", x.source},
                          {"target", x.target},
                          {"kind", x.kind == ArrowKind::Boundary ? "boundary" : "internal"},
                          {"dimer_edge", x.dimer_edge}});
    }
    Json faces = Json::array();
    for (std::size_t f = 0; f < q.faces.size(); ++f) {
        const auto& x = q.faces[f];
        faces.push_back({{"id", f},
                         {"sign", x.sign == FaceSign::Positive ? "+" : "-"},
                         {"arrows", x.arrows},
                         {"dimer_node", x.dimer_node}});
    }
    return {{"m", q.m},           {"n", q.n},         {"vertices", vertices},
            {"arrows", arrows},   {"faces", faces},   {"boundary", q.boundary}};
}

QuiverWithFaces quiver_from_json(const Json& j) {
    try {
        QuiverWithFaces q;
        q.m = j.at("m").get<int>();
        q.n = j.at("n").get<int>();
        for (const auto& v : j.at("vertices")) {
            QuiverVertex x;
            x.kind = v.at("kind").get<std::string>() == "boundary" ? VertexKind::Boundary : VertexKind::Internal;
            x.label = v.at("label").get<int>();
            x.point = point_from_json(v.at("point"));
            q.vertices.push_back(std::move(x));
        }
        for (const auto& a : j.at("arrows")) {
            Arrow x;
            x.source = a.at("source").get<int>();
            x.target = a.at("target").get<int>();
            x.kind = a.at("kind").get<std::string>() == "boundary" ? ArrowKind::Boundary : ArrowKind::Internal;
            x.dimer_edge = a.value("dimer_edge", -1);
            if (x.source < 0 || x.target < 0 || x.source >= static_cast<int>(q.vertices.size()) ||
                x.target >= static_cast<int>(q.vertices.size()))
                throw Error(ErrorKind::Parse, "arrow endpoint out of range");
            q.arrows.push_back(x);
        }
        for (const auto& f : j.at("faces")) {
            Face x;
            x.sign = f.at("sign").get<std::string>() == "+" ? FaceSign::Positive : FaceSign::Negative;
            x.arrows = f.at("arrows").get<std::vector<int>>();
            for (int a : x.arrows)
                if (a < 0 || a >= static_cast<int>(q.arrows.size())) throw Error(ErrorKind::Parse, "face arrow out of range");
            x.dimer_node = f.value("dimer_node", -1);
            q.faces.push_back(std::move(x));
        }
        q.boundary = j.at("boundary").get<std::vector<int>>();
        q.index_faces();
        return q;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("quiver JSON: ") + e.what());
    }
}

Json to_json(const QuiverWithFaces& q, const Path& p) {
    Json vertices = Json::array({q.vertex_name(p.source)});
    for (int a : p.arrows) vertices.push_back(q.vertex_name(q.arrows[a].target));
    return {{"arrows", p.arrows}, {"vertices", vertices}};
}

Json to_json(const std::vector<RewriteStep>& certificate) {
    Json out = Json::array();
    for (std::size_t i = 0; i < certificate.size(); ++i)
        out.push_back({{"step", i},
                       {"relation", certificate[i].relation},
                       {"direction", certificate[i].direction},
                       {"position", certificate[i].position}});
    return out;
}

Json to_json(const EqualityVerdict& v) {
    Json j = {{"outcome", std::string(to_string(v.outcome))}, {"visited", v.visited}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.outcome == Outcome::Equal) j["certificate"] = to_json(v.certificate);
    return j;
}

Json to_json(const ValidationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j = {{"name", c.name}, {"passed", c.passed}};
        if (!c.offenders.empty()) j["offenders"] = c.offenders;
        checks.push_back(std::move(j));
    }
    return {{"ok", r.ok()}, {"checks", checks}};
}

Json to_json(const BoundaryPresentation& bp, const QuiverWithFaces& q) {
    Json gens = Json::array();
    for (const auto& g : bp.generators)
        gens.push_back({{"source", g.source},
                        {"target", g.target},
                        {"tag", std::string(to_string(g.tag))},
                        {"length", g.representative.length()},
                        {"class_size", g.class_size},
                        {"representative", to_json(q, g.representative)}});
    Json vertices = Json::array();
    for (int k = 1; k <= bp.vertex_count(); ++k) vertices.push_back(k);
    return {{"m", bp.m},
            {"n", bp.n},
            {"vertices", vertices},
            {"candidates", bp.candidates},
            {"composite_classes", bp.composite_classes},
            {"generators", gens}};
}

Json to_json(const GammaQuiver& g) {
    Json arrows = Json::array();
    for (const auto& a : g.arrows)
        arrows.push_back({{"name", a.name()},
                          {"tag", std::string(to_string(a.tag))},
                          {"index", a.index},
                          {"source", a.source},
                          {"target", a.target}});
    return {{"m", g.m}, {"n", g.n}, {"vertices", g.vertex_count()}, {"arrows", arrows}};
}

namespace {

Json instances_json(const std::vector<RelationInstance>& instances) {
    Json out = Json::array();
    for (const auto& r : instances)
        out.push_back({{"family", r.family}, {"index", r.index}, {"lhs", r.lhs}, {"rhs", r.rhs},
                       {"verdict", to_json(r.verdict)}});
    return out;
}

Json budget_json(const SearchBudget& b) {
    return {{"max_length", b.max_length}, {"max_visited", b.max_visited}};
}

} // namespace

Json to_json(const RelationReport& r) {
    return {{"instances", instances_json(r.instances)},
            {"equal", r.count(Outcome::Equal)},
            {"distinct", r.count(Outcome::Distinct)},
            {"unknown", r.count(Outcome::Unknown)},
            {"passed", r.passed()}};
}

Json to_json(const CentralElementReport& r) {
    return {{"commutations", instances_json(r.commutations)}, {"passed", r.passed()}};
}

Json to_json(const FlipTransportCertificate& c) {
    Json classes = Json::array();
    for (const auto& tc : c.classes) {
        Json j = {{"name", tc.name}, {"affected", tc.affected}, {"old", tc.old_text}, {"new", tc.new_text}};
        if (tc.affected)
            j["connecting"] = tc.connecting_text;
        else
            j["verdict"] = to_json(tc.verdict);
        classes.push_back(std::move(j));
    }
    return {{"move",
             {{"removed", {c.move.removed.a, c.move.removed.b}},
              {"inserted", {c.move.inserted.a, c.move.inserted.b}},
              {"quadrilateral", c.move.quadrilateral}}},
            {"before_matched", c.before_matched},
            {"after_matched", c.after_matched},
            {"affected", c.affected_count()},
            {"classes", classes},
            {"relations_after", to_json(c.relations_after)},
            {"passed", c.passed()}};
}

Json to_json(const VerifyResult& r) {
    Json j = {{"tool", "dimerlab"},
              {"version", kVersion},
              {"m", r.m},
              {"n", r.triangulation.n()},
              {"triangulation", to_json(r.triangulation)},
              {"budget", budget_json(r.budget)},
              {"axioms", to_json(r.axioms)},
              {"status", r.status}};
    if (!r.error.empty()) j["error"] = r.error;
    j["match"] = {{"matched", r.match.matched}, {"rotation", r.match.rotation}, {"reflected", r.match.reflected}};
    if (!r.match.obstruction.empty()) j["match"]["obstruction"] = r.match.obstruction;
    if (r.match.matched) {
        j["generators"] = r.presentation.generators.size();
        j["relations"] = to_json(r.relations);
        j["central"] = to_json(r.central);
    }
    return j;
}

Json to_json(const SweepReport& r, bool include_timings) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json j = {{"m", row.m},
                  {"n", row.n},
                  {"index", row.index},
                  {"triangulation", row.triangulation},
                  {"matched", row.matched},
                  {"relations", {{"total", row.relations_total}, {"equal", row.relations_equal},
                                 {"unknown", row.relations_unknown}}},
                  {"central", row.central},
                  {"status", row.status}};
        if (!row.error.empty()) j["error"] = row.error;
        if (include_timings) j["seconds"] = row.seconds;
        rows.push_back(std::move(j));
    }
    return {{"tool", "dimerlab"},
            {"version", kVersion},
            {"grid", {{"m", r.ms}, {"min_n", r.min_n}, {"max_n", r.max_n}}},
            {"budget", budget_json(r.budget)},
            {"rows", rows},
            {"status", r.status()}};
}

namespace {

constexpr double kPi = 3.14159265358979323846;

std::pair<double, double> corner(int k, int n, double radius) {
    double angle = 2 * kPi * (k - 1) / n - kPi / 2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::pair<double, double> place(const LatticePoint& p, int n, int m, double radius) {
    double x = 0, y = 0;
    for (auto [v, w] : p.weights) {
        auto [cx, cy] = corner(v, n, radius);
        x += cx * w / m;
        y += cy * w / m;
    }
    return {x, y};
}

std::string pos(std::pair<double, double> xy) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f!", xy.first, xy.second);
    return buf;
}

} // namespace

std::string to_dot(const QuiverWithFaces& q) {
    std::ostringstream out;
    out << "digraph quiver {\n  layout=neato;\n  node [shape=circle, fontsize=10];\n";
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        const auto& x = q.vertices[v];
        bool rim = x.kind == VertexKind::Boundary;
        out << "  v" << v << " [label=\"" << (rim ? std::to_string(x.label) : "i" + std::to_string(v))
            << "\", pos=\"" << pos(place(x.point, q.n, q.m, 4.0 * q.m)) << "\""
            << (rim ? ", style=filled, fillcolor=lightgray" : "") << "];\n";
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& x = q.arrows[a];
        out << "  v" << x.source << " -> v" << x.target
            << (x.kind == ArrowKind::Boundary ? " [penwidth=2]" : " [style=dashed]") << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const GLmDimer& d) {
    const int n = d.triangulation.n();
    std::ostringstream out;
    out << "graph dimer {\n  layout=neato;\n  node [shape=circle, width=0.2, label=\"\"];\n";
    for (std::size_t v = 0; v < d.nodes.size(); ++v) {
        const auto& node = d.nodes[v];
        double x = 0, y = 0;
        for (const auto& c : node.corners) {
            auto [px, py] = place(c, n, d.m, 4.0 * d.m);
            x += px / static_cast<double>(node.corners.size());
            y += py / static_cast<double>(node.corners.size());
        }
        out << "  n" << v << " [pos=\"" << pos({x, y}) << "\", style=filled, fillcolor="
            << (node.color == Color::White ? "white" : "black") << "];\n";
    }
    for (const auto& e : d.edges) out << "  n" << e.white << " -- n" << e.black << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const GammaQuiver& g) {
    std::ostringstream out;
    out << "digraph gamma {\n  layout=neato;\n  node [shape=circle, fontsize=10];\n";
    const int count = g.vertex_count();
    for (int k = 1; k <= count; ++k) out << "  v" << k << " [pos=\"" << pos(corner(k, count, 1.0 * count)) << "\"];\n";
    for (const auto& a : g.arrows)
        out << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.name() << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace dimerlab
