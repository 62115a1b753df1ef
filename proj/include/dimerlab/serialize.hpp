#pragma once

#include "dimerlab/boundary.hpp"
#include "dimerlab/dimer.hpp"
#include "dimerlab/pipeline.hpp"
#include "dimerlab/polygon.hpp"
#include "dimerlab/quiver.hpp"

#include <json.hpp>

#include <string>

namespace dimerlab {

using Json = nlohmann::json;

/// Parses "1-3,1-4", "fan" or "fan:2". Errors carry the character position.
Triangulation parse_triangulation(int n, const std::string& spec);
/// Parses a single "a-b".
Diagonal parse_diagonal(int n, const std::string& spec);

Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const GLmDimer& d);
Json to_json(const QuiverWithFaces& q);
QuiverWithFaces quiver_from_json(const Json& j);

Json to_json(const QuiverWithFaces& q, const Path& p);
Json to_json(const std::vector<RewriteStep>& certificate);
Json to_json(const EqualityVerdict& v);
Json to_json(const ValidationReport& r);
Json to_json(const BoundaryPresentation& bp, const QuiverWithFaces& q);
Json to_json(const GammaQuiver& g);
Json to_json(const RelationReport& r);
Json to_json(const CentralElementReport& r);
Json to_json(const FlipTransportCertificate& c);
Json to_json(const VerifyResult& r);
Json to_json(const SweepReport& r, bool include_timings);

/// Graphviz rendering; boundary vertices pinned on a circle, arrows styled by kind.
std::string to_dot(const QuiverWithFaces& q);
std::string to_dot(const GLmDimer& d);
std::string to_dot(const GammaQuiver& g);

} // namespace dimerlab
