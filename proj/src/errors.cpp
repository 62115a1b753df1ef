#include "dimerlab/errors.hpp"

namespace dimerlab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidPolygon: return "invalid-polygon";
    case ErrorKind::InvalidDiagonal: return "invalid-diagonal";
    case ErrorKind::UnknownDiagonal: return "unknown-diagonal";
    case ErrorKind::IncompatiblePolygons: return "incompatible-polygons";
    case ErrorKind::UnsupportedOrder: return "unsupported-order";
    case ErrorKind::MustReduceFirst: return "must-reduce-first";
    case ErrorKind::MalformedQuiver: return "malformed-quiver";
    case ErrorKind::NoCycle: return "no-cycle";
    case ErrorKind::IncomparablePaths: return "incomparable-paths";
    case ErrorKind::InconclusivePresentation: return "inconclusive-presentation";
    case ErrorKind::Incompatible: return "incompatible";
    case ErrorKind::FormulaMismatch: return "formula-mismatch";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

} // namespace dimerlab
