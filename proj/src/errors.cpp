#include "porism/errors.hpp"

namespace porism {

std::string_view error_code_name(Errc code) {
  switch (code) {
    case Errc::PivotOnCircle: return "PivotOnCircle";
    case Errc::PolarUndefined: return "PolarUndefined";
    case Errc::PoleAtInfinity: return "PoleAtInfinity";
    case Errc::DegenerateQuadruple: return "DegenerateQuadruple";
    case Errc::NotCollinear: return "NotCollinear";
    case Errc::NotConcurrent: return "NotConcurrent";
    case Errc::ImageAtInfinity: return "ImageAtInfinity";
    case Errc::DegenerateTriple: return "DegenerateTriple";
    case Errc::IsIdentity: return "IsIdentity";
    case Errc::NotOnLine: return "NotOnLine";
    case Errc::DegenerateAuxiliary: return "DegenerateAuxiliary";
    case Errc::NotInterior: return "NotInterior";
    case Errc::OnCircle: return "OnCircle";
    case Errc::NoSuchPolygon: return "NoSuchPolygon";
    case Errc::PivotOnSphere: return "PivotOnSphere";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnsupportedMode: return "UnsupportedMode";
    case Errc::UsageError: return "UsageError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace porism
