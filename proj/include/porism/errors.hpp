#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace porism {

/// Every failure the library can report. The string form returned by
/// error_code_name() is what the CLI prints and is part of its interface.
enum class Errc {
  PivotOnCircle,
  PolarUndefined,
  PoleAtInfinity,
  DegenerateQuadruple,
  NotCollinear,
  NotConcurrent,
  ImageAtInfinity,
  DegenerateTriple,
  IsIdentity,
  NotOnLine,
  DegenerateAuxiliary,
  NotInterior,
  OnCircle,
  NoSuchPolygon,
  PivotOnSphere,
  OutOfRange,
  ParseError,
  ValidationError,
  UnsupportedMode,
  UsageError,
  IoError,
};

std::string_view error_code_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace porism
