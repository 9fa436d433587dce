#pragma once

#include <stdexcept>
#include <string>

namespace planewalk {

// Every failure the library can signal.  Codes are part of the public
// surface: the CLI maps them to messages and tests match on them.
enum class Errc {
  LoopEdge,
  ParallelEdge,
  CoincidentCoordinates,
  RotationCoordMismatch,
  NonPlanarRotation,
  CoincidentDirections,
  NotAWalk,
  DegenerateClosed,
  ZeroLengthInput,
  SyntaxError,
  SemanticError,
  TransversalPresent,
  IterationCapExceeded,
  NoCoordinates,
  GenericityExhausted,
  AmbientMismatch,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  // `detail` carries the derivative level for TransversalPresent and the
  // line number for SyntaxError; -1 when not meaningful.
  Error(Errc code, const std::string& what, long detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        detail_(detail) {}

  Errc code() const { return code_; }
  long detail() const { return detail_; }

 private:
  Errc code_;
  long detail_ = -1;
};

}  // namespace planewalk
