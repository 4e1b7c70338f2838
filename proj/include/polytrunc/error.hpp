#ifndef POLYTRUNC_ERROR_HPP
#define POLYTRUNC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace polytrunc {

enum class ErrorKind {
  // construction / validation
  NotCubic,
  AsymmetricAdjacency,
  LoopOrMultiEdge,
  EulerViolation,
  Not3Connected,
  DegenerateFace,
  TooManyVertices,
  VertexOutOfRange,
  InconsistentFaces,
  // subgraphs and truncation
  EmptySubgraph,
  ForeignEdge,
  NonSimpleResult,
  NonSimpleInput,
  HasTriangles,
  InvalidSequence,
  // io
  SyntaxError,
  BadHeader,
  TruncatedRecord,
  UnknownName,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Raised by every fallible operation in the library. The kind is stable and
/// is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polytrunc

#endif  // POLYTRUNC_ERROR_HPP
