#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hitlab {

enum class ErrorCode {
  DuplicateEdge,
  LoopEdge,
  VertexOutOfRange,
  InvalidParams,
  EmptySet,
  SizeCapExceeded,
  WeightBelowDegree,
  NotSquare,
  SingularMatrix,
  EmptyGraph,
  NotSymmetric,
  NoConvergence,
  Disconnected,
  NotBridge,
  NotATree,
  NotUnicyclic,
  VertexNotInClaimedTrees,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `line()` is nonzero only for errors
// tied to a position in a text input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace hitlab
