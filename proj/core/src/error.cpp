#include "hitlab/error.hpp"

namespace hitlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::WeightBelowDegree: return "WeightBelowDegree";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotBridge: return "NotBridge";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotUnicyclic: return "NotUnicyclic";
    case ErrorCode::VertexNotInClaimedTrees: return "VertexNotInClaimedTrees";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, std::size_t line) {
  std::string out(to_string(code));
  if (line != 0) out += " at line " + std::to_string(line);
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

}  // namespace hitlab
