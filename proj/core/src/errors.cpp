#include "tiso/errors.hpp"

namespace tiso {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEdgeNotFound: return "EdgeNotFound";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kInfeasibleDegree: return "InfeasibleDegree";
    case ErrorCode::kRetriesExhausted: return "RetriesExhausted";
    case ErrorCode::kDeadEnd: return "DeadEnd";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& what,
                     std::optional<std::size_t> line) {
  std::string out(to_string(code));
  if (line) out += " at line " + std::to_string(*line);
  if (!what.empty()) out += ": " + what;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& what,
             std::optional<std::size_t> line)
    : std::runtime_error(decorate(code, what, line)), code_(code), line_(line) {}

}  // namespace tiso
