#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tiso {

enum class ErrorCode {
  kParse,
  kEmptyInput,
  kDuplicateEdge,
  kInvalidArgument,
  kEdgeNotFound,
  kEmptyGraph,
  kBudgetExceeded,
  kSizeCapExceeded,
  kInfeasibleDegree,
  kRetriesExhausted,
  kDeadEnd,
  kInvalidConfig,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `line()` is set for input errors
/// that can be attributed to a line of the source text (1-based).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace tiso
