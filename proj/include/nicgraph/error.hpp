#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nicgraph {

enum class ErrorCode {
  Io,
  MissingLabel,
  MalformedLine,
  DuplicateLabel,
  FormatMismatch,
  EmptyGraph,
  DegenerateMixing,
  ModelInvalid,
  ModelIncomplete,
  EnumerationTooLarge,
  InfeasibleTarget,
  DimensionMismatch,
  MethodUnsupported,
  DegenerateInput,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported as an Error carrying a machine-readable
/// code; what() holds the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nicgraph
