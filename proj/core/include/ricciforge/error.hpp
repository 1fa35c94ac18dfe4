#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ricciforge {

enum class ErrorCode {
  DanglingFace,
  InvalidWeight,
  MalformedEdge,
  MalformedCell,
  DimensionTooHigh,
  UnknownCell,
  MissingEmbedding,
  Degenerate,
  NonManifold,
  Disconnected,
  NoEmbedding,
  TooFewVertices,
  TriangleInequality,
  NonTriangularFace,
  DegenerateMetric,
  InvalidArgument,
  ParseError,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

  /// 1-based line number; 0 when the failure is not tied to a line (e.g. truncated binary payload).
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ricciforge
