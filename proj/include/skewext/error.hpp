#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace skewext {

enum class ErrorCode {
  EmptyAmbient,
  AmbientMismatch,
  NotDirect,
  NotInSum,
  NotSkewSymmetric,
  NotSubgraph,
  BadDimension,
  InvalidSystem,
  InvalidTriplet,
  NotUnitary,
  DimensionMismatch,
  DecompositionFailure,
  NotSkewSelfAdjoint,
  NotRestriction,
  ReadoffSingular,
  NotDissipative,
  NotMaximal,
  IllDefined,
  NotContraction,
  TraceNotZero,
  CapExceeded,
  InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code. A
// DimensionMismatch between boundary spaces additionally carries the pair
// (dim G1, dim G2) that caused it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Error(ErrorCode code, const std::string& what, std::pair<std::size_t, std::size_t> indices)
      : Error(code, what) {
    indices_ = indices;
  }

  ErrorCode code() const noexcept { return code_; }
  const std::optional<std::pair<std::size_t, std::size_t>>& indices() const noexcept {
    return indices_;
  }

 private:
  ErrorCode code_;
  std::optional<std::pair<std::size_t, std::size_t>> indices_;
};

}  // namespace skewext
