#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmlattice {

enum class ErrorCode {
  MalformedComplex,
  NotAChainMap,
  MalformedModule,
  NotPointed,
  LatticeNotFull,
  DegenerateInput,
  OutsideCone,
  NotACover,
  NotRadicalDetected,
  ExponentOutsideCone,
  IndexOutOfRange,
  ZeroModule,
  EmptyDifference,
  EmptyTable,
  InternalInconsistency,
  ParseError,
  ValidationError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. `detail()` carries a short
/// machine-readable tag (e.g. "sigma-not-contained") when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace cmlattice
