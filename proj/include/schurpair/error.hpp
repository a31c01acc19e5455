#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurpair {

enum class ErrorKind {
  InvalidPrime,
  PrimeMismatch,
  ExponentCapExceeded,
  NotAPGroup,
  InfiniteGroup,
  UnknownId,
  PrimeConstraintViolation,
  MissingFixture,
  InvalidFixture,
  UnknownAbelianization,
  UnknownMultiplier,
  NegativeT,
  OutsideUniverse,
  CapExceeded,
  SyntaxError,
  TwoNonabelianBases,
  InvalidConfig,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above; the
/// CLI maps kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schurpair
