#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eisenlat {

enum class ErrorCode {
  InvalidArgument,
  Overflow,
  ParseError,
  // lattice core
  NotSymmetric,
  NotEven,
  UnknownName,
  NonIntegralScale,
  ZeroScale,
  DegenerateForm,
  GroupTooLarge,
  DependentInput,
  IndefiniteLattice,
  BudgetExceeded,
  // isometries
  RankMismatch,
  InvalidIsometry,
  WrongOrder,
  NotFound,
  // Eisenstein structure
  HasFixedVectors,
  OddRank,
  NonIntegralHermitian,
  // classification / fibrations
  NotInTable,
  OutsideFamily,
  DegenerateSection,
  NegativeGenus,
  UnsupportedType,
  CheckFailed,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a typed code so callers (and the
// CLI exit-code mapping) never have to parse messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace eisenlat
