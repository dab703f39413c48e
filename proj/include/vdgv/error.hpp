// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_ERROR_HPP
#define VDGV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace vdgv {

enum class ErrorKind {
  InvalidInput,
  NotPrime,
  SizeGuardExceeded,
  NotASubfield,
  EvenCharacteristic,
  UnsupportedOrder,
  NotRationalInteger,
  NormMismatch,
  NonIntegralCoefficient,
  NoSuchFactor,
  NotReduced,
  RootsNotInFp,
  NotInGroup,
  PointNotOnCurve,
  NotInVR,
  ValueNotInFp,
  NoRationalMaximalIsotropic,
  NoRationalLift,
  CentralCharacterTrivial,
  ZeroElement,
  NoSolution,
  DependentImage,
  NotCommuting,
  NoRoot,
  NotACharacter,
  HypothesisViolated,
  NonIntegral,
  OracleMismatch,
  AssumptionViolated,
  InternalMismatch,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library surfaces as an Error carrying its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void check(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace vdgv

#endif  // VDGV_ERROR_HPP
