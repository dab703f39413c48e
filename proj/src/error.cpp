// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/error.hpp"

namespace vdgv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
      return "InvalidInput";
    case ErrorKind::NotPrime:
      return "NotPrime";
    case ErrorKind::SizeGuardExceeded:
      return "SizeGuardExceeded";
    case ErrorKind::NotASubfield:
      return "NotASubfield";
    case ErrorKind::EvenCharacteristic:
      return "EvenCharacteristic";
    case ErrorKind::UnsupportedOrder:
      return "UnsupportedOrder";
    case ErrorKind::NotRationalInteger:
      return "NotRationalInteger";
    case ErrorKind::NormMismatch:
      return "NormMismatch";
    case ErrorKind::NonIntegralCoefficient:
      return "NonIntegralCoefficient";
    case ErrorKind::NoSuchFactor:
      return "NoSuchFactor";
    case ErrorKind::NotReduced:
      return "NotReduced";
    case ErrorKind::RootsNotInFp:
      return "RootsNotInFp";
    case ErrorKind::NotInGroup:
      return "NotInGroup";
    case ErrorKind::PointNotOnCurve:
      return "PointNotOnCurve";
    case ErrorKind::NotInVR:
      return "NotInVR";
    case ErrorKind::ValueNotInFp:
      return "ValueNotInFp";
    case ErrorKind::NoRationalMaximalIsotropic:
      return "NoRationalMaximalIsotropic";
    case ErrorKind::NoRationalLift:
      return "NoRationalLift";
    case ErrorKind::CentralCharacterTrivial:
      return "CentralCharacterTrivial";
    case ErrorKind::ZeroElement:
      return "ZeroElement";
    case ErrorKind::NoSolution:
      return "NoSolution";
    case ErrorKind::DependentImage:
      return "DependentImage";
    case ErrorKind::NotCommuting:
      return "NotCommuting";
    case ErrorKind::NoRoot:
      return "NoRoot";
    case ErrorKind::NotACharacter:
      return "NotACharacter";
    case ErrorKind::HypothesisViolated:
      return "HypothesisViolated";
    case ErrorKind::NonIntegral:
      return "NonIntegral";
    case ErrorKind::OracleMismatch:
      return "OracleMismatch";
    case ErrorKind::AssumptionViolated:
      return "AssumptionViolated";
    case ErrorKind::InternalMismatch:
      return "InternalMismatch";
  }
  return "Unknown";
}

}  // namespace vdgv
