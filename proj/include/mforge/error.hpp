#pragma once

#include <stdexcept>
#include <string>

namespace mforge {

enum class Err {
  DivisionByZero,
  DescriptorMismatch,
  NotQuadExt,
  Reducible,
  NotPrime,
  AlgebraMismatch,
  NotInvertible,
  NotInSpan,
  BadDoublingUnit,
  BadSubfield,
  ZeroAnchor,
  DimensionTooLarge,
  UnrepresentableClosure,
  SpaceMismatch,
  BadOrthogonalUnit,
  BasisNotOrthogonal,
  ZeroArgument,
  CarrierMismatch,
  IndexOutOfRange,
  ZeroParameter,
  TooSmall,
  UnitIncompatible,
  NotACover,
  NotTree,
  NotNegative,
  NotSimplyLaced,
  NotA443Shape,
  InvalidInput,
};

const char* err_name(Err e);

class MathError : public std::runtime_error {
 public:
  MathError(Err kind, const std::string& what)
      : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

}  // namespace mforge
