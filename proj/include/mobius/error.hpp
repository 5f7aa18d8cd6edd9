#pragma once

#include <stdexcept>
#include <string>

namespace mobius {

enum class ErrorKind {
  NotPrime,
  EvenCharacteristic,
  InvalidDegree,
  ReducibleModulus,
  AlphaIsSquare,
  DivisionByZero,
  MixedFields,
  ZeroElement,
  InvalidCircle,
  SingularMap,
  CoincidentPoints,
  IdenticalCircles,
  NotTangent,
  NotIntersecting,
  NotDisjoint,
  NoChains,
  DegenerateGamma,
  BoundExceeded,
  Parse,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::AlphaIsSquare: return "AlphaIsSquare";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::InvalidCircle: return "InvalidCircle";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::IdenticalCircles: return "IdenticalCircles";
    case ErrorKind::NotTangent: return "NotTangent";
    case ErrorKind::NotIntersecting: return "NotIntersecting";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NoChains: return "NoChains";
    case ErrorKind::DegenerateGamma: return "DegenerateGamma";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every precondition failure in the library is reported as an Error carrying its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mobius
