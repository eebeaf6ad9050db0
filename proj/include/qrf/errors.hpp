#pragma once

#include <stdexcept>
#include <string>

namespace qrf {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QRF_DEFINE_ERROR(NAME)                                    \
  class NAME : public Error {                                     \
  public:                                                         \
    explicit NAME(const std::string& what) : Error(#NAME ": " + what) {} \
  }

QRF_DEFINE_ERROR(NotAPermutation);
QRF_DEFINE_ERROR(ClosureTooLarge);
QRF_DEFINE_ERROR(PointOutOfRange);
QRF_DEFINE_ERROR(NotASubgroup);
QRF_DEFINE_ERROR(NotTransitive);
QRF_DEFINE_ERROR(DimensionOverflow);
QRF_DEFINE_ERROR(DimensionMismatch);
QRF_DEFINE_ERROR(NotAnEffect);
QRF_DEFINE_ERROR(NotHermitian);
QRF_DEFINE_ERROR(NotUnitary);
QRF_DEFINE_ERROR(NotNormalised);
QRF_DEFINE_ERROR(NotAState);
QRF_DEFINE_ERROR(NotAProjection);
QRF_DEFINE_ERROR(ZeroEffect);
QRF_DEFINE_ERROR(NotStabiliserInvariant);
QRF_DEFINE_ERROR(ConfigError);

#undef QRF_DEFINE_ERROR

}  // namespace qrf
