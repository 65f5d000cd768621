#pragma once

#include <stdexcept>

namespace poincare {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotInvariant : Error {
  using Error::Error;
};

// The ideal never fills a whole degree before the degree cap.
struct NotFiniteDimensional : Error {
  using Error::Error;
};

// The generator list has no pure z1-power, so the quotient is infinite.
struct InfiniteCodimension : Error {
  using Error::Error;
};

struct VerificationFailed : Error {
  using Error::Error;
};

}  // namespace poincare
