#pragma once

#include <stdexcept>
#include <string>

namespace lee {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeWeight : Error {
  using Error::Error;
};
struct NonPositiveF1 : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct DomainMismatch : Error {
  using Error::Error;
};
struct ZeroTau : Error {
  using Error::Error;
};
struct OutOfRangeWaveNumber : Error {
  using Error::Error;
};
struct NoStructureFound : Error {
  using Error::Error;
};
struct EmptySeries : Error {
  using Error::Error;
};
struct NonNestedResolutions : Error {
  using Error::Error;
};
struct InconsistentUnits : Error {
  using Error::Error;
};
struct UnknownLattice : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace lee
