#pragma once

#include <stdexcept>
#include <string>

namespace qotto {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct InvalidParams : Error {
  using Error::Error;
};
struct InvalidTemperature : Error {
  using Error::Error;
};
struct InvalidDistribution : Error {
  using Error::Error;
};
struct NotXState : Error {
  using Error::Error;
};
struct InvalidGrid : Error {
  using Error::Error;
};
struct SearchFailed : Error {
  using Error::Error;
};
struct NoBracket : Error {
  using Error::Error;
};

}  // namespace qotto
