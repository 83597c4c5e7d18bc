#pragma once

#include <stdexcept>
#include <string>

namespace cm {

// Error kinds named after the contract they guard.  All carry a message;
// some carry a structured payload rendered into the message by the caller.
struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct NotInvertible : Error {
  using Error::Error;
};
struct OracleMismatch : Error {
  using Error::Error;
};
struct BadIndex : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct NotClosed : Error {
  using Error::Error;
};
struct NotComposable : Error {
  using Error::Error;
};
struct RouteMismatch : Error {
  using Error::Error;
};
struct UnsupportedCase : Error {
  // For chain p=2 / BP ell=1 the message names the engine the case
  // reduces to; callers may parse `reduction`.
  std::string reduction;
  UnsupportedCase(const std::string& m, std::string red = "")
      : Error(m), reduction(std::move(red)) {}
};
struct InconsistentInvariants : Error {
  using Error::Error;
};
struct UnknownFormat : Error {
  using Error::Error;
};

}  // namespace cm
