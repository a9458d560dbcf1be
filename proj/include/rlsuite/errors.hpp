#pragma once

#include <stdexcept>
#include <string>

namespace rlsuite {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Episode protocol violated (step before reset, step after episode end).
struct ProtocolError : Error {
  using Error::Error;
};

/// Action not contained in the environment's action space.
struct InvalidActionError : Error {
  using Error::Error;
};

/// Bad construction parameters, unknown names, malformed config files.
struct ConfigError : Error {
  using Error::Error;
};

/// Model queried with a state id that does not exist (wall / out of range).
struct InvalidStateError : Error {
  using Error::Error;
};

/// Operation not available for this space/observation kind.
struct UnsupportedError : Error {
  using Error::Error;
};

/// A documented contract was broken at runtime (e.g. replay divergence).
struct ContractViolationError : Error {
  using Error::Error;
};

}  // namespace rlsuite
