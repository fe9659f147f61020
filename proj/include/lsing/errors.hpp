#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsing {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A precondition on the germ failed (non-isolated singularity, non-ICIS pair, ...).
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The pair (f, phi) is not finitely R_X-determined.
struct NotFinitelyDetermined : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct ContainmentError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

}  // namespace lsing
