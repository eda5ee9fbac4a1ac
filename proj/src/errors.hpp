#pragma once

#include <stdexcept>
#include <string>

namespace semitutte {

// Malformed or out-of-contract input: bad documents, duplicate labels,
// ground sets over the supported caps, unknown route names.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that is well-formed but fails the axioms; the message lists every
// violation with witnesses.
class AxiomError : public InputError {
 public:
  using InputError::InputError;
};

// A query outside an operation's mathematical domain, e.g. the rank of a
// non-central set or contraction by a non-central set.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cross-check that is a theorem failed on a concrete instance; carries a
// witness description. Reaching this means a bug, not bad input.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace semitutte
