#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace coeffcat {

/// All structured output (witnesses, reports) uses insertion-ordered JSON so
/// that serialized documents have a stable field order.
using Json = nlohmann::ordered_json;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure failed one of its defining axioms. The witness names the
/// offending elements (a failing triple, a pair (g, h), an object, ...).
class AxiomViolation : public Error {
 public:
  AxiomViolation(const std::string& what, Json witness)
      : Error(what), witness_(std::move(witness)) {}

  const Json& witness() const noexcept { return witness_; }

 private:
  Json witness_;
};

/// Operands live over different rings/groups, or shapes do not line up.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A requested enumeration exceeds the configured size limits.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace coeffcat
