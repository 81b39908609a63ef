#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bk {

// Formula/world/scenario text that does not conform to the grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A name (atom, operator, postulate, theorem) not found in its registry.
class UnknownNameError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// World-space or quantification scope exceeds the supported bounds.
class ScopeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Revision (or a Ramsey-test antecedent) given an inconsistent formula.
class InconsistentInputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conditional flavor does not match the operator flavor, or a contraction
// postulate was paired with a revision operator (and vice versa).
class FlavorMismatchError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed domain value (bad rank map, inconsistent belief basis, ...).
class InvalidValueError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bk
