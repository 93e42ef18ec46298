#pragma once

#include <stdexcept>
#include <string>

namespace coxcone {

// Base for every failure the library reports through exceptions. Input
// problems (bad specs, malformed files) derive from InputError so the CLI can
// map them to its usage exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap, std::size_t partial)
      : Error("Weyl group enumeration exceeded cap " + std::to_string(cap) +
              " after " + std::to_string(partial) + " elements"),
        cap_(cap),
        partial_(partial) {}

  std::size_t cap() const { return cap_; }
  std::size_t partial() const { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

// A precondition that depends on mathematical content (e.g. h is not
// submodular, a vector is not dominant) rather than on syntax.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace coxcone
