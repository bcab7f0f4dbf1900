#pragma once

#include <stdexcept>
#include <string>

namespace m0n {

/// Arguments outside the mathematical domain of an operation (bad n, bad subset).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix or LP rows whose lengths disagree with the declared shape.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A class that was required to be fixed by a symmetry group is not.
class InvarianceError : public std::invalid_argument {
 public:
  InvarianceError(const std::string& what, std::string element)
      : std::invalid_argument(what), element_(std::move(element)) {}
  const std::string& element() const noexcept { return element_; }

 private:
  std::string element_;
};

/// Input violates an operation's precondition (e.g. a divisor that is not F-nef).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold by construction failed. Never expected to fire.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace m0n
