#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catmag {

/// Division by zero or a zero denominator.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Incompatible matrix dimensions.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text or document. `position` is a zero-based character offset
/// into the parsed input, when one is known.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A category or poset description that violates the axioms.
class CategoryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was applied outside its mathematical domain
/// (e.g. Rota's characteristic of an unbounded poset).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace catmag
