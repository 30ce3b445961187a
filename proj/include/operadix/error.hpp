#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace operadix {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension, arity or slot mismatch. `index()` names the offending position
/// (argument number, slot, or tensor index) when one applies.
class ShapeError : public Error {
 public:
  ShapeError(const std::string& what, std::size_t index)
      : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
  explicit ShapeError(const std::string& what) : Error(what) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_ = static_cast<std::size_t>(-1);
};

/// A value outside the domain where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace operadix
