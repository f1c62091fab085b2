#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitblock {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (partition, block or graph formats).
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t index)
      : error(what), index_(index) {}

  /// Zero-based position of the offending part, edge line, etc.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// An argument outside the domain of the operation (wrong n, not split, ...).
class domain_error : public error {
 public:
  using error::error;
};

/// A greatest lower / least upper bound that is missing or not unique in a
/// structure that is supposed to be a lattice.
class lattice_error : public error {
 public:
  using error::error;
};

/// Painting a block back into a Ferrers diagram produced something that is
/// not a partition, or that does not decompose to the same block.
class reconstruction_error : public error {
 public:
  using error::error;
};

/// Exact graph algorithms refuse inputs above their configured vertex limit.
class size_limit_error : public error {
 public:
  using error::error;
};

/// A split realization was requested for a sequence that has none.
class realization_error : public error {
 public:
  using error::error;
};

}  // namespace splitblock
