// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_ERRORS_HPP_
#define PARTLAT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partlat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different ground sets.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured limit was hit; partial_size() reports how far the work got.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what, std::size_t partial = 0)
      : Error(what), partial_(partial) {}
  std::size_t partial_size() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

// Persistent state (checkpoint, input file) does not match the request.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace partlat

#endif  // PARTLAT_ERRORS_HPP_
