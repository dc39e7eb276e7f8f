// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_BITVECTOR_HPP_
#define PARTLAT_BITVECTOR_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "partlat/errors.hpp"

namespace partlat {

// A finite 0/1 sequence. Positions are 1-based in the accessors that mirror
// the usual x_1..x_t notation; bits() exposes the raw 0-based storage.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_)
      if (b > 1) throw ArgumentError("bit vector entries must be 0 or 1");
  }

  static BitVector zeros(std::size_t n) { return BitVector(std::vector<std::uint8_t>(n, 0)); }
  static BitVector ones(std::size_t n) { return BitVector(std::vector<std::uint8_t>(n, 1)); }

  // Low bit of mask becomes x_1.
  static BitVector from_mask(std::uint64_t mask, std::size_t n) {
    std::vector<std::uint8_t> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = (mask >> i) & 1;
    return BitVector(std::move(b));
  }

  static BitVector parse(std::string_view s) {
    std::vector<std::uint8_t> b;
    for (char ch : s) {
      if (ch != '0' && ch != '1') throw ArgumentError("bit string may only contain 0 and 1");
      b.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return BitVector(std::move(b));
  }

  std::size_t dim() const noexcept { return bits_.size(); }
  int at(std::size_t i) const {
    if (i < 1 || i > bits_.size()) throw ArgumentError("bit index out of range");
    return bits_[i - 1];
  }
  void set(std::size_t i, int v) {
    if (i < 1 || i > bits_.size()) throw ArgumentError("bit index out of range");
    bits_[i - 1] = v ? 1 : 0;
  }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  std::uint64_t mask() const {
    if (bits_.size() > 64) throw CapacityError("bit vector longer than 64");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) m |= std::uint64_t{bits_[i]} << i;
    return m;
  }

  std::size_t count_zeros() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 0)); }
  std::size_t count_ones() const { return bits_.size() - count_zeros(); }

  // (x_1, ..., x_i)
  BitVector prefix(std::size_t i) const {
    if (i > bits_.size()) throw ArgumentError("initial segment longer than the vector");
    return BitVector(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + i));
  }

  std::string to_string() const {
    std::string s;
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  friend BitVector concat(const BitVector& x, const BitVector& y) {
    std::vector<std::uint8_t> b = x.bits_;
    b.insert(b.end(), y.bits_.begin(), y.bits_.end());
    return BitVector(std::move(b));
  }

  // Componentwise order; vectors of different dimension are incomparable.
  friend bool leq(const BitVector& x, const BitVector& y) {
    if (x.dim() != y.dim()) return false;
    for (std::size_t i = 0; i < x.dim(); ++i)
      if (x.bits_[i] > y.bits_[i]) return false;
    return true;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Longest run of consecutive zeros.
inline std::size_t airiness(const BitVector& x) {
  std::size_t best = 0, run = 0;
  for (auto b : x.bits()) {
    run = b ? 0 : run + 1;
    best = std::max(best, run);
  }
  return best;
}

inline bool is_antichain(const std::vector<BitVector>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (i != j && leq(xs[i], xs[j])) return false;
  return true;
}

}  // namespace partlat

#endif  // PARTLAT_BITVECTOR_HPP_
