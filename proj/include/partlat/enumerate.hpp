// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_ENUMERATE_HPP_
#define PARTLAT_ENUMERATE_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "partlat/bigint.hpp"
#include "partlat/partition.hpp"

namespace partlat {

inline constexpr std::size_t kDefaultEnumerationMax = 9;

namespace detail {

// completions[i][m]: restricted growth strings filling positions i..n-1 when
// positions 0..i-1 already use m block ids.
inline std::vector<std::vector<std::uint64_t>> completion_table(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> f(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  for (std::size_t m = 0; m <= n + 1; ++m) f[n][m] = 1;
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t m = 0; m <= n; ++m) f[i][m] = m * f[i + 1][m] + f[i + 1][m + 1];
  return f;
}

}  // namespace detail

// Ranks partitions of an n-set: descending lexicographic order of restricted
// growth strings, so bottom (0,1,..,n-1) has rank 0 and top (0,..,0) has
// rank Bell(n)-1.
class PartitionRanker {
 public:
  explicit PartitionRanker(std::size_t n) : n_(n), f_(detail::completion_table(n)) {
    if (n > 20) throw CapacityError("partition ranking supports n <= 20");
    total_ = f_[0][0];
    if (n == 0) total_ = 1;
  }

  std::size_t n() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return total_; }

  std::uint64_t rank(const Partition& p) const {
    if (p.size() != n_) throw DimensionError("rank: wrong ground set size");
    std::uint64_t lex = 0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t b = p.block_of(i);
      lex += b * f_[i + 1][used];
      if (b == used) ++used;
    }
    return total_ - 1 - lex;
  }

  Partition unrank(std::uint64_t r) const {
    if (r >= total_) throw ArgumentError("unrank: rank out of range");
    std::uint64_t lex = total_ - 1 - r;
    std::vector<int> lab(n_);
    std::size_t used = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t w = f_[i + 1][used];
      std::size_t b = static_cast<std::size_t>(lex / w);
      if (b > used) b = used;
      lex -= b * w;
      lab[i] = static_cast<int>(b);
      if (b == used) ++used;
    }
    return Partition::from_labels(std::span<const int>(lab));
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> f_;
  std::uint64_t total_ = 1;
};

// All partitions of an n-set in rank order.
inline std::vector<Partition> enumerate_partitions(std::size_t n,
                                                   std::size_t max_n = kDefaultEnumerationMax) {
  if (n > max_n)
    throw CapacityError("enumeration of Part(" + std::to_string(n) + ") exceeds the limit " +
                        std::to_string(max_n));
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  std::vector<int> mx(n, 1);  // mx[i] = max(rgs[0..i-1]) + 1
  // Lexicographic generation, reversed at the end.
  while (true) {
    out.push_back(Partition::from_labels(std::span<const int>(rgs)));
    bool advanced = false;
    for (std::size_t i = n; i-- > 1;) {
      if (rgs[i] < mx[i]) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < n; ++j) {
          rgs[j] = 0;
          mx[j] = std::max(mx[j - 1], rgs[j - 1] + 1);
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace partlat

#endif  // PARTLAT_ENUMERATE_HPP_
