// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_PARTITION_HPP_
#define PARTLAT_PARTITION_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "partlat/errors.hpp"

namespace partlat {

inline constexpr std::size_t kMaxElements = 64;

// A partition of {0..n-1} stored as its restricted growth string: block_of(i)
// is the id of the block of i, ids numbered by first occurrence.
class Partition {
 public:
  Partition() = default;

  // The all-singletons partition of an n-set.
  static Partition bottom(std::size_t n) {
    check_size(n);
    Partition p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (std::size_t i = 0; i < n; ++i) p.rgs_[i] = static_cast<std::uint8_t>(i);
    p.blocks_ = static_cast<std::uint8_t>(n);
    return p;
  }

  static Partition top(std::size_t n) {
    check_size(n);
    Partition p;
    p.n_ = static_cast<std::uint8_t>(n);
    p.blocks_ = n == 0 ? 0 : 1;
    return p;
  }

  // Any labelling works; it is canonicalized.
  template <class Int>
  static Partition from_labels(std::span<const Int> labels) {
    check_size(labels.size());
    Partition p;
    p.n_ = static_cast<std::uint8_t>(labels.size());
    std::vector<std::pair<Int, std::uint8_t>> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto it = std::find_if(seen.begin(), seen.end(),
                             [&](const auto& e) { return e.first == labels[i]; });
      if (it == seen.end()) {
        seen.emplace_back(labels[i], static_cast<std::uint8_t>(seen.size()));
        p.rgs_[i] = seen.back().second;
      } else {
        p.rgs_[i] = it->second;
      }
    }
    p.blocks_ = static_cast<std::uint8_t>(seen.size());
    return p;
  }

  static Partition from_labels(std::initializer_list<int> labels) {
    return from_labels(std::span<const int>(labels.begin(), labels.size()));
  }

  // Blocks must be disjoint; elements not mentioned become singletons.
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<int>>& blocks) {
    check_size(n);
    std::vector<int> label(n, -1);
    int next = 0;
    for (const auto& b : blocks) {
      for (int x : b) {
        if (x < 0 || static_cast<std::size_t>(x) >= n)
          throw ArgumentError("element " + std::to_string(x) + " out of range");
        if (label[x] != -1) throw ArgumentError("element " + std::to_string(x) + " listed twice");
        label[x] = next;
      }
      ++next;
    }
    for (auto& l : label)
      if (l == -1) l = next++;
    return from_labels(std::span<const int>(label));
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t i) const noexcept { return rgs_[i]; }
  const std::uint8_t* data() const noexcept { return rgs_.data(); }

  bool is_bottom() const noexcept { return blocks_ == n_; }
  bool is_top() const noexcept { return blocks_ <= 1; }
  bool same_block(std::size_t u, std::size_t v) const noexcept { return rgs_[u] == rgs_[v]; }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (std::size_t i = 0; i < n_; ++i) out[rgs_[i]].push_back(static_cast<int>(i));
    return out;
  }

  // Pairs u<v in a common block.
  std::size_t pair_count() const {
    std::array<std::size_t, kMaxElements> sz{};
    for (std::size_t i = 0; i < n_; ++i) ++sz[rgs_[i]];
    std::size_t c = 0;
    for (std::size_t b = 0; b < blocks_; ++b) c += sz[b] * (sz[b] - 1) / 2;
    return c;
  }

  // Relabel: element i of *this becomes perm[i].
  Partition permuted(std::span<const int> perm) const {
    std::array<int, kMaxElements> lab{};
    for (std::size_t i = 0; i < n_; ++i) lab[perm[i]] = rgs_[i];
    return from_labels(std::span<const int>(lab.data(), n_));
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ n_;
    for (std::size_t i = 0; i < n_; ++i) {
      h ^= rgs_[i];
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.n_ == b.n_ && std::memcmp(a.rgs_.data(), b.rgs_.data(), a.n_) == 0;
  }
  // Lexicographic on (n, rgs); only used for sorting.
  friend bool operator<(const Partition& a, const Partition& b) noexcept {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::memcmp(a.rgs_.data(), b.rgs_.data(), a.n_) < 0;
  }

  friend Partition meet(const Partition& p, const Partition& q);
  friend Partition join(const Partition& p, const Partition& q);
  friend bool leq(const Partition& p, const Partition& q);

 private:
  static void check_size(std::size_t n) {
    if (n > kMaxElements)
      throw CapacityError("partition size " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxElements));
  }

  std::uint8_t n_ = 0;
  std::uint8_t blocks_ = 0;
  std::array<std::uint8_t, kMaxElements> rgs_{};
};

inline void check_same_size(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw DimensionError("partitions over " + std::to_string(p.size()) + " and " +
                         std::to_string(q.size()) + " elements");
}

inline Partition meet(const Partition& p, const Partition& q) {
  check_same_size(p, q);
  const std::size_t n = p.n_;
  const std::size_t qb = q.blocks_;
  std::array<std::uint8_t, kMaxElements * kMaxElements> id;
  std::memset(id.data(), 0xff, p.blocks_ * qb);
  Partition r;
  r.n_ = p.n_;
  std::uint8_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto& slot = id[p.rgs_[i] * qb + q.rgs_[i]];
    if (slot == 0xff) slot = next++;
    r.rgs_[i] = slot;
  }
  r.blocks_ = next;
  return r;
}

inline Partition join(const Partition& p, const Partition& q) {
  check_same_size(p, q);
  const std::size_t n = p.n_;
  // Union-find over the blocks of p, merged along the blocks of q.
  std::array<std::uint8_t, kMaxElements> parent;
  for (std::size_t b = 0; b < p.blocks_; ++b) parent[b] = static_cast<std::uint8_t>(b);
  std::array<std::uint8_t, kMaxElements> anchor;
  std::memset(anchor.data(), 0xff, q.blocks_);
  auto find = [&](std::uint8_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t qb = q.rgs_[i];
    if (anchor[qb] == 0xff) {
      anchor[qb] = p.rgs_[i];
      continue;
    }
    std::uint8_t a = find(anchor[qb]), b = find(p.rgs_[i]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Partition r;
  r.n_ = p.n_;
  std::array<std::uint8_t, kMaxElements> id;
  std::memset(id.data(), 0xff, p.blocks_);
  std::uint8_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto& slot = id[find(p.rgs_[i])];
    if (slot == 0xff) slot = next++;
    r.rgs_[i] = slot;
  }
  r.blocks_ = next;
  return r;
}

inline bool leq(const Partition& p, const Partition& q) {
  check_same_size(p, q);
  if (p.blocks_ < q.blocks_) return false;
  std::array<std::uint8_t, kMaxElements> image;
  std::memset(image.data(), 0xff, p.blocks_);
  for (std::size_t i = 0; i < p.n_; ++i) {
    auto& slot = image[p.rgs_[i]];
    if (slot == 0xff)
      slot = q.rgs_[i];
    else if (slot != q.rgs_[i])
      return false;
  }
  return true;
}

inline Partition operator*(const Partition& p, const Partition& q) { return meet(p, q); }
inline Partition operator+(const Partition& p, const Partition& q) { return join(p, q); }

// The partition whose only nonsingleton block is {u, v}.
inline Partition atom(std::size_t n, std::size_t u, std::size_t v) {
  if (u == v) throw ArgumentError("atom needs two distinct elements");
  if (u >= n || v >= n) throw ArgumentError("atom element out of range");
  return Partition::from_blocks(n, {{static_cast<int>(u), static_cast<int>(v)}});
}

// Index of equ(u, v) among the n(n-1)/2 atoms.
inline std::size_t atom_index(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

inline std::pair<std::size_t, std::size_t> atom_pair(std::size_t index) {
  std::size_t v = 1;
  while ((v + 1) * v / 2 <= index) ++v;
  return {index - v * (v - 1) / 2, v};
}

// The partition with one block collecting the listed elements (repeats
// allowed); a single distinct element yields bottom.
inline Partition kequ(std::size_t n, std::initializer_list<int> elems) {
  std::vector<int> b;
  for (int x : elems)
    if (std::find(b.begin(), b.end(), x) == b.end()) b.push_back(x);
  return Partition::from_blocks(n, {b});
}

inline Partition kequ(std::size_t n, const std::vector<int>& elems) {
  std::vector<int> b;
  for (int x : elems)
    if (std::find(b.begin(), b.end(), x) == b.end()) b.push_back(x);
  return Partition::from_blocks(n, {b});
}

// Connected components of an edge set.
inline Partition graph_equivalence(std::size_t n, std::span<const std::pair<int, int>> edges) {
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw ArgumentError("edge endpoint out of range");
    int a = find(u), b = find(v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> lab(n);
  for (std::size_t i = 0; i < n; ++i) lab[i] = find(static_cast<int>(i));
  return Partition::from_labels(std::span<const int>(lab));
}

inline Partition graph_equivalence(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  return graph_equivalence(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept { return p.hash(); }
};

}  // namespace partlat

template <>
struct std::hash<partlat::Partition> {
  std::size_t operator()(const partlat::Partition& p) const noexcept { return p.hash(); }
};

#endif  // PARTLAT_PARTITION_HPP_
