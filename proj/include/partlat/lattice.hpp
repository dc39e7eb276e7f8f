// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_LATTICE_HPP_
#define PARTLAT_LATTICE_HPP_

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "partlat/bigint.hpp"
#include "partlat/enumerate.hpp"
#include "partlat/partition.hpp"

namespace partlat {

// What closure and term evaluation need from a finite atomistic lattice.
template <class L>
concept FiniteLattice = requires(const L& l, const typename L::element_type& a) {
  { l.meet(a, a) } -> std::convertible_to<typename L::element_type>;
  { l.join(a, a) } -> std::convertible_to<typename L::element_type>;
  { l.leq(a, a) } -> std::convertible_to<bool>;
  { l.bottom() } -> std::convertible_to<typename L::element_type>;
  { l.top() } -> std::convertible_to<typename L::element_type>;
  { l.size() } -> std::convertible_to<BigInt>;
  { l.atom_count() } -> std::convertible_to<std::size_t>;
  { l.atom_id(a) } -> std::convertible_to<std::ptrdiff_t>;
  { l.hash(a) } -> std::convertible_to<std::size_t>;
};

// Lattices whose elements map injectively into [0, index_bound()).
template <class L>
concept DenseLattice = FiniteLattice<L> && requires(const L& l, const typename L::element_type& a) {
  { l.index(a) } -> std::convertible_to<std::uint64_t>;
  { l.index_bound() } -> std::convertible_to<std::uint64_t>;
};

// Equ(n) with direct partition arithmetic.
class EquivalenceLattice {
 public:
  using element_type = Partition;

  explicit EquivalenceLattice(std::size_t n) : n_(n) {
    if (n > kMaxElements) throw CapacityError("ground set too large");
  }

  std::size_t n() const noexcept { return n_; }
  Partition meet(const Partition& a, const Partition& b) const { return partlat::meet(a, b); }
  Partition join(const Partition& a, const Partition& b) const { return partlat::join(a, b); }
  bool leq(const Partition& a, const Partition& b) const { return partlat::leq(a, b); }
  Partition bottom() const { return Partition::bottom(n_); }
  Partition top() const { return Partition::top(n_); }
  BigInt size() const { return bell(static_cast<unsigned>(n_)); }
  std::size_t atom_count() const noexcept { return n_ * (n_ - 1) / 2; }
  std::size_t hash(const Partition& a) const noexcept { return a.hash(); }

  std::ptrdiff_t atom_id(const Partition& a) const {
    if (a.size() < 2 || a.block_count() + 1 != a.size()) return -1;
    // Exactly one block of size two; find its members.
    std::array<int, kMaxElements> first;
    first.fill(-1);
    for (std::size_t i = 0; i < n_; ++i) {
      auto b = a.block_of(i);
      if (first[b] >= 0) return static_cast<std::ptrdiff_t>(atom_index(first[b], i));
      first[b] = static_cast<int>(i);
    }
    return -1;
  }

  std::vector<Partition> atoms() const {
    std::vector<Partition> out;
    for (std::size_t v = 1; v < n_; ++v)
      for (std::size_t u = 0; u < v; ++u) out.push_back(atom(n_, u, v));
    return out;
  }

  bool contains(const Partition& a) const { return a.size() == n_; }

 private:
  std::size_t n_;
};

// Equ(n) with elements represented by rank and precomputed operation tables.
class RankedEquivalenceLattice {
 public:
  using element_type = std::uint32_t;
  static constexpr std::size_t kMaxN = 8;

  explicit RankedEquivalenceLattice(std::size_t n) : n_(n), ranker_(n) {
    if (n > kMaxN) throw CapacityError("ranked tables support n <= 8");
    elems_ = enumerate_partitions(n);
    size_ = elems_.size();
    meet_.resize(size_ * size_);
    join_.resize(size_ * size_);
    for (std::size_t a = 0; a < size_; ++a) {
      for (std::size_t b = a; b < size_; ++b) {
        auto m = static_cast<std::uint16_t>(ranker_.rank(partlat::meet(elems_[a], elems_[b])));
        auto j = static_cast<std::uint16_t>(ranker_.rank(partlat::join(elems_[a], elems_[b])));
        meet_[a * size_ + b] = meet_[b * size_ + a] = m;
        join_[a * size_ + b] = join_[b * size_ + a] = j;
      }
    }
    atom_id_.assign(size_, -1);
    EquivalenceLattice direct(n);
    for (std::size_t a = 0; a < size_; ++a)
      atom_id_[a] = static_cast<std::int32_t>(direct.atom_id(elems_[a]));
  }

  std::size_t n() const noexcept { return n_; }
  element_type meet(element_type a, element_type b) const noexcept { return meet_[a * size_ + b]; }
  element_type join(element_type a, element_type b) const noexcept { return join_[a * size_ + b]; }
  bool leq(element_type a, element_type b) const noexcept { return join_[a * size_ + b] == b; }
  element_type bottom() const noexcept { return 0; }
  element_type top() const noexcept { return static_cast<element_type>(size_ - 1); }
  BigInt size() const { return BigInt(size_); }
  std::size_t count() const noexcept { return size_; }
  std::size_t atom_count() const noexcept { return n_ * (n_ - 1) / 2; }
  std::ptrdiff_t atom_id(element_type a) const noexcept { return atom_id_[a]; }
  std::size_t hash(element_type a) const noexcept { return a; }
  std::uint64_t index(element_type a) const noexcept { return a; }
  std::uint64_t index_bound() const noexcept { return size_; }

  const Partition& partition(element_type a) const { return elems_.at(a); }
  element_type rank(const Partition& p) const { return static_cast<element_type>(ranker_.rank(p)); }
  const PartitionRanker& ranker() const noexcept { return ranker_; }

  std::vector<element_type> atoms() const {
    std::vector<element_type> out(atom_count());
    for (std::size_t a = 0; a < size_; ++a)
      if (atom_id_[a] >= 0) out[atom_id_[a]] = static_cast<element_type>(a);
    return out;
  }

 private:
  std::size_t n_;
  PartitionRanker ranker_;
  std::size_t size_ = 0;
  std::vector<Partition> elems_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
  std::vector<std::int32_t> atom_id_;
};

// Shared, lazily built table lattices (building Equ(8) takes about a second).
inline std::shared_ptr<const RankedEquivalenceLattice> ranked_equivalence(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const RankedEquivalenceLattice>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const RankedEquivalenceLattice>(n);
  return slot;
}

// A lattice given by an explicit list of partitions that is closed under
// meet and join (for example a computed sublattice).
class ExplicitLattice {
 public:
  using element_type = std::uint32_t;

  explicit ExplicitLattice(std::vector<Partition> elems) : elems_(std::move(elems)) {
    if (elems_.empty()) throw ArgumentError("explicit lattice needs elements");
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i].size() != elems_[0].size()) throw DimensionError("mixed ground sets");
      if (!index_.emplace(elems_[i], static_cast<element_type>(i)).second)
        throw ArgumentError("duplicate element in explicit lattice");
    }
    element_type b = 0, t = 0;
    for (element_type i = 1; i < elems_.size(); ++i) {
      b = lookup(partlat::meet(elems_[b], elems_[i]));
      t = lookup(partlat::join(elems_[t], elems_[i]));
    }
    bottom_ = b;
    top_ = t;
    atom_id_.assign(elems_.size(), -1);
    for (element_type i = 0; i < elems_.size(); ++i) {
      if (i == bottom_) continue;
      bool cover = true;
      for (element_type j = 0; j < elems_.size() && cover; ++j)
        if (j != i && j != bottom_ && partlat::leq(elems_[j], elems_[i])) cover = false;
      if (cover) atom_id_[i] = static_cast<std::int32_t>(atoms_.size()), atoms_.push_back(i);
    }
  }

  element_type meet(element_type a, element_type b) const {
    return lookup(partlat::meet(elems_[a], elems_[b]));
  }
  element_type join(element_type a, element_type b) const {
    return lookup(partlat::join(elems_[a], elems_[b]));
  }
  bool leq(element_type a, element_type b) const { return partlat::leq(elems_[a], elems_[b]); }
  element_type bottom() const noexcept { return bottom_; }
  element_type top() const noexcept { return top_; }
  BigInt size() const { return BigInt(elems_.size()); }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  std::ptrdiff_t atom_id(element_type a) const noexcept { return atom_id_[a]; }
  std::size_t hash(element_type a) const noexcept { return a; }
  std::uint64_t index(element_type a) const noexcept { return a; }
  std::uint64_t index_bound() const noexcept { return elems_.size(); }
  const std::vector<element_type>& atoms() const noexcept { return atoms_; }
  const Partition& partition(element_type a) const { return elems_.at(a); }

  element_type lookup(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw ArgumentError("result leaves the explicit lattice");
    return it->second;
  }

 private:
  std::vector<Partition> elems_;
  std::unordered_map<Partition, element_type, PartitionHash> index_;
  element_type bottom_ = 0, top_ = 0;
  std::vector<std::int32_t> atom_id_;
  std::vector<element_type> atoms_;
};

// Direct product with componentwise operations.
template <FiniteLattice C>
class ProductLattice {
 public:
  using factor_element = typename C::element_type;
  using element_type = std::vector<factor_element>;

  explicit ProductLattice(std::vector<C> factors) : factors_(std::move(factors)) {
    std::size_t off = 0;
    for (const auto& f : factors_) {
      atom_offset_.push_back(off);
      off += f.atom_count();
    }
    atom_count_ = off;
  }

  std::size_t arity() const noexcept { return factors_.size(); }
  const C& factor(std::size_t i) const { return factors_.at(i); }

  element_type meet(const element_type& a, const element_type& b) const {
    element_type r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = factors_[i].meet(a[i], b[i]);
    return r;
  }
  element_type join(const element_type& a, const element_type& b) const {
    element_type r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = factors_[i].join(a[i], b[i]);
    return r;
  }
  bool leq(const element_type& a, const element_type& b) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i].leq(a[i], b[i])) return false;
    return true;
  }
  element_type bottom() const {
    element_type r;
    for (const auto& f : factors_) r.push_back(f.bottom());
    return r;
  }
  element_type top() const {
    element_type r;
    for (const auto& f : factors_) r.push_back(f.top());
    return r;
  }
  BigInt size() const {
    BigInt s = 1;
    for (const auto& f : factors_) s *= f.size();
    return s;
  }
  std::size_t atom_count() const noexcept { return atom_count_; }

  // An atom of a product is an atom in one coordinate and bottom elsewhere.
  std::ptrdiff_t atom_id(const element_type& a) const {
    std::ptrdiff_t id = -1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (a[i] == factors_[i].bottom()) continue;
      if (id != -1) return -1;
      auto local = factors_[i].atom_id(a[i]);
      if (local < 0) return -1;
      id = static_cast<std::ptrdiff_t>(atom_offset_[i]) + local;
    }
    return id;
  }

  std::size_t hash(const element_type& a) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      h ^= factors_[i].hash(a[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  // The element that is x in coordinate i and bottom elsewhere.
  element_type inject(std::size_t i, const factor_element& x) const {
    element_type r = bottom();
    r.at(i) = x;
    return r;
  }

 private:
  std::vector<C> factors_;
  std::vector<std::size_t> atom_offset_;
  std::size_t atom_count_ = 0;
};

// Product of ranked partition lattices with elements packed into one word,
// so that membership can use a dense bitset.
class PackedProductLattice {
 public:
  using element_type = std::uint64_t;

  explicit PackedProductLattice(std::vector<std::shared_ptr<const RankedEquivalenceLattice>> factors)
      : factors_(std::move(factors)) {
    unsigned shift = 0;
    std::size_t off = 0;
    for (const auto& f : factors_) {
      unsigned bits = 1;
      while ((std::size_t{1} << bits) < f->count()) ++bits;
      shift_.push_back(shift);
      mask_.push_back((std::uint64_t{1} << bits) - 1);
      shift += bits;
      atom_offset_.push_back(off);
      off += f->atom_count();
    }
    if (shift > 40) throw CapacityError("packed product needs more than 40 bits");
    bits_ = shift;
    atom_count_ = off;
  }

  std::size_t arity() const noexcept { return factors_.size(); }
  const RankedEquivalenceLattice& factor(std::size_t i) const { return *factors_.at(i); }

  std::uint32_t component(element_type a, std::size_t i) const noexcept {
    return static_cast<std::uint32_t>((a >> shift_[i]) & mask_[i]);
  }

  element_type pack(const std::vector<std::uint32_t>& parts) const {
    element_type r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      r |= static_cast<element_type>(parts.at(i)) << shift_[i];
    return r;
  }

  element_type pack_partitions(const std::vector<Partition>& parts) const {
    element_type r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      r |= static_cast<element_type>(factors_[i]->rank(parts.at(i))) << shift_[i];
    return r;
  }

  std::vector<Partition> unpack(element_type a) const {
    std::vector<Partition> out;
    for (std::size_t i = 0; i < factors_.size(); ++i) out.push_back(factors_[i]->partition(component(a, i)));
    return out;
  }

  element_type meet(element_type a, element_type b) const noexcept {
    element_type r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      r |= static_cast<element_type>(factors_[i]->meet(component(a, i), component(b, i))) << shift_[i];
    return r;
  }
  element_type join(element_type a, element_type b) const noexcept {
    element_type r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      r |= static_cast<element_type>(factors_[i]->join(component(a, i), component(b, i))) << shift_[i];
    return r;
  }
  bool leq(element_type a, element_type b) const noexcept {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->leq(component(a, i), component(b, i))) return false;
    return true;
  }
  element_type bottom() const noexcept { return 0; }
  element_type top() const noexcept {
    element_type r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      r |= static_cast<element_type>(factors_[i]->top()) << shift_[i];
    return r;
  }
  BigInt size() const {
    BigInt s = 1;
    for (const auto& f : factors_) s *= f->count();
    return s;
  }
  std::size_t atom_count() const noexcept { return atom_count_; }
  std::ptrdiff_t atom_id(element_type a) const noexcept {
    std::ptrdiff_t id = -1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      auto c = component(a, i);
      if (c == 0) continue;
      if (id != -1) return -1;
      auto local = factors_[i]->atom_id(c);
      if (local < 0) return -1;
      id = static_cast<std::ptrdiff_t>(atom_offset_[i]) + local;
    }
    return id;
  }
  std::size_t hash(element_type a) const noexcept { return static_cast<std::size_t>(a); }
  std::uint64_t index(element_type a) const noexcept { return a; }
  std::uint64_t index_bound() const noexcept { return std::uint64_t{1} << bits_; }

 private:
  std::vector<std::shared_ptr<const RankedEquivalenceLattice>> factors_;
  std::vector<unsigned> shift_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::size_t> atom_offset_;
  unsigned bits_ = 0;
  std::size_t atom_count_ = 0;
};

}  // namespace partlat

#endif  // PARTLAT_LATTICE_HPP_
