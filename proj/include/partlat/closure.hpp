// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_CLOSURE_HPP_
#define PARTLAT_CLOSURE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "partlat/errors.hpp"
#include "partlat/lattice.hpp"

namespace partlat {

struct ClosureOptions {
  bool early_exit_on_atoms = false;
  std::optional<std::size_t> max_elements;
  bool record_witness_terms = false;
};

// How an element entered the closure: a generator, or op applied to two
// earlier elements (indices into Closure::elements).
struct Derivation {
  char op = 'g';  // 'g', '*' (meet) or '+' (join)
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;
};

template <class E>
struct Closure {
  std::vector<E> elements;
  // True when the fixpoint was reached; false after an early exit.
  bool complete = true;
  // Every atom (and bottom) was reached, so the closure is the whole lattice.
  bool all_atoms = false;
  std::vector<Derivation> witnesses;
};

namespace detail {

template <FiniteLattice L>
class Membership {
 public:
  using E = typename L::element_type;

  explicit Membership(const L& ctx) {
    if constexpr (DenseLattice<L>) bits_.assign((ctx.index_bound() + 63) / 64, 0);
  }

  // Returns true if e was not present.
  bool insert(const L& ctx, const E& e) {
    if constexpr (DenseLattice<L>) {
      std::uint64_t i = ctx.index(e);
      std::uint64_t m = std::uint64_t{1} << (i & 63);
      if (bits_[i >> 6] & m) return false;
      bits_[i >> 6] |= m;
      return true;
    } else {
      return set_.insert(Key{&ctx, e}).second;
    }
  }

  bool contains(const L& ctx, const E& e) const {
    if constexpr (DenseLattice<L>) {
      std::uint64_t i = ctx.index(e);
      return (bits_[i >> 6] >> (i & 63)) & 1;
    } else {
      return set_.count(Key{&ctx, e}) != 0;
    }
  }

  // Forget the listed elements (cheaper than clearing a large bitset).
  void erase_all(const L& ctx, std::span<const E> elems) {
    if constexpr (DenseLattice<L>) {
      for (const auto& e : elems) {
        std::uint64_t i = ctx.index(e);
        bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
      }
    } else {
      set_.clear();
    }
  }

 private:
  struct Key {
    const L* ctx;
    E value;
    bool operator==(const Key& o) const { return value == o.value; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.ctx->hash(k.value); }
  };
  std::vector<std::uint64_t> bits_;
  std::unordered_set<Key, KeyHash> set_;
};

}  // namespace detail

// Reusable buffers so that millions of small closures avoid reallocation.
template <FiniteLattice L>
class ClosureWorkspace {
 public:
  using E = typename L::element_type;

  explicit ClosureWorkspace(const L& ctx)
      : ctx_(&ctx), members_(ctx), atom_bits_((ctx.atom_count() + 63) / 64, 0) {}

  const Closure<E>& run(std::span<const E> generators, const ClosureOptions& opts) {
    const L& ctx = *ctx_;
    reset();
    const E bot = ctx.bottom();
    const std::size_t atoms = ctx.atom_count();
    bool have_bottom = false;
    auto saturated = [&] {
      return opts.early_exit_on_atoms && atoms > 0 && atoms_seen_ == atoms && (atoms >= 2 || have_bottom);
    };
    auto add = [&](const E& e, Derivation d) {
      if (!members_.insert(ctx, e)) return;
      out_.elements.push_back(e);
      if (opts.record_witness_terms) out_.witnesses.push_back(d);
      if (opts.max_elements && out_.elements.size() > *opts.max_elements)
        throw CapacityError("closure exceeded " + std::to_string(*opts.max_elements) + " elements",
                            out_.elements.size());
      if (e == bot) have_bottom = true;
      if (opts.early_exit_on_atoms) {
        auto id = ctx.atom_id(e);
        if (id >= 0) {
          auto& w = atom_bits_[static_cast<std::size_t>(id) >> 6];
          std::uint64_t m = std::uint64_t{1} << (id & 63);
          if (!(w & m)) {
            w |= m;
            ++atoms_seen_;
          }
        }
      }
    };
    for (const auto& g : generators) add(g, Derivation{});
    if (saturated()) return finish_early();
    for (std::size_t i = 0; i < out_.elements.size(); ++i) {
      const E x = out_.elements[i];
      for (std::size_t j = 0; j < i; ++j) {
        add(ctx.meet(x, out_.elements[j]),
            Derivation{'*', static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
        add(ctx.join(x, out_.elements[j]),
            Derivation{'+', static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
        if (saturated()) return finish_early();
      }
    }
    out_.complete = true;
    out_.all_atoms = BigInt(out_.elements.size()) == ctx.size();
    return out_;
  }

 private:
  void reset() {
    members_.erase_all(*ctx_, std::span<const E>(out_.elements));
    for (auto& w : atom_bits_) w = 0;
    atoms_seen_ = 0;
    out_.elements.clear();
    out_.witnesses.clear();
    out_.complete = true;
    out_.all_atoms = false;
  }

  const Closure<E>& finish_early() {
    out_.complete = false;
    out_.all_atoms = true;
    return out_;
  }

  const L* ctx_;
  detail::Membership<L> members_;
  std::vector<std::uint64_t> atom_bits_;
  std::size_t atoms_seen_ = 0;
  Closure<E> out_;
};

// The sublattice generated by the given elements.
template <FiniteLattice L>
Closure<typename L::element_type> close(std::span<const typename L::element_type> generators,
                                        const L& ctx, const ClosureOptions& opts = {}) {
  ClosureWorkspace<L> ws(ctx);
  return ws.run(generators, opts);
}

template <FiniteLattice L>
Closure<typename L::element_type> close(const std::vector<typename L::element_type>& generators,
                                        const L& ctx, const ClosureOptions& opts = {}) {
  return close(std::span<const typename L::element_type>(generators), ctx, opts);
}

template <FiniteLattice L>
bool generates(std::span<const typename L::element_type> generators, const L& ctx,
               bool early_exit = true) {
  ClosureOptions opts;
  opts.early_exit_on_atoms = early_exit;
  return close(generators, ctx, opts).all_atoms;
}

template <FiniteLattice L>
bool generates(const std::vector<typename L::element_type>& generators, const L& ctx,
               bool early_exit = true) {
  return generates(std::span<const typename L::element_type>(generators), ctx, early_exit);
}

enum class OrderType { antichain, one_one_two, other };

inline const char* to_string(OrderType t) {
  switch (t) {
    case OrderType::antichain:
      return "antichain";
    case OrderType::one_one_two:
      return "1+1+2";
    default:
      return "other";
  }
}

template <FiniteLattice L>
std::size_t comparable_pairs(std::span<const typename L::element_type> elems, const L& ctx) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (elems[i] == elems[j]) throw ArgumentError("order_type needs distinct elements");
      if (ctx.leq(elems[i], elems[j]) || ctx.leq(elems[j], elems[i])) ++c;
    }
  return c;
}

template <FiniteLattice L>
OrderType order_type(std::span<const typename L::element_type> quad, const L& ctx) {
  if (quad.size() != 4) throw ArgumentError("order_type expects four elements");
  auto c = comparable_pairs(quad, ctx);
  if (c == 0) return OrderType::antichain;
  if (c == 1) return OrderType::one_one_two;
  return OrderType::other;
}

template <FiniteLattice L>
OrderType order_type(const std::vector<typename L::element_type>& quad, const L& ctx) {
  return order_type(std::span<const typename L::element_type>(quad), ctx);
}

}  // namespace partlat

#endif  // PARTLAT_CLOSURE_HPP_
