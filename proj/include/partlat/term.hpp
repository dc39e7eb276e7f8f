// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_TERM_HPP_
#define PARTLAT_TERM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "partlat/errors.hpp"
#include "partlat/lattice.hpp"

namespace partlat {

using TermId = std::uint32_t;

enum class TermOp : std::uint8_t { var, meet, join };

struct TermNode {
  TermOp op;
  std::uint32_t lhs;  // variable index for TermOp::var
  std::uint32_t rhs;
};

// Hash-consed lattice terms. Nodes are append-only and children always have
// smaller ids than their parents, so a term is a DAG in topological order.
class TermArena {
 public:
  TermId var(unsigned index) { return intern(TermNode{TermOp::var, index, 0}); }
  TermId meet(TermId a, TermId b) { return binary(TermOp::meet, a, b); }
  TermId join(TermId a, TermId b) { return binary(TermOp::join, a, b); }

  // Left-nested folds: ((t0 op t1) op t2) ...
  TermId meet(std::initializer_list<TermId> ts) { return fold(TermOp::meet, ts); }
  TermId join(std::initializer_list<TermId> ts) { return fold(TermOp::join, ts); }
  TermId join(std::span<const TermId> ts) { return fold(TermOp::join, ts); }

  const TermNode& node(TermId t) const { return nodes_.at(t); }
  std::size_t size() const noexcept { return nodes_.size(); }

  // Distinct nodes reachable from t.
  std::size_t dag_size(TermId t) const {
    std::vector<std::uint8_t> seen(t + 1, 0);
    seen[t] = 1;
    std::size_t c = 0;
    for (TermId i = t + 1; i-- > 0;) {
      if (!seen[i]) continue;
      ++c;
      const auto& n = nodes_[i];
      if (n.op != TermOp::var) seen[n.lhs] = seen[n.rhs] = 1;
    }
    return c;
  }

  std::size_t depth(TermId t) const {
    std::vector<std::uint32_t> d(t + 1, 0);
    for (TermId i = 0; i <= t; ++i) {
      const auto& n = nodes_[i];
      if (n.op != TermOp::var) d[i] = 1 + std::max(d[n.lhs], d[n.rhs]);
    }
    return d[t];
  }

  // Fully parenthesized infix form; throws when the expansion exceeds limit.
  std::string to_string(TermId t, std::span<const std::string> names = default_names(),
                        std::size_t limit = 1 << 16) const {
    std::string out;
    write(t, names, out, limit);
    return out;
  }

  static std::span<const std::string> default_names() {
    static const std::array<std::string, 4> names{"a", "b", "c", "d"};
    return names;
  }

 private:
  TermId binary(TermOp op, TermId a, TermId b) {
    if (a >= nodes_.size() || b >= nodes_.size()) throw ArgumentError("unknown term id");
    return intern(TermNode{op, a, b});
  }

  template <class Range>
  TermId fold(TermOp op, const Range& ts) {
    if (std::size(ts) == 0) throw ArgumentError("empty fold");
    auto it = std::begin(ts);
    TermId acc = *it++;
    for (; it != std::end(ts); ++it) acc = binary(op, acc, *it);
    return acc;
  }

  TermId intern(const TermNode& n) {
    std::uint64_t key = (std::uint64_t{static_cast<std::uint8_t>(n.op)} << 62) |
                        (std::uint64_t{n.lhs} << 31) | n.rhs;
    auto [it, fresh] = index_.try_emplace(key, static_cast<TermId>(nodes_.size()));
    if (fresh) nodes_.push_back(n);
    return it->second;
  }

  void write(TermId t, std::span<const std::string> names, std::string& out, std::size_t limit) const {
    if (out.size() > limit) throw CapacityError("term too large to print", out.size());
    const auto& n = nodes_.at(t);
    if (n.op == TermOp::var) {
      out += n.lhs < names.size() ? names[n.lhs] : "x" + std::to_string(n.lhs);
      return;
    }
    out += '(';
    write(n.lhs, names, out, limit);
    out += n.op == TermOp::meet ? '*' : '+';
    write(n.rhs, names, out, limit);
    out += ')';
  }

  std::vector<TermNode> nodes_;
  std::unordered_map<std::uint64_t, TermId> index_;
};

// Evaluates terms of one arena at a fixed assignment, caching every subterm.
template <FiniteLattice L>
class TermEvaluator {
 public:
  using E = typename L::element_type;

  TermEvaluator(const TermArena& arena, const L& ctx, std::vector<E> vars)
      : arena_(&arena), ctx_(&ctx), vars_(std::move(vars)) {}

  const E& value(TermId t) {
    if (values_.size() < arena_->size()) values_.resize(arena_->size());
    if (values_.at(t)) return *values_[t];
    stack_.clear();
    stack_.push_back(t);
    while (!stack_.empty()) {
      TermId x = stack_.back();
      if (values_[x]) {
        stack_.pop_back();
        continue;
      }
      const auto& n = arena_->node(x);
      if (n.op == TermOp::var) {
        if (n.lhs >= vars_.size()) throw ArgumentError("term uses an unassigned variable");
        values_[x] = vars_[n.lhs];
        stack_.pop_back();
        continue;
      }
      bool ready = true;
      if (!values_[n.lhs]) stack_.push_back(n.lhs), ready = false;
      if (!values_[n.rhs]) stack_.push_back(n.rhs), ready = false;
      if (!ready) continue;
      values_[x] = n.op == TermOp::meet ? ctx_->meet(*values_[n.lhs], *values_[n.rhs])
                                        : ctx_->join(*values_[n.lhs], *values_[n.rhs]);
      stack_.pop_back();
    }
    return *values_[t];
  }

  const std::vector<E>& assignment() const noexcept { return vars_; }

 private:
  const TermArena* arena_;
  const L* ctx_;
  std::vector<E> vars_;
  std::vector<std::optional<E>> values_;
  std::vector<TermId> stack_;
};

template <FiniteLattice L>
typename L::element_type evaluate(const TermArena& arena, TermId t,
                                  std::vector<typename L::element_type> vars, const L& ctx) {
  TermEvaluator<L> ev(arena, ctx, std::move(vars));
  return ev.value(t);
}

// The meet of the two arc-joins around a circle d_0..d_{len-1}:
// (N_i + ... + N_{j-1}) * (N_j + ... + N_{len-1} + N_0 + ... + N_{i-1}),
// where neighbor[l] is a term for the pair (d_l, d_{l+1 mod len}).
inline TermId circle_term(TermArena& arena, std::span<const TermId> neighbor, std::size_t i, std::size_t j) {
  const std::size_t len = neighbor.size();
  if (len < 2 || !(i < j && j < len)) throw ArgumentError("circle term needs 0 <= i < j < length");
  std::vector<TermId> inner(neighbor.begin() + i, neighbor.begin() + j);
  std::vector<TermId> outer(neighbor.begin() + j, neighbor.end());
  outer.insert(outer.end(), neighbor.begin(), neighbor.begin() + i);
  return arena.meet(arena.join(std::span<const TermId>(inner)), arena.join(std::span<const TermId>(outer)));
}

}  // namespace partlat

#endif  // PARTLAT_TERM_HPP_
