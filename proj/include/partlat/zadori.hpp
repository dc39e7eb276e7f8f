// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_ZADORI_HPP_
#define PARTLAT_ZADORI_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "partlat/bigint.hpp"
#include "partlat/bitvector.hpp"
#include "partlat/closure.hpp"
#include "partlat/enumerate.hpp"
#include "partlat/errors.hpp"
#include "partlat/lattice.hpp"
#include "partlat/partition.hpp"
#include "partlat/term.hpp"

namespace partlat {

// (m, s, t, z): odd length m, necktie (s, t) with (1, 1) meaning trivial,
// and a pin vector z of dimension m.
struct IdQuadruple {
  int m = 1;
  int s = 1;
  int t = 1;
  BitVector z = BitVector::zeros(1);

  int k() const noexcept { return (m + 3) / 2; }
  bool trivial_necktie() const noexcept { return s == 1 && t == 1; }
  int n() const noexcept { return trivial_necktie() ? m + 4 : m + 5; }
  IdQuadruple necktie_free() const { return IdQuadruple{m, 1, 1, z}; }

  void validate() const {
    if (m < 1 || m % 2 == 0) throw ArgumentError("id-quadruple length must be odd and positive");
    if (z.dim() != static_cast<std::size_t>(m))
      throw ArgumentError("pin vector dimension " + std::to_string(z.dim()) + " differs from m=" +
                          std::to_string(m));
    if (!trivial_necktie() && !(0 <= s && s < t && t <= k() - 1))
      throw ArgumentError("necktie must be (1,1) or satisfy 0 <= s < t <= k-1");
    if (n() > static_cast<int>(kMaxElements)) throw CapacityError("configuration exceeds 64 elements");
  }

  std::string to_string() const {
    return std::to_string(m) + ":" + std::to_string(s) + ":" + std::to_string(t) + ":" + z.to_string();
  }

  static IdQuadruple parse(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
      if (ch == ':') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw ArgumentError("id-quadruple must look like m:s:t:bits");
    IdQuadruple q;
    try {
      q.m = std::stoi(parts[0]);
      q.s = std::stoi(parts[1]);
      q.t = std::stoi(parts[2]);
    } catch (const std::exception&) {
      throw ArgumentError("id-quadruple fields m, s, t must be integers");
    }
    q.z = BitVector::parse(parts[3]);
    q.validate();
    return q;
  }

  friend bool operator==(const IdQuadruple&, const IdQuadruple&) = default;
  friend auto operator<=>(const IdQuadruple& a, const IdQuadruple& b) {
    return std::tie(a.m, a.s, a.t, a.z) <=> std::tie(b.m, b.s, b.t, b.z);
  }
};

// Every pin vector and necktie for one odd length m.
inline std::vector<IdQuadruple> all_id_quadruples(int m) {
  IdQuadruple base{m, 1, 1, BitVector::zeros(static_cast<std::size_t>(m))};
  base.validate();
  std::vector<std::pair<int, int>> ties{{1, 1}};
  for (int t = 1; t < base.k(); ++t)
    for (int s = 0; s < t; ++s) ties.emplace_back(s, t);
  std::vector<IdQuadruple> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
    for (auto [s, t] : ties) out.push_back(IdQuadruple{m, s, t, BitVector::from_mask(mask, m)});
  return out;
}

// The labelled ground set a_0..a_k, b_0..b_{k-1}, c with a_i -> i,
// b_i -> k+1+i and c -> 2k+1 (c coincides with b_1 for the trivial necktie).
struct ZConfig {
  IdQuadruple phi;
  int k = 0;
  int n = 0;
  Partition alpha, beta, gamma, delta;
  std::vector<std::pair<int, int>> edges;  // I_0 .. I_{m+1}

  int a(int i) const {
    if (i < 0 || i > k) throw ArgumentError("a index out of range");
    return i;
  }
  int b(int i) const {
    if (i < 0 || i > k - 1) throw ArgumentError("b index out of range");
    return k + 1 + i;
  }
  int c() const { return phi.trivial_necktie() ? b(1) : 2 * k + 1; }

  std::string label(int x) const {
    if (x < 0 || x >= n) throw ArgumentError("element out of range");
    if (x <= k) return "a" + std::to_string(x);
    if (x <= 2 * k) return "b" + std::to_string(x - k - 1);
    return "c";
  }
  int element(std::string_view lab) const {
    if (lab == "c") return c();
    if (lab.size() < 2 || (lab[0] != 'a' && lab[0] != 'b')) throw ArgumentError("unknown label");
    int i = 0;
    for (char ch : lab.substr(1)) {
      if (ch < '0' || ch > '9') throw ArgumentError("unknown label");
      i = i * 10 + (ch - '0');
    }
    return lab[0] == 'a' ? a(i) : b(i);
  }

  std::vector<Partition> mu() const { return {alpha, beta, gamma, delta}; }
  Partition edge_atom(int j) const {
    const auto& e = edges.at(static_cast<std::size_t>(j));
    return atom(n, e.first, e.second);
  }
  // equ(I_0) + ... + equ(I_u)
  Partition edge_prefix(int u) const {
    std::vector<std::pair<int, int>> es(edges.begin(), edges.begin() + u + 1);
    return graph_equivalence(n, std::span<const std::pair<int, int>>(es));
  }
};

inline ZConfig build_configuration(const IdQuadruple& phi) {
  phi.validate();
  ZConfig z;
  z.phi = phi;
  z.k = phi.k();
  z.n = phi.n();
  const int k = z.k;
  for (int j = 0; j < k; ++j) {
    z.edges.emplace_back(z.a(j), z.a(j + 1));
    if (j + 1 < k) z.edges.emplace_back(z.b(j), z.b(j + 1));
  }

  std::vector<std::pair<int, int>> al, be, ga, de;
  for (int i = 0; i < k; ++i) al.emplace_back(z.a(i), z.a(i + 1));
  for (int i = 0; i + 1 < k; ++i) al.emplace_back(z.b(i), z.b(i + 1));
  be.emplace_back(z.b(phi.s), z.c());
  ga.emplace_back(z.b(phi.t), z.c());
  for (int i = 0; i < k; ++i) {
    be.emplace_back(z.a(i), z.b(i));
    ga.emplace_back(z.a(i + 1), z.b(i));
  }
  de.emplace_back(z.a(0), z.b(0));
  de.emplace_back(z.a(k), z.b(k - 1));
  for (int i = 1; i <= phi.m; ++i)
    if (phi.z.at(static_cast<std::size_t>(i))) de.push_back(z.edges[static_cast<std::size_t>(i)]);
  auto eq = [&](const std::vector<std::pair<int, int>>& es) {
    return graph_equivalence(static_cast<std::size_t>(z.n), std::span<const std::pair<int, int>>(es));
  };
  z.alpha = eq(al);
  z.beta = eq(be);
  z.gamma = eq(ga);
  z.delta = eq(de);
  return z;
}

struct ProjectionTerms {
  TermId beta_g, beta2, gamma2, alpha2, beta3, gamma3, delta3;
  std::array<TermId, 4> isolated() const { return {alpha2, beta3, gamma3, delta3}; }
};

// The quaternary terms attached to one id-quadruple. Terms are interned in a
// shared arena, so terms of several quadruples can share subterms.
class ZTermBuilder {
 public:
  enum Var : unsigned { kAlpha = 0, kBeta = 1, kGamma = 2, kDelta = 3 };

  explicit ZTermBuilder(IdQuadruple phi, std::shared_ptr<TermArena> arena = std::make_shared<TermArena>())
      : phi_(std::move(phi)), arena_(std::move(arena)) {
    phi_.validate();
    k_ = phi_.k();
  }

  const IdQuadruple& phi() const noexcept { return phi_; }
  TermArena& arena() noexcept { return *arena_; }
  const TermArena& arena() const noexcept { return *arena_; }
  std::shared_ptr<TermArena> shared_arena() const noexcept { return arena_; }

  TermId alpha() { return arena_->var(kAlpha); }
  TermId beta() { return arena_->var(kBeta); }
  TermId gamma() { return arena_->var(kGamma); }
  TermId delta() { return arena_->var(kDelta); }

  TermId beta_hat() { return arena_->meet(beta(), arena_->join(alpha(), delta())); }
  TermId gamma_hat() { return arena_->meet(gamma(), arena_->join(alpha(), delta())); }

  TermId f(int i) {
    if (i < 0 || i > phi_.m + 1) throw ArgumentError("f_i is defined for 0 <= i <= m+1");
    if (f_.empty()) f_.push_back(arena_->meet(alpha(), arena_->join(arena_->meet(beta_hat(), delta()), gamma_hat())));
    while (static_cast<int>(f_.size()) <= i) {
      const int j = static_cast<int>(f_.size()) - 1;  // building f_{j+1}
      TermId side = j % 2 == 0 ? beta_hat() : gamma_hat();
      TermId up = arena_->join(f_[static_cast<std::size_t>(j)], side);
      bool pin = j < phi_.m && phi_.z.at(static_cast<std::size_t>(j + 1));
      f_.push_back(pin ? arena_->meet(up, arena_->meet(alpha(), delta())) : arena_->meet(up, alpha()));
    }
    return f_[static_cast<std::size_t>(i)];
  }

  TermId h(int i) {
    if (i < 0) throw ArgumentError("h_i needs i >= 0");
    if (h_.empty()) h_.push_back(arena_->meet(alpha(), arena_->join(arena_->meet(gamma_hat(), delta()), beta_hat())));
    while (static_cast<int>(h_.size()) <= i) {
      const int j = static_cast<int>(h_.size()) - 1;
      TermId side = j % 2 == 0 ? gamma_hat() : beta_hat();
      h_.push_back(arena_->meet(arena_->join(h_[static_cast<std::size_t>(j)], side), alpha()));
    }
    return h_[static_cast<std::size_t>(i)];
  }

  TermId g(int j) {
    if (j < 0 || j > phi_.m + 1) throw ArgumentError("g_j is defined for 0 <= j <= m+1");
    return arena_->meet(f(j), h(phi_.m + 1 - j));
  }

  TermId side_left() { return arena_->meet(beta_hat(), delta()); }
  TermId side_right() { return arena_->meet(gamma_hat(), delta()); }

  TermId bottom_term() { return arena_->meet({alpha(), beta_hat(), gamma_hat(), delta()}); }

  // Element ids follow ZConfig's labelling of Z_phi.
  int a(int i) const { return i; }
  int b(int i) const { return k_ + 1 + i; }
  int c() const { return phi_.trivial_necktie() ? b(1) : 2 * k_ + 1; }
  int ground_size() const { return phi_.n(); }

  TermId e(int u, int v) {
    const int n = ground_size();
    if (u < 0 || v < 0 || u >= n || v >= n) throw ArgumentError("element not in the configuration");
    if (u == v) return bottom_term();
    if (u > v) std::swap(u, v);
    auto key = std::make_pair(u, v);
    if (auto it = e_.find(key); it != e_.end()) return it->second;
    TermId r;
    const int cc = 2 * k_ + 1;
    if (phi_.trivial_necktie() || (u != cc && v != cc)) {
      r = core_circle_term(u, v);
    } else {
      int w = u == cc ? v : u;
      if (w == a(phi_.s)) {
        r = arena_->meet(beta(), arena_->join(gamma(), e(a(phi_.s), a(phi_.t + 1))));
      } else if (w == a(phi_.t + 1)) {
        r = arena_->meet(gamma(), arena_->join(beta(), e(a(phi_.s), a(phi_.t + 1))));
      } else {
        r = necktie_circle_term(u, v);
      }
    }
    e_.emplace(key, r);
    return r;
  }

  TermId dot() {
    const int s = phi_.s, t = phi_.t;
    return arena_->meet(e(a(s), a(t + 1)), arena_->join(e(a(s), c()), e(a(t + 1), c())));
  }

  TermId key() {
    const int s = phi_.s, t = phi_.t, k = k_;
    TermId d = dot();
    TermId third = arena_->join({e(a(k - 1), a(s)), d, e(a(t + 1), a(k))});
    TermId fourth = arena_->join({e(a(k - 1), a(t + 1)), d, e(a(s), a(k))});
    return arena_->meet({f(phi_.m + 1), h(0), third, fourth});
  }

  ProjectionTerms projection() {
    ProjectionTerms p{};
    p.beta_g = arena_->meet(arena_->join(key(), arena_->meet(gamma(), delta())), beta_hat());
    p.beta2 = arena_->meet(beta_hat(), arena_->join(p.beta_g, alpha()));
    p.gamma2 = arena_->meet(gamma_hat(), arena_->join(p.beta_g, alpha()));
    p.alpha2 = arena_->meet(alpha(), arena_->join(p.beta2, p.gamma2));
    p.beta3 = arena_->meet(beta(), arena_->join(p.alpha2, gamma()));
    p.gamma3 = arena_->meet(gamma(), arena_->join(p.alpha2, beta()));
    p.delta3 = arena_->meet(delta(), arena_->join(p.beta3, p.gamma3));
    return p;
  }

  // a_0, ..., a_k, b_{k-1}, ..., b_0
  std::vector<int> core_circle() const {
    std::vector<int> d;
    for (int i = 0; i <= k_; ++i) d.push_back(a(i));
    for (int i = k_ - 1; i >= 0; --i) d.push_back(b(i));
    return d;
  }

  // a_0..a_s, c, a_{t+1}..a_k, b_{k-1}..b_t, a_t, b_{t-1}, ..., a_{s+1}, b_s, b_{s-1}..b_0
  std::vector<int> necktie_circle() const {
    if (phi_.trivial_necktie()) throw ArgumentError("trivial necktie has no extended circle");
    const int s = phi_.s, t = phi_.t;
    std::vector<int> d;
    for (int i = 0; i <= s; ++i) d.push_back(a(i));
    d.push_back(c());
    for (int i = t + 1; i <= k_; ++i) d.push_back(a(i));
    for (int i = k_ - 1; i >= t; --i) d.push_back(b(i));
    for (int x = t; x >= s + 1; --x) {
      d.push_back(a(x));
      d.push_back(b(x - 1));
    }
    for (int i = s - 1; i >= 0; --i) d.push_back(b(i));
    return d;
  }

 private:
  TermId core_circle_term(int u, int v) {
    if (core_neighbors_.empty()) {
      for (int i = 0; i < k_; ++i) core_neighbors_.push_back(g(2 * i));
      core_neighbors_.push_back(side_right());
      for (int j = k_ - 2; j >= 0; --j) core_neighbors_.push_back(g(2 * j + 1));
      core_neighbors_.push_back(side_left());
      core_pos_ = positions(core_circle());
    }
    auto [i, j] = ordered(core_pos_.at(u), core_pos_.at(v));
    return circle_term(*arena_, core_neighbors_, i, j);
  }

  TermId necktie_circle_term(int u, int v) {
    if (tie_neighbors_.empty()) {
      auto d = necktie_circle();
      for (std::size_t l = 0; l < d.size(); ++l) tie_neighbors_.push_back(e(d[l], d[(l + 1) % d.size()]));
      tie_pos_ = positions(d);
    }
    auto [i, j] = ordered(tie_pos_.at(u), tie_pos_.at(v));
    return circle_term(*arena_, tie_neighbors_, i, j);
  }

  static std::map<int, std::size_t> positions(const std::vector<int>& d) {
    std::map<int, std::size_t> pos;
    for (std::size_t l = 0; l < d.size(); ++l) pos[d[l]] = l;
    return pos;
  }
  static std::pair<std::size_t, std::size_t> ordered(std::size_t x, std::size_t y) {
    return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  }

  IdQuadruple phi_;
  std::shared_ptr<TermArena> arena_;
  int k_ = 0;
  std::vector<TermId> f_, h_;
  std::vector<TermId> core_neighbors_, tie_neighbors_;
  std::map<int, std::size_t> core_pos_, tie_pos_;
  std::map<std::pair<int, int>, TermId> e_;
};

using ZEvaluator = TermEvaluator<EquivalenceLattice>;

inline ZEvaluator make_evaluator(const ZTermBuilder& terms, const ZConfig& z, const EquivalenceLattice& ctx) {
  return ZEvaluator(terms.arena(), ctx, z.mu());
}

struct TermVerification {
  IdQuadruple phi;
  bool atoms_ok = true;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<int, int>> failures;
  std::optional<bool> closure_generates;  // set when the closure cross-check ran
  bool ok() const { return atoms_ok && closure_generates.value_or(true); }
};

// Every atom equ(u,v) of Equ(Z_phi) must be the value of e_{u,v}, and e_{u,u}
// must be bottom. With closure_limit >= n_phi the four generators are also
// closed directly.
inline TermVerification verify_generation_via_terms(const IdQuadruple& phi, int closure_limit = 0) {
  TermVerification out;
  out.phi = phi;
  ZConfig z = build_configuration(phi);
  ZTermBuilder terms(phi);
  for (int u = 0; u < z.n; ++u)
    for (int v = u; v < z.n; ++v) terms.e(u, v);
  EquivalenceLattice ctx(static_cast<std::size_t>(z.n));
  ZEvaluator ev(terms.arena(), ctx, z.mu());
  for (int u = 0; u < z.n; ++u) {
    for (int v = u; v < z.n; ++v) {
      ++out.pairs_checked;
      const Partition& got = ev.value(terms.e(u, v));
      bool ok = u == v ? got.is_bottom() : got == atom(static_cast<std::size_t>(z.n), u, v);
      if (!ok) {
        out.atoms_ok = false;
        out.failures.emplace_back(u, v);
      }
    }
  }
  if (z.n <= closure_limit) {
    if (z.n <= static_cast<int>(RankedEquivalenceLattice::kMaxN)) {
      auto lat = ranked_equivalence(static_cast<std::size_t>(z.n));
      std::vector<std::uint32_t> gens;
      for (const auto& p : z.mu()) gens.push_back(lat->rank(p));
      out.closure_generates = generates(gens, *lat);
    } else {
      out.closure_generates = generates(z.mu(), ctx);
    }
  }
  return out;
}

// f'_{m'+1}(mu_phi) >= equ(I_{m+1}), with f' built from phi_prime.
inline bool gets_through(const IdQuadruple& phi_prime, const IdQuadruple& phi) {
  ZConfig z = build_configuration(phi);
  ZTermBuilder terms(phi_prime);
  EquivalenceLattice ctx(static_cast<std::size_t>(z.n));
  Partition v = evaluate(terms.arena(), terms.f(phi_prime.m + 1), z.mu(), ctx);
  return leq(z.edge_atom(phi.m + 1), v);
}

// The least u <= m+1 with f'_j(mu_phi) <= equ(I_0) + ... + equ(I_u).
inline int effectiveness(const IdQuadruple& phi_prime, const IdQuadruple& phi, int j) {
  if (j < 0 || j > phi_prime.m + 1) throw ArgumentError("effectiveness needs 0 <= j <= m'+1");
  ZConfig z = build_configuration(phi);
  ZTermBuilder terms(phi_prime);
  EquivalenceLattice ctx(static_cast<std::size_t>(z.n));
  Partition v = evaluate(terms.arena(), terms.f(j), z.mu(), ctx);
  for (int u = 0; u <= phi.m + 1; ++u)
    if (leq(v, z.edge_prefix(u))) return u;
  throw IntegrityError("f'_" + std::to_string(j) + " escapes the zigzag of " + phi.to_string());
}

// ---------------------------------------------------------------------------
// Counting bound for four-element generating sets.

inline int width(int n) {
  if (n < 5) throw DomainError("width is defined for n >= 5");
  return (n - 1) / 2;
}

inline int length(int n) {
  if (n < 5) throw DomainError("length is defined for n >= 5");
  return n % 2 ? n - 4 : n - 5;
}

inline BigInt lower_bound(int n) {
  if (n < 7) throw DomainError("the lower bound needs n >= 7");
  const int w = width(n);
  BigInt r = factorial(static_cast<unsigned>(n));
  r *= boost::multiprecision::pow(binomial(static_cast<unsigned>(w), 2), static_cast<unsigned>(n - 4 - length(n)));
  r *= bell(static_cast<unsigned>(w - 1));
  r *= bell(static_cast<unsigned>(w));
  return r / 2;
}

// The base configuration for n: (len(n), necktie, 0). Odd n uses the trivial
// necktie; even n takes the necktie passed in.
inline IdQuadruple family_base(int n, int s = 1, int t = 1) {
  const int m = length(n);
  IdQuadruple phi{m, 1, 1, BitVector::zeros(static_cast<std::size_t>(m))};
  if (n % 2 == 0) {
    if (s == 1 && t == 1) s = 0;
    phi.s = s;
    phi.t = t;
  }
  phi.validate();
  if (phi.n() != n) throw IntegrityError("family base has the wrong size");
  return phi;
}

// alpha, beta, gamma of the base configuration together with
// delta' = <mu1> + (a_0,b_0) + <mu2> + (a_k,b_{k-1}).
// mu1 lives on a_1..a_{k-1} (size k-1) and mu2 on b_0..b_{k-1} (size k).
inline std::array<Partition, 4> family_G(const IdQuadruple& base, const Partition& mu1, const Partition& mu2) {
  ZConfig z = build_configuration(base);
  const int k = z.k;
  if (mu1.size() != static_cast<std::size_t>(k - 1)) throw ArgumentError("mu1 must live on a_1..a_{k-1}");
  if (mu2.size() != static_cast<std::size_t>(k)) throw ArgumentError("mu2 must live on b_0..b_{k-1}");
  if (base.z.count_ones() != 0) throw ArgumentError("family base needs the zero pin vector");
  std::vector<std::pair<int, int>> es{{z.a(0), z.b(0)}, {z.a(k), z.b(k - 1)}};
  for (const auto& blk : mu1.blocks())
    for (std::size_t i = 1; i < blk.size(); ++i) es.emplace_back(z.a(blk[0] + 1), z.a(blk[i] + 1));
  for (const auto& blk : mu2.blocks())
    for (std::size_t i = 1; i < blk.size(); ++i) es.emplace_back(z.b(blk[0]), z.b(blk[i]));
  Partition d = graph_equivalence(static_cast<std::size_t>(z.n), std::span<const std::pair<int, int>>(es));
  return {z.alpha, z.beta, z.gamma, d};
}

// Every G(mu1, mu2) on the fixed labelling, and for even n every necktie.
inline std::vector<std::array<Partition, 4>> enumerate_family(int n) {
  if (n < 7) throw DomainError("the family needs n >= 7");
  const int k = width(n);
  std::vector<IdQuadruple> bases;
  if (n % 2) {
    bases.push_back(family_base(n));
  } else {
    for (int t = 1; t < k; ++t)
      for (int s = 0; s < t; ++s) bases.push_back(family_base(n, s, t));
  }
  auto p1 = enumerate_partitions(static_cast<std::size_t>(k - 1));
  auto p2 = enumerate_partitions(static_cast<std::size_t>(k));
  std::vector<std::array<Partition, 4>> out;
  for (const auto& base : bases)
    for (const auto& mu1 : p1)
      for (const auto& mu2 : p2) out.push_back(family_G(base, mu1, mu2));
  return out;
}

struct FamilyOrbitReport {
  int n = 0;
  std::size_t base_sets = 0;
  std::size_t distinct_sets = 0;
  BigInt expected;
  bool all_sizes_four = true;  // no quadruple collapsed to fewer elements
};

// Distinct four-element sets in the union of the S_n orbits of the family.
inline FamilyOrbitReport family_orbit(int n) {
  if (n > 8) throw CapacityError("the orbit count is only run for n <= 8");
  FamilyOrbitReport rep;
  rep.n = n;
  rep.expected = lower_bound(n);
  auto fam = enumerate_family(n);
  rep.base_sets = fam.size();
  PartitionRanker ranker(static_cast<std::size_t>(n));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::unordered_set<std::uint64_t> seen;
  do {
    for (const auto& q : fam) {
      std::array<std::uint64_t, 4> r;
      for (std::size_t i = 0; i < 4; ++i) r[i] = ranker.rank(q[i].permuted(perm));
      std::sort(r.begin(), r.end());
      if (std::adjacent_find(r.begin(), r.end()) != r.end()) rep.all_sizes_four = false;
      seen.insert(r[0] | (r[1] << 16) | (r[2] << 32) | (r[3] << 48));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  rep.distinct_sets = seen.size();
  return rep;
}

// ---------------------------------------------------------------------------
// The six-element 1+1+2 generating set. Elements u_1..u_6 are 0..5.

struct Prop1Fixture {
  Partition alpha, epsilon, beta, gamma, delta;
  std::vector<Partition> generators() const { return {alpha, beta, gamma, delta}; }
};

inline Prop1Fixture prop1_fixture() {
  Prop1Fixture f;
  f.alpha = kequ(6, {3, 4, 5});
  f.epsilon = kequ(6, {0, 1, 2});
  f.beta = f.alpha + f.epsilon;
  f.gamma = kequ(6, {0, 1, 3}) + atom(6, 2, 4);
  f.delta = kequ(6, {0, 2, 5}) + atom(6, 1, 4);
  return f;
}

struct Prop1Identity {
  int u, v;  // 1-based element names
  TermId term;
};

// Terms for the six neighbours on the circle (u1,u3,u6,u5,u4,u2), in the
// order they are derived, over variables (alpha, beta, gamma, delta).
inline std::vector<Prop1Identity> prop1_identities(TermArena& arena) {
  TermId al = arena.var(0), be = arena.var(1), ga = arena.var(2), de = arena.var(3);
  TermId e21 = arena.meet(be, ga);
  TermId e13 = arena.meet(be, de);
  TermId e54 = arena.meet(al, arena.join(ga, e13));
  TermId e65 = arena.meet(al, arena.join(de, e21));
  TermId e42 = arena.meet(ga, arena.join(de, e54));
  TermId e36 = arena.meet(de, arena.join(ga, e65));
  return {{2, 1, e21}, {1, 3, e13}, {5, 4, e54}, {6, 5, e65}, {4, 2, e42}, {3, 6, e36}};
}

struct Prop1Report {
  bool identities = true;
  bool circle_atoms = true;
  bool generates = false;
  std::size_t closure_size = 0;
  OrderType order = OrderType::other;
  bool ok() const { return identities && circle_atoms && generates && order == OrderType::one_one_two; }
};

inline Prop1Report verify_prop1() {
  Prop1Report rep;
  auto fx = prop1_fixture();
  EquivalenceLattice ctx(6);
  TermArena arena;
  auto ids = prop1_identities(arena);
  TermEvaluator<EquivalenceLattice> ev(arena, ctx, fx.generators());
  for (const auto& id : ids)
    if (ev.value(id.term) != atom(6, id.u - 1, id.v - 1)) rep.identities = false;

  const std::vector<int> circle{1, 3, 6, 5, 4, 2};
  std::vector<TermId> neighbor;
  for (std::size_t l = 0; l < circle.size(); ++l) {
    int x = circle[l], y = circle[(l + 1) % circle.size()];
    auto it = std::find_if(ids.begin(), ids.end(), [&](const Prop1Identity& id) {
      return (id.u == x && id.v == y) || (id.u == y && id.v == x);
    });
    if (it == ids.end()) throw IntegrityError("circle neighbour without a term");
    neighbor.push_back(it->term);
  }
  for (std::size_t i = 0; i < circle.size(); ++i)
    for (std::size_t j = i + 1; j < circle.size(); ++j) {
      TermId t = circle_term(arena, neighbor, i, j);
      if (ev.value(t) != atom(6, circle[i] - 1, circle[j] - 1)) rep.circle_atoms = false;
    }

  auto lat = ranked_equivalence(6);
  std::vector<std::uint32_t> gens;
  for (const auto& p : fx.generators()) gens.push_back(lat->rank(p));
  auto cl = close(gens, *lat);
  rep.closure_size = cl.elements.size();
  rep.generates = rep.closure_size == lat->count();
  rep.order = order_type(gens, *lat);
  return rep;
}

}  // namespace partlat

#endif  // PARTLAT_ZADORI_HPP_
