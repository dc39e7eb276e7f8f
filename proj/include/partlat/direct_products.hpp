// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_DIRECT_PRODUCTS_HPP_
#define PARTLAT_DIRECT_PRODUCTS_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "partlat/bigint.hpp"
#include "partlat/bitvector.hpp"
#include "partlat/closure.hpp"
#include "partlat/errors.hpp"
#include "partlat/lattice.hpp"
#include "partlat/term.hpp"
#include "partlat/zadori.hpp"

namespace partlat {

// ---------------------------------------------------------------------------
// DBV(u, t): vectors (1, x_2, ..., x_t) with airiness < u.

inline void for_each_dbv(int u, int t, const std::function<void(const BitVector&)>& fn) {
  if (u < 1 || t < 1) throw ArgumentError("dbv needs u >= 1 and t >= 1");
  if (t > 63) throw CapacityError("dbv enumeration limited to t <= 63");
  const std::uint64_t free = std::uint64_t{1} << (t - 1);
  for (std::uint64_t rest = 0; rest < free; ++rest) {
    BitVector v = BitVector::from_mask(1 | (rest << 1), static_cast<std::size_t>(t));
    if (airiness(v) < static_cast<std::size_t>(u)) fn(v);
  }
}

inline std::vector<BitVector> dbv(int u, int t) {
  std::vector<BitVector> out;
  for_each_dbv(u, t, [&](const BitVector& v) { out.push_back(v); });
  return out;
}

namespace detail {

// Maximum bipartite matching (Hopcroft-Karp). adj[l] lists right vertices.
inline std::size_t max_matching(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t right) {
  constexpr std::uint32_t none = UINT32_MAX;
  const std::size_t left = adj.size();
  std::vector<std::uint32_t> ml(left, none), mr(right, none), dist(left);
  std::size_t matched = 0;
  auto bfs = [&] {
    std::vector<std::uint32_t> q;
    bool found = false;
    for (std::size_t l = 0; l < left; ++l) {
      dist[l] = ml[l] == none ? 0 : none;
      if (ml[l] == none) q.push_back(static_cast<std::uint32_t>(l));
    }
    for (std::size_t h = 0; h < q.size(); ++h) {
      auto l = q[h];
      for (auto r : adj[l]) {
        auto l2 = mr[r];
        if (l2 == none) found = true;
        else if (dist[l2] == none) {
          dist[l2] = dist[l] + 1;
          q.push_back(l2);
        }
      }
    }
    return found;
  };
  std::vector<std::size_t> it(left);
  std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t l) {
    for (; it[l] < adj[l].size(); ++it[l]) {
      auto r = adj[l][it[l]];
      auto l2 = mr[r];
      if (l2 == none || (dist[l2] == dist[l] + 1 && dfs(l2))) {
        ml[l] = r;
        mr[r] = l;
        return true;
      }
    }
    dist[l] = none;
    return false;
  };
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (std::size_t l = 0; l < left; ++l)
      if (ml[l] == none && dfs(static_cast<std::uint32_t>(l))) ++matched;
  }
  return matched;
}

// C(n, k) combinations of {0..n-1} in lexicographic order, at most limit of them.
inline std::vector<std::vector<int>> first_combinations(int n, int k, std::size_t limit) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (out.size() < limit) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Vectors (1, x_2..x_t) with exactly `zeros` zero entries, first `count` in order.
inline std::vector<BitVector> layer_vectors(int t, int zeros, std::size_t count) {
  std::vector<BitVector> out;
  for (const auto& pos : first_combinations(t - 1, zeros, count)) {
    BitVector v = BitVector::ones(static_cast<std::size_t>(t));
    for (int p : pos) v.set(static_cast<std::size_t>(p + 2), 0);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

// Width of DBV(u, t) via Dilworth: |P| minus a maximum matching on x < y.
inline std::size_t sba_exact(int u, int t) {
  if (u < 1 || t < 1) throw ArgumentError("sba needs u >= 1 and t >= 1");
  if (t > 14) throw CapacityError("sba_exact is limited to t <= 14");
  const std::uint32_t free = 1u << (t - 1);
  std::vector<std::int32_t> id(free, -1);
  std::vector<std::uint32_t> elems;
  for (std::uint32_t rest = 0; rest < free; ++rest) {
    if (airiness(BitVector::from_mask(1 | (std::uint64_t{rest} << 1), static_cast<std::size_t>(t))) <
        static_cast<std::size_t>(u)) {
      id[rest] = static_cast<std::int32_t>(elems.size());
      elems.push_back(rest);
    }
  }
  // x < y iff the ones of x are a proper subset of the ones of y.
  std::vector<std::vector<std::uint32_t>> adj(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::uint32_t x = elems[i], comp = (free - 1) & ~x;
    for (std::uint32_t add = comp; add; add = (add - 1) & comp)
      if (id[x | add] >= 0) adj[i].push_back(static_cast<std::uint32_t>(id[x | add]));
  }
  return elems.size() - detail::max_matching(adj, elems.size());
}

// The binomial lower bound for sba(u, t); exact when u-1 >= ceil((t-1)/2).
inline BigInt sba_bound(int u, int t) {
  if (u < 1 || t < 1) throw ArgumentError("sba needs u >= 1 and t >= 1");
  const int half = t / 2;  // ceil((t-1)/2)
  const int r = std::min(u - 1, half);
  return binomial(static_cast<unsigned>(t - 1), static_cast<unsigned>(r));
}

// ---------------------------------------------------------------------------
// Two related antichains.

enum class TraStatus { certified, not_member, unknown };

inline const char* to_string(TraStatus s) {
  switch (s) {
    case TraStatus::certified:
      return "certified";
    case TraStatus::not_member:
      return "not_member";
    default:
      return "unknown";
  }
}

struct TraWitness {
  TraStatus status = TraStatus::unknown;
  std::string rule;
  // Filled when the witness is small enough to materialize.
  std::optional<std::vector<BitVector>> X, Y;
};

inline bool in_dbv(const BitVector& v, int u, int t) {
  return v.dim() == static_cast<std::size_t>(t) && t >= 1 && v.at(1) == 1 && airiness(v) < static_cast<std::size_t>(u);
}

inline bool check_tra_pair(const std::vector<BitVector>& X, const std::vector<BitVector>& Y, int u, int t) {
  for (const auto* S : {&X, &Y})
    for (const auto& v : *S)
      if (!in_dbv(v, u, t)) return false;
  if (!is_antichain(X) || !is_antichain(Y)) return false;
  for (const auto& x : X)
    for (const auto& y : Y)
      if (leq(x, y)) return false;
  return true;
}

namespace detail {

inline std::optional<std::pair<std::vector<BitVector>, std::vector<BitVector>>> tra_search(
    std::uint64_t p, std::uint64_t q, int u, int t) {
  auto P = dbv(u, t);
  const std::size_t N = P.size();
  std::vector<std::uint32_t> anti;  // masks of antichains
  for (std::uint32_t s = 0; s < (1u << N); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < N && ok; ++i)
      for (std::size_t j = 0; j < N && ok; ++j)
        if (i != j && (s >> i & 1) && (s >> j & 1) && leq(P[i], P[j])) ok = false;
    if (ok) anti.push_back(s);
  }
  auto pick = [&](std::uint32_t s) {
    std::vector<BitVector> v;
    for (std::size_t i = 0; i < N; ++i)
      if (s >> i & 1) v.push_back(P[i]);
    return v;
  };
  for (auto xs : anti) {
    if (static_cast<std::uint64_t>(std::popcount(xs)) != p) continue;
    for (auto ys : anti) {
      if (static_cast<std::uint64_t>(std::popcount(ys)) != q) continue;
      auto X = pick(xs), Y = pick(ys);
      if (check_tra_pair(X, Y, u, t)) return std::make_pair(X, Y);
    }
  }
  return std::nullopt;
}

}  // namespace detail

constexpr std::uint64_t kTraMaterializeLimit = 1 << 16;

inline TraWitness tra_witness(std::uint64_t p, std::uint64_t q, int u, int t) {
  if (u < 1 || t < 1) throw ArgumentError("tra needs u >= 1 and t >= 1");
  TraWitness w;
  const bool small = p + q <= kTraMaterializeLimit && t <= 63;
  auto finish = [&](std::string rule, std::vector<BitVector> X, std::vector<BitVector> Y) {
    w.status = TraStatus::certified;
    w.rule = std::move(rule);
    if (!check_tra_pair(X, Y, u, t)) throw IntegrityError("tra witness failed its own check");
    w.X = std::move(X);
    w.Y = std::move(Y);
    return w;
  };
  auto certify = [&](std::string rule) {
    w.status = TraStatus::certified;
    w.rule = std::move(rule);
    return w;
  };

  if (p == 0 && q == 0) return finish("empty", {}, {});
  // Layer pairs: i-1 zeros against i zeros.
  for (int i = 1; i <= std::min(u, t) - 1; ++i) {
    BigInt a = binomial(static_cast<unsigned>(t - 1), static_cast<unsigned>(i - 1));
    BigInt b = binomial(static_cast<unsigned>(t - 1), static_cast<unsigned>(i));
    if (BigInt(p) <= a && BigInt(q) <= b) {
      std::string rule = "layers " + std::to_string(i - 1) + "/" + std::to_string(i);
      if (!small) return certify(rule);
      return finish(rule, detail::layer_vectors(t, i - 1, p), detail::layer_vectors(t, i, q));
    }
  }
  // Split one antichain of DBV(u, t) into X and Y.
  if (BigInt(p) + BigInt(q) <= sba_bound(u, t)) {
    const int r = std::min(u - 1, t / 2);
    std::string rule = "split layer " + std::to_string(r);
    if (!small) return certify(rule);
    auto L = detail::layer_vectors(t, r, p + q);
    std::vector<BitVector> X(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(p));
    std::vector<BitVector> Y(L.begin() + static_cast<std::ptrdiff_t>(p), L.end());
    return finish(rule, std::move(X), std::move(Y));
  }
  if (t <= 5) {
    if (auto r = detail::tra_search(p, q, u, t)) return finish("exhaustive", r->first, r->second);
    w.status = TraStatus::not_member;
    w.rule = "exhaustive";
    return w;
  }
  w.rule = "no rule applies";
  return w;
}

// ---------------------------------------------------------------------------
// The family of id-quadruples behind a product of partition lattices.

struct PhiOptions {
  // Dropped factors: (p, q) = (0, 0) and fewer than d+2 lengths are allowed.
  bool allow_empty = false;
  // Use the single necktie (0, 1) in place of the full W_j.
  bool single_necktie = false;

  static PhiOptions remark() { return {true, true}; }
};

struct PhiIndex {
  int j = 0;
  int m = 0;
  std::uint64_t p = 0, q = 0;
  int u = 0, t = 0;  // DBV parameters
  std::uint64_t w = 0;
  std::string rule;
  std::vector<BitVector> X, Y, X_plus, Y_plus;
  std::vector<std::pair<int, int>> neckties;
  std::vector<IdQuadruple> psi, gamma;
};

struct PhiFamily {
  int d = 0;
  PhiOptions options;
  std::vector<PhiIndex> indices;
  std::vector<IdQuadruple> phi;  // Psi_1, Gamma_1, Psi_2, ...

  // Sizes of the factors Part(n_phi), one per member of phi.
  std::vector<int> factor_sizes() const {
    std::vector<int> out;
    for (const auto& f : phi) out.push_back(f.n());
    return out;
  }
  bool is_psi(const IdQuadruple& f) const {
    for (const auto& ix : indices)
      if (std::find(ix.psi.begin(), ix.psi.end(), f) != ix.psi.end()) return true;
    return false;
  }
  int index_of(const IdQuadruple& f) const {
    for (const auto& ix : indices)
      if (ix.m == f.m) return ix.j;
    return 0;
  }
};

// (u, t) with X_j, Y_j inside DBV(u, t).
inline std::pair<int, int> dbv_parameters(int d, int j, int m_j, int m_2 = 0) {
  if (j == 1) return {d, m_j - 1};
  if (j == 2) return {m_2 - d, m_2 - d - 1};
  return {d + 3 - j, m_j - d - 1};
}

inline BitVector lift(int d, int j, const BitVector& x) {
  if (j == 1) return concat(BitVector::zeros(1), x);
  return concat(concat(BitVector::ones(static_cast<std::size_t>(j - 1)), BitVector::zeros(static_cast<std::size_t>(d + 2 - j))), x);
}

inline PhiFamily build_phi(int d, const std::vector<int>& m, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pq,
                           PhiOptions opts = {}) {
  auto fail = [](const std::string& why) { throw ArgumentError("hypothesis violated: " + why); };
  if (d < 1 || d % 2 == 0) fail("d must be an odd positive integer");
  if (m.empty() || pq.size() != m.size()) fail("need one (p, q) per length");
  if (m.size() > static_cast<std::size_t>(d + 2)) fail("at most d+2 lengths");
  if (!opts.allow_empty && m.size() != static_cast<std::size_t>(d + 2)) fail("exactly d+2 lengths are required");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1 || m[i] % 2 == 0) fail("m_" + std::to_string(i + 1) + " must be odd and positive");
    if (i > 0 && m[i] <= m[i - 1]) fail("the lengths must be strictly increasing");
  }
  if (m[0] < 3) fail("m_1 >= 3");
  if (d > m[0]) fail("d <= m_1");

  PhiFamily fam;
  fam.d = d;
  fam.options = opts;
  for (std::size_t i = 0; i < m.size(); ++i) {
    PhiIndex ix;
    ix.j = static_cast<int>(i) + 1;
    ix.m = m[i];
    ix.p = pq[i].first;
    ix.q = pq[i].second;
    if (ix.p + ix.q == 0) {
      if (!opts.allow_empty) fail("p_" + std::to_string(ix.j) + " + q_" + std::to_string(ix.j) + " > 0");
      continue;
    }
    std::tie(ix.u, ix.t) = dbv_parameters(d, ix.j, ix.m, ix.m);
    if (ix.u < 1 || ix.t < 1) fail("DBV parameters of index " + std::to_string(ix.j) + " are not positive");
    auto w = tra_witness(ix.p, ix.q, ix.u, ix.t);
    if (w.status != TraStatus::certified)
      fail("(" + std::to_string(ix.p) + "," + std::to_string(ix.q) + ") not certified in tra(" + std::to_string(ix.u) + "," +
           std::to_string(ix.t) + ")");
    if (!w.X) throw CapacityError("family too large to materialize", ix.p + ix.q);
    ix.rule = w.rule;
    ix.X = *w.X;
    ix.Y = *w.Y;
    const int k = (ix.m + 3) / 2;
    if (opts.single_necktie) ix.neckties = {{0, 1}};
    else
      for (int s = 0; s < k; ++s)
        for (int t = s + 1; t < k; ++t) ix.neckties.emplace_back(s, t);
    ix.w = ix.neckties.size();
    for (const auto& x : ix.X) ix.X_plus.push_back(lift(d, ix.j, x));
    for (const auto& y : ix.Y) ix.Y_plus.push_back(lift(d, ix.j, y));
    for (const auto& z : ix.X_plus) {
      IdQuadruple q{ix.m, 1, 1, z};
      q.validate();
      ix.psi.push_back(q);
    }
    for (const auto& z : ix.Y_plus)
      for (auto [s, t] : ix.neckties) {
        IdQuadruple q{ix.m, s, t, z};
        q.validate();
        ix.gamma.push_back(q);
      }
    fam.phi.insert(fam.phi.end(), ix.psi.begin(), ix.psi.end());
    fam.phi.insert(fam.phi.end(), ix.gamma.begin(), ix.gamma.end());
    fam.indices.push_back(std::move(ix));
  }
  if (fam.phi.empty()) throw ArgumentError("hypothesis violated: the family is empty");
  return fam;
}

inline nlohmann::json to_json(const PhiFamily& f) {
  nlohmann::json j;
  j["d"] = f.d;
  j["allow_empty"] = f.options.allow_empty;
  j["single_necktie"] = f.options.single_necktie;
  auto strs = [](const std::vector<BitVector>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.to_string());
    return out;
  };
  for (const auto& ix : f.indices) {
    nlohmann::json e;
    e["j"] = ix.j;
    e["m"] = ix.m;
    e["p"] = ix.p;
    e["q"] = ix.q;
    e["dbv"] = {ix.u, ix.t};
    e["rule"] = ix.rule;
    e["X"] = strs(ix.X);
    e["Y"] = strs(ix.Y);
    e["X_plus"] = strs(ix.X_plus);
    e["Y_plus"] = strs(ix.Y_plus);
    e["neckties"] = ix.neckties;
    j["indices"].push_back(e);
  }
  for (const auto& q : f.phi) j["phi"].push_back(q.to_string());
  j["factor_sizes"] = f.factor_sizes();
  return j;
}

// Component tuples of the four generators, indexed [generator][factor].
inline std::array<std::vector<Partition>, 4> product_generators(const std::vector<IdQuadruple>& phis) {
  if (phis.empty()) throw ArgumentError("empty family");
  std::array<std::vector<Partition>, 4> g;
  for (const auto& f : phis) {
    auto mu = build_configuration(f).mu();
    for (std::size_t i = 0; i < 4; ++i) g[i].push_back(mu[i]);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Verification that the product of Equ(Z_phi) is four-generated.

enum class VerifyMode { full_closure, structural };

inline const char* to_string(VerifyMode m) { return m == VerifyMode::full_closure ? "full_closure" : "structural"; }

constexpr std::size_t kDefaultClosureCap = 200000;

struct ProductVerification {
  VerifyMode mode = VerifyMode::structural;
  std::vector<IdQuadruple> factors;
  BigInt product_size;
  // structural
  std::vector<bool> factor_generates;
  std::size_t isolation_checks = 0;
  std::vector<std::string> failures;
  // full closure
  std::optional<std::size_t> closure_size;
  double seconds = 0;
  bool ok = false;
};

namespace detail {

inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  if (threads == 1) worker();
  else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

inline BigInt product_size(const std::vector<IdQuadruple>& phis) {
  BigInt r = 1;
  for (const auto& f : phis) r *= bell(static_cast<unsigned>(f.n()));
  return r;
}

inline ProductVerification verify_product_generation(const std::vector<IdQuadruple>& phis, VerifyMode mode,
                                                     std::size_t cap = kDefaultClosureCap, unsigned threads = 1) {
  if (phis.empty()) throw ArgumentError("empty family");
  for (std::size_t i = 0; i < phis.size(); ++i)
    for (std::size_t j = i + 1; j < phis.size(); ++j)
      if (phis[i] == phis[j]) throw ArgumentError("repeated id-quadruple " + phis[i].to_string());
  auto t0 = std::chrono::steady_clock::now();
  ProductVerification rep;
  rep.mode = mode;
  rep.factors = phis;
  rep.product_size = product_size(phis);

  if (mode == VerifyMode::full_closure) {
    if (rep.product_size > BigInt(cap))
      throw CapacityError("product has " + to_string(rep.product_size) + " elements, above the closure cap " +
                              std::to_string(cap) + "; use structural mode",
                          0);
    std::vector<std::shared_ptr<const RankedEquivalenceLattice>> fs;
    for (const auto& f : phis) fs.push_back(ranked_equivalence(static_cast<std::size_t>(f.n())));
    PackedProductLattice prod(fs);
    auto g = product_generators(phis);
    std::vector<std::uint64_t> gens;
    for (const auto& comp : g) gens.push_back(prod.pack_partitions(comp));
    ClosureOptions opts;
    opts.max_elements = cap;
    auto c = close(gens, prod, opts);
    rep.closure_size = c.elements.size();
    rep.ok = c.complete && BigInt(c.elements.size()) == rep.product_size;
    if (!rep.ok) rep.failures.push_back("closure has " + std::to_string(c.elements.size()) + " elements");
  } else {
    const std::size_t F = phis.size();
    std::vector<ZConfig> cfg;
    for (const auto& f : phis) cfg.push_back(build_configuration(f));
    std::vector<char> gen_ok(F, 0);
    std::vector<std::vector<std::string>> fail(F);
    std::atomic<std::size_t> checks{0};
    // Row i: the projection terms of phis[i], evaluated on every factor.
    detail::parallel_for(F, threads, [&](std::size_t i) {
      gen_ok[i] = verify_generation_via_terms(phis[i]).ok();
      if (!gen_ok[i]) fail[i].push_back(phis[i].to_string() + ": e-terms do not give the atoms");
      ZTermBuilder zt(phis[i]);
      auto iso = zt.projection().isolated();
      for (std::size_t j = 0; j < F; ++j) {
        EquivalenceLattice ctx(static_cast<std::size_t>(cfg[j].n));
        ZEvaluator ev(zt.arena(), ctx, cfg[j].mu());
        auto mu = cfg[j].mu();
        for (std::size_t v = 0; v < 4; ++v) {
          const auto& got = ev.value(iso[v]);
          bool good = i == j ? got == mu[v] : got.is_bottom();
          checks.fetch_add(1);
          if (!good)
            fail[i].push_back("projection " + std::string(1, "abcd"[v]) + " of " + phis[i].to_string() + " on " +
                              phis[j].to_string());
        }
      }
    });
    rep.isolation_checks = checks;
    for (std::size_t i = 0; i < F; ++i) {
      rep.factor_generates.push_back(gen_ok[i] != 0);
      rep.failures.insert(rep.failures.end(), fail[i].begin(), fail[i].end());
    }
    rep.ok = rep.failures.empty();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline nlohmann::json to_json(const ProductVerification& r) {
  nlohmann::json j;
  j["mode"] = to_string(r.mode);
  for (const auto& f : r.factors) {
    j["factors"].push_back(f.to_string());
    j["factor_sizes"].push_back(f.n());
  }
  j["product_size"] = to_string(r.product_size);
  if (r.mode == VerifyMode::structural) {
    j["factor_generates"] = r.factor_generates;
    j["isolation_checks"] = r.isolation_checks;
  }
  if (r.closure_size) j["closure_size"] = *r.closure_size;
  j["failures"] = r.failures;
  j["seconds"] = r.seconds;
  j["verified"] = r.ok;
  return j;
}

// ---------------------------------------------------------------------------
// Two factors Part(n) x Part(n').

struct TwoFactorPlan {
  int n = 0, n_prime = 0;
  int case_no = 0;
  std::vector<IdQuadruple> factors;
  std::optional<PhiFamily> family;
};

inline TwoFactorPlan theorem_a_plan(int n, int n_prime) {
  if (n < 5 || n_prime <= n) throw DomainError("need 5 <= n < n'");
  TwoFactorPlan plan;
  plan.n = n;
  plan.n_prime = n_prime;
  auto one = [](int size) { return size % 2 ? std::pair<std::uint64_t, std::uint64_t>{1, 0} : std::pair<std::uint64_t, std::uint64_t>{0, 1}; };
  if (n >= 7 && n % 2 == 1 && n_prime == n + 1) {
    plan.case_no = 1;
    const int d = length(n);
    plan.family = build_phi(d, {d}, {{1, 1}}, PhiOptions::remark());
  } else if (n >= 7) {
    plan.case_no = 2;
    const int d = length(n);
    plan.family = build_phi(d, {d, length(n_prime)}, {one(n), one(n_prime)}, PhiOptions::remark());
  } else if (n_prime == 6) {
    plan.case_no = 3;
    plan.factors = {IdQuadruple::parse("1:1:1:1"), IdQuadruple::parse("1:0:1:0")};
  } else {
    plan.case_no = 4;
    const int mp = length(n_prime);
    IdQuadruple phi{1, n == 5 ? 1 : 0, 1, BitVector::zeros(1)};
    IdQuadruple phip{mp, n_prime % 2 ? 1 : 0, 1, BitVector::ones(static_cast<std::size_t>(mp))};
    plan.factors = {phi, phip};
  }
  if (plan.family) plan.factors = plan.family->phi;
  std::vector<int> sizes;
  for (const auto& f : plan.factors) sizes.push_back(f.n());
  std::sort(sizes.begin(), sizes.end());
  if (sizes != std::vector<int>{n, n_prime}) throw IntegrityError("plan does not produce Part(n) x Part(n')");
  return plan;
}

// ---------------------------------------------------------------------------
// Parameter plans for the two corollaries and the 2020 example.

struct IndexBound {
  int j = 0, m = 0, u = 0, t = 0;
  BigInt sba_lower;
  BigInt p, q;
};

struct ParameterPlan {
  int d = 0;
  std::vector<IndexBound> indices;
  std::vector<std::pair<int, std::uint64_t>> factor_powers;  // (size, exponent)
  bool ok = true;
  std::vector<std::string> notes;
};

inline void check_lengths(int d, const std::vector<int>& m) {
  if (d < 1 || d % 2 == 0) throw ArgumentError("hypothesis violated: d must be odd");
  if (m.empty() || m[0] < 3 || d > m[0]) throw ArgumentError("hypothesis violated: d <= m_1 and m_1 >= 3");
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] % 2 == 0 || (i > 0 && m[i] <= m[i - 1])) throw ArgumentError("hypothesis violated: odd increasing lengths");
}

// Part(n) x ... x Part(3n-14) for n >= 9: d and the consecutive run d+6 .. 3d+7.
struct ConsecutivePlan {
  int n = 0, d = 0;
  std::vector<int> m;
  int run_lo = 0, run_hi = 0;  // sizes covered by the family
  int target_hi = 0;           // 3n - 14
};

inline ConsecutivePlan corollary_consecutive_plan(int n) {
  if (n < 9) throw DomainError("the consecutive plan needs n >= 9");
  ConsecutivePlan c;
  c.n = n;
  c.d = n % 2 ? n - 6 : n - 7;
  for (int i = 1; i <= c.d + 1; ++i) c.m.push_back(c.d + 2 * i);
  check_lengths(c.d, c.m);
  c.run_lo = c.d + 6;
  c.run_hi = 3 * c.d + 7;
  c.target_hi = 3 * n - 14;
  return c;
}

inline PhiFamily build_consecutive_family(const ConsecutivePlan& c) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pq(c.m.size(), {1, 1});
  return build_phi(c.d, c.m, pq, PhiOptions::remark());
}

inline IndexBound index_bound(int d, int j, int m_j, int m_2) {
  IndexBound b;
  b.j = j;
  b.m = m_j;
  std::tie(b.u, b.t) = dbv_parameters(d, j, m_j, m_2);
  if (b.u < 1 || b.t < 1) throw ArgumentError("hypothesis violated: DBV parameters must be positive");
  b.sba_lower = sba_bound(b.u, b.t);
  return b;
}

// u-th powers of u consecutive partition lattices; odd u is rounded up to 2v.
inline ParameterPlan corollary_power_plan(int u) {
  if (u < 1) throw DomainError("u must be positive");
  const int v = (u + 1) / 2;
  ParameterPlan plan;
  plan.d = 4 * v + 1;
  std::vector<int> m;
  for (int i = 1; i <= v; ++i) m.push_back(8 * v + 2 * i - 1);
  check_lengths(plan.d, m);
  for (int i = 1; i <= v; ++i) {
    auto b = index_bound(plan.d, i, m[static_cast<std::size_t>(i - 1)], m.size() > 1 ? m[1] : 0);
    b.p = b.q = 2 * v;
    if (b.p + b.q > b.sba_lower) {
      plan.ok = false;
      plan.notes.push_back("index " + std::to_string(i) + ": sba bound " + to_string(b.sba_lower) + " < 4v");
    }
    plan.indices.push_back(b);
    plan.factor_powers.emplace_back(b.m + 4, 2 * v);
    plan.factor_powers.emplace_back(b.m + 5, 2 * v);
  }
  if (u % 2) plan.notes.push_back("odd u rounded up to " + std::to_string(2 * v));
  return plan;
}

struct Example2020Report {
  int d = 579;
  std::size_t count = 0;
  BigInt min_pq;
  int argmin = 0;
  bool all_at_least = false;  // p_i = q_i >= 10^127 for every i
  std::vector<IndexBound> indices;
};

inline Example2020Report example2020_check() {
  Example2020Report r;
  std::vector<int> m;
  for (int i = 1; i <= 505; ++i) m.push_back(1005 + 2 * i);
  check_lengths(r.d, m);
  const BigInt threshold = boost::multiprecision::pow(BigInt(10), 127);
  r.all_at_least = true;
  for (int i = 1; i <= 505; ++i) {
    auto b = index_bound(r.d, i, m[static_cast<std::size_t>(i - 1)], m[1]);
    b.p = b.q = b.sba_lower / 2;
    if (i == 1 || b.p < r.min_pq) {
      r.min_pq = b.p;
      r.argmin = i;
    }
    if (b.p < threshold) r.all_at_least = false;
    r.indices.push_back(std::move(b));
  }
  r.count = r.indices.size();
  return r;
}

}  // namespace partlat

#endif  // PARTLAT_DIRECT_PRODUCTS_HPP_
