// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_MONTE_CARLO_HPP_
#define PARTLAT_MONTE_CARLO_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "partlat/bigint.hpp"
#include "partlat/closure.hpp"
#include "partlat/errors.hpp"
#include "partlat/exact_enumeration.hpp"
#include "partlat/lattice.hpp"
#include "partlat/partition.hpp"

namespace partlat {

// Random stream for one chunk of work: a fresh engine keyed by
// (seed, chunk), so draws do not depend on which worker runs the chunk.
inline std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32), 0x7061u};
  return std::mt19937_64(seq);
}

// Uniform random partitions of an n-set by the urn model: pick the urn count
// j with probability j^n / (e j! B_n), then drop each label into a uniform urn.
class StamSampler {
 public:
  static constexpr double kTailMass = 1e-12;

  explicit StamSampler(std::size_t n) : n_(n) {
    if (n < 1 || n > kMaxElements) throw DimensionError("sampler supports 1 <= n <= 64");
    // Terms in log space: n ln j - 1 - ln j! - ln B_n.
    const double log_bell = std::log(bell(static_cast<unsigned>(n)).convert_to<double>());
    double mass = 0;
    for (std::size_t j = 1;; ++j) {
      double p = std::exp(static_cast<double>(n) * std::log(static_cast<double>(j)) - 1.0 -
                          std::lgamma(static_cast<double>(j) + 1.0) - log_bell);
      probs_.push_back(p);
      mass += p;
      cumulative_.push_back(mass);
      if (mass >= 1.0 - kTailMass && static_cast<double>(j) > static_cast<double>(n)) break;
      if (j > 100000) throw Error("urn distribution failed to converge");
    }
    mass_ = mass;
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t max_urns() const noexcept { return probs_.size(); }
  double probability(std::size_t j) const { return j >= 1 && j <= probs_.size() ? probs_[j - 1] : 0.0; }
  double total_mass() const noexcept { return mass_; }
  const std::vector<double>& cumulative() const noexcept { return cumulative_; }

  template <class Engine>
  std::size_t draw_urns(Engine& eng) const {
    double u = std::uniform_real_distribution<double>(0.0, mass_)(eng);
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    return static_cast<std::size_t>(it - cumulative_.begin()) + 1;
  }

  template <class Engine>
  Partition sample(Engine& eng) const {
    const std::size_t j = draw_urns(eng);
    std::uniform_int_distribution<std::size_t> urn(0, j - 1);
    std::array<int, kMaxElements> labels{};
    for (std::size_t i = 0; i < n_; ++i) labels[i] = static_cast<int>(urn(eng));
    return Partition::from_labels(std::span<const int>(labels.data(), n_));
  }

 private:
  std::size_t n_;
  std::vector<double> probs_;
  std::vector<double> cumulative_;
  double mass_ = 0;
};

template <class Engine>
Partition stam_sample(const StamSampler& sampler, Engine& eng) {
  return sampler.sample(eng);
}

// Tabulated two-sided normal quantiles for the common levels.
inline const std::map<double, double>& confidence_table() {
  static const std::map<double, double> t{{0.900, 1.64485}, {0.950, 1.95996}, {0.990, 2.57583}, {0.999, 3.29053}};
  return t;
}

// Solves level = integral of the standard normal density over [-z, z] by
// bisection.
inline double invert_normal_level(double level, double tol = 1e-9) {
  if (!(level > 0 && level < 1)) throw ArgumentError("confidence level must lie in (0,1)");
  double lo = 0, hi = 1;
  while (std::erf(hi / std::sqrt(2.0)) < level) hi *= 2;
  while (hi - lo > tol) {
    double mid = (lo + hi) / 2;
    if (std::erf(mid / std::sqrt(2.0)) < level)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

inline double z_for_level(double level) {
  for (const auto& [c, z] : confidence_table())
    if (std::abs(c - level) < 1e-12) return z;
  return invert_normal_level(level);
}

using Interval = std::pair<double, double>;

inline double sample_sigma(std::uint64_t s, std::uint64_t k) {
  if (k < 2) throw ArgumentError("sample size must be at least 2");
  if (s > k) throw ArgumentError("success count exceeds sample size");
  double p = static_cast<double>(s) / static_cast<double>(k);
  return std::sqrt(p * (1 - p) / static_cast<double>(k - 1));
}

inline Interval confidence_interval(std::uint64_t s, std::uint64_t k, double level) {
  double z = z_for_level(level);
  double sigma = sample_sigma(s, k);
  double p = static_cast<double>(s) / static_cast<double>(k);
  return {p - z * sigma, p + z * sigma};
}

struct SampleReport {
  std::size_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t s = 0;
  double p_bar = 0;
  double sigma_bar = 0;
  std::map<double, Interval> intervals;
  std::uint64_t seed = 0;
  unsigned parallelism = 1;
  double wall_seconds = 0;
};

inline SampleReport make_report(std::size_t n, std::uint64_t k, std::uint64_t s, std::uint64_t seed = 0) {
  SampleReport r;
  r.n = n;
  r.k = k;
  r.s = s;
  r.seed = seed;
  r.sigma_bar = sample_sigma(s, k);
  r.p_bar = static_cast<double>(s) / static_cast<double>(k);
  for (const auto& [c, z] : confidence_table()) r.intervals[c] = confidence_interval(s, k, c);
  return r;
}

struct EstimateOptions {
  unsigned parallelism = 1;
  std::uint64_t chunk = 1 << 14;
  // Cache closure outcomes by 4-subset rank when C(B_n, 4) is at most this.
  std::uint64_t memo_limit = std::uint64_t{1} << 24;
  std::function<void(std::uint64_t done, std::uint64_t successes)> progress;
};

namespace detail {

// Draws four distinct partitions, redrawing duplicates.
template <class Engine>
std::array<Partition, 4> draw_quadruple(const StamSampler& sampler, Engine& eng) {
  std::array<Partition, 4> q;
  std::size_t have = 0;
  while (have < 4) {
    Partition p = sampler.sample(eng);
    if (std::find(q.begin(), q.begin() + have, p) == q.begin() + have) q[have++] = std::move(p);
  }
  return q;
}

}  // namespace detail

// Estimates the probability that a random 4-subset of Part(n) generates it.
inline SampleReport estimate_rho(std::size_t n, std::uint64_t k, std::uint64_t seed,
                                 const EstimateOptions& opts = {}) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  if (k < 2) throw ArgumentError("sample size must be at least 2");
  if (n < 1) throw DimensionError("n must be positive");
  if (opts.chunk == 0) throw ArgumentError("chunk must be positive");
  StamSampler sampler(n);
  const bool ranked = n <= RankedEquivalenceLattice::kMaxN;
  std::shared_ptr<const RankedEquivalenceLattice> rctx;
  std::unique_ptr<EquivalenceLattice> ectx;
  if (ranked)
    rctx = ranked_equivalence(n);
  else
    ectx = std::make_unique<EquivalenceLattice>(n);

  // 0 unknown, 1 no, 2 yes. Racing writers store the same value.
  std::vector<std::atomic<std::uint8_t>> memo;
  if (ranked && n >= 4 && quadruple_space(n) <= opts.memo_limit) {
    memo = std::vector<std::atomic<std::uint8_t>>(quadruple_space(n));
  }

  const std::uint64_t chunks = (k + opts.chunk - 1) / opts.chunk;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> successes{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex mu;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      std::unique_ptr<ClosureWorkspace<RankedEquivalenceLattice>> rws;
      std::unique_ptr<ClosureWorkspace<EquivalenceLattice>> ews;
      if (ranked)
        rws = std::make_unique<ClosureWorkspace<RankedEquivalenceLattice>>(*rctx);
      else
        ews = std::make_unique<ClosureWorkspace<EquivalenceLattice>>(*ectx);
      ClosureOptions copts;
      copts.early_exit_on_atoms = true;
      for (;;) {
        std::uint64_t c = next++;
        if (c >= chunks) break;
        auto eng = chunk_engine(seed, c);
        std::uint64_t lo = c * opts.chunk, hi = std::min(k, lo + opts.chunk), local = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
          auto q = detail::draw_quadruple(sampler, eng);
          bool gen;
          if (ranked) {
            Quadruple r{rctx->rank(q[0]), rctx->rank(q[1]), rctx->rank(q[2]), rctx->rank(q[3])};
            detail::sort4(r);
            if (!memo.empty()) {
              auto& slot = memo[colex_rank(r)];
              std::uint8_t v = slot.load(std::memory_order_relaxed);
              if (v == 0) {
                v = rws->run(std::span<const std::uint32_t>(r.data(), 4), copts).all_atoms ? 2 : 1;
                slot.store(v, std::memory_order_relaxed);
              }
              gen = v == 2;
            } else {
              gen = rws->run(std::span<const std::uint32_t>(r.data(), 4), copts).all_atoms;
            }
          } else {
            gen = ews->run(std::span<const Partition>(q.data(), 4), copts).all_atoms;
          }
          local += gen;
        }
        successes += local;
        std::uint64_t d = done += hi - lo;
        if (opts.progress) {
          std::lock_guard<std::mutex> lock(mu);
          opts.progress(d, successes.load());
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };

  unsigned threads = static_cast<unsigned>(std::clamp<std::uint64_t>(std::max(1u, opts.parallelism), 1, chunks));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SampleReport r = make_report(n, k, successes.load(), seed);
  r.parallelism = threads;
  r.wall_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return r;
}

// Scales an interval for rho(n) to one for gamma(n), rounding outward.
inline std::pair<BigInt, BigInt> gamma_bounds_from_interval(const Interval& iv, std::size_t n) {
  BigInt total = binomial(bell(static_cast<unsigned>(n)), 4);
  BigFloat t(total);
  BigFloat lo = std::max(0.0, iv.first) * t;
  BigFloat hi = std::min(1.0, iv.second) * t;
  BigInt a(boost::multiprecision::floor(lo));
  BigInt b(boost::multiprecision::ceil(hi));
  if (a < 0) a = 0;
  if (b > total) b = total;
  return {a, b};
}

inline std::pair<BigInt, BigInt> gamma_bounds_from_sample(const SampleReport& r, double level = 0.999) {
  if (r.s == 0) return {0, 0};
  auto it = r.intervals.find(level);
  Interval iv = it != r.intervals.end() ? it->second : confidence_interval(r.s, r.k, level);
  return gamma_bounds_from_interval(iv, r.n);
}

inline std::string fixed5(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(5) << x;
  return os.str();
}

inline std::string csv_header() {
  std::string h = "n,k,s,p_pct";
  for (const auto& [c, z] : confidence_table()) {
    std::string tag = "l" + fixed5(c).substr(2, 3);
    h += "," + tag + "_lo," + tag + "_hi";
  }
  return h;
}

// Percent values at five decimals, one column pair per tabulated level.
inline std::string to_csv_row(const SampleReport& r) {
  std::ostringstream os;
  os << r.n << "," << r.k << "," << r.s << "," << fixed5(100 * r.p_bar);
  for (const auto& [c, z] : confidence_table()) {
    auto it = r.intervals.find(c);
    Interval iv = it != r.intervals.end() ? it->second : confidence_interval(r.s, r.k, c);
    os << "," << fixed5(100 * iv.first) << "," << fixed5(100 * iv.second);
  }
  return os.str();
}

inline nlohmann::json to_json(const SampleReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["s"] = r.s;
  j["p_bar"] = r.p_bar;
  j["sigma_bar"] = r.sigma_bar;
  j["seed"] = r.seed;
  j["parallelism"] = r.parallelism;
  j["wall_seconds"] = r.wall_seconds;
  nlohmann::json iv = nlohmann::json::object();
  for (const auto& [c, p] : r.intervals) iv[fixed5(c).substr(0, 5)] = {p.first, p.second};
  j["intervals"] = iv;
  auto [lo, hi] = gamma_bounds_from_sample(r);
  j["gamma_0.999"] = {to_string(lo), to_string(hi)};
  return j;
}

}  // namespace partlat

#endif  // PARTLAT_MONTE_CARLO_HPP_
