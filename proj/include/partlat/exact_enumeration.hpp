// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_EXACT_ENUMERATION_HPP_
#define PARTLAT_EXACT_ENUMERATION_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "partlat/bigint.hpp"
#include "partlat/closure.hpp"
#include "partlat/errors.hpp"
#include "partlat/lattice.hpp"

namespace partlat {

// Four partition ranks a < b < c < d.
using Quadruple = std::array<std::uint32_t, 4>;

// Colexicographic ranking of 4-subsets: rank = C(a,1)+C(b,2)+C(c,3)+C(d,4).
inline std::uint64_t colex_rank(const Quadruple& q) {
  return binomial_u64(q[0], 1) + binomial_u64(q[1], 2) + binomial_u64(q[2], 3) + binomial_u64(q[3], 4);
}

inline Quadruple colex_unrank(std::uint64_t r) {
  Quadruple q{};
  for (unsigned k = 4; k >= 1; --k) {
    // Largest x with C(x, k) <= r.
    std::uint64_t lo = k - 1, hi = k - 1;
    while (binomial_u64(hi, k) <= r) hi = hi * 2 + 1;
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (binomial_u64(mid, k) <= r)
        lo = mid;
      else
        hi = mid - 1;
    }
    q[k - 1] = static_cast<std::uint32_t>(lo);
    r -= binomial_u64(lo, k);
  }
  return q;
}

// Successor in colex order; no bound check.
inline void colex_next(Quadruple& q) {
  for (unsigned i = 0; i < 4; ++i) {
    if (i == 3 || q[i] + 1 < q[i + 1]) {
      ++q[i];
      for (unsigned j = 0; j < i; ++j) q[j] = j;
      return;
    }
  }
}

struct EnumProgress {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t next_rank = 0;
  BigInt count;
  double elapsed_seconds = 0;
  double ranks_per_second = 0;
};

struct EnumJob {
  std::size_t n = 4;
  std::uint64_t lo = 0;
  std::optional<std::uint64_t> hi;  // default: C(Bell(n), 4)
  std::string checkpoint_path;      // empty: no checkpoint
  unsigned parallelism = 1;
  std::uint64_t block_size = 1 << 15;
  // Count S_n-orbit representatives weighted by orbit size.
  bool orbit = false;
  // Reject quadruples whose join is not top or whose meet is not bottom,
  // and for n >= 4 those containing bottom or top, before running a closure.
  bool prune = true;
  bool collect = false;             // keep generating quadruples in the result
  bool audit = false;               // record generating quadruples that are not antichains
  bool stop_on_violation = false;   // with audit: stop after the first violation
  std::optional<std::uint64_t> stop_at_rank;  // simulate an interruption
  std::vector<int> relabel;         // optional permutation applied to the ground set
  double heartbeat_seconds = 0;     // 0: only at the end
  std::function<void(const EnumProgress&)> progress;
  std::function<void(const Quadruple&)> on_generating;  // streamed in rank order
};

struct AuditEntry {
  Quadruple quad{};
  OrderType type = OrderType::other;
};

struct EnumResult {
  std::size_t n = 0;
  std::uint64_t lo = 0, hi = 0;
  std::uint64_t next_rank = 0;  // first rank not covered
  BigInt count;
  bool complete = false;
  std::vector<Quadruple> generating;
  std::vector<AuditEntry> antichain_violations;
  double elapsed_seconds = 0;
};

inline std::uint64_t quadruple_space(std::size_t n) {
  return binomial_u64(bell_u64(static_cast<unsigned>(n)), 4);
}

namespace detail {

struct Checkpoint {
  std::size_t n = 0;
  std::string mode;
  std::uint64_t lo = 0, hi = 0, next_rank = 0;
  BigInt count;
};

inline constexpr int kCheckpointVersion = 1;

inline void write_checkpoint(const std::string& path, const Checkpoint& c) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IntegrityError("cannot write checkpoint " + tmp);
    out << "partlat-checkpoint " << kCheckpointVersion << "\n"
        << "n " << c.n << "\n"
        << "mode " << c.mode << "\n"
        << "range_lo " << c.lo << "\n"
        << "range_hi " << c.hi << "\n"
        << "next_rank " << c.next_rank << "\n"
        << "count " << c.count << "\n";
    if (!out) throw IntegrityError("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

inline std::optional<Checkpoint> read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::map<std::string, std::string> kv;
  std::string header;
  int version = 0;
  in >> header >> version;
  if (header != "partlat-checkpoint") throw IntegrityError("not a checkpoint file: " + path);
  if (version != kCheckpointVersion)
    throw IntegrityError("unsupported checkpoint version " + std::to_string(version));
  std::string key, value;
  while (in >> key >> value) kv[key] = value;
  Checkpoint c;
  try {
    c.n = std::stoul(kv.at("n"));
    c.mode = kv.at("mode");
    c.lo = std::stoull(kv.at("range_lo"));
    c.hi = std::stoull(kv.at("range_hi"));
    c.next_rank = std::stoull(kv.at("next_rank"));
    c.count = BigInt(kv.at("count"));
  } catch (const std::exception&) {
    throw IntegrityError("malformed checkpoint " + path);
  }
  if (c.next_rank < c.lo || c.next_rank > c.hi) throw IntegrityError("checkpoint rank out of range");
  return c;
}

// Precomputed images of every partition rank under every permutation.
class PermutationTable {
 public:
  PermutationTable(const RankedEquivalenceLattice& ctx) : size_(ctx.count()) {
    std::vector<int> perm(ctx.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t r = 0; r < size_; ++r)
        images_.push_back(static_cast<std::uint16_t>(
            ctx.rank(ctx.partition(static_cast<std::uint32_t>(r)).permuted(perm))));
      ++count_;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::size_t count() const noexcept { return count_; }
  std::uint32_t image(std::size_t perm, std::uint32_t r) const noexcept { return images_[perm * size_ + r]; }

 private:
  std::size_t size_;
  std::size_t count_ = 0;
  std::vector<std::uint16_t> images_;
};

inline void sort4(Quadruple& q) {
  auto cs = [](std::uint32_t& a, std::uint32_t& b) {
    if (b < a) std::swap(a, b);
  };
  cs(q[0], q[1]);
  cs(q[2], q[3]);
  cs(q[0], q[2]);
  cs(q[1], q[3]);
  cs(q[1], q[2]);
}

// Colex comparison of sorted quadruples.
inline bool colex_less(const Quadruple& a, const Quadruple& b) {
  for (int i = 3; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Orbit size if q is the colex-least member of its orbit, otherwise 0.
inline std::uint64_t orbit_weight(const PermutationTable& perms, const Quadruple& q) {
  std::uint64_t stabilizer = 0;
  for (std::size_t p = 0; p < perms.count(); ++p) {
    Quadruple img{perms.image(p, q[0]), perms.image(p, q[1]), perms.image(p, q[2]), perms.image(p, q[3])};
    sort4(img);
    if (colex_less(img, q)) return 0;
    if (img == q) ++stabilizer;
  }
  return perms.count() / stabilizer;
}

struct BlockResult {
  BigInt count;
  std::vector<Quadruple> generating;
  std::vector<AuditEntry> violations;
};

}  // namespace detail

// Exhaustive count of the 4-element generating sets of Equ(n) over a colex
// rank range, optionally parallel, checkpointed and resumable.
inline EnumResult count_generating_quadruples(const EnumJob& job) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  if (job.n < 1 || job.n > RankedEquivalenceLattice::kMaxN)
    throw CapacityError("exact enumeration supports 1 <= n <= 8");
  if (job.orbit && job.n > 7) throw CapacityError("orbit mode supports n <= 7");
  auto ctx_ptr = ranked_equivalence(job.n);
  const auto& ctx = *ctx_ptr;
  const std::uint64_t total = quadruple_space(job.n);
  const std::uint64_t hi = job.hi.value_or(total);
  if (job.lo > hi || hi > total) throw ArgumentError("rank range outside [0, C(Bell(n),4)]");
  if (job.block_size == 0) throw ArgumentError("block size must be positive");

  std::vector<std::uint32_t> relabel(ctx.count());
  std::iota(relabel.begin(), relabel.end(), 0);
  if (!job.relabel.empty()) {
    if (job.relabel.size() != job.n) throw ArgumentError("relabel must be a permutation of the ground set");
    std::vector<int> sorted = job.relabel;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < job.n; ++i)
      if (sorted[i] != static_cast<int>(i)) throw ArgumentError("relabel must be a permutation");
    for (std::uint32_t r = 0; r < ctx.count(); ++r) relabel[r] = ctx.rank(ctx.partition(r).permuted(job.relabel));
  }

  const std::string mode = job.orbit ? "orbit" : (job.prune ? "raw" : "raw-unpruned");
  EnumResult result;
  result.n = job.n;
  result.lo = job.lo;
  result.hi = hi;
  std::uint64_t start = job.lo;
  BigInt committed = 0;
  if (!job.checkpoint_path.empty()) {
    if (auto cp = detail::read_checkpoint(job.checkpoint_path)) {
      if (cp->n != job.n || cp->mode != mode || cp->lo != job.lo || cp->hi != hi)
        throw IntegrityError("checkpoint " + job.checkpoint_path + " belongs to a different job (n=" +
                             std::to_string(cp->n) + ", mode=" + cp->mode + ", range [" +
                             std::to_string(cp->lo) + "," + std::to_string(cp->hi) + "))");
      start = cp->next_rank;
      committed = cp->count;
    }
  }

  std::unique_ptr<detail::PermutationTable> perms;
  if (job.orbit) perms = std::make_unique<detail::PermutationTable>(ctx);

  const std::uint64_t span = hi - start;
  const std::uint64_t blocks = (span + job.block_size - 1) / job.block_size;
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::map<std::uint64_t, detail::BlockResult> pending;
  std::uint64_t frontier_block = 0;
  std::uint64_t frontier_rank = start;
  auto last_beat = t0;
  std::exception_ptr failure;

  auto report = [&](bool force) {
    auto now = clock::now();
    double since = std::chrono::duration<double>(now - last_beat).count();
    if (!force && (job.heartbeat_seconds <= 0 || since < job.heartbeat_seconds)) return;
    last_beat = now;
    if (job.progress) {
      EnumProgress p;
      p.lo = job.lo;
      p.hi = hi;
      p.next_rank = frontier_rank;
      p.count = committed;
      p.elapsed_seconds = std::chrono::duration<double>(now - t0).count();
      p.ranks_per_second = p.elapsed_seconds > 0 ? (frontier_rank - start) / p.elapsed_seconds : 0;
      job.progress(p);
    }
  };

  auto commit = [&](std::uint64_t block, detail::BlockResult&& r) {
    std::lock_guard<std::mutex> lock(mu);
    pending.emplace(block, std::move(r));
    bool advanced = false;
    while (!pending.empty() && pending.begin()->first == frontier_block) {
      auto& done = pending.begin()->second;
      committed += done.count;
      for (const auto& q : done.generating) {
        if (job.on_generating) job.on_generating(q);
        if (job.collect) result.generating.push_back(q);
      }
      for (auto& v : done.violations) result.antichain_violations.push_back(v);
      pending.erase(pending.begin());
      ++frontier_block;
      frontier_rank = std::min(hi, start + frontier_block * job.block_size);
      advanced = true;
    }
    if (!advanced) return;
    if (!job.checkpoint_path.empty())
      detail::write_checkpoint(job.checkpoint_path, {job.n, mode, job.lo, hi, frontier_rank, committed});
    if (job.stop_on_violation && !result.antichain_violations.empty()) stop = true;
    if (job.stop_at_rank && frontier_rank >= *job.stop_at_rank) stop = true;
    report(false);
  };

  const std::uint32_t top = ctx.top();
  // Equ(n), n >= 4, is not 3-generated, so a generating 4-set holds neither
  // bottom nor top. Equ(3) has only five elements and needs one of them.
  const bool skip_bounds = job.n >= 4;
  auto worker = [&] {
    try {
      ClosureWorkspace<RankedEquivalenceLattice> ws(ctx);
      ClosureOptions opts;
      opts.early_exit_on_atoms = true;
      while (!stop) {
        std::uint64_t b = next_block++;
        if (b >= blocks) break;
        std::uint64_t r0 = start + b * job.block_size;
        std::uint64_t r1 = std::min(hi, r0 + job.block_size);
        detail::BlockResult res;
        std::uint64_t local = 0;
        Quadruple q = colex_unrank(r0);
        for (std::uint64_t r = r0; r < r1; ++r, colex_next(q)) {
          Quadruple g{relabel[q[0]], relabel[q[1]], relabel[q[2]], relabel[q[3]]};
          if (job.prune) {
            if (skip_bounds && (q[0] == 0 || q[3] == top)) continue;  // relabeling fixes bottom and top
            if (ctx.join(ctx.join(g[0], g[1]), ctx.join(g[2], g[3])) != top) continue;
            if (ctx.meet(ctx.meet(g[0], g[1]), ctx.meet(g[2], g[3])) != 0) continue;
          }
          std::uint64_t weight = 1;
          if (job.orbit) {
            weight = detail::orbit_weight(*perms, q);
            if (weight == 0) continue;
          }
          if (!ws.run(std::span<const std::uint32_t>(g.data(), 4), opts).all_atoms) continue;
          local += weight;
          if (job.collect || job.on_generating) res.generating.push_back(q);
          if (job.audit) {
            auto t = order_type(std::span<const std::uint32_t>(g.data(), 4), ctx);
            if (t != OrderType::antichain) res.violations.push_back({q, t});
          }
        }
        res.count = local;
        commit(b, std::move(res));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };

  unsigned threads = std::max(1u, job.parallelism);
  if (threads > blocks) threads = static_cast<unsigned>(std::max<std::uint64_t>(1, blocks));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.count = committed;
  result.next_rank = frontier_rank;
  result.complete = frontier_rank == hi;
  result.elapsed_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  report(true);
  return result;
}

inline EnumResult count_generating_quadruples(std::size_t n, unsigned parallelism = 1,
                                              const std::string& checkpoint = {}) {
  EnumJob job;
  job.n = n;
  job.parallelism = parallelism;
  job.checkpoint_path = checkpoint;
  return count_generating_quadruples(job);
}

// All generating 4-subsets in colex order, as partition ranks.
inline std::vector<Quadruple> list_generating_quadruples(std::size_t n, unsigned parallelism = 1) {
  if (n > 5) throw CapacityError("in-memory listing supports n <= 5; stream larger n");
  EnumJob job;
  job.n = n;
  job.parallelism = parallelism;
  job.collect = true;
  return count_generating_quadruples(job).generating;
}

struct AntichainAudit {
  bool all_antichains = true;
  BigInt generating_sets;
  std::vector<AuditEntry> counterexamples;
};

// Checks that every generating 4-subset of Equ(n) is an antichain. With
// stop_at_first the scan ends at the first counterexample.
inline AntichainAudit verify_all_antichain(std::size_t n, bool stop_at_first = false, bool orbit = false,
                                           unsigned parallelism = 1) {
  EnumJob job;
  job.n = n;
  job.parallelism = parallelism;
  job.audit = true;
  job.orbit = orbit;
  job.stop_on_violation = stop_at_first;
  auto r = count_generating_quadruples(job);
  AntichainAudit a;
  a.counterexamples = std::move(r.antichain_violations);
  a.all_antichains = a.counterexamples.empty();
  a.generating_sets = r.count;
  return a;
}

}  // namespace partlat

#endif  // PARTLAT_EXACT_ENUMERATION_HPP_
