// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end for the partlat library.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "partlat/direct_products.hpp"
#include "partlat/encoding.hpp"
#include "partlat/exact_enumeration.hpp"
#include "partlat/monte_carlo.hpp"
#include "partlat/zadori.hpp"

using namespace partlat;
using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr std::uint64_t kDefaultSeed = 20200927;

enum Exit { kOk = 0, kRefuted = 1, kUsage = 2, kCapacity = 3 };

struct Globals {
  std::string format = "table";
  unsigned threads = 1;
  double heartbeat = 60;
  int verbose = 0;
  std::vector<std::string> argv;
};

Globals g;

unsigned default_threads() {
  if (const char* env = std::getenv("PARTLAT_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t > 0) return static_cast<unsigned>(t);
    } catch (...) {
    }
    std::cerr << "ignoring PARTLAT_THREADS=" << env << "\n";
  }
  return 1;
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ";") + scalar(e);
    return s;
  }
  return v.dump();
}

// Prints a flat result object. JSON output carries the config echo.
void emit(const std::string& command, json result, const json& config) {
  if (g.format == "json") {
    json out;
    out["command"] = command;
    out["version"] = kVersion;
    out["config"] = config;
    out["argv"] = g.argv;
    out["result"] = std::move(result);
    std::cout << out.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::string head, row;
    for (auto it = result.begin(); it != result.end(); ++it) {
      head += (head.empty() ? "" : ",") + it.key();
      row += (row.empty() ? "" : ",") + scalar(it.value());
    }
    std::cout << head << "\n" << row << "\n";
  } else {
    std::size_t w = 0;
    for (auto it = result.begin(); it != result.end(); ++it) w = std::max(w, it.key().size());
    for (auto it = result.begin(); it != result.end(); ++it)
      std::cout << std::left << std::setw(static_cast<int>(w) + 2) << it.key() << scalar(it.value()) << "\n";
  }
}

void heartbeat(const std::string& what) { std::cerr << "#HB " << what << std::endl; }

// Throttled heartbeat for callbacks that fire often.
class Pacer {
 public:
  bool due() {
    auto now = std::chrono::steady_clock::now();
    if (g.heartbeat <= 0 || std::chrono::duration<double>(now - last_).count() < g.heartbeat) return false;
    last_ = now;
    return true;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string quad_string(const RankedEquivalenceLattice& L, const Quadruple& q) {
  std::string s;
  for (auto r : q) s += (s.empty() ? "" : " ") + to_block_string(L.partition(r));
  return s;
}

std::vector<IdQuadruple> parse_phis(const std::vector<std::string>& texts) {
  std::vector<IdQuadruple> out;
  for (const auto& t : texts) out.push_back(IdQuadruple::parse(t));
  return out;
}

json phi_list(const std::vector<IdQuadruple>& phis) {
  json j = json::array();
  for (const auto& f : phis) j.push_back(f.to_string());
  return j;
}

}  // namespace

int run(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g.argv.emplace_back(argv[i]);
  g.threads = default_threads();

  CLI::App app{"Generating sets of partition lattices"};
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--threads", g.threads, "Worker threads (default: PARTLAT_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--heartbeat", g.heartbeat, "Seconds between progress lines on stderr (0: off)");
  app.add_flag("-v,--verbose", g.verbose, "More diagnostics on stderr");
  std::string replay;
  app.add_option("--replay", replay, "Re-run the argv echoed in a JSON report")->check(CLI::ExistingFile);

  int code = kOk;
  json config;

  // count
  auto* count = app.add_subcommand("count", "Exact number of generating 4-subsets of Part(n)");
  std::size_t count_n = 4;
  bool count_orbit = false, count_raw = false;
  std::string checkpoint;
  std::optional<std::uint64_t> lo, hi;
  count->add_option("--n", count_n, "Size of the ground set")->required()->check(CLI::Range(1, 8));
  count->add_flag("--orbit", count_orbit, "Count S_n orbit representatives (default for n >= 6)");
  count->add_flag("--raw", count_raw, "Scan every 4-subset");
  count->add_option("--checkpoint", checkpoint, "Checkpoint file for resumable runs");
  count->add_option("--lo", lo, "First colex rank");
  count->add_option("--hi", hi, "One past the last colex rank");
  count->callback([&] {
    EnumJob job;
    job.n = count_n;
    job.orbit = count_orbit || (count_n >= 6 && !count_raw);
    job.parallelism = g.threads;
    job.checkpoint_path = checkpoint;
    if (lo) job.lo = *lo;
    job.hi = hi;
    job.heartbeat_seconds = g.heartbeat;
    job.progress = [](const EnumProgress& p) {
      heartbeat("ranks=" + std::to_string(p.next_rank - p.lo) + "/" + std::to_string(p.hi - p.lo) +
                " rate=" + std::to_string(static_cast<std::uint64_t>(p.ranks_per_second)) + "/s count=" + to_string(p.count));
    };
    config = {{"n", count_n}, {"orbit", job.orbit}, {"checkpoint", checkpoint}, {"threads", g.threads}};
    auto r = count_generating_quadruples(job);
    emit("count", {{"n", count_n}, {"count", to_string(r.count)}, {"complete", r.complete},
                   {"next_rank", r.next_rank}, {"seconds", r.elapsed_seconds}},
         config);
  });

  // list
  auto* list = app.add_subcommand("list", "List the generating 4-subsets of Part(n), n <= 5");
  std::size_t list_n = 4;
  list->add_option("--n", list_n, "Size of the ground set")->required()->check(CLI::Range(1, 5));
  list->callback([&] {
    auto L = ranked_equivalence(list_n);
    auto qs = list_generating_quadruples(list_n, g.threads);
    config = {{"n", list_n}};
    if (g.format == "json") {
      json arr = json::array();
      for (const auto& q : qs) arr.push_back(quad_string(*L, q));
      emit("list", {{"n", list_n}, {"count", qs.size()}, {"sets", arr}}, config);
    } else {
      if (g.format == "csv") std::cout << "rank_a,rank_b,rank_c,rank_d,partitions\n";
      for (const auto& q : qs) {
        if (g.format == "csv")
          std::cout << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ",\"" << quad_string(*L, q) << "\"\n";
        else
          std::cout << quad_string(*L, q) << "\n";
      }
    }
  });

  // antichain-audit
  auto* audit = app.add_subcommand("antichain-audit", "Check that every generating 4-subset is an antichain");
  std::size_t audit_n = 5;
  bool audit_first = false, audit_orbit = false;
  audit->add_option("--n", audit_n, "Size of the ground set")->required()->check(CLI::Range(1, 7));
  audit->add_flag("--stop-at-first", audit_first, "Stop at the first counterexample");
  audit->add_flag("--orbit", audit_orbit, "Scan orbit representatives only");
  audit->callback([&] {
    config = {{"n", audit_n}, {"stop_at_first", audit_first}, {"orbit", audit_orbit}};
    auto a = verify_all_antichain(audit_n, audit_first, audit_orbit, g.threads);
    auto L = ranked_equivalence(audit_n);
    json cx = json::array();
    for (const auto& e : a.counterexamples) cx.push_back(quad_string(*L, e.quad) + " (" + to_string(e.type) + ")");
    emit("antichain-audit",
         {{"n", audit_n}, {"generating_sets", to_string(a.generating_sets)}, {"all_antichains", a.all_antichains},
          {"counterexamples", cx}},
         config);
    if (!a.all_antichains) code = kRefuted;
  });

  // sample
  auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of the generating ratio");
  std::size_t sample_n = 7;
  std::uint64_t sample_k = 100000, seed = kDefaultSeed;
  sample->add_option("--n", sample_n, "Size of the ground set")->required()->check(CLI::Range(1, 64));
  sample->add_option("--k", sample_k, "Number of random 4-subsets")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  sample->add_option("--seed", seed, "Random seed");
  sample->callback([&] {
    config = {{"n", sample_n}, {"k", sample_k}, {"seed", seed}, {"threads", g.threads}};
    EstimateOptions opts;
    opts.parallelism = g.threads;
    Pacer pace;
    std::mutex mu;
    opts.progress = [&](std::uint64_t done, std::uint64_t s) {
      std::lock_guard<std::mutex> lock(mu);
      if (pace.due()) heartbeat("samples=" + std::to_string(done) + "/" + std::to_string(sample_k) + " successes=" + std::to_string(s));
    };
    auto r = estimate_rho(sample_n, sample_k, seed, opts);
    if (g.format == "csv") {
      std::cout << csv_header() << "\n" << to_csv_row(r) << "\n";
    } else if (g.format == "json") {
      emit("sample", to_json(r), config);
    } else {
      std::cout << "n=" << r.n << " k=" << r.k << " s=" << r.s << " p=" << fixed5(100 * r.p_bar) << "%\n";
      for (const auto& [lev, iv] : r.intervals)
        std::cout << std::fixed << std::setprecision(3) << lev << "  " << fixed5(100 * iv.first) << " "
                  << fixed5(100 * iv.second) << "\n";
    }
  });

  // ci
  auto* ci = app.add_subcommand("ci", "Confidence interval for a success count, in percent");
  std::uint64_t ci_s = 0, ci_k = 0;
  std::vector<double> levels{0.999};
  ci->add_option("--s", ci_s, "Successes")->required();
  ci->add_option("--k", ci_k, "Sample size")->required();
  ci->add_option("--level", levels, "Confidence level(s)")->check(CLI::Range(0.0, 1.0));
  ci->callback([&] {
    config = {{"s", ci_s}, {"k", ci_k}, {"levels", levels}};
    json res = {{"s", ci_s}, {"k", ci_k}, {"p_pct", fixed5(100.0 * static_cast<double>(ci_s) / static_cast<double>(ci_k))}};
    for (double lev : levels) {
      auto iv = confidence_interval(ci_s, ci_k, lev);
      if (g.format == "table") std::cout << fixed5(100 * iv.first) << " " << fixed5(100 * iv.second) << "\n";
      std::ostringstream key;
      key << std::fixed << std::setprecision(3) << lev;
      res["z_" + key.str()] = fixed5(z_for_level(lev));
      res["lo_" + key.str()] = fixed5(100 * iv.first);
      res["hi_" + key.str()] = fixed5(100 * iv.second);
    }
    if (g.format != "table") emit("ci", res, config);
  });

  // verify-prop1
  auto* prop1 = app.add_subcommand("verify-prop1", "Check the six-element 1+1+2 generating quadruple");
  prop1->callback([&] {
    auto r = verify_prop1();
    emit("verify-prop1",
         {{"identities", r.identities}, {"circle_atoms", r.circle_atoms}, {"generates", r.generates},
          {"closure_size", r.closure_size}, {"order_type", to_string(r.order)}, {"verified", r.ok()}},
         config);
    if (!r.ok()) code = kRefuted;
  });

  // zadori-verify
  auto* zv = app.add_subcommand("zadori-verify", "Check the atom terms of id-quadruple configurations");
  std::vector<std::string> zv_phi;
  std::vector<int> zv_m;
  int closure_limit = 0;
  zv->add_option("--phi", zv_phi, "Id-quadruple m:s:t:bits");
  zv->add_option("--m", zv_m, "Every id-quadruple of this length");
  zv->add_option("--closure-limit", closure_limit, "Cross-check by closure when n is at most this");
  zv->callback([&] {
    auto phis = parse_phis(zv_phi);
    for (int m : zv_m) {
      auto all = all_id_quadruples(m);
      phis.insert(phis.end(), all.begin(), all.end());
    }
    if (phis.empty()) throw ArgumentError("give --phi or --m");
    config = {{"phi", zv_phi}, {"m", zv_m}, {"closure_limit", closure_limit}};
    std::size_t good = 0, pairs = 0;
    json bad = json::array();
    Pacer pace;
    for (std::size_t i = 0; i < phis.size(); ++i) {
      auto r = verify_generation_via_terms(phis[i], closure_limit);
      pairs += r.pairs_checked;
      if (r.ok()) ++good;
      else bad.push_back(phis[i].to_string());
      if (pace.due()) heartbeat("configs=" + std::to_string(i + 1) + "/" + std::to_string(phis.size()));
    }
    emit("zadori-verify",
         {{"configurations", phis.size()}, {"verified", good}, {"pairs_checked", pairs}, {"failures", bad}}, config);
    if (good != phis.size()) code = kRefuted;
  });

  // get-through
  auto* gt = app.add_subcommand("get-through", "Does f'_{m'+1} get through the lock of phi");
  std::string gt_phi, gt_key;
  gt->add_option("--phi", gt_phi, "Lock id-quadruple m:s:t:bits")->required();
  gt->add_option("--key", gt_key, "Key id-quadruple m:s:t:bits")->required();
  gt->callback([&] {
    auto phi = IdQuadruple::parse(gt_phi), key = IdQuadruple::parse(gt_key);
    config = {{"phi", gt_phi}, {"key", gt_key}};
    json eff = json::array();
    for (int j = 0; j <= key.m + 1; ++j) eff.push_back(effectiveness(key, phi, j));
    emit("get-through", {{"phi", gt_phi}, {"key", gt_key}, {"gets_through", gets_through(key, phi)}, {"effectiveness", eff}},
         config);
  });

  // lower-bound
  auto* lb = app.add_subcommand("lower-bound", "Explicit lower bound on the number of generating 4-subsets");
  int lb_n = 7, lb_to = 0;
  lb->add_option("--n", lb_n, "Size (>= 7)")->required();
  lb->add_option("--to", lb_to, "Print every size from n to this one");
  lb->callback([&] {
    config = {{"n", lb_n}, {"to", lb_to}};
    const int last = std::max(lb_n, lb_to);
    if (g.format == "table" && last > lb_n) {
      for (int n = lb_n; n <= last; ++n) std::cout << n << "  " << to_string(lower_bound(n)) << "  " << to_scientific(lower_bound(n), 4) << "\n";
      return;
    }
    json res;
    for (int n = lb_n; n <= last; ++n) {
      auto v = lower_bound(n);
      if (last == lb_n && g.format == "table") {
        std::cout << to_string(v) << "\n";
        return;
      }
      res[std::to_string(n)] = to_string(v);
    }
    emit("lower-bound", res, config);
  });

  // family-g
  auto* fg = app.add_subcommand("family-g", "The explicit family of generating 4-subsets behind the lower bound");
  int fg_n = 7;
  bool fg_orbit = false;
  fg->add_option("--n", fg_n, "Size (>= 7)")->required();
  fg->add_flag("--orbit", fg_orbit, "Count distinct sets in the S_n orbit union (n <= 8)");
  fg->callback([&] {
    config = {{"n", fg_n}, {"orbit", fg_orbit}};
    auto fam = enumerate_family(fg_n);
    json res = {{"n", fg_n}, {"base", family_base(fg_n).to_string()}, {"base_sets", fam.size()},
                {"lower_bound", to_string(lower_bound(fg_n))}};
    if (fg_orbit) {
      auto r = family_orbit(fg_n);
      res["distinct_sets"] = r.distinct_sets;
      res["matches_bound"] = BigInt(r.distinct_sets) == r.expected;
      if (BigInt(r.distinct_sets) != r.expected || !r.all_sizes_four) code = kRefuted;
    }
    if (g.verbose) {
      json sets = json::array();
      for (const auto& q : fam) {
        std::string s;
        for (const auto& p : q) s += (s.empty() ? "" : " ") + to_block_string(p);
        sets.push_back(s);
      }
      res["sets"] = sets;
    }
    emit("family-g", res, config);
  });

  // product-verify
  auto* pv = app.add_subcommand("product-verify", "Check that a product of partition lattices is four-generated");
  std::vector<std::string> pv_phi;
  std::vector<int> pv_sizes;
  std::string pv_mode = "structural";
  std::size_t cap = kDefaultClosureCap;
  pv->add_option("--phi", pv_phi, "Id-quadruples of the factors");
  pv->add_option("--sizes", pv_sizes, "Two sizes n < n' (uses the two-factor construction)")->expected(2);
  pv->add_option("--mode", pv_mode, "Verification route")->check(CLI::IsMember({"structural", "full", "both"}));
  pv->add_option("--cap", cap, "Largest product for full closure");
  pv->callback([&] {
    std::vector<IdQuadruple> phis = parse_phis(pv_phi);
    json res;
    if (!pv_sizes.empty()) {
      auto plan = theorem_a_plan(pv_sizes[0], pv_sizes[1]);
      phis = plan.factors;
      res["case"] = plan.case_no;
    }
    if (phis.empty()) throw ArgumentError("give --phi or --sizes");
    config = {{"phi", pv_phi}, {"sizes", pv_sizes}, {"mode", pv_mode}, {"cap", cap}, {"threads", g.threads}};
    res["factors"] = phi_list(phis);
    res["product_size"] = to_string(product_size(phis));
    bool ok = true;
    std::optional<bool> st, full;
    if (pv_mode != "full") {
      auto r = verify_product_generation(phis, VerifyMode::structural, cap, g.threads);
      st = r.ok;
      res["structural"] = r.ok;
      res["factor_generates"] = r.factor_generates;
      if (!r.failures.empty()) res["structural_failures"] = r.failures;
    }
    if (pv_mode != "structural") {
      auto r = verify_product_generation(phis, VerifyMode::full_closure, cap, g.threads);
      full = r.ok;
      res["full_closure"] = r.ok;
      res["closure_size"] = r.closure_size.value_or(0);
    }
    if (st && full && *st != *full) res["modes_agree"] = false;
    ok = st.value_or(true) && full.value_or(true);
    res["verified"] = ok;
    emit("product-verify", res, config);
    if (!ok) code = kRefuted;
  });

  // plan-corollary
  auto* pc = app.add_subcommand("plan-corollary", "Parameter plans for long products and powers");
  std::string kind = "consecutive";
  int pc_n = 9, pc_u = 2;
  bool pc_verify = false;
  pc->add_option("--kind", kind, "consecutive | power")->check(CLI::IsMember({"consecutive", "power"}));
  pc->add_option("--n", pc_n, "First size for the consecutive plan (>= 9)");
  pc->add_option("--u", pc_u, "Exponent for the power plan");
  pc->add_flag("--verify", pc_verify, "Build the family and verify it structurally");
  pc->callback([&] {
    config = {{"kind", kind}, {"n", pc_n}, {"u", pc_u}, {"verify", pc_verify}};
    json res;
    std::optional<PhiFamily> fam;
    if (kind == "consecutive") {
      auto c = corollary_consecutive_plan(pc_n);
      res = {{"n", c.n}, {"d", c.d}, {"m", c.m}, {"run", std::to_string(c.run_lo) + ".." + std::to_string(c.run_hi)},
             {"target", std::to_string(c.n) + ".." + std::to_string(c.target_hi)}};
      if (pc_verify) fam = build_consecutive_family(c);
    } else {
      auto p = corollary_power_plan(pc_u);
      json m = json::array(), bounds = json::array(), powers = json::array();
      for (const auto& b : p.indices) {
        m.push_back(b.m);
        bounds.push_back(to_string(b.sba_lower));
      }
      for (auto [n, e] : p.factor_powers) powers.push_back(std::to_string(n) + "^" + std::to_string(e));
      res = {{"u", pc_u}, {"d", p.d}, {"m", m}, {"sba_lower", bounds}, {"factors", powers}, {"ok", p.ok}, {"notes", p.notes}};
      if (!p.ok) code = kRefuted;
      if (pc_verify) {
        std::vector<int> ms;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pq;
        for (const auto& b : p.indices) {
          ms.push_back(b.m);
          pq.emplace_back(b.p.convert_to<std::uint64_t>(), b.q.convert_to<std::uint64_t>());
        }
        fam = build_phi(p.d, ms, pq, PhiOptions::remark());
      }
    }
    if (fam) {
      auto r = verify_product_generation(fam->phi, VerifyMode::structural, kDefaultClosureCap, g.threads);
      res["factors_built"] = fam->phi.size();
      res["structural"] = r.ok;
      if (!r.ok) code = kRefuted;
    }
    emit("plan-corollary", res, config);
  });

  // example2020
  auto* ex = app.add_subcommand("example2020", "Arithmetic certificate for the d = 579 example");
  ex->callback([&] {
    auto r = example2020_check();
    emit("example2020",
         {{"d", r.d}, {"indices", r.count}, {"all_at_least_1e127", r.all_at_least}, {"min_index", r.argmin},
          {"min_p", to_scientific(r.min_pq, 6)}, {"min_p_digits", to_string(r.min_pq).size()}},
         config);
    if (!r.all_at_least) code = kRefuted;
  });

  // bell
  auto* bl = app.add_subcommand("bell", "Bell number B(n)");
  unsigned bell_n = 0;
  bl->add_option("--n", bell_n, "Index")->required();
  bl->callback([&] {
    config = {{"n", bell_n}};
    if (g.format == "table") std::cout << to_string(bell(bell_n)) << "\n";
    else emit("bell", {{"n", bell_n}, {"bell", to_string(bell(bell_n))}}, config);
  });

  // encode
  auto* en = app.add_subcommand("encode", "Padded vector form of a partition, or its inverse");
  std::string en_blocks, en_rgs, en_vector;
  std::size_t en_n = 0, en_pad = 0;
  en->add_option("--blocks", en_blocks, "Blocks such as {3,5},{0,4,2,6},{1,7} (0-indexed)");
  en->add_option("--n", en_n, "Ground set size for --blocks");
  en->add_option("--rgs", en_rgs, "Restricted growth string");
  en->add_option("--decode", en_vector, "Padded vector to decode");
  en->add_option("--pad", en_pad, "Pad to this length (default 2n+1)");
  en->callback([&] {
    config = {{"blocks", en_blocks}, {"n", en_n}, {"rgs", en_rgs}, {"decode", en_vector}, {"pad", en_pad}};
    if (!en_vector.empty()) {
      auto p = decode_canonical(parse_vector(en_vector));
      emit("encode", {{"blocks", to_block_string(p)}, {"rgs", to_rgs_string(p)}}, config);
      return;
    }
    Partition p;
    if (!en_blocks.empty()) {
      if (en_n == 0) throw ArgumentError("--blocks needs --n");
      p = parse_block_string(en_n, en_blocks);
    } else if (!en_rgs.empty()) {
      p = from_rgs_string(en_rgs);
    } else {
      throw ArgumentError("give --blocks, --rgs or --decode");
    }
    auto v = en_pad ? encode_canonical(p, en_pad) : encode_canonical(p);
    if (g.format == "table") std::cout << format_vector(v) << "\n";
    else emit("encode", {{"vector", format_vector(v)}, {"rgs", to_rgs_string(p)}}, config);
  });

  // --replay re-parses the echoed argv.
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--replay") {
      std::ifstream in(argv[i + 1]);
      if (!in) {
        std::cerr << "cannot read " << argv[i + 1] << "\n";
        return kUsage;
      }
      json rec;
      try {
        in >> rec;
      } catch (const json::exception& e) {
        std::cerr << "bad report: " << e.what() << "\n";
        return kUsage;
      }
      std::vector<std::string> args = rec.at("argv").get<std::vector<std::string>>();
      std::vector<char*> ptrs;
      for (auto& a : args) ptrs.push_back(a.data());
      g = Globals{};
      return run(static_cast<int>(ptrs.size()), ptrs.data());
    }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? kOk : kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity: " << e.what() << "\n";
    return kCapacity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kCapacity;
  }
  return code;
}

int main(int argc, char** argv) { return run(argc, argv); }
