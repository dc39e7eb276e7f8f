// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion.

#include <boost/math/distributions/chi_squared.hpp>

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "partlat/direct_products.hpp"
#include "partlat/exact_enumeration.hpp"
#include "partlat/monte_carlo.hpp"
#include "partlat/zadori.hpp"

using namespace partlat;

namespace {

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0) { return std::chrono::duration<double>(clock_type::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x, int digits = 2) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::string sci(double x) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << x;
  return s.str();
}

bool g_long = false;

Outcome exact_counts() {
  std::ostringstream d;
  bool ok = true;
  auto t0 = clock_type::now();
  auto c4 = count_generating_quadruples(4).count;
  double s4 = since(t0);
  t0 = clock_type::now();
  auto c5 = count_generating_quadruples(5).count;
  double s5 = since(t0);
  ok = c4 == 50 && s4 < 1 && c5 == 5305 && s5 < 60;
  d << "gamma(4)=" << c4 << " in " << fmt(s4, 3) << "s, gamma(5)=" << c5 << " in " << fmt(s5) << "s";
  EnumJob job;
  job.n = 6;
  job.orbit = true;
  t0 = clock_type::now();
  auto c6 = count_generating_quadruples(job).count;
  d << ", gamma(6)=" << c6 << " (orbit, " << fmt(since(t0)) << "s)";
  ok = ok && c6 == 1107900;
  if (g_long) {
    job.orbit = false;
    t0 = clock_type::now();
    auto raw = count_generating_quadruples(job).count;
    d << ", raw " << raw << " (" << fmt(since(t0), 0) << "s)";
    ok = ok && raw == 1107900;
  } else {
    d << ", raw n=6 run gated by --long";
  }
  return {ok, d.str()};
}

Outcome antichains() {
  auto a = verify_all_antichain(5);
  return {a.all_antichains && a.generating_sets == 5305,
          std::to_string(static_cast<long long>(a.generating_sets)) + " generating sets, " +
              std::to_string(a.counterexamples.size()) + " counterexamples"};
}

Outcome prop1() {
  auto r = verify_prop1();
  return {r.ok() && r.closure_size == 203,
          "closure " + std::to_string(r.closure_size) + ", order " + to_string(r.order) +
              ", identities " + (r.identities ? "ok" : "bad")};
}

Outcome lower_bounds() {
  const char* exact[] = {"25200", "604800", "13608000", "816480000", "15567552000"};
  const char* sci[] = {"1.868e12", "3.287e13", "6.902e15", "1.164e17", "3.911e19"};
  int good = 0;
  for (int n = 7; n <= 11; ++n) good += to_string(lower_bound(n)) == exact[n - 7];
  for (int n = 12; n <= 16; ++n) good += to_scientific(lower_bound(n), 4) == sci[n - 12];
  return {good == 10, std::to_string(good) + "/10 table values, LB(16)=" + to_string(lower_bound(16))};
}

Outcome lemma() {
  auto t0 = clock_type::now();
  std::size_t configs = 0, good = 0, closures = 0;
  for (int m = 1; m <= 5; m += 2)
    for (const auto& phi : all_id_quadruples(m)) {
      ++configs;
      auto r = verify_generation_via_terms(phi, m <= 3 ? 8 : 0);
      if (r.closure_generates) ++closures;
      if (r.ok() && (m > 3 || r.closure_generates.value_or(false))) ++good;
    }
  double s = since(t0);
  return {good == configs && s <= 600, std::to_string(good) + "/" + std::to_string(configs) + " configurations, " +
                                           std::to_string(closures) + " closure cross-checks, " + fmt(s) + "s"};
}

Outcome lock_and_key() {
  std::size_t pairs = 0, bad = 0, prefix_checks = 0, prefix_bad = 0;
  std::map<int, std::vector<IdQuadruple>> all;
  for (int m = 1; m <= 5; m += 2) all[m] = all_id_quadruples(m);
  for (int m = 1; m <= 5; m += 2)
    for (const auto& phi : all[m]) {
      auto z = build_configuration(phi);
      EquivalenceLattice ctx(static_cast<std::size_t>(z.n));
      const Partition lock = z.edge_atom(m + 1);
      for (int mp = 1; mp <= 5; mp += 2)
        for (const auto& key : all[mp]) {
          const bool prefix_case = phi.z.at(1) == 0 && key.z.at(1) == 1;
          if (mp != m && !prefix_case) continue;
          ZTermBuilder zt(key);
          ZEvaluator ev(zt.arena(), ctx, z.mu());
          if (mp == m) {
            ++pairs;
            if (leq(lock, ev.value(zt.f(m + 1))) != leq(key.z, phi.z)) ++bad;
          }
          if (prefix_case)
            for (int i = 0; i <= mp + 1; ++i) {
              ++prefix_checks;
              if (leq(lock, ev.value(zt.f(i)))) ++prefix_bad;
            }
        }
    }
  return {bad == 0 && prefix_bad == 0, std::to_string(pairs - bad) + "/" + std::to_string(pairs) +
                                           " same-length pairs, " + std::to_string(prefix_checks - prefix_bad) + "/" +
                                           std::to_string(prefix_checks) + " 0-prefix vs 1-prefix terms"};
}

Outcome products() {
  std::ostringstream d;
  bool ok = true;
  for (auto [n, np, size] : {std::tuple{5, 6, 10556}, std::tuple{5, 7, 45604}}) {
    auto plan = theorem_a_plan(n, np);
    auto full = verify_product_generation(plan.factors, VerifyMode::full_closure);
    auto st = verify_product_generation(plan.factors, VerifyMode::structural);
    bool here = full.ok && st.ok && full.closure_size == static_cast<std::size_t>(size) && full.seconds <= 600;
    ok = ok && here;
    d << n << "x" << np << " closure " << full.closure_size.value_or(0) << " (" << fmt(full.seconds) << "s) structural "
      << (st.ok ? "ok" : "FAIL") << "; ";
  }
  auto p78 = theorem_a_plan(7, 8);
  auto st78 = verify_product_generation(p78.factors, VerifyMode::structural);
  ok = ok && st78.ok;
  d << "7x8 structural " << (st78.ok ? "ok" : "FAIL") << "; ";
  if (g_long) {
    auto p67 = theorem_a_plan(6, 7);
    auto full = verify_product_generation(p67.factors, VerifyMode::full_closure);
    auto st = verify_product_generation(p67.factors, VerifyMode::structural);
    bool here = full.ok && st.ok && full.closure_size == 178031u;
    ok = ok && here;
    d << "6x7 closure " << full.closure_size.value_or(0) << " (" << fmt(full.seconds, 0) << "s) structural "
      << (st.ok ? "ok" : "FAIL");
  } else {
    d << "6x7 full closure gated by --long";
  }
  return {ok, d.str()};
}

Outcome statistics() {
  auto iv = confidence_interval(238223, 15000000, 0.999);
  std::string lo = fixed5(100 * iv.first), hi = fixed5(100 * iv.second);
  bool ok = lo == "1.57753" && hi == "1.59877";
  std::string zs;
  for (const auto& [level, z] : confidence_table()) {
    std::string inv = fixed5(invert_normal_level(level));
    ok = ok && inv == fixed5(z);
    zs += " " + inv;
  }
  return {ok, "[" + lo + ", " + hi + "] percent; z by inversion:" + zs};
}

Outcome sampler() {
  StamSampler s(4);
  auto ranked = ranked_equivalence(4);
  std::vector<std::uint64_t> freq(ranked->count(), 0);
  const std::uint64_t N = 1000000;
  auto eng = chunk_engine(20200927, 0);
  for (std::uint64_t i = 0; i < N; ++i) ++freq[ranked->rank(s.sample(eng))];
  const double p = 1.0 / 15, se = std::sqrt(p * (1 - p) / static_cast<double>(N));
  double chi = 0, worst = 0;
  for (auto f : freq) {
    double x = static_cast<double>(f) / static_cast<double>(N);
    worst = std::max(worst, std::abs(x - p) / se);
    double e = p * static_cast<double>(N);
    chi += (static_cast<double>(f) - e) * (static_cast<double>(f) - e) / e;
  }
  double pval = boost::math::cdf(boost::math::complement(boost::math::chi_squared(14), chi));
  bool ok = freq.size() == 15 && worst <= 4 && pval > 1e-4 && s.total_mass() >= 1 - 1e-12;
  return {ok, "max deviation " + fmt(worst) + " SE, chi2 p=" + fmt(pval, 4) + ", mass deficit " +
                  sci(1 - s.total_mass())};
}

Outcome coverage() {
  const double exact = 0.019595531;
  int covered = 0;
  auto t0 = clock_type::now();
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto r = estimate_rho(5, 1000000, seed);
    auto iv = r.intervals.at(0.999);
    covered += iv.first <= exact && exact <= iv.second;
  }
  return {covered >= 49, std::to_string(covered) + "/50 intervals cover, " + fmt(since(t0), 0) + "s"};
}

Outcome family() {
  auto r = family_orbit(7);
  auto lat = ranked_equivalence(7);
  auto fam = enumerate_family(7);
  std::mt19937_64 rng(7);
  std::vector<int> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  int gen = 0;
  for (int i = 0; i < 100; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto& q = fam[rng() % fam.size()];
    std::vector<std::uint32_t> gs;
    for (const auto& p : q) gs.push_back(lat->rank(p.permuted(perm)));
    gen += generates(gs, *lat);
  }
  return {BigInt(r.distinct_sets) == 25200 && r.all_sizes_four && gen == 100,
          std::to_string(r.distinct_sets) + " distinct sets from " + std::to_string(r.base_sets) + " bases, " +
              std::to_string(gen) + "/100 samples generate"};
}

Outcome example2020() {
  auto t0 = clock_type::now();
  auto r = example2020_check();
  double s = since(t0);
  return {r.all_at_least && r.count == 505 && s <= 60,
          std::to_string(r.count) + " indices, min p_i=q_i=" + to_scientific(r.min_pq, 4) + " at i=" +
              std::to_string(r.argmin) + ", " + fmt(s, 3) + "s"};
}

Outcome oracles() {
  auto L = ranked_equivalence(4);
  std::size_t agree = 0, total = 0, gens = 0;
  for (std::uint32_t a = 0; a < 15; ++a)
    for (std::uint32_t b = a + 1; b < 15; ++b)
      for (std::uint32_t c = b + 1; c < 15; ++c)
        for (std::uint32_t d = c + 1; d < 15; ++d) {
          std::vector<std::uint32_t> q{a, b, c, d};
          bool fast = generates(q, *L, true);
          bool slow = close(q, *L).elements.size() == 15;
          ++total;
          agree += fast == slow;
          gens += slow;
        }
  std::size_t sba_ok = 0, sba_total = 0;
  for (int t = 1; t <= 6; ++t)
    for (int u = 1; u <= t + 1; ++u) {
      const int half = t / 2;
      BigInt exact = sba_exact(u, t);
      if (u - 1 >= half) {
        ++sba_total;
        sba_ok += exact == binomial(static_cast<unsigned>(t - 1), static_cast<unsigned>(half));
      }
      if (u - 1 <= half) {
        ++sba_total;
        sba_ok += exact >= binomial(static_cast<unsigned>(t - 1), static_cast<unsigned>(u - 1));
      }
    }
  return {total == 1365 && agree == total && gens == 50 && sba_ok == sba_total,
          std::to_string(agree) + "/" + std::to_string(total) + " subsets agree (" + std::to_string(gens) +
              " generate), sba " + std::to_string(sba_ok) + "/" + std::to_string(sba_total)};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) g_long = true;
    else only.insert(std::atoi(argv[i]));
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact counts", exact_counts},       {"generating sets are antichains", antichains},
      {"six-element 1+1+2 quadruple", prop1}, {"lower-bound table", lower_bounds},
      {"configuration terms", lemma},       {"lock and key", lock_and_key},
      {"two-factor products", products},    {"interval arithmetic", statistics},
      {"urn sampler", sampler},             {"Monte Carlo coverage", coverage},
      {"explicit family orbit", family},    {"d=579 certificate", example2020},
      {"oracle equivalence", oracles},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    auto t0 = clock_type::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << std::setw(2) << id << " " << criteria[i].first << ": " << o.detail
              << " [" << fmt(since(t0)) << "s]" << std::endl;
  }
  return failed ? 1 : 0;
}
