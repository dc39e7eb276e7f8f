// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "partlat/enumerate.hpp"
#include "partlat/monte_carlo.hpp"

using namespace partlat;

namespace {

double round5(double x) { return std::round(x * 1e5) / 1e5; }

// Published sample statistics: n, k, s, then percent endpoints for 0.900,
// 0.950, 0.990, 0.999 (lo, hi each).
struct Row {
  std::size_t n;
  std::uint64_t k, s;
  double pct;
  std::array<double, 8> ends;
};

const std::vector<Row>& table_rows() {
  static const std::vector<Row> rows{
      {4, 10000000, 367221, 3.67221, {3.66243, 3.68199, 3.66055, 3.68387, 3.65689, 3.68753, 3.65264, 3.69178}},
      {5, 10000000, 196243, 1.96243, {1.95522, 1.96964, 1.95383, 1.97103, 1.95113, 1.97373, 1.94800, 1.97686}},
      {6, 10000000, 161768, 1.61768, {1.61112, 1.62424, 1.60986, 1.62550, 1.60740, 1.62796, 1.60455, 1.63081}},
      {7, 15000000, 238223, 1.58815, {1.58284, 1.59346, 1.58183, 1.59448, 1.57984, 1.59647, 1.57753, 1.59877}},
      {8, 500000, 8244, 1.64880, {1.61918, 1.67842, 1.61350, 1.68410, 1.60241, 1.69519, 1.58954, 1.70806}},
      {9, 25000, 438, 1.75200, {1.61551, 1.88849, 1.58936, 1.91464, 1.53826, 1.96574, 1.47896, 2.02504}},
  };
  return rows;
}

}  // namespace

TEST(Confidence, ReproducesPublishedIntervals) {
  auto iv = confidence_interval(238223, 15000000, 0.999);
  EXPECT_DOUBLE_EQ(round5(100 * iv.first), 1.57753);
  EXPECT_DOUBLE_EQ(round5(100 * iv.second), 1.59877);
  auto iv8 = confidence_interval(8244, 500000, 0.950);
  EXPECT_DOUBLE_EQ(round5(100 * iv8.first), 1.61350);
  EXPECT_DOUBLE_EQ(round5(100 * iv8.second), 1.68410);
}

TEST(Confidence, WholeStatisticsTable) {
  const double levels[] = {0.900, 0.950, 0.990, 0.999};
  for (const auto& row : table_rows()) {
    auto r = make_report(row.n, row.k, row.s);
    EXPECT_NEAR(100 * r.p_bar, row.pct, 5e-6) << row.n;
    for (int i = 0; i < 4; ++i) {
      auto iv = r.intervals.at(levels[i]);
      EXPECT_NEAR(100 * iv.first, row.ends[2 * i], 5.1e-6) << row.n << " " << levels[i];
      EXPECT_NEAR(100 * iv.second, row.ends[2 * i + 1], 5.1e-6) << row.n << " " << levels[i];
    }
  }
}

TEST(Confidence, ZInversionMatchesTable) {
  for (const auto& [c, z] : confidence_table()) EXPECT_NEAR(invert_normal_level(c), z, 5e-6) << c;
  EXPECT_THROW(invert_normal_level(0.0), ArgumentError);
  EXPECT_THROW(invert_normal_level(1.0), ArgumentError);
  EXPECT_THROW(confidence_interval(1, 10, 1.5), ArgumentError);
  EXPECT_NEAR(z_for_level(0.5), 0.6744897502, 1e-8);
}

TEST(Confidence, Degenerate) {
  auto iv = confidence_interval(0, 100, 0.99);
  EXPECT_EQ(iv.first, 0.0);
  EXPECT_EQ(iv.second, 0.0);
  auto r = make_report(3, 2, 1);
  EXPECT_TRUE(std::isfinite(r.sigma_bar));
  EXPECT_DOUBLE_EQ(r.sigma_bar, 0.5);
  for (const auto& [c, iv2] : r.intervals) {
    EXPECT_LE(iv2.first, r.p_bar);
    EXPECT_GE(iv2.second, r.p_bar);
    EXPECT_NEAR(r.p_bar - iv2.first, iv2.second - r.p_bar, 1e-15);
  }
  EXPECT_THROW(confidence_interval(3, 2, 0.9), ArgumentError);
  EXPECT_THROW(confidence_interval(0, 1, 0.9), ArgumentError);
}

TEST(Confidence, WidthScalesWithSampleSize) {
  // Same proportion, k-1 four times larger: half the width.
  auto a = make_report(5, 1001, 100);
  auto b = make_report(5, 4001, 400);
  EXPECT_DOUBLE_EQ(a.p_bar * 1001, 100);
  double wa = a.intervals.at(0.99).second - a.intervals.at(0.99).first;
  double wb = b.intervals.at(0.99).second - b.intervals.at(0.99).first;
  double pa = a.p_bar, pb = b.p_bar;
  // Correct for the tiny difference in p_bar.
  double ratio = (wa / std::sqrt(pa * (1 - pa))) / (wb / std::sqrt(pb * (1 - pb)));
  EXPECT_NEAR(ratio, 2.0, 1e-12);
}

TEST(GammaBounds, PublishedSevenInterval) {
  auto r = make_report(7, 15000000, 238223);
  auto [lo, hi] = gamma_bounds_from_sample(r);
  EXPECT_EQ(to_scientific(lo, 6), "3.86180e8");
  EXPECT_EQ(to_scientific(hi, 6), "3.91381e8");
  EXPECT_EQ(gamma_bounds_from_sample(make_report(7, 1000, 0)), (std::pair<BigInt, BigInt>{0, 0}));
}

TEST(GammaBounds, ExactRatioContainsExactCount) {
  auto r = make_report(5, 270725, 5305);
  auto [lo, hi] = gamma_bounds_from_sample(r);
  EXPECT_LE(lo, 5305);
  EXPECT_GE(hi, 5305);
}

TEST(Stam, DistributionTable) {
  for (std::size_t n : {1, 2, 4, 5, 9, 16, 40, 64}) {
    StamSampler s(n);
    EXPECT_GE(s.total_mass(), 1 - 1e-12) << n;
    EXPECT_LE(s.total_mass(), 1 + 1e-12) << n;
    const auto& cum = s.cumulative();
    EXPECT_TRUE(std::is_sorted(cum.begin(), cum.end()));
  }
  // P(u=j) = j^n / (e j! B_n) for n = 4, j = 2: 16 / (2e * 15).
  StamSampler s4(4);
  EXPECT_NEAR(s4.probability(2), 16.0 / (2 * std::exp(1.0) * 15), 1e-15);
  EXPECT_THROW(StamSampler(0), DimensionError);
}

TEST(Stam, SingletonGroundSet) {
  StamSampler s(1);
  auto eng = chunk_engine(1, 0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(stam_sample(s, eng), Partition::bottom(1));
}

TEST(Stam, UniformOnPart4) {
  StamSampler s(4);
  auto all = enumerate_partitions(4);
  std::map<Partition, std::uint64_t> freq;
  const std::uint64_t draws = 1000000;
  auto eng = chunk_engine(2024, 0);
  for (std::uint64_t i = 0; i < draws; ++i) ++freq[s.sample(eng)];
  ASSERT_EQ(freq.size(), 15u);
  const double p = 1.0 / 15, se = std::sqrt(p * (1 - p) / draws);
  double chi2 = 0;
  for (const auto& part : all) {
    double f = static_cast<double>(freq[part]) / draws;
    EXPECT_LT(std::abs(f - p), 4 * se);
    double e = draws * p;
    chi2 += (freq[part] - e) * (freq[part] - e) / e;
  }
  // Upper 1e-4 tail of chi-square with 14 degrees of freedom is about 44.3.
  EXPECT_LT(chi2, 44.3);
}

TEST(EstimateRho, ReproducibleAndWorkerIndependent) {
  EstimateOptions one, four;
  four.parallelism = 4;
  one.chunk = four.chunk = 5000;
  auto a = estimate_rho(5, 60000, 42, one);
  auto b = estimate_rho(5, 60000, 42, one);
  auto c = estimate_rho(5, 60000, 42, four);
  EXPECT_EQ(a.s, b.s);
  EXPECT_EQ(a.s, c.s);
  EXPECT_NE(a.s, estimate_rho(5, 60000, 43, one).s);
}

TEST(EstimateRho, CoversExactValueForFour) {
  auto r = estimate_rho(4, 100000, 7);
  const double exact = 50.0 / 1365;
  auto iv = r.intervals.at(0.999);
  EXPECT_LE(iv.first, exact);
  EXPECT_GE(iv.second, exact);
}

TEST(EstimateRho, MemoMatchesDirectClosure) {
  EstimateOptions memo, direct;
  direct.memo_limit = 0;
  EXPECT_EQ(estimate_rho(5, 30000, 9, memo).s, estimate_rho(5, 30000, 9, direct).s);
}

TEST(EstimateRho, LargeNUsesGenericContext) {
  auto r = estimate_rho(9, 10, 1);
  EXPECT_EQ(r.k, 10u);
  EXPECT_LE(r.s, 10u);
}

TEST(EstimateRho, DegenerateSample) {
  auto r = estimate_rho(3, 2, 5);
  EXPECT_TRUE(std::isfinite(r.sigma_bar));
  EXPECT_THROW(estimate_rho(3, 1, 5), ArgumentError);
}

TEST(Report, CsvAndJson) {
  auto r = make_report(7, 15000000, 238223);
  EXPECT_EQ(csv_header(), "n,k,s,p_pct,l900_lo,l900_hi,l950_lo,l950_hi,l990_lo,l990_hi,l999_lo,l999_hi");
  EXPECT_EQ(to_csv_row(r),
            "7,15000000,238223,1.58815,1.58284,1.59346,1.58183,1.59448,1.57984,1.59647,1.57753,1.59877");
  auto j = to_json(r);
  EXPECT_EQ(j["s"], 238223);
  EXPECT_EQ(j["intervals"]["0.999"].size(), 2u);
}
