// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "oracle.hpp"
#include "partlat/enumerate.hpp"
#include "partlat/exact_enumeration.hpp"

using namespace partlat;

namespace {

std::string temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("partlat_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove(p);
  return p.string();
}

// Independent count of generating 4-subsets: plain index loops, relation
// matrices and a naive closure.
std::size_t oracle_gamma(std::size_t n) {
  auto all = enumerate_partitions(n);
  std::vector<oracle::Relation> rel;
  for (const auto& p : all) rel.push_back(oracle::relation_of(p));
  std::size_t count = 0, b = all.size();
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i + 1; j < b; ++j)
      for (std::size_t k = j + 1; k < b; ++k)
        for (std::size_t l = k + 1; l < b; ++l)
          count += oracle::closure({rel[i], rel[j], rel[k], rel[l]}).size() == b;
  return count;
}

}  // namespace

TEST(Colex, RankUnrankRoundTrip) {
  Quadruple q{0, 1, 2, 3};
  for (std::uint64_t r = 0; r < 20000; ++r) {
    ASSERT_EQ(colex_rank(q), r);
    ASSERT_EQ(colex_unrank(r), q);
    colex_next(q);
  }
  std::mt19937_64 rng(1);
  std::uint64_t space = quadruple_space(8);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t r = rng() % space;
    auto u = colex_unrank(r);
    ASSERT_LT(u[0], u[1]);
    ASSERT_LT(u[1], u[2]);
    ASSERT_LT(u[2], u[3]);
    ASSERT_LT(u[3], 4140u);
    ASSERT_EQ(colex_rank(u), r);
  }
  EXPECT_EQ(colex_unrank(space - 1), (Quadruple{4136, 4137, 4138, 4139}));
}

TEST(ExactEnumeration, SmallValues) {
  EXPECT_EQ(count_generating_quadruples(1).count, 0);
  EXPECT_EQ(count_generating_quadruples(2).count, 0);
  EXPECT_EQ(count_generating_quadruples(3).count, 2);
  EXPECT_EQ(count_generating_quadruples(4).count, 50);
  EXPECT_EQ(count_generating_quadruples(5).count, 5305);
}

TEST(ExactEnumeration, AgreesWithRelationOracle) {
  EXPECT_EQ(BigInt(oracle_gamma(3)), count_generating_quadruples(3).count);
  EXPECT_EQ(oracle_gamma(4), 50u);
  EXPECT_EQ(BigInt(oracle_gamma(4)), count_generating_quadruples(4).count);
}

TEST(ExactEnumeration, PruningMatchesUnpruned) {
  for (std::size_t n : {3, 4, 5}) {
    EnumJob job;
    job.n = n;
    job.prune = false;
    auto raw = count_generating_quadruples(job);
    EXPECT_EQ(raw.count, count_generating_quadruples(n).count) << n;
  }
}

TEST(ExactEnumeration, ParallelMatchesSerial) {
  EnumJob job;
  job.n = 5;
  job.block_size = 777;
  job.parallelism = 4;
  job.collect = true;
  auto par = count_generating_quadruples(job);
  job.parallelism = 1;
  auto ser = count_generating_quadruples(job);
  EXPECT_EQ(par.count, 5305);
  EXPECT_EQ(par.generating, ser.generating);
}

TEST(ExactEnumeration, RangesAddUp) {
  std::mt19937_64 rng(7);
  const std::uint64_t total = quadruple_space(5);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::uint64_t> cuts{0, total};
    for (int i = 0; i < 4; ++i) cuts.push_back(rng() % total);
    std::sort(cuts.begin(), cuts.end());
    BigInt sum = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      EnumJob job;
      job.n = 5;
      job.lo = cuts[i];
      job.hi = cuts[i + 1];
      sum += count_generating_quadruples(job).count;
    }
    EXPECT_EQ(sum, 5305);
  }
}

TEST(ExactEnumeration, CheckpointResumeAtRandomPoints) {
  std::mt19937_64 rng(11);
  const std::uint64_t total = quadruple_space(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto path = temp_path("cp" + std::to_string(trial));
    EnumJob job;
    job.n = 4;
    job.block_size = 1 + rng() % 50;
    job.checkpoint_path = path;
    job.stop_at_rank = rng() % total;
    auto first = count_generating_quadruples(job);
    EXPECT_LE(first.count, 50);
    job.stop_at_rank.reset();
    auto second = count_generating_quadruples(job);
    EXPECT_TRUE(second.complete);
    EXPECT_EQ(second.count, 50);
    std::filesystem::remove(path);
  }
}

TEST(ExactEnumeration, CheckpointMismatchIsIntegrityError) {
  auto path = temp_path("mismatch");
  EnumJob job;
  job.n = 4;
  job.checkpoint_path = path;
  count_generating_quadruples(job);
  job.n = 5;
  EXPECT_THROW(count_generating_quadruples(job), IntegrityError);
  job.n = 4;
  job.hi = 100;
  EXPECT_THROW(count_generating_quadruples(job), IntegrityError);
  {
    std::ofstream out(path);
    out << "garbage\n";
  }
  EXPECT_THROW(count_generating_quadruples(job), IntegrityError);
  std::filesystem::remove(path);
}

TEST(ExactEnumeration, RelabelingInvariance) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    EnumJob job;
    job.n = 4;
    job.relabel = {0, 1, 2, 3};
    std::shuffle(job.relabel.begin(), job.relabel.end(), rng);
    EXPECT_EQ(count_generating_quadruples(job).count, 50);
  }
  EnumJob bad;
  bad.relabel = {0, 0, 1, 2};
  EXPECT_THROW(count_generating_quadruples(bad), ArgumentError);
}

TEST(ExactEnumeration, OrbitModeMatchesRaw) {
  for (std::size_t n : {4, 5}) {
    EnumJob job;
    job.n = n;
    job.orbit = true;
    EXPECT_EQ(count_generating_quadruples(job).count, count_generating_quadruples(n).count) << n;
  }
}

TEST(ExactEnumeration, ListingIsSortedAndGenerating) {
  auto list = list_generating_quadruples(4);
  ASSERT_EQ(list.size(), 50u);
  auto ctx = ranked_equivalence(4);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) ASSERT_LT(colex_rank(list[i - 1]), colex_rank(list[i]));
    std::vector<std::uint32_t> g(list[i].begin(), list[i].end());
    ASSERT_TRUE(generates(g, *ctx, false));
  }
  EXPECT_THROW(list_generating_quadruples(6), CapacityError);
}

TEST(ExactEnumeration, AntichainAudit) {
  for (std::size_t n : {4, 5}) {
    auto a = verify_all_antichain(n);
    EXPECT_TRUE(a.all_antichains) << n;
    EXPECT_EQ(a.generating_sets, count_generating_quadruples(n).count);
  }
}

TEST(ExactEnumeration, HeartbeatReportsProgress) {
  EnumJob job;
  job.n = 5;
  job.block_size = 1000;
  std::vector<std::uint64_t> seen;
  job.progress = [&](const EnumProgress& p) { seen.push_back(p.next_rank); };
  auto r = count_generating_quadruples(job);
  ASSERT_FALSE(seen.empty());
  EXPECT_EQ(seen.back(), r.hi);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}

TEST(ExactEnumeration, RejectsBadArguments) {
  EnumJob job;
  job.n = 9;
  EXPECT_THROW(count_generating_quadruples(job), CapacityError);
  job.n = 4;
  job.lo = 10;
  job.hi = 5;
  EXPECT_THROW(count_generating_quadruples(job), ArgumentError);
}
