// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "partlat/closure.hpp"
#include "partlat/enumerate.hpp"
#include "partlat/lattice.hpp"

using namespace partlat;

namespace {

// The quadruple from the (1+1+2) construction, on u1..u6 = 0..5.
std::vector<Partition> one_one_two_quadruple() {
  auto alpha = kequ(6, {3, 4, 5});
  auto eps = kequ(6, {0, 1, 2});
  auto beta = join(alpha, eps);
  auto gamma = join(kequ(6, {0, 1, 3}), atom(6, 2, 4));
  auto delta = join(kequ(6, {0, 2, 5}), atom(6, 1, 4));
  return {alpha, beta, gamma, delta};
}

std::vector<oracle::Relation> relations(const std::vector<Partition>& ps) {
  std::vector<oracle::Relation> out;
  for (const auto& p : ps) out.push_back(oracle::relation_of(p));
  return out;
}

}  // namespace

TEST(Close, OneOneTwoQuadrupleGeneratesEqu6) {
  EquivalenceLattice ctx(6);
  auto c = close(one_one_two_quadruple(), ctx);
  EXPECT_EQ(c.elements.size(), 203u);
  EXPECT_TRUE(c.complete);
  EXPECT_TRUE(c.all_atoms);
  EXPECT_EQ(oracle::closure(relations(one_one_two_quadruple())).size(), 203u);
}

TEST(Close, Trivial) {
  EquivalenceLattice ctx(4);
  auto c = close(std::vector<Partition>{Partition::bottom(4)}, ctx);
  ASSERT_EQ(c.elements.size(), 1u);
  EXPECT_EQ(c.elements[0], Partition::bottom(4));
}

TEST(Close, AtomsOfEqu4GiveEverything) {
  EquivalenceLattice ctx(4);
  auto c = close(ctx.atoms(), ctx);
  EXPECT_EQ(c.elements.size(), 15u);
  EXPECT_EQ(oracle::closure(relations(ctx.atoms())).size(), 15u);
}

TEST(Close, CapacityErrorCarriesPartialSize) {
  EquivalenceLattice ctx(5);
  ClosureOptions opts;
  opts.max_elements = 20;
  try {
    close(ctx.atoms(), ctx, opts);
    FAIL() << "expected a capacity error";
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.partial_size(), 21u);
  }
}

TEST(Close, WitnessesRebuildEveryElement) {
  EquivalenceLattice ctx(6);
  ClosureOptions opts;
  opts.record_witness_terms = true;
  auto c = close(one_one_two_quadruple(), ctx, opts);
  ASSERT_EQ(c.witnesses.size(), c.elements.size());
  std::vector<Partition> rebuilt;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    const auto& d = c.witnesses[i];
    if (d.op == 'g')
      rebuilt.push_back(c.elements[i]);
    else
      rebuilt.push_back(d.op == '*' ? meet(rebuilt[d.lhs], rebuilt[d.rhs]) : join(rebuilt[d.lhs], rebuilt[d.rhs]));
    ASSERT_EQ(rebuilt.back(), c.elements[i]);
  }
}

TEST(Close, ExtensiveIdempotentMonotoneOnEqu4) {
  auto all = enumerate_partitions(4);
  EquivalenceLattice ctx(4);
  std::mt19937 rng(99);
  for (int it = 0; it < 300; ++it) {
    std::vector<Partition> g;
    for (std::size_t k = rng() % 4 + 1; k > 0; --k) g.push_back(all[rng() % all.size()]);
    std::vector<Partition> h = g;
    h.push_back(all[rng() % all.size()]);
    auto cg = close(g, ctx).elements;
    auto ch = close(h, ctx).elements;
    std::set<Partition> sg(cg.begin(), cg.end()), sh(ch.begin(), ch.end());
    for (const auto& x : g) ASSERT_TRUE(sg.count(x));
    auto again = close(cg, ctx).elements;
    ASSERT_EQ(std::set<Partition>(again.begin(), again.end()), sg);
    ASSERT_TRUE(std::includes(sh.begin(), sh.end(), sg.begin(), sg.end()));
    ASSERT_EQ(sg.size(), oracle::closure(relations(g)).size());
  }
}

TEST(Generates, Examples) {
  EquivalenceLattice ctx(6);
  EXPECT_TRUE(generates(one_one_two_quadruple(), ctx));
  EXPECT_TRUE(generates(one_one_two_quadruple(), ctx, false));
  EquivalenceLattice e3(3);
  EXPECT_FALSE(generates(std::vector<Partition>{Partition::top(3)}, e3));
  // Equ(2) has a single atom, which is also its top.
  EquivalenceLattice e2(2);
  EXPECT_FALSE(generates(std::vector<Partition>{Partition::top(2)}, e2));
  EXPECT_TRUE(generates(std::vector<Partition>{Partition::top(2), Partition::bottom(2)}, e2));
}

TEST(Generates, NoThreeElementSubsetOfEqu5Generates) {
  auto ctx = ranked_equivalence(5);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::uint32_t> pick(0, 51);
  ClosureWorkspace<RankedEquivalenceLattice> ws(*ctx);
  ClosureOptions opts;
  opts.early_exit_on_atoms = true;
  for (int it = 0; it < 10000; ++it) {
    std::vector<std::uint32_t> g{pick(rng), pick(rng), pick(rng)};
    ASSERT_FALSE(ws.run(g, opts).all_atoms);
  }
}

TEST(Generates, EarlyExitEqualsBruteForceOnAllFourSubsetsOfEqu4) {
  auto all = enumerate_partitions(4);
  EquivalenceLattice ctx(4);
  std::size_t count = 0;
  for (std::size_t a = 0; a < 15; ++a)
    for (std::size_t b = a + 1; b < 15; ++b)
      for (std::size_t c = b + 1; c < 15; ++c)
        for (std::size_t d = c + 1; d < 15; ++d) {
          std::vector<Partition> g{all[a], all[b], all[c], all[d]};
          bool fast = generates(g, ctx, true);
          bool full = close(g, ctx).elements.size() == 15;
          bool brute = oracle::closure(relations(g)).size() == 15;
          ASSERT_EQ(fast, full);
          ASSERT_EQ(fast, brute);
          count += fast;
        }
  EXPECT_EQ(count, 50u);
}

TEST(Generates, EarlyExitAgreesWithFullClosureOnEqu5) {
  auto ctx = ranked_equivalence(5);
  std::mt19937_64 rng(5);
  ClosureWorkspace<RankedEquivalenceLattice> fast(*ctx), full(*ctx);
  ClosureOptions early, none;
  early.early_exit_on_atoms = true;
  std::size_t hits = 0;
  for (int it = 0; it < 100000; ++it) {
    std::vector<std::uint32_t> g;
    while (g.size() < 4) {
      auto x = static_cast<std::uint32_t>(rng() % 52);
      if (std::find(g.begin(), g.end(), x) == g.end()) g.push_back(x);
    }
    bool a = fast.run(g, early).all_atoms;
    bool b = full.run(g, none).elements.size() == 52;
    ASSERT_EQ(a, b);
    hits += a;
  }
  EXPECT_GT(hits, 0u);
}

TEST(Generates, ProductContexts) {
  // Part(2) x Part(2) is not generated by its diagonal.
  ProductLattice<EquivalenceLattice> prod({EquivalenceLattice(2), EquivalenceLattice(2)});
  std::vector<std::vector<Partition>> diag{{Partition::bottom(2), Partition::bottom(2)},
                                           {Partition::top(2), Partition::top(2)}};
  EXPECT_FALSE(generates(diag, prod));
  std::vector<std::vector<Partition>> gens{{Partition::top(2), Partition::bottom(2)},
                                           {Partition::bottom(2), Partition::top(2)}};
  EXPECT_TRUE(generates(gens, prod));
  EXPECT_EQ(close(gens, prod).elements.size(), 4u);
}

TEST(OrderType, Examples) {
  EquivalenceLattice ctx(6);
  EXPECT_EQ(order_type(one_one_two_quadruple(), ctx), OrderType::one_one_two);
  std::vector<Partition> atoms{atom(6, 0, 1), atom(6, 1, 2), atom(6, 2, 3), atom(6, 4, 5)};
  EXPECT_EQ(order_type(atoms, ctx), OrderType::antichain);
  auto a = atom(6, 0, 1);
  std::vector<Partition> chain{Partition::bottom(6), a, join(a, atom(6, 2, 3)), Partition::top(6)};
  EXPECT_EQ(order_type(chain, ctx), OrderType::other);
  std::vector<Partition> dup{a, a, Partition::top(6), Partition::bottom(6)};
  EXPECT_THROW(order_type(dup, ctx), ArgumentError);
}
