// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "partlat/zadori.hpp"

using namespace partlat;

namespace {

IdQuadruple Q(int m, int s, int t, const char* bits) { return IdQuadruple{m, s, t, BitVector::parse(bits)}; }

std::vector<IdQuadruple> all_up_to(int max_m) {
  std::vector<IdQuadruple> out;
  for (int m = 1; m <= max_m; m += 2) {
    auto v = all_id_quadruples(m);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// Relation from an explicit list of pairs, closed by Warshall.
oracle::Relation rel(std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
  oracle::Relation r = oracle::identity(n);
  for (auto [u, v] : pairs) r = oracle::transitive_union(r, oracle::pair_relation(n, u, v));
  return r;
}

}  // namespace

TEST(IdQuadruple, SizesAndValidation) {
  EXPECT_EQ(build_configuration(Q(9, 1, 1, "000000000")).n, 13);
  EXPECT_EQ(build_configuration(Q(3, 0, 1, "000")).n, 8);
  auto z = build_configuration(Q(1, 1, 1, "0"));
  EXPECT_EQ(z.n, 5);
  EXPECT_EQ(z.c(), z.b(1));
  EXPECT_THROW(build_configuration(Q(2, 1, 1, "00")), ArgumentError);
  EXPECT_THROW(build_configuration(Q(3, 1, 0, "000")), ArgumentError);
  EXPECT_THROW(build_configuration(Q(3, 0, 3, "000")), ArgumentError);
  EXPECT_THROW(build_configuration(Q(3, 1, 1, "00")), ArgumentError);
  EXPECT_THROW(IdQuadruple::parse("3:0:1"), ArgumentError);
  EXPECT_THROW(IdQuadruple::parse("3:x:1:000"), ArgumentError);
  auto q = IdQuadruple::parse("5:1:3:10110");
  EXPECT_EQ(q, Q(5, 1, 3, "10110"));
  EXPECT_EQ(q.to_string(), "5:1:3:10110");
  EXPECT_EQ(q.necktie_free(), Q(5, 1, 1, "10110"));
}

TEST(IdQuadruple, CountsPerLength) {
  EXPECT_EQ(all_id_quadruples(1).size(), 2u * 2u);
  EXPECT_EQ(all_id_quadruples(3).size(), 8u * 4u);
  EXPECT_EQ(all_id_quadruples(5).size(), 32u * 7u);
}

TEST(ZConfig, PartitionsMatchLabelPairs) {
  for (const auto& phi : all_up_to(5)) {
    auto z = build_configuration(phi);
    const int k = z.k;
    const auto n = static_cast<std::size_t>(z.n);
    auto A = [&](int i) { return z.element("a" + std::to_string(i)); };
    auto B = [&](int i) { return z.element("b" + std::to_string(i)); };
    std::vector<std::pair<int, int>> al, be{{B(phi.s), z.element("c")}}, ga{{B(phi.t), z.element("c")}},
        de{{A(0), B(0)}, {A(k), B(k - 1)}};
    for (int i = 0; i < k; ++i) al.emplace_back(A(i), A(i + 1));
    for (int i = 0; i + 1 < k; ++i) al.emplace_back(B(i), B(i + 1));
    for (int i = 0; i < k; ++i) {
      be.emplace_back(A(i), B(i));
      ga.emplace_back(A(i + 1), B(i));
    }
    for (int i = 1; i <= phi.m; ++i) {
      if (!phi.z.at(i)) continue;
      if (i % 2 == 0) de.emplace_back(A(i / 2), A(i / 2 + 1));
      else de.emplace_back(B(i / 2), B(i / 2 + 1));
    }
    ASSERT_EQ(oracle::relation_of(z.alpha), rel(n, al)) << phi.to_string();
    ASSERT_EQ(oracle::relation_of(z.beta), rel(n, be)) << phi.to_string();
    ASSERT_EQ(oracle::relation_of(z.gamma), rel(n, ga)) << phi.to_string();
    ASSERT_EQ(oracle::relation_of(z.delta), rel(n, de)) << phi.to_string();
    ASSERT_EQ(z.alpha.block_count(), phi.trivial_necktie() ? 2u : 3u);
    ASSERT_EQ(z.edges.size(), static_cast<std::size_t>(phi.m + 2));
    ASSERT_EQ(z.edges.back(), std::make_pair(A(k - 1), A(k)));
  }
}

TEST(Term, HashConsingAndPrinting) {
  TermArena ar;
  auto a = ar.var(0), b = ar.var(1);
  auto t1 = ar.meet(a, ar.join(a, b));
  auto t2 = ar.meet(a, ar.join(a, b));
  EXPECT_EQ(t1, t2);
  EXPECT_EQ(ar.to_string(t1), "(a*(a+b))");
  EXPECT_EQ(ar.dag_size(t1), 4u);
  EXPECT_EQ(ar.depth(t1), 2u);
  EXPECT_THROW(ar.meet(a, 999), ArgumentError);
}

TEST(Term, EvaluationBasics) {
  EquivalenceLattice ctx(4);
  std::vector<Partition> quad{atom(4, 0, 1), atom(4, 1, 2), atom(4, 2, 3), Partition::bottom(4)};
  TermArena ar;
  EXPECT_EQ(evaluate(ar, ar.var(0), quad, ctx), quad[0]);
  auto t = ar.join(ar.var(0), ar.var(1));
  EXPECT_EQ(evaluate(ar, t, quad, ctx), kequ(4, {0, 1, 2}));
  EXPECT_THROW(evaluate(ar, ar.var(5), quad, ctx), ArgumentError);
}

TEST(Term, ProductEvaluationIsComponentwise) {
  auto l4 = ranked_equivalence(4), l5 = ranked_equivalence(5);
  PackedProductLattice prod({l4, l5});
  std::mt19937_64 rng(3);
  ZTermBuilder zt(Q(3, 1, 1, "101"));
  TermId t = zt.g(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> quad;
    std::vector<std::uint32_t> q4, q5;
    for (int i = 0; i < 4; ++i) {
      q4.push_back(static_cast<std::uint32_t>(rng() % l4->count()));
      q5.push_back(static_cast<std::uint32_t>(rng() % l5->count()));
      quad.push_back(prod.pack({q4.back(), q5.back()}));
    }
    auto v = evaluate(zt.arena(), t, quad, prod);
    EXPECT_EQ(prod.component(v, 0), evaluate(zt.arena(), t, q4, *l4));
    EXPECT_EQ(prod.component(v, 1), evaluate(zt.arena(), t, q5, *l5));
  }
}

TEST(ZTerms, HatTermsAreRestrictions) {
  for (const auto& phi : all_up_to(3)) {
    auto z = build_configuration(phi);
    ZTermBuilder zt(phi);
    EquivalenceLattice ctx(static_cast<std::size_t>(z.n));
    ZEvaluator ev(zt.arena(), ctx, z.mu());
    for (auto [term, src] : {std::pair{zt.beta_hat(), z.beta}, std::pair{zt.gamma_hat(), z.gamma}}) {
      auto expect = oracle::relation_of(src);
      for (int u = 0; u < z.n; ++u)
        for (int v = 0; v < z.n; ++v)
          if (u != v && (u > 2 * z.k || v > 2 * z.k)) expect[u][v] = false;
      ASSERT_EQ(oracle::relation_of(ev.value(term)), expect) << phi.to_string();
    }
  }
}

TEST(ZTerms, GhAndSideTermsForAllSmallQuadruples) {
  for (const auto& phi : all_up_to(5)) {
    auto z = build_configuration(phi);
    ZTermBuilder zt(phi);
    EquivalenceLattice ctx(static_cast<std::size_t>(z.n));
    ZEvaluator ev(zt.arena(), ctx, z.mu());
    const int m = phi.m;
    for (int j = 0; j <= m + 1; ++j) {
      ASSERT_EQ(ev.value(zt.g(j)), z.edge_atom(j)) << phi.to_string() << " j=" << j;
      const auto& f = ev.value(zt.f(j));
      ASSERT_TRUE(leq(z.edge_atom(j), f)) << phi.to_string() << " j=" << j;
      ASSERT_TRUE(leq(f, z.edge_prefix(j))) << phi.to_string() << " j=" << j;
      std::vector<std::pair<int, int>> tail(z.edges.begin() + (m + 1 - j), z.edges.end());
      ASSERT_EQ(ev.value(zt.h(j)), graph_equivalence(static_cast<std::size_t>(z.n), tail)) << phi.to_string();
    }
    EXPECT_EQ(ev.value(zt.side_left()), atom(static_cast<std::size_t>(z.n), z.a(0), z.b(0)));
    EXPECT_EQ(ev.value(zt.side_right()), atom(static_cast<std::size_t>(z.n), z.a(z.k), z.b(z.k - 1)));
  }
  ZTermBuilder zt(Q(3, 1, 1, "000"));
  EXPECT_THROW(zt.f(5), ArgumentError);
  EXPECT_THROW(zt.g(-1), ArgumentError);
  EXPECT_NO_THROW(zt.h(40));
}

TEST(CircleTerm, ThreeCircleAndMonotonicity) {
  EquivalenceLattice ctx(3);
  TermArena ar;
  std::vector<TermId> nb{ar.var(0), ar.var(1), ar.var(2)};
  std::vector<Partition> exact{atom(3, 0, 1), atom(3, 1, 2), atom(3, 2, 0)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      EXPECT_EQ(evaluate(ar, circle_term(ar, nb, i, j), exact, ctx), atom(3, i, j));

  // Smaller neighbour values can only give smaller results.
  EquivalenceLattice c5(5);
  std::vector<TermId> nb5;
  for (unsigned i = 0; i < 5; ++i) nb5.push_back(ar.var(i));
  std::vector<Partition> full, part;
  for (int i = 0; i < 5; ++i) {
    full.push_back(atom(5, i, (i + 1) % 5));
    part.push_back(i % 2 ? Partition::bottom(5) : full.back());
  }
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      auto t = circle_term(ar, nb5, i, j);
      EXPECT_EQ(evaluate(ar, t, full, c5), atom(5, i, j));
      EXPECT_TRUE(leq(evaluate(ar, t, part, c5), atom(5, i, j)));
    }
  EXPECT_THROW(circle_term(ar, nb, 2, 1), ArgumentError);
}

TEST(ETerms, EveryPairGivesItsAtom) {
  for (const auto& phi : {Q(3, 1, 1, "111"), Q(3, 0, 1, "000"), Q(5, 1, 3, "10110"), Q(9, 1, 4, "000000000")}) {
    auto z = build_configuration(phi);
    ZTermBuilder zt(phi);
    EquivalenceLattice ctx(static_cast<std::size_t>(z.n));
    ZEvaluator ev(zt.arena(), ctx, z.mu());
    for (int u = 0; u < z.n; ++u) {
      EXPECT_TRUE(ev.value(zt.e(u, u)).is_bottom());
      for (int v = u + 1; v < z.n; ++v) {
        EXPECT_EQ(oracle::relation_of(ev.value(zt.e(u, v))), oracle::pair_relation(z.n, u, v))
            << phi.to_string() << " " << z.label(u) << "," << z.label(v);
        EXPECT_EQ(zt.e(u, v), zt.e(v, u));
      }
    }
    EXPECT_THROW(zt.e(0, z.n), ArgumentError);
  }
}

TEST(ETerms, NecktieCircleVisitsEveryElementOnce) {
  for (const auto& phi : all_up_to(7)) {
    if (phi.trivial_necktie()) continue;
    ZTermBuilder zt(phi);
    auto d = zt.necktie_circle();
    std::set<int> s(d.begin(), d.end());
    ASSERT_EQ(d.size(), static_cast<std::size_t>(phi.n()));
    ASSERT_EQ(s.size(), d.size());
  }
}

TEST(AtomTerms, GenerationViaTerms) {
  EXPECT_TRUE(verify_generation_via_terms(Q(1, 1, 1, "0")).ok());
  EXPECT_TRUE(verify_generation_via_terms(Q(5, 1, 3, "10110")).ok());
  for (const auto& phi : all_up_to(3)) {
    auto r = verify_generation_via_terms(phi, 9);
    ASSERT_TRUE(r.atoms_ok) << phi.to_string();
    ASSERT_TRUE(r.closure_generates.has_value());
    ASSERT_TRUE(*r.closure_generates) << phi.to_string();
  }
}

TEST(AtomTerms, ClosureOfGeneratorsHasBellSize) {
  for (const auto& phi : all_up_to(3)) {
    auto z = build_configuration(phi);
    auto lat = ranked_equivalence(static_cast<std::size_t>(z.n));
    std::vector<std::uint32_t> gens;
    for (const auto& p : z.mu()) gens.push_back(lat->rank(p));
    ASSERT_EQ(close(gens, *lat).elements.size(), bell_u64(static_cast<unsigned>(z.n))) << phi.to_string();
  }
}

TEST(LockAndKey, SameLengthGetsThroughIffPinsBelow) {
  for (int m = 1; m <= 5; m += 2) {
    auto all = all_id_quadruples(m);
    for (const auto& phi : all) {
      auto z = build_configuration(phi);
      EquivalenceLattice ctx(static_cast<std::size_t>(z.n));
      for (const auto& phip : all) {
        if (phip.s != phi.s && phip.s != 1) continue;  // f' ignores the necktie; one per pin vector
        ZTermBuilder zt(phip);
        bool through = leq(z.edge_atom(m + 1), evaluate(zt.arena(), zt.f(m + 1), z.mu(), ctx));
        ASSERT_EQ(through, leq(phip.z, phi.z)) << phip.to_string() << " vs " << phi.to_string();
      }
    }
  }
  EXPECT_TRUE(gets_through(Q(3, 0, 1, "010"), Q(3, 1, 1, "110")));
  EXPECT_FALSE(gets_through(Q(3, 1, 1, "110"), Q(3, 0, 1, "010")));
}

TEST(LockAndKey, ZeroPrefixStopsOnePrefix) {
  for (int m = 1; m <= 5; m += 2)
    for (int mp = 1; mp <= 5; mp += 2)
      for (const auto& phi : all_id_quadruples(m)) {
        if (phi.z.at(1) != 0) continue;
        auto z = build_configuration(phi);
        EquivalenceLattice ctx(static_cast<std::size_t>(z.n));
        for (const auto& phip : all_id_quadruples(mp)) {
          if (phip.z.at(1) != 1 || !phip.trivial_necktie()) continue;
          ZTermBuilder zt(phip);
          ZEvaluator ev(zt.arena(), ctx, z.mu());
          for (int i = 0; i <= mp + 1; ++i)
            ASSERT_FALSE(leq(z.edge_atom(m + 1), ev.value(zt.f(i))))
                << phip.to_string() << " f_" << i << " on " << phi.to_string();
        }
      }
}

TEST(LockAndKey, AirinessBlocksLongerKeys) {
  // z = 1^p 0^q y and air(z') < q: no f'_i gets through.
  for (int m = 1; m <= 5; m += 2)
    for (const auto& phi : all_id_quadruples(m)) {
      if (!phi.trivial_necktie()) continue;
      std::size_t p = 0;
      while (p < phi.z.dim() && phi.z.at(p + 1)) ++p;
      std::size_t q = 0;
      while (p + q < phi.z.dim() && !phi.z.at(p + q + 1)) ++q;
      if (q == 0) continue;
      auto z = build_configuration(phi);
      EquivalenceLattice ctx(static_cast<std::size_t>(z.n));
      for (int mp = 1; mp <= 7; mp += 2)
        for (const auto& phip : all_id_quadruples(mp)) {
          if (!phip.trivial_necktie() || airiness(phip.z) >= q) continue;
          ZTermBuilder zt(phip);
          ZEvaluator ev(zt.arena(), ctx, z.mu());
          for (int i = 0; i <= mp + 1; ++i)
            ASSERT_FALSE(leq(z.edge_atom(m + 1), ev.value(zt.f(i)))) << phip.to_string() << " on " << phi.to_string();
        }
    }
}

TEST(LockAndKey, EffectivenessBound) {
  for (const auto& phi : all_id_quadruples(3)) {
    for (int mp = 1; mp <= 5; mp += 2)
      for (const auto& phip : all_id_quadruples(mp)) {
        if (!phip.trivial_necktie()) continue;
        for (int j = 0; j <= mp + 1; ++j) {
          int e = effectiveness(phip, phi, j);
          ASSERT_LE(e, std::min(j, phi.m + 1));
          ASSERT_GE(e, 0);
        }
      }
  }
  EXPECT_EQ(effectiveness(Q(3, 1, 1, "000"), Q(3, 1, 1, "000"), 4), 4);
  EXPECT_THROW(effectiveness(Q(3, 1, 1, "000"), Q(3, 1, 1, "000"), 5), ArgumentError);
}

TEST(LockAndKey, MonotonePinSpotCheck) {
  for (auto [m, mp] : {std::pair{1, 3}, std::pair{3, 5}}) {
    for (const auto& phi : all_id_quadruples(m)) {
      if (!phi.trivial_necktie()) continue;
      auto z = build_configuration(phi);
      EquivalenceLattice ctx(static_cast<std::size_t>(z.n));
      for (const auto& phip : all_id_quadruples(mp)) {
        if (!phip.trivial_necktie() || !leq(phip.z.prefix(m), phi.z)) continue;
        ZTermBuilder zt(phip);
        ZEvaluator ev(zt.arena(), ctx, z.mu());
        for (int i = 0; i <= m + 1; ++i) {
          if (i == m + 1 && phip.z.at(i) != 0) continue;
          ASSERT_TRUE(leq(z.edge_atom(i), ev.value(zt.f(i)))) << phip.to_string() << " i=" << i;
        }
      }
    }
  }
}

TEST(LockAndKey, QuadrupleIdentityIsBottom) {
  EquivalenceLattice ctx(5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int zz = 0; zz < 5; ++zz)
        for (int w = 0; w < 5; ++w) {
          if (x == y || zz == w) continue;
          auto e = [](int u, int v) { return u == v ? Partition::bottom(5) : atom(5, u, v); };
          auto r = e(x, y) * (e(x, zz) + e(w, y)) * (e(x, w) + e(zz, y));
          ASSERT_TRUE(r.is_bottom()) << x << y << zz << w;
        }
}

TEST(LowerBound, MatchesTable) {
  EXPECT_EQ(lower_bound(7), 25200);
  EXPECT_EQ(lower_bound(8), 604800);
  EXPECT_EQ(lower_bound(9), 13608000);
  EXPECT_EQ(lower_bound(10), 816480000);
  EXPECT_EQ(lower_bound(11), BigInt("15567552000"));
  const char* sci[] = {"1.868e12", "3.287e13", "6.902e15", "1.164e17", "3.911e19"};
  for (int n = 12; n <= 16; ++n) EXPECT_EQ(to_scientific(lower_bound(n), 4), sci[n - 12]) << n;
  EXPECT_THROW(lower_bound(6), DomainError);
  EXPECT_EQ(width(7), 3);
  EXPECT_EQ(length(7), 3);
  EXPECT_EQ(length(8), 3);
  for (int n = 5; n <= 20; ++n) EXPECT_EQ((length(n) + 3) / 2, width(n)) << n;
}

TEST(Family, BottomPairGivesZeroPinDelta) {
  auto base = family_base(7);
  auto g = family_G(base, Partition::bottom(2), Partition::bottom(3));
  EXPECT_EQ(g[3], build_configuration(base).delta);
  EXPECT_THROW(family_G(base, Partition::bottom(3), Partition::bottom(3)), ArgumentError);
  EXPECT_EQ(enumerate_family(7).size(), 10u);
  EXPECT_EQ(enumerate_family(8).size(), 30u);
}

TEST(Family, OrbitOfSevenGivesLowerBound) {
  auto rep = family_orbit(7);
  EXPECT_EQ(rep.base_sets, 10u);
  EXPECT_TRUE(rep.all_sizes_four);
  EXPECT_EQ(BigInt(rep.distinct_sets), rep.expected);
}

TEST(Family, RandomMembersGenerate) {
  auto lat = ranked_equivalence(7);
  auto fam = enumerate_family(7);
  std::mt19937_64 rng(11);
  std::vector<int> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i < 100; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto& q = fam[rng() % fam.size()];
    std::vector<std::uint32_t> gens;
    for (const auto& p : q) gens.push_back(lat->rank(p.permuted(perm)));
    ASSERT_TRUE(generates(gens, *lat));
  }
}

TEST(SixElementQuadruple, FixtureAndIdentities) {
  auto rep = verify_prop1();
  EXPECT_TRUE(rep.identities);
  EXPECT_TRUE(rep.circle_atoms);
  EXPECT_TRUE(rep.generates);
  EXPECT_EQ(rep.closure_size, 203u);
  EXPECT_EQ(rep.order, OrderType::one_one_two);
  auto fx = prop1_fixture();
  EXPECT_TRUE(leq(fx.alpha, fx.beta));
  EXPECT_EQ(fx.beta, kequ(6, {3, 4, 5}) + kequ(6, {0, 1, 2}));
}
