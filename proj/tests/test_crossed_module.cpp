#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace xmodkit;

namespace {

CrossedModule mod2() {
  return xmod_trivial_action(GroupHom::make(cyclic(4), cyclic(2), {0, 1, 0, 1}));
}

CrossedModule zero_z2() {
  return xmod_zero_module(cyclic(2), cyclic(2), GroupAction::trivial(cyclic(2), cyclic(2)));
}

Subgroup subgroup_of_size(const FiniteGroup& g, std::size_t n) {
  for (auto& s : subgroups(g))
    if (s.size() == n && s.is_normal()) return s;
  throw std::logic_error("no normal subgroup of that size");
}

bool oracle_accepts(const CrossedModule& xm) {
  return oracle::is_xmod(xm.a().rows(), xm.b().rows(), xm.alpha().map(), xm.action().rows());
}

}  // namespace

TEST(CrossedModule, AbelianExamplesValid) {
  EXPECT_NO_THROW(xmod_identity(cyclic(2)).validate());
  EXPECT_NO_THROW(mod2().validate());
  EXPECT_TRUE(oracle_accepts(xmod_identity(cyclic(2))));
  EXPECT_TRUE(oracle_accepts(mod2()));
}

TEST(CrossedModule, ShiftIsNotAnAction) {
  FiniteGroup z2 = cyclic(2);
  EXPECT_EQ(oracle::error_code([&] { GroupAction::make(z2, z2, {{0, 1}, {1, 0}}); }),
            ErrorCode::BadAction);
}

TEST(CrossedModule, CM1AndCM2FailuresDetected) {
  // identity on S3 with the trivial action
  FiniteGroup s3 = symmetric(3);
  auto cm2 = oracle::error_code([&] {
    CrossedModule::make(GroupHom::identity(s3), GroupAction::trivial(s3, s3));
  });
  EXPECT_TRUE(cm2 == ErrorCode::CM1Fails || cm2 == ErrorCode::CM2Fails);
  // A3 into S3 with the trivial action
  Subgroup a3 = subgroup_of_size(s3, 3);
  FiniteGroup z3 = a3.as_group();
  auto cm1 = oracle::error_code([&] {
    CrossedModule::make(inclusion(a3), GroupAction::trivial(s3, z3));
  });
  EXPECT_EQ(cm1, ErrorCode::CM1Fails);
}

TEST(NormalSubgroup, Examples) {
  FiniteGroup s3 = symmetric(3);
  CrossedModule a3 = xmod_from_normal_subgroup(s3, subgroup_of_size(s3, 3));
  auto f = classify_xmod_transitivity(a3);
  EXPECT_TRUE(f.simply_transitive);
  EXPECT_FALSE(f.transitive);

  auto whole = classify_xmod_transitivity(xmod_from_normal_subgroup(s3, Subgroup::whole(s3)));
  EXPECT_TRUE(whole.one_transitive);

  CrossedModule z4 = xmod_from_normal_subgroup(cyclic(4), Subgroup::make(cyclic(4), {0, 2}));
  EXPECT_TRUE(z4.alpha().is_injective());
  EXPECT_FALSE(z4.alpha().is_surjective());
}

TEST(NormalSubgroup, NonNormalRejected) {
  FiniteGroup s3 = symmetric(3);
  for (const auto& s : subgroups(s3))
    if (s.size() == 2) {
      EXPECT_EQ(oracle::error_code([&] { xmod_from_normal_subgroup(s3, s); }), ErrorCode::NotNormal);
    }
}

TEST(ZeroModule, Examples) {
  EXPECT_TRUE(classify_xmod_transitivity(zero_z2()).totally_intransitive);
  FiniteGroup z3 = cyclic(3), z2 = cyclic(2);
  CrossedModule inv = xmod_zero_module(z3, z2, GroupAction::make(z2, z3, {{0, 1, 2}, {0, 2, 1}}));
  EXPECT_TRUE(oracle_accepts(inv));
  FiniteGroup s3 = symmetric(3);
  EXPECT_EQ(oracle::error_code([&] { xmod_zero_module(s3, z2, GroupAction::trivial(z2, s3)); }),
            ErrorCode::NotAbelian);
}

TEST(InnerAutomorphism, Examples) {
  CrossedModule z2 = xmod_inner_automorphism(cyclic(2));
  EXPECT_EQ(z2.b().order(), 1u);
  EXPECT_TRUE(z2.alpha().is_zero());

  CrossedModule s3 = xmod_inner_automorphism(symmetric(3));
  EXPECT_EQ(s3.b().order(), 6u);
  EXPECT_TRUE(s3.alpha().is_injective());
  EXPECT_EQ(s3.alpha().kernel(), center(symmetric(3)));

  CrossedModule z3 = xmod_inner_automorphism(cyclic(3));
  EXPECT_EQ(z3.b().order(), 2u);
  EXPECT_TRUE(z3.alpha().is_zero());
}

TEST(ConstructorsOverSmallGroups, AcceptedByLibraryAndOracle) {
  for (const auto& g : catalog_groups(8)) {
    for (const auto& n : subgroups(g))
      if (n.is_normal()) {
        EXPECT_TRUE(oracle_accepts(xmod_from_normal_subgroup(g, n))) << g.label();
      }
    EXPECT_TRUE(oracle_accepts(xmod_inner_automorphism(g))) << g.label();
  }
  for (const auto& m : catalog_groups(4))
    for (const auto& g : catalog_groups(4))
      for (const auto& act : enumerate_actions(g, m))
        EXPECT_TRUE(oracle_accepts(xmod_zero_module(m, g, act))) << m.label() << "," << g.label();
}

TEST(Properties, Examples) {
  XModProperties p = xmod_properties(mod2());
  EXPECT_EQ(p.kernel.elements(), (std::vector<Elem>{0, 2}));
  EXPECT_TRUE(p.kernel.is_subset_of(p.center));
  EXPECT_EQ(p.center.size(), 4u);
  EXPECT_EQ(p.cokernel.order(), 1u);

  XModProperties s3 = xmod_properties(xmod_inner_automorphism(symmetric(3)));
  EXPECT_EQ(s3.kernel.size(), 1u);
  EXPECT_EQ(s3.image.size(), 6u);
  EXPECT_EQ(s3.cokernel.order(), 1u);

  XModProperties z = xmod_properties(zero_z2());
  EXPECT_EQ(z.cokernel.order(), 2u);
  EXPECT_EQ(z.kernel.size(), 2u);
  EXPECT_EQ(z.coker_on_kernel.actor().order(), 2u);
  EXPECT_EQ(z.coker_on_kernel.target().order(), 2u);
}

TEST(Properties, HoldOnEveryEnumeratedCrossedModule) {
  for (const auto& x : generate_catalog(6).xmods) {
    XModProperties p = xmod_properties(x.xm);
    EXPECT_TRUE(p.image.is_normal()) << x.id;
    EXPECT_TRUE(p.kernel.is_subset_of(p.center)) << x.id;
  }
}

TEST(Flags, Examples) {
  auto t = classify_xmod_transitivity(mod2());
  EXPECT_TRUE(t.transitive);
  EXPECT_FALSE(t.simply_transitive);
  EXPECT_FALSE(t.one_transitive);
  EXPECT_FALSE(t.totally_intransitive);
  EXPECT_TRUE(classify_xmod_transitivity(xmod_identity(symmetric(3))).one_transitive);
  EXPECT_TRUE(classify_xmod_transitivity(zero_z2()).totally_intransitive);
}

TEST(Morphisms, IdentityAndCoveringFromLifting) {
  EXPECT_NO_THROW(XModMorphism::identity(mod2()).validate());
  for (const auto& row : enumerate_liftings(mod2())) {
    const Lifting& l = row.lifting;
    EXPECT_NO_THROW(XModMorphism::make(CrossedModule::make(l.phi(), l.induced_action()), l.base(),
                                       GroupHom::identity(l.base().a()), l.omega()));
  }
}

TEST(Morphisms, SquareAndEquivarianceFailures) {
  // (1, zero): (Z2,Z2,id) -> (Z2,Z2,id) does not intertwine α
  CrossedModule xm = xmod_identity(cyclic(2));
  EXPECT_EQ(oracle::error_code([&] {
    XModMorphism::make(xm, xm, GroupHom::identity(cyclic(2)), GroupHom::zero(cyclic(2), cyclic(2)));
  }),
            ErrorCode::SquareFails);
  // (1, 1) from the inversion action to the trivial action on Z3
  FiniteGroup z3 = cyclic(3), z2 = cyclic(2);
  CrossedModule inv = xmod_zero_module(z3, z2, GroupAction::make(z2, z3, {{0, 1, 2}, {0, 2, 1}}));
  CrossedModule triv = xmod_zero_module(z3, z2, GroupAction::trivial(z2, z3));
  EXPECT_EQ(oracle::error_code([&] {
    XModMorphism::make(inv, triv, GroupHom::identity(z3), GroupHom::identity(z2));
  }),
            ErrorCode::EquivarianceFails);
}

TEST(Morphisms, CompositionAndIsomorphismSearch) {
  CrossedModule xm = xmod_inner_automorphism(symmetric(3));
  auto iso = find_xmod_isomorphism(xm, xm);
  ASSERT_TRUE(iso.has_value());
  XModMorphism sq = compose(*iso, *iso);
  EXPECT_TRUE(sq.is_iso());
  EXPECT_FALSE(find_xmod_isomorphism(mod2(), xmod_identity(cyclic(4))).has_value());
}

TEST(Enumeration, AgreesWithOracleOnSmallPairs) {
  // every (α, action) the oracle accepts is isomorphic to exactly one listed
  // crossed module, and every listed one is accepted
  for (const auto& a : catalog_groups(4))
    for (const auto& b : catalog_groups(4)) {
      auto listed = xmods_over(a, b);
      for (const auto& xm : listed) EXPECT_TRUE(oracle_accepts(xm));
      for (const auto& alpha : oracle::homs(a.rows(), b.rows()))
        for (const auto& act : enumerate_actions(b, a)) {
          if (!oracle::is_xmod(a.rows(), b.rows(), alpha, act.rows())) continue;
          CrossedModule xm = CrossedModule::make(GroupHom::make(a, b, alpha), act);
          std::size_t matches = 0;
          for (const auto& l : listed) matches += find_xmod_isomorphism(xm, l).has_value();
          EXPECT_EQ(matches, 1u) << a.label() << " -> " << b.label();
        }
    }
}

TEST(Enumeration, CorruptedActionsJudgedLikeOracle) {
  std::mt19937 rng(3);
  std::size_t rejected = 0;
  for (const auto& x : generate_catalog(4).xmods) {
    if (x.xm.a().order() < 2) continue;
    for (int trial = 0; trial < 5; ++trial) {
      auto rows = x.xm.action().rows();
      const std::size_t b = rng() % rows.size(), a = rng() % rows[b].size();
      rows[b][a] = static_cast<Elem>((rows[b][a] + 1) % x.xm.a().order());
      const bool oracle_ok = oracle::is_xmod(x.xm.a().rows(), x.xm.b().rows(), x.xm.alpha().map(), rows);
      const bool lib_ok = !oracle::error_code([&] {
        CrossedModule::make(x.xm.alpha(), GroupAction::make(x.xm.b(), x.xm.a(), rows));
      });
      EXPECT_EQ(lib_ok, oracle_ok) << x.id;
      rejected += !lib_ok;
    }
  }
  EXPECT_GT(rejected, 0u);
}
