#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace xmodkit;

namespace {

CrossedModule zero_xmod(const FiniteGroup& m, const FiniteGroup& g) {
  return xmod_zero_module(m, g, GroupAction::trivial(g, m));
}

CrossedModule mod2() {
  return xmod_trivial_action(GroupHom::make(cyclic(4), cyclic(2), {0, 1, 0, 1}));
}

std::vector<CatalogXMod> small_catalog() { return generate_catalog(6).xmods; }

std::vector<XModMorphism> endomorphisms(const CrossedModule& xm) {
  std::vector<XModMorphism> out;
  for (const auto& f1 : enumerate_homs(xm.a(), xm.a()))
    for (const auto& f2 : enumerate_homs(xm.b(), xm.b())) try {
        out.push_back(XModMorphism::make(xm, xm, f1, f2));
      } catch (const Error&) {
      }
  return out;
}

}  // namespace

TEST(Delta, DiscreteGivesTrivialA) {
  CrossedModule d = delta(GroupGroupoid::discrete(symmetric(3)));
  EXPECT_EQ(d.a().order(), 1u);
  EXPECT_EQ(d.b().order(), 6u);
  EXPECT_TRUE(d.alpha().is_zero());
}

TEST(Delta, OfEtaOfZeroModule) {
  CrossedModule d = delta(eta(zero_xmod(cyclic(2), cyclic(2))));
  EXPECT_EQ(d.a().order(), 2u);
  EXPECT_EQ(d.b().order(), 2u);
  EXPECT_TRUE(d.alpha().is_zero());
}

TEST(Delta, OfActionGroupGroupoidRecoversLiftingCrossedModule) {
  for (const auto& row : enumerate_liftings(mod2())) {
    ActionGroupGroupoid agg = action_group_groupoid(action_from_lifting(row.lifting));
    CrossedModule d = delta(agg.groupoid);
    EXPECT_TRUE(find_xmod_isomorphism(d, row.lifting.as_xmod()).has_value());
  }
}

TEST(Eta, Examples) {
  GroupGroupoid z = eta(zero_xmod(cyclic(2), cyclic(2)));
  EXPECT_EQ(z.base().num_morphisms(), 4u);
  EXPECT_TRUE(classify_transitivity(z.base()).totally_intransitive);

  GroupGroupoid i = eta(xmod_identity(cyclic(2)));
  EXPECT_EQ(i.base().num_morphisms(), 4u);
  EXPECT_TRUE(classify_transitivity(i.base()).one_transitive);

  FiniteGroup s3 = symmetric(3);
  GroupGroupoid d = eta(xmod_trivial_action(GroupHom::zero(cyclic(1), s3)));
  EXPECT_TRUE(find_groupoid_isomorphism(d.base(), Groupoid::discrete(6)).has_value());
  for (Mor m = 0; m < d.base().num_morphisms(); ++m) EXPECT_TRUE(d.base().is_identity(m));
}

TEST(Eta, StructureMatchesDefiningFormulas) {
  for (const auto& x : small_catalog()) {
    const CrossedModule& xm = x.xm;
    GroupGroupoid g = eta(xm);
    const FiniteGroup &A = xm.a(), &B = xm.b();
    ASSERT_EQ(g.base().num_morphisms(), A.order() * B.order());
    for (Elem a = 0; a < A.order(); ++a)
      for (Elem b = 0; b < B.order(); ++b) {
        const Mor m = eta_index(xm, a, b);
        EXPECT_EQ(g.base().d0(m), b);
        EXPECT_EQ(g.base().d1(m), B.op(xm.alpha()(a), b));
        for (Elem a1 = 0; a1 < A.order(); ++a1)
          for (Elem b1 = 0; b1 < B.order(); ++b1)
            EXPECT_EQ(g.add(eta_index(xm, a1, b1), m),
                      eta_index(xm, A.op(a1, xm.act(b1, a)), B.op(b1, b)))
                << x.id;
      }
  }
}

TEST(Roundtrip, IdentityOnZ2) {
  CrossedModule xm = xmod_identity(cyclic(2));
  EquivWitness w = roundtrip_xmod(xm);
  EXPECT_EQ(w.direction, EquivWitness::Direction::delta_eta);
  EXPECT_EQ(w.morphism_map.size(), 2u);
  EXPECT_EQ(eta(xm).base().num_morphisms(), 4u);
}

TEST(Roundtrip, DiscreteWitnessesAreIdentities) {
  GroupGroupoid d = GroupGroupoid::discrete(cyclic(3));
  EquivWitness w = roundtrip_gg(d);
  EXPECT_EQ(w.object_map, (std::vector<Elem>{0, 1, 2}));
  EXPECT_EQ(w.morphism_map, (std::vector<Elem>{0, 1, 2}));
  EquivWitness x = roundtrip_xmod(delta(d));
  EXPECT_EQ(x.object_map, (std::vector<Elem>{0, 1, 2}));
  EXPECT_EQ(x.morphism_map, (std::vector<Elem>{0}));
}

TEST(Roundtrip, EtaOfMod2Bijects8Morphisms) {
  EquivWitness w = roundtrip_gg(eta(mod2()));
  ASSERT_EQ(w.morphism_map.size(), 8u);
  EXPECT_EQ(std::set<Elem>(w.morphism_map.begin(), w.morphism_map.end()).size(), 8u);
}

TEST(Roundtrip, EveryCatalogInstance) {
  for (const auto& x : small_catalog()) {
    EXPECT_NO_THROW(roundtrip_xmod(x.xm)) << x.id;
    EXPECT_NO_THROW(roundtrip_gg(eta(x.xm))) << x.id;
  }
}

TEST(Roundtrip, ActionGroupGroupoidsNotOfEtaShape) {
  // morphisms of an action group-groupoid are not indexed as (a, b) pairs
  for (const auto& row : enumerate_liftings(zero_xmod(cyclic(2), dihedral(2)))) {
    ActionGroupGroupoid agg = action_group_groupoid(action_from_lifting(row.lifting));
    EquivWitness w = roundtrip_gg(agg.groupoid);
    EXPECT_EQ(w.morphism_map.size(), agg.groupoid.base().num_morphisms());
  }
}

TEST(Correspondence, Examples) {
  auto t = transitivity_correspondence(mod2());
  EXPECT_TRUE(t.agree());
  EXPECT_TRUE(t.groupoid_flags.transitive);
  auto z = transitivity_correspondence(zero_xmod(cyclic(2), cyclic(2)));
  EXPECT_TRUE(z.agree());
  EXPECT_TRUE(z.groupoid_flags.totally_intransitive);
  auto i = transitivity_correspondence(xmod_identity(symmetric(3)));
  EXPECT_TRUE(i.agree());
  EXPECT_TRUE(i.groupoid_flags.one_transitive);
}

TEST(Correspondence, GroupoidFlagsFromHomSetCounts) {
  for (const auto& x : small_catalog()) {
    auto c = oracle::hom_counts(eta(x.xm).base());
    const std::size_t n = c.size();
    bool transitive = true, intransitive = true;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) transitive = transitive && c[p][q] > 0, intransitive = intransitive && c[p][q] == 0;
    const auto& alpha = x.xm.alpha();
    EXPECT_EQ(transitive, alpha.is_surjective()) << x.id;
    EXPECT_EQ(intransitive, alpha.is_zero() || n == 1) << x.id;
    EXPECT_EQ(c[0][0], alpha.kernel().size()) << x.id;
    EXPECT_TRUE(transitivity_correspondence(x.xm).agree()) << x.id;
  }
}

TEST(Functoriality, EtaPreservesComposition) {
  auto ends = endomorphisms(mod2());
  ASSERT_GT(ends.size(), 1u);
  for (const auto& f : ends)
    for (const auto& g : ends) {
      auto eg = eta(g), ef = eta(f), egf = eta(compose(g, f));
      for (Mor m = 0; m < egf.source.base().num_morphisms(); ++m)
        EXPECT_EQ(egf.functor(m), eg.functor(ef.functor(m)));
    }
}

TEST(Functoriality, DeltaOfEtaOfMorphism) {
  // δη restores the covering (1, ω) of the natural lifting of mod2
  Lifting l = natural_lifting(mod2());
  XModMorphism f = lifting_to_covering(l).morphism;
  XModMorphism back = delta(eta(f));
  for (Elem a = 0; a < f.source.a().order(); ++a) EXPECT_EQ(back.on_a(a), f.on_a(a));
  EXPECT_EQ(back.on_b.map(), f.on_b.map());
}
