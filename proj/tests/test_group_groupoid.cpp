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

}  // namespace

TEST(GroupGroupoid, DiscreteIsValid) {
  GroupGroupoid d = GroupGroupoid::discrete(symmetric(3));
  EXPECT_EQ(d.base().num_objects(), 6u);
  EXPECT_EQ(d.base().num_morphisms(), 6u);
  EXPECT_TRUE(oracle::interchange_holds(d));
}

TEST(GroupGroupoid, EtaOfZeroMapIsValid) {
  GroupGroupoid g = eta(zero_xmod(cyclic(2), cyclic(2)));
  EXPECT_EQ(g.base().num_morphisms(), 4u);
  EXPECT_NO_THROW(g.validate());
  EXPECT_TRUE(oracle::interchange_holds(g));
}

TEST(GroupGroupoid, NonFunctorialAdditionRejected) {
  // same groupoid, morphism addition swapped for the cyclic group of order 4
  GroupGroupoid g = eta(zero_xmod(cyclic(2), cyclic(2)));
  auto code = oracle::error_code([&] { GroupGroupoid::make(g.base(), g.obj_group(), cyclic(4)); });
  EXPECT_EQ(code, ErrorCode::AdditionNotFunctorial);
}

TEST(GroupGroupoid, InterchangeHoldsOnEveryEtaImage) {
  for (const auto& x : generate_catalog(4).xmods)
    EXPECT_TRUE(oracle::interchange_holds(eta(x.xm))) << x.id;
}

TEST(GroupGroupoid, AdditionIsAFunctorOnEtaImages) {
  for (const auto& x : generate_catalog(4).xmods) {
    GroupGroupoid g = eta(x.xm);
    const Groupoid& G = g.base();
    for (Mor a = 0; a < G.num_morphisms(); ++a)
      for (Mor b = 0; b < G.num_morphisms(); ++b) {
        EXPECT_EQ(G.d0(g.add(a, b)), g.add_obj(G.d0(a), G.d0(b)));
        EXPECT_EQ(G.d1(g.add(a, b)), g.add_obj(G.d1(a), G.d1(b)));
      }
    for (Obj p = 0; p < G.num_objects(); ++p)
      for (Obj q = 0; q < G.num_objects(); ++q)
        EXPECT_EQ(G.id(g.add_obj(p, q)), g.add(G.id(p), G.id(q)));
  }
}

TEST(GGActionTest, RegularActionOnObjects) {
  for (const auto& xm : {mod2(), zero_xmod(cyclic(2), cyclic(2)), xmod_identity(symmetric(3))}) {
    GGAction a = regular_gg_action(eta(xm));
    EXPECT_NO_THROW(a.validate());
    const Groupoid& G = a.groupoid().base();
    for (Mor g = 0; g < G.num_morphisms(); ++g) EXPECT_EQ(a(g, G.d0(g)), G.d1(g));
  }
}

TEST(GGActionTest, DiscreteOnItself) {
  FiniteGroup b = cyclic(3);
  GGAction a = regular_gg_action(GroupGroupoid::discrete(b));
  ActionGroupGroupoid agg = action_group_groupoid(a);
  EXPECT_EQ(agg.groupoid.base().num_morphisms(), 3u);
  EXPECT_EQ(agg.groupoid.base().num_objects(), 3u);
  for (Mor m = 0; m < 3; ++m) EXPECT_TRUE(agg.groupoid.base().is_identity(m));
}

TEST(GGActionTest, BrokenAnchorConditionRejected) {
  GGAction good = regular_gg_action(eta(xmod_identity(cyclic(2))));
  auto table = good.table();
  const Groupoid& G = good.groupoid().base();
  // send a non-identity morphism somewhere other than d1(g)
  for (Mor g = 0; g < G.num_morphisms(); ++g)
    if (!G.is_identity(g)) {
      table[g * 2 + G.d0(g)] = G.d0(g);
      break;
    }
  auto code = oracle::error_code([&] {
    GGAction::make(good.groupoid(), good.group(), good.anchor_table(), table);
  });
  EXPECT_EQ(code, ErrorCode::ActionAxiomFails);
}

TEST(GGActionTest, AnchorMustBeAHom) {
  GroupGroupoid g = GroupGroupoid::discrete(cyclic(2));
  auto code = oracle::error_code([&] {
    GGAction::make(g, cyclic(2), {1, 0}, {kUndefined, 0, 1, kUndefined});
  });
  EXPECT_EQ(code, ErrorCode::NotGroupHomAnchor);
}

TEST(GGActionTest, InterchangeViolationRejected) {
  // one-object Z2 acting on V4 by swapping 0 and 1: a set action, not additive
  GroupGroupoid g = eta(xmod_trivial_action(GroupHom::zero(cyclic(2), cyclic(1))));
  ASSERT_EQ(g.base().num_objects(), 1u);
  ASSERT_EQ(g.base().num_morphisms(), 2u);
  FiniteGroup v4 = dihedral(2);
  std::vector<Elem> table(2 * 4);
  for (Elem x = 0; x < 4; ++x) table[x] = x;
  table[4 + 0] = 1, table[4 + 1] = 0, table[4 + 2] = 2, table[4 + 3] = 3;
  auto code = oracle::error_code([&] { GGAction::make(g, v4, {0, 0, 0, 0}, table); });
  EXPECT_EQ(code, ErrorCode::InterchangeFails);
}

TEST(ActionGroupGroupoid, OneObjectZ2OnZ2) {
  GroupGroupoid g = eta(xmod_trivial_action(GroupHom::zero(cyclic(2), cyclic(1))));
  std::vector<Elem> table{0, 1, 1, 0};
  GGAction a = GGAction::make(g, cyclic(2), {0, 0}, table);
  ActionGroupGroupoid agg = action_group_groupoid(a);
  EXPECT_EQ(agg.groupoid.base().num_morphisms(), 4u);
  EXPECT_TRUE(is_covering_morphism(agg.projection.functor));
  EXPECT_TRUE(oracle::stars_bijective(agg.projection.functor));
  EXPECT_TRUE(oracle::interchange_holds(agg.groupoid));
}

TEST(ActionGroupGroupoid, ProjectionFromLiftingActionsIsCovering) {
  for (const auto& row : enumerate_liftings(mod2())) {
    ActionGroupGroupoid agg = action_group_groupoid(action_from_lifting(row.lifting));
    EXPECT_TRUE(is_covering_morphism(agg.projection.functor));
    EXPECT_TRUE(oracle::stars_bijective(agg.projection.functor));
    EXPECT_TRUE(oracle::interchange_holds(agg.groupoid));
    EXPECT_EQ(agg.groupoid.base().num_objects(), row.lifting.x().order());
  }
}

TEST(ActionGroupGroupoid, KernelOfSourceMapAndTargetHom) {
  for (const auto& x : generate_catalog(4).xmods) {
    GroupGroupoid g = eta(x.xm);
    Subgroup k = g.kernel_d0();
    EXPECT_EQ(k.size(), x.xm.a().order());
    for (Mor a : k.elements())
      for (Mor b : k.elements())
        EXPECT_EQ(g.base().d1(g.add(a, b)), g.add_obj(g.base().d1(a), g.base().d1(b)));
  }
}
