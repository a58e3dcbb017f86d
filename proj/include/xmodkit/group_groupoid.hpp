#pragma once

#include <string>
#include <vector>

#include "xmodkit/group.hpp"
#include "xmodkit/groupoid.hpp"

namespace xmodkit {

/// A groupoid whose object set and morphism set carry group structures
/// making addition a functor G×G -> G. Object x of the groupoid is element
/// x of obj_group; morphism g is element g of mor_group.
class GroupGroupoid {
 public:
  GroupGroupoid() = default;

  static GroupGroupoid make(Groupoid base, FiniteGroup obj_group, FiniteGroup mor_group) {
    GroupGroupoid g(std::move(base), std::move(obj_group), std::move(mor_group));
    g.validate();
    return g;
  }

  static GroupGroupoid unchecked(Groupoid base, FiniteGroup obj_group, FiniteGroup mor_group) {
    return GroupGroupoid(std::move(base), std::move(obj_group), std::move(mor_group));
  }

  /// Objects B, identities only.
  static GroupGroupoid discrete(const FiniteGroup& b) {
    return make(Groupoid::discrete(b.order()), b, b);
  }

  const Groupoid& base() const { return base_; }
  const FiniteGroup& obj_group() const { return obj_; }
  const FiniteGroup& mor_group() const { return mor_; }

  Mor add(Mor g, Mor h) const { return mor_.op(g, h); }
  Mor neg(Mor g) const { return mor_.inv(g); }
  Obj add_obj(Obj x, Obj y) const { return obj_.op(x, y); }

  /// Kernel of the source map as a subgroup of the morphism group.
  Subgroup kernel_d0() const {
    std::vector<Elem> k;
    for (Mor g = 0; g < base_.num_morphisms(); ++g)
      if (base_.d0(g) == 0) k.push_back(g);
    return Subgroup::make(mor_, std::move(k));
  }

  /// Throws AdditionNotFunctorial, InterchangeFails or WrongUnit with the
  /// first witness in index order.
  void validate() const {
    const Groupoid& G = base_;
    const std::size_t n = G.num_objects(), m = G.num_morphisms();
    if (obj_.order() != n)
      fail(ErrorCode::AdditionNotFunctorial, "object group order differs from object count");
    if (mor_.order() != m)
      fail(ErrorCode::AdditionNotFunctorial, "morphism group order differs from morphism count");
    if (G.id(0) != 0)
      fail(ErrorCode::WrongUnit, "identity of the morphism group is " + show(0) +
                                     " but 1_e is " + show(G.id(0)));
    for (Mor g = 0; g < m; ++g)
      for (Mor h = 0; h < m; ++h) {
        const Mor s = add(g, h);
        if (G.d0(s) != add_obj(G.d0(g), G.d0(h)) || G.d1(s) != add_obj(G.d1(g), G.d1(h)))
          fail(ErrorCode::AdditionNotFunctorial,
               "ends of " + show(g) + "+" + show(h) + " are not the sums of ends");
      }
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y)
        if (G.id(add_obj(x, y)) != add(G.id(x), G.id(y)))
          fail(ErrorCode::AdditionNotFunctorial,
               "id(" + show(x) + "+" + show(y) + ") != id(x)+id(y)");
    for (Mor g = 0; g < m; ++g)
      if (G.inv(neg(g)) != neg(G.inv(g)))
        fail(ErrorCode::AdditionNotFunctorial, "negation does not commute with inverse at " + show(g));
    // (b∘a)+(d∘c) = (b+d)∘(a+c) over all pairs of composable pairs.
    std::vector<std::pair<Mor, Mor>> composable;
    for (Mor b = 0; b < m; ++b)
      for (Mor a = 0; a < m; ++a)
        if (G.comp(b, a) != kUndefined) composable.emplace_back(b, a);
    for (auto [b, a] : composable) {
      const Mor ba = G.comp(b, a);
      for (auto [d, c] : composable) {
        const Mor rhs = G.comp(add(b, d), add(a, c));
        if (rhs == kUndefined || add(ba, G.comp(d, c)) != rhs)
          fail(ErrorCode::InterchangeFails, "(b,a,d,c) = (" + show(b) + "," + show(a) + "," +
                                                show(d) + "," + show(c) + ")");
      }
    }
  }

  friend bool operator==(const GroupGroupoid& x, const GroupGroupoid& y) {
    return x.base_ == y.base_ && x.obj_ == y.obj_ && x.mor_ == y.mor_;
  }

 private:
  GroupGroupoid(Groupoid base, FiniteGroup obj, FiniteGroup mor)
      : base_(std::move(base)), obj_(std::move(obj)), mor_(std::move(mor)) {}

  Groupoid base_;
  FiniteGroup obj_;
  FiniteGroup mor_;
};

/// A functor between group-groupoids that is a homomorphism on objects and
/// on morphisms.
struct GroupGroupoidMorphism {
  GroupGroupoid source;
  GroupGroupoid target;
  GroupoidMorphism functor;

  static GroupGroupoidMorphism make(const GroupGroupoid& s, const GroupGroupoid& t,
                                    std::vector<Obj> obj_map, std::vector<Mor> mor_map) {
    GroupHom::make(s.obj_group(), t.obj_group(), obj_map);
    GroupHom::make(s.mor_group(), t.mor_group(), mor_map);
    return {s, t,
            GroupoidMorphism::make(s.base(), t.base(), std::move(obj_map), std::move(mor_map))};
  }

  bool is_iso() const { return functor.is_iso(); }
};

/// Action of a group-groupoid on a group X via a hom ω: X -> Ob(G), with
/// g•x defined iff d0(g) = ω(x), satisfying the interchange law
/// (g•x) + (g'•x') = (g+g')•(x+x').
class GGAction {
 public:
  GGAction() = default;

  static GGAction make(GroupGroupoid gg, FiniteGroup x, std::vector<Elem> anchor,
                       std::vector<Elem> table) {
    GGAction a(std::move(gg), std::move(x), std::move(anchor), std::move(table));
    a.validate();
    return a;
  }

  static GGAction unchecked(GroupGroupoid gg, FiniteGroup x, std::vector<Elem> anchor,
                            std::vector<Elem> table) {
    return GGAction(std::move(gg), std::move(x), std::move(anchor), std::move(table));
  }

  const GroupGroupoid& groupoid() const { return gg_; }
  const FiniteGroup& group() const { return x_; }
  GroupHom anchor() const { return GroupHom::make(x_, gg_.obj_group(), anchor_); }
  const std::vector<Elem>& anchor_table() const { return anchor_; }
  const std::vector<Elem>& table() const { return table_; }
  bool defined(Mor g, Elem x) const { return gg_.base().d0(g) == anchor_[x]; }
  Elem operator()(Mor g, Elem x) const { return table_[g * x_.order() + x]; }

  /// The underlying action of the groupoid on the set X.
  GroupoidAction set_action() const {
    return GroupoidAction::unchecked(gg_.base(), anchor_, table_);
  }

  void validate() const {
    try {
      GroupHom::make(x_, gg_.obj_group(), anchor_);
    } catch (const Error& e) {
      fail(ErrorCode::NotGroupHomAnchor, e.what());
    }
    if (auto v = set_action().check(); !v) fail(ErrorCode::ActionAxiomFails, v.witness);
    const std::size_t nx = x_.order();
    std::vector<std::pair<Mor, Elem>> pairs;
    for (Mor g = 0; g < gg_.base().num_morphisms(); ++g)
      for (Elem x = 0; x < nx; ++x)
        if (defined(g, x)) pairs.emplace_back(g, x);
    for (auto [g, x] : pairs)
      for (auto [g2, x2] : pairs) {
        const Mor gs = gg_.add(g, g2);
        const Elem xs = x_.op(x, x2);
        if (!defined(gs, xs) || x_.op((*this)(g, x), (*this)(g2, x2)) != (*this)(gs, xs))
          fail(ErrorCode::InterchangeFails, "(g,x,g',x') = (" + show(g) + "," + show(x) + "," +
                                                show(g2) + "," + show(x2) + ")");
      }
  }

  friend bool operator==(const GGAction& a, const GGAction& b) {
    return a.anchor_ == b.anchor_ && a.table_ == b.table_ && a.x_ == b.x_ && a.gg_ == b.gg_;
  }

 private:
  GGAction(GroupGroupoid gg, FiniteGroup x, std::vector<Elem> anchor, std::vector<Elem> table)
      : gg_(std::move(gg)), x_(std::move(x)), anchor_(std::move(anchor)), table_(std::move(table)) {}

  GroupGroupoid gg_;
  FiniteGroup x_;
  std::vector<Elem> anchor_;
  std::vector<Elem> table_;
};

/// The action of G on X = Ob(G) by g•x = d1(g), anchored by the identity.
inline GGAction regular_gg_action(const GroupGroupoid& gg) {
  const Groupoid& G = gg.base();
  const std::size_t n = G.num_objects();
  std::vector<Elem> anchor(n), table(G.num_morphisms() * n, kUndefined);
  for (Obj x = 0; x < n; ++x) anchor[x] = x;
  for (Mor g = 0; g < G.num_morphisms(); ++g) table[g * n + G.d0(g)] = G.d1(g);
  return GGAction::make(gg, gg.obj_group(), std::move(anchor), std::move(table));
}

/// G ⋉ X with (g,x)+(g',x') = (g+g', x+x'), and the projection to G.
struct ActionGroupGroupoid {
  GroupGroupoid groupoid;
  GroupGroupoidMorphism projection;
  ActionGroupoid set_level;
};

inline ActionGroupGroupoid action_group_groupoid(const GGAction& act) {
  try {
    act.validate();
  } catch (const Error& e) {
    fail(ErrorCode::InvalidAction, e.what());
  }
  ActionGroupoid ag = action_groupoid(act.set_action());
  const auto& pairs = ag.pairs;
  const std::size_t m = pairs.size();
  std::vector<Elem> flat(m * m);
  for (Mor i = 0; i < m; ++i)
    for (Mor j = 0; j < m; ++j)
      flat[i * m + j] = ag.index_of(act.groupoid().add(pairs[i].first, pairs[j].first),
                                    act.group().op(pairs[i].second, pairs[j].second));
  FiniteGroup mor = FiniteGroup::from_flat(m, std::move(flat));
  GroupGroupoid gg = GroupGroupoid::make(ag.groupoid, act.group(), std::move(mor));
  auto proj = GroupGroupoidMorphism::make(gg, act.groupoid(), ag.projection.obj_map(),
                                          ag.projection.mor_map());
  return {std::move(gg), std::move(proj), std::move(ag)};
}

}  // namespace xmodkit
