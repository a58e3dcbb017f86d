#pragma once

#include <string>
#include <vector>

#include "xmodkit/crossed_module.hpp"
#include "xmodkit/families.hpp"
#include "xmodkit/group_groupoid.hpp"

// The functors between group-groupoids and crossed modules:
//   delta(G) = (Ker d0, Ob G, d1|) with b·a = 1_b + a - 1_b
//   eta(A,B,α) has objects B, morphisms A ⋊ B, d0(a,b) = b, d1(a,b) = α(a)+b,
//   (a1,b1)∘(a,b) = (a1+a, b) when b1 = α(a)+b.

namespace xmodkit {

inline CrossedModule delta(const GroupGroupoid& gg) {
  const Groupoid& G = gg.base();
  Subgroup k = gg.kernel_d0();
  FiniteGroup a = k.as_group();
  std::vector<Elem> alpha;
  alpha.reserve(k.size());
  for (Mor m : k.elements()) alpha.push_back(G.d1(m));
  const FiniteGroup& b = gg.obj_group();
  std::vector<Elem> flat;
  flat.reserve(b.order() * k.size());
  for (Obj x = 0; x < b.order(); ++x)
    for (Mor m : k.elements()) {
      const Mor c = gg.mor_group().conj(G.id(x), m);
      if (!k.contains(c)) fail(ErrorCode::InternalContradiction, "1_b + a - 1_b leaves Ker d0");
      flat.push_back(k.index_of(c));
    }
  try {
    return CrossedModule::make(GroupHom::make(a, b, std::move(alpha)),
                               GroupAction::make_flat(b, a, std::move(flat)));
  } catch (const Error& e) {
    fail(ErrorCode::InternalContradiction, std::string("delta: ") + e.what());
  }
}

/// Index of the morphism (a, b) of eta(xm).
inline Mor eta_index(const CrossedModule& xm, Elem a, Elem b) {
  return static_cast<Mor>(a * xm.b().order() + b);
}

inline GroupGroupoid eta(const CrossedModule& xm) {
  const FiniteGroup& A = xm.a();
  const FiniteGroup& B = xm.b();
  const std::size_t na = A.order(), nb = B.order(), m = na * nb;
  std::vector<Obj> d0(m), d1(m), id(nb);
  std::vector<Mor> comp(m * m, kUndefined);
  for (Elem a = 0; a < na; ++a)
    for (Elem b = 0; b < nb; ++b) {
      const Mor g = eta_index(xm, a, b);
      d0[g] = b;
      d1[g] = B.op(xm.alpha()(a), b);
    }
  for (Obj b = 0; b < nb; ++b) id[b] = eta_index(xm, 0, b);
  for (Elem a1 = 0; a1 < na; ++a1)
    for (Elem b1 = 0; b1 < nb; ++b1)
      for (Elem a = 0; a < na; ++a) {
        const Elem b = B.op(B.inv(xm.alpha()(a)), b1);  // α(a) + b = b1
        comp[eta_index(xm, a1, b1) * m + eta_index(xm, a, b)] = eta_index(xm, A.op(a1, a), b);
      }
  Groupoid base = Groupoid::make(nb, std::move(d0), std::move(d1), std::move(id), std::move(comp));
  FiniteGroup mor = semidirect_product(xm.action());
  try {
    return GroupGroupoid::make(std::move(base), B, std::move(mor));
  } catch (const Error& e) {
    fail(ErrorCode::InternalContradiction, std::string("eta: ") + e.what());
  }
}

/// Restriction of a group-groupoid morphism to Ker d0 and objects.
inline XModMorphism delta(const GroupGroupoidMorphism& f) {
  CrossedModule s = delta(f.source), t = delta(f.target);
  Subgroup ks = f.source.kernel_d0(), kt = f.target.kernel_d0();
  std::vector<Elem> on_a;
  for (Mor m : ks.elements()) on_a.push_back(kt.index_of(f.functor(m)));
  return XModMorphism::make(s, t, GroupHom::make(s.a(), t.a(), std::move(on_a)),
                            GroupHom::make(s.b(), t.b(), f.functor.obj_map()));
}

/// (a, b) ↦ (f1(a), f2(b)) on morphisms, f2 on objects.
inline GroupGroupoidMorphism eta(const XModMorphism& f) {
  GroupGroupoid s = eta(f.source), t = eta(f.target);
  std::vector<Mor> mor(s.base().num_morphisms());
  for (Elem a = 0; a < f.source.a().order(); ++a)
    for (Elem b = 0; b < f.source.b().order(); ++b)
      mor[eta_index(f.source, a, b)] = eta_index(f.target, f.on_a(a), f.on_b(b));
  return GroupGroupoidMorphism::make(s, t, f.on_b.map(), std::move(mor));
}

/// Witness of one half of the equivalence.
///   delta-eta: (a ↦ (a,0), 1_B) : xm -> delta(eta(xm)); morphism_map is the A-part.
///   eta-delta: (a,b) ↦ a + 1_b : eta(delta(G)) -> G.
struct EquivWitness {
  enum class Direction { delta_eta, eta_delta };
  Direction direction;
  std::vector<Elem> object_map;
  std::vector<Elem> morphism_map;
};

inline EquivWitness roundtrip_xmod(const CrossedModule& xm) {
  GroupGroupoid g = eta(xm);
  CrossedModule back = delta(g);
  Subgroup k = g.kernel_d0();
  EquivWitness w{EquivWitness::Direction::delta_eta, xm.b().elements(), {}};
  for (Elem a = 0; a < xm.a().order(); ++a) {
    const Mor m = eta_index(xm, a, 0);
    if (!k.contains(m)) fail(ErrorCode::WitnessFails, "(a,0) not in Ker d0");
    w.morphism_map.push_back(k.index_of(m));
  }
  try {
    auto f = XModMorphism::make(xm, back, GroupHom::make(xm.a(), back.a(), w.morphism_map),
                                GroupHom::make(xm.b(), back.b(), w.object_map));
    if (!f.is_iso()) fail(ErrorCode::WitnessFails, "delta-eta witness is not bijective");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::WitnessFails) throw;
    fail(ErrorCode::WitnessFails, e.what());
  }
  return w;
}

inline EquivWitness roundtrip_gg(const GroupGroupoid& gg) {
  CrossedModule xm = delta(gg);
  GroupGroupoid back = eta(xm);
  Subgroup k = gg.kernel_d0();
  EquivWitness w{EquivWitness::Direction::eta_delta, gg.obj_group().elements(), {}};
  w.morphism_map.resize(back.base().num_morphisms());
  for (Elem a = 0; a < xm.a().order(); ++a)
    for (Elem b = 0; b < xm.b().order(); ++b)
      w.morphism_map[eta_index(xm, a, b)] = gg.add(k.elements()[a], gg.base().id(b));
  try {
    auto f = GroupGroupoidMorphism::make(back, gg, w.object_map, w.morphism_map);
    if (!f.is_iso()) fail(ErrorCode::WitnessFails, "eta-delta witness is not bijective");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::WitnessFails) throw;
    fail(ErrorCode::WitnessFails, e.what());
  }
  return w;
}

struct TransitivityCorrespondence {
  TransitivityFlags xmod_flags;
  TransitivityFlags groupoid_flags;
  bool agree() const { return xmod_flags == groupoid_flags; }
};

inline TransitivityCorrespondence transitivity_correspondence(const CrossedModule& xm) {
  return {classify_xmod_transitivity(xm), classify_transitivity(eta(xm).base())};
}

}  // namespace xmodkit
