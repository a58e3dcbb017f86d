#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xmodkit/group.hpp"
#include "xmodkit/groupoid.hpp"
#include "xmodkit/homs.hpp"

namespace xmodkit {

/// A crossed module (A, B, α) with an action of B on A satisfying
///   CM1  α(b·a) = b + α(a) - b
///   CM2  α(a)·a1 = a + a1 - a
/// The action is always stored, even when trivial.
class CrossedModule {
 public:
  CrossedModule() = default;

  static CrossedModule make(GroupHom alpha, GroupAction action) {
    CrossedModule xm(std::move(alpha), std::move(action));
    xm.validate();
    return xm;
  }

  static CrossedModule unchecked(GroupHom alpha, GroupAction action) {
    return CrossedModule(std::move(alpha), std::move(action));
  }

  const FiniteGroup& a() const { return alpha_.source(); }
  const FiniteGroup& b() const { return alpha_.target(); }
  const GroupHom& alpha() const { return alpha_; }
  const GroupAction& action() const { return action_; }
  Elem act(Elem b, Elem a) const { return action_(b, a); }

  /// First CM1 failure (b, a), if any.
  std::optional<std::pair<Elem, Elem>> cm1_witness() const {
    for (Elem b = 0; b < this->b().order(); ++b)
      for (Elem a = 0; a < this->a().order(); ++a)
        if (alpha_(act(b, a)) != this->b().conj(b, alpha_(a))) return std::pair{b, a};
    return std::nullopt;
  }

  /// First CM2 failure (a, a1), if any.
  std::optional<std::pair<Elem, Elem>> cm2_witness() const {
    for (Elem a = 0; a < this->a().order(); ++a)
      for (Elem a1 = 0; a1 < this->a().order(); ++a1)
        if (act(alpha_(a), a1) != this->a().conj(a, a1)) return std::pair{a, a1};
    return std::nullopt;
  }

  void validate() const {
    if (!(action_.actor() == b()) || !(action_.target() == a()))
      fail(ErrorCode::BadAction, "action is not an action of B on A");
    if (auto v = action_.check(); !v) fail(ErrorCode::BadAction, v.witness);
    if (auto w = cm1_witness())
      fail(ErrorCode::CM1Fails, "(b,a) = (" + show(w->first) + "," + show(w->second) + ")");
    if (auto w = cm2_witness())
      fail(ErrorCode::CM2Fails, "(a,a1) = (" + show(w->first) + "," + show(w->second) + ")");
  }

  std::string describe() const {
    return "(" + a().label() + "," + b().label() + ")";
  }

  friend bool operator==(const CrossedModule& x, const CrossedModule& y) {
    return x.alpha_ == y.alpha_ && x.action_ == y.action_;
  }

 private:
  CrossedModule(GroupHom alpha, GroupAction action)
      : alpha_(std::move(alpha)), action_(std::move(action)) {}

  GroupHom alpha_;
  GroupAction action_;
};

/// A morphism of crossed modules: on_b∘α = α'∘on_a and
/// on_a(b·a) = on_b(b)·on_a(a).
struct XModMorphism {
  CrossedModule source;
  CrossedModule target;
  GroupHom on_a;
  GroupHom on_b;

  static XModMorphism make(CrossedModule source, CrossedModule target, GroupHom on_a,
                           GroupHom on_b) {
    XModMorphism f{std::move(source), std::move(target), std::move(on_a), std::move(on_b)};
    f.validate();
    return f;
  }

  static XModMorphism identity(const CrossedModule& xm) {
    return {xm, xm, GroupHom::identity(xm.a()), GroupHom::identity(xm.b())};
  }

  void validate() const {
    if (!(on_a.source() == source.a()) || !(on_a.target() == target.a()) ||
        !(on_b.source() == source.b()) || !(on_b.target() == target.b()))
      fail(ErrorCode::SquareFails, "component homs do not match the crossed modules");
    for (Elem a = 0; a < source.a().order(); ++a)
      if (on_b(source.alpha()(a)) != target.alpha()(on_a(a)))
        fail(ErrorCode::SquareFails, "f2(α(a)) != α'(f1(a)) at a=" + show(a));
    for (Elem b = 0; b < source.b().order(); ++b)
      for (Elem a = 0; a < source.a().order(); ++a)
        if (on_a(source.act(b, a)) != target.act(on_b(b), on_a(a)))
          fail(ErrorCode::EquivarianceFails, "at (b,a) = (" + show(b) + "," + show(a) + ")");
  }

  bool is_iso() const { return on_a.is_iso() && on_b.is_iso(); }
};

/// g∘f
inline XModMorphism compose(const XModMorphism& g, const XModMorphism& f) {
  return XModMorphism::make(f.source, g.target, compose(g.on_a, f.on_a), compose(g.on_b, f.on_b));
}

/// Inclusion of a normal subgroup with the conjugation action.
inline CrossedModule xmod_from_normal_subgroup(const FiniteGroup& g, const Subgroup& n) {
  if (!(n.parent() == g)) fail(ErrorCode::NotSubgroup, "subgroup of a different group");
  if (auto w = n.normality_witness())
    fail(ErrorCode::NotNormal, "conjugating " + show(w->second) + " by " + show(w->first));
  std::string label;
  if (!g.label().empty())
    label = n.size() == g.order() ? g.label() : g.label() + "{" + std::to_string(n.size()) + "}";
  FiniteGroup a = n.as_group(std::move(label));
  GroupHom inc = GroupHom::make(a, g, n.elements());
  std::vector<Elem> flat;
  for (Elem b = 0; b < g.order(); ++b)
    for (Elem x : n.elements()) flat.push_back(n.index_of(g.conj(b, x)));
  return CrossedModule::make(inc, GroupAction::make_flat(g, a, std::move(flat)));
}

/// The zero map M -> G for an action of G on an abelian group M.
inline CrossedModule xmod_zero_module(const FiniteGroup& m, const FiniteGroup& g,
                                      const GroupAction& action) {
  if (!m.is_abelian()) fail(ErrorCode::NotAbelian, m.label().empty() ? "M" : m.label());
  if (auto v = action.check(); !v) fail(ErrorCode::BadAction, v.witness);
  return CrossedModule::make(GroupHom::zero(m, g), action);
}

/// The identity crossed module (G, G, 1) with conjugation.
inline CrossedModule xmod_identity(const FiniteGroup& g) {
  return CrossedModule::make(GroupHom::identity(g), GroupAction::conjugation(g));
}

/// A hom with the trivial action; valid exactly when A is abelian and the
/// image of α is central.
inline CrossedModule xmod_trivial_action(const GroupHom& alpha) {
  return CrossedModule::make(alpha, GroupAction::trivial(alpha.target(), alpha.source()));
}

/// G -> Aut(G), g ↦ conjugation by g, with Aut(G) acting by evaluation.
inline CrossedModule xmod_inner_automorphism(const FiniteGroup& g) {
  AutomorphismGroup aut = automorphism_group(g);
  std::vector<Elem> alpha(g.order());
  Perm conj(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) conj[y] = g.conj(x, y);
    alpha[x] = static_cast<Elem>(
        std::lower_bound(aut.automorphisms.begin(), aut.automorphisms.end(), conj) -
        aut.automorphisms.begin());
  }
  std::vector<Elem> flat;
  for (Elem f = 0; f < aut.group.order(); ++f)
    for (Elem x = 0; x < g.order(); ++x) flat.push_back(aut.evaluate(f, x));
  return CrossedModule::make(GroupHom::make(g, aut.group, std::move(alpha)),
                             GroupAction::make_flat(aut.group, g, std::move(flat)));
}

/// θ: B -> Aut(A), θ(b)(a) = b·a, as a hom into automorphism_group(A).
inline GroupHom action_to_automorphisms(const CrossedModule& xm, const AutomorphismGroup& aut) {
  std::vector<Elem> theta(xm.b().order());
  Perm p(xm.a().order());
  for (Elem b = 0; b < xm.b().order(); ++b) {
    for (Elem a = 0; a < xm.a().order(); ++a) p[a] = xm.act(b, a);
    auto it = std::lower_bound(aut.automorphisms.begin(), aut.automorphisms.end(), p);
    if (it == aut.automorphisms.end() || *it != p)
      fail(ErrorCode::InternalContradiction, "b·(-) is not an automorphism");
    theta[b] = static_cast<Elem>(it - aut.automorphisms.begin());
  }
  return GroupHom::make(xm.b(), aut.group, std::move(theta));
}

/// Flags of a crossed module: transitive ⇔ α onto, simply transitive ⇔ α
/// one-to-one, 1-transitive ⇔ α bijective, totally intransitive ⇔ α zero
/// and A abelian.
inline TransitivityFlags classify_xmod_transitivity(const CrossedModule& xm) {
  TransitivityFlags f;
  f.transitive = xm.alpha().is_surjective();
  f.simply_transitive = xm.alpha().is_injective();
  f.one_transitive = f.transitive && f.simply_transitive;
  f.totally_intransitive = xm.alpha().is_zero() && xm.a().is_abelian();
  return f;
}

/// Structural facts every crossed module satisfies, each exhibited.
struct XModProperties {
  Subgroup image;              // α(A), normal in B
  Subgroup kernel;             // Ker α, inside Z(A)
  Subgroup center;             // Z(A)
  FiniteGroup cokernel;        // B / α(A)
  GroupAction coker_on_center; // Cok α acting on Z(A) (as a group)
  GroupAction coker_on_kernel; // Cok α acting on Ker α (as a group)
};

namespace detail {

/// Induced action of Cok α on an α(A)-fixed, B-stable subgroup S of A,
/// through coset representatives; well-definedness is checked, not assumed.
inline GroupAction cokernel_action(const CrossedModule& xm, const Quotient& coker,
                                   const Subgroup& s, const char* what) {
  FiniteGroup sg = s.as_group();
  std::vector<Elem> flat(coker.group.order() * s.size(), kUndefined);
  for (Elem b = 0; b < xm.b().order(); ++b) {
    const Elem c = coker.projection(b);
    for (Elem i = 0; i < s.size(); ++i) {
      const Elem img = xm.act(b, s.elements()[i]);
      if (!s.contains(img))
        fail(ErrorCode::InternalContradiction, std::string(what) + " is not B-stable");
      const Elem j = s.index_of(img);
      Elem& slot = flat[c * s.size() + i];
      if (slot != kUndefined && slot != j)
        fail(ErrorCode::InternalContradiction,
             std::string("Cok α action on ") + what + " depends on the coset representative");
      slot = j;
    }
  }
  try {
    return GroupAction::make_flat(coker.group, sg, std::move(flat));
  } catch (const Error& e) {
    fail(ErrorCode::InternalContradiction, std::string("Cok α action on ") + what + ": " + e.what());
  }
}

}  // namespace detail

inline XModProperties xmod_properties(const CrossedModule& xm) {
  auto contradiction = [](const std::string& w) { fail(ErrorCode::InternalContradiction, w); };
  Subgroup image = xm.alpha().image();
  if (!image.is_normal()) contradiction("α(A) is not normal in B");
  Subgroup kernel = xm.alpha().kernel();
  Subgroup z = center(xm.a());
  if (!kernel.is_subset_of(z)) contradiction("Ker α is not central in A");
  for (Elem b : image.elements())
    for (Elem a : z.elements())
      if (xm.act(b, a) != a) contradiction("α(A) acts nontrivially on Z(A)");
  Quotient coker = quotient(image);
  GroupAction on_center = detail::cokernel_action(xm, coker, z, "Z(A)");
  GroupAction on_kernel = detail::cokernel_action(xm, coker, kernel, "Ker α");
  return {std::move(image), std::move(kernel), std::move(z), coker.group, std::move(on_center),
          std::move(on_kernel)};
}

/// Searches for an isomorphism of crossed modules, possibly between
/// different tables.
inline std::optional<XModMorphism> find_xmod_isomorphism(const CrossedModule& x,
                                                         const CrossedModule& y) {
  if (x.a().order() != y.a().order() || x.b().order() != y.b().order()) return std::nullopt;
  auto fa = find_isomorphism(x.a(), y.a());
  auto fb = find_isomorphism(x.b(), y.b());
  if (!fa || !fb) return std::nullopt;
  std::vector<GroupHom> isos_b;
  for_each_hom(
      x.b(), y.b(),
      [&](const std::vector<Elem>& m) {
        isos_b.push_back(GroupHom::make(x.b(), y.b(), m));
        return true;
      },
      true);
  std::optional<XModMorphism> found;
  for_each_hom(
      x.a(), y.a(),
      [&](const std::vector<Elem>& ma) {
        for (const auto& fb2 : isos_b) {
          bool ok = true;
          for (Elem a = 0; a < ma.size() && ok; ++a) ok = fb2(x.alpha()(a)) == y.alpha()(ma[a]);
          for (Elem b = 0; b < x.b().order() && ok; ++b)
            for (Elem a = 0; a < ma.size() && ok; ++a)
              ok = ma[x.act(b, a)] == y.act(fb2(b), ma[a]);
          if (ok) {
            found = XModMorphism::make(x, y, GroupHom::make(x.a(), y.a(), ma), fb2);
            return false;
          }
        }
        return true;
      },
      true);
  return found;
}

}  // namespace xmodkit
