#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xmodkit/group.hpp"

namespace xmodkit {

using Obj = std::uint32_t;
using Mor = std::uint32_t;

/// Marks an undefined entry of a partial table (composition, action).
inline constexpr std::uint32_t kUndefined = std::numeric_limits<std::uint32_t>::max();

/// A finite groupoid. Composition h∘g is defined iff d0(h) = d1(g) and is
/// stored as a dense table with kUndefined marking the undefined pairs.
class Groupoid {
 public:
  Groupoid() : Groupoid(discrete(1)) {}

  static Groupoid make(std::size_t num_objects, std::vector<Obj> d0, std::vector<Obj> d1,
                       std::vector<Mor> id, std::vector<Mor> comp) {
    auto d = std::make_shared<Data>();
    d->objects = num_objects;
    d->d0 = std::move(d0);
    d->d1 = std::move(d1);
    d->id = std::move(id);
    d->comp = std::move(comp);
    validate(*d);
    return Groupoid(std::move(d));
  }

  /// One-object groupoid whose morphisms are the elements of g.
  static Groupoid from_group(const FiniteGroup& g) {
    const std::size_t m = g.order();
    std::vector<Mor> comp(g.table().begin(), g.table().end());
    return make(1, std::vector<Obj>(m, 0), std::vector<Obj>(m, 0), {0}, std::move(comp));
  }

  /// Identities only.
  static Groupoid discrete(std::size_t n) {
    std::vector<Obj> ends(n);
    for (Obj x = 0; x < n; ++x) ends[x] = x;
    std::vector<Mor> comp(n * n, kUndefined);
    for (Mor x = 0; x < n; ++x) comp[x * n + x] = x;
    return make(n, ends, ends, ends, std::move(comp));
  }

  std::size_t num_objects() const { return d_->objects; }
  std::size_t num_morphisms() const { return d_->d0.size(); }
  Obj d0(Mor g) const { return d_->d0[g]; }
  Obj d1(Mor g) const { return d_->d1[g]; }
  Mor id(Obj x) const { return d_->id[x]; }
  Mor inv(Mor g) const { return d_->inv[g]; }
  bool composable(Mor h, Mor g) const { return d0(h) == d1(g); }
  /// h∘g, or kUndefined.
  Mor comp(Mor h, Mor g) const { return d_->comp[h * num_morphisms() + g]; }
  bool is_identity(Mor g) const { return id(d0(g)) == g; }

  const std::vector<Obj>& d0_table() const { return d_->d0; }
  const std::vector<Obj>& d1_table() const { return d_->d1; }
  const std::vector<Mor>& id_table() const { return d_->id; }
  const std::vector<Mor>& comp_table() const { return d_->comp; }

  std::vector<Mor> hom_set(Obj x, Obj y) const {
    std::vector<Mor> out;
    for (Mor g = 0; g < num_morphisms(); ++g)
      if (d0(g) == x && d1(g) == y) out.push_back(g);
    return out;
  }

  friend bool operator==(const Groupoid& a, const Groupoid& b) {
    return a.d_ == b.d_ || (a.d_->objects == b.d_->objects && a.d_->d0 == b.d_->d0 &&
                            a.d_->d1 == b.d_->d1 && a.d_->id == b.d_->id &&
                            a.d_->comp == b.d_->comp);
  }

 private:
  struct Data {
    std::size_t objects = 0;
    std::vector<Obj> d0, d1;
    std::vector<Mor> id, comp, inv;
  };

  explicit Groupoid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  static void validate(Data& d) {
    const std::size_t n = d.objects, m = d.d0.size();
    auto bad = [](const std::string& w) { fail(ErrorCode::NotGroupoid, w); };
    if (n == 0) bad("no objects");
    if (d.d1.size() != m || d.id.size() != n || d.comp.size() != m * m) bad("table sizes disagree");
    for (Mor g = 0; g < m; ++g)
      if (d.d0[g] >= n || d.d1[g] >= n) bad("morphism " + show(g) + " has an unknown end");
    for (Obj x = 0; x < n; ++x) {
      const Mor i = d.id[x];
      if (i >= m || d.d0[i] != x || d.d1[i] != x) bad("id(" + show(x) + ") is not a loop at it");
    }
    auto c = [&](Mor h, Mor g) { return d.comp[h * m + g]; };
    for (Mor h = 0; h < m; ++h)
      for (Mor g = 0; g < m; ++g) {
        const Mor hg = c(h, g);
        if (d.d0[h] != d.d1[g]) {
          if (hg != kUndefined) bad("composite defined for non-composable (" + show(h) + "," + show(g) + ")");
          continue;
        }
        if (hg >= m) bad("composite undefined for composable (" + show(h) + "," + show(g) + ")");
        if (d.d0[hg] != d.d0[g] || d.d1[hg] != d.d1[h])
          bad("composite of (" + show(h) + "," + show(g) + ") has wrong ends");
      }
    for (Mor g = 0; g < m; ++g)
      if (c(g, d.id[d.d0[g]]) != g || c(d.id[d.d1[g]], g) != g)
        bad("identity law fails at " + show(g));
    std::vector<std::vector<Mor>> stars(n);
    for (Mor g = 0; g < m; ++g) stars[d.d0[g]].push_back(g);
    for (Mor g = 0; g < m; ++g)
      for (Mor h : stars[d.d1[g]]) {
        const Mor hg = c(h, g);
        for (Mor k : stars[d.d1[h]])
          if (c(c(k, h), g) != c(k, hg))
            bad("associativity fails at (" + show(k) + "," + show(h) + "," + show(g) + ")");
      }
    d.inv.assign(m, kUndefined);
    for (Mor g = 0; g < m; ++g) {
      for (Mor h : stars[d.d1[g]])
        if (d.d1[h] == d.d0[g] && c(h, g) == d.id[d.d0[g]] && c(g, h) == d.id[d.d1[g]]) {
          d.inv[g] = h;
          break;
        }
      if (d.inv[g] == kUndefined) bad("morphism " + show(g) + " has no inverse");
    }
  }

  std::shared_ptr<const Data> d_;
};

inline void require_object(const Groupoid& g, Obj x) {
  if (x >= g.num_objects()) fail(ErrorCode::UnknownObject, "object " + show(x));
}

/// Morphisms with source x.
inline std::vector<Mor> star(const Groupoid& g, Obj x) {
  require_object(g, x);
  std::vector<Mor> out;
  for (Mor m = 0; m < g.num_morphisms(); ++m)
    if (g.d0(m) == x) out.push_back(m);
  return out;
}

/// Morphisms with target x.
inline std::vector<Mor> costar(const Groupoid& g, Obj x) {
  require_object(g, x);
  std::vector<Mor> out;
  for (Mor m = 0; m < g.num_morphisms(); ++m)
    if (g.d1(m) == x) out.push_back(m);
  return out;
}

/// G(x,x) as a group. Element i of `group` is morphisms[i]; the identity
/// id(x) is element 0.
struct ObjectGroup {
  FiniteGroup group;
  std::vector<Mor> morphisms;
};

inline ObjectGroup object_group(const Groupoid& g, Obj x) {
  require_object(g, x);
  std::vector<Mor> loops{g.id(x)};
  for (Mor m : g.hom_set(x, x))
    if (m != g.id(x)) loops.push_back(m);
  const std::size_t k = loops.size();
  std::vector<Elem> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Mor c = g.comp(loops[i], loops[j]);
      flat[i * k + j] =
          static_cast<Elem>(std::find(loops.begin(), loops.end(), c) - loops.begin());
    }
  return {FiniteGroup::from_flat(k, std::move(flat)), std::move(loops)};
}

/// Transitivity flags. "transitive" and "totally intransitive" speak about
/// hom-sets G(x,y) with x != y; "simply transitive" and "1-transitive" bound
/// every hom-set, loops included, so that they mirror injectivity of the
/// boundary map of the corresponding crossed module.
struct TransitivityFlags {
  bool transitive = false;
  bool simply_transitive = false;
  bool one_transitive = false;
  bool totally_intransitive = false;

  friend bool operator==(const TransitivityFlags&, const TransitivityFlags&) = default;

  std::string to_string() const {
    std::string s;
    auto add = [&](bool f, const char* name) {
      if (!f) return;
      if (!s.empty()) s += ",";
      s += name;
    };
    add(transitive, "transitive");
    add(simply_transitive, "simply-transitive");
    add(one_transitive, "1-transitive");
    add(totally_intransitive, "totally-intransitive");
    return s.empty() ? "none" : s;
  }
};

inline TransitivityFlags classify_transitivity(const Groupoid& g) {
  const std::size_t n = g.num_objects();
  std::vector<std::size_t> count(n * n, 0);
  for (Mor m = 0; m < g.num_morphisms(); ++m) ++count[g.d0(m) * n + g.d1(m)];
  TransitivityFlags f{true, true, true, true};
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) {
      const std::size_t c = count[x * n + y];
      if (c > 1) f.simply_transitive = false;
      if (c != 1) f.one_transitive = false;
      if (x == y) continue;
      if (c == 0) f.transitive = false;
      if (c != 0) f.totally_intransitive = false;
    }
  return f;
}

/// A functor between groupoids given by its object and morphism tables.
class GroupoidMorphism {
 public:
  GroupoidMorphism() = default;

  static GroupoidMorphism make(Groupoid source, Groupoid target, std::vector<Obj> obj_map,
                               std::vector<Mor> mor_map) {
    GroupoidMorphism p(std::move(source), std::move(target), std::move(obj_map),
                       std::move(mor_map));
    if (auto v = p.check(); !v) fail(ErrorCode::NotGroupoidMorphism, v.witness);
    return p;
  }

  static GroupoidMorphism identity(const Groupoid& g) {
    std::vector<Obj> o(g.num_objects());
    std::vector<Mor> m(g.num_morphisms());
    for (Obj x = 0; x < o.size(); ++x) o[x] = x;
    for (Mor x = 0; x < m.size(); ++x) m[x] = x;
    return GroupoidMorphism(g, g, std::move(o), std::move(m));
  }

  const Groupoid& source() const { return source_; }
  const Groupoid& target() const { return target_; }
  Obj on_object(Obj x) const { return obj_map_[x]; }
  Mor operator()(Mor g) const { return mor_map_[g]; }
  const std::vector<Obj>& obj_map() const { return obj_map_; }
  const std::vector<Mor>& mor_map() const { return mor_map_; }

  bool is_iso() const {
    auto bij = [](const std::vector<std::uint32_t>& v, std::size_t n) {
      if (v.size() != n) return false;
      std::vector<bool> hit(n, false);
      for (auto x : v) hit[x] = true;
      return std::find(hit.begin(), hit.end(), false) == hit.end();
    };
    return bij(obj_map_, target_.num_objects()) && bij(mor_map_, target_.num_morphisms());
  }

  Verdict check() const {
    if (obj_map_.size() != source_.num_objects() || mor_map_.size() != source_.num_morphisms())
      return Verdict::no("table sizes disagree with source");
    for (Obj x : obj_map_)
      if (x >= target_.num_objects()) return Verdict::no("object image out of range");
    for (Mor g : mor_map_)
      if (g >= target_.num_morphisms()) return Verdict::no("morphism image out of range");
    for (Mor g = 0; g < source_.num_morphisms(); ++g) {
      if (target_.d0(mor_map_[g]) != obj_map_[source_.d0(g)] ||
          target_.d1(mor_map_[g]) != obj_map_[source_.d1(g)])
        return Verdict::no("ends not preserved at " + show(g));
      if (mor_map_[source_.inv(g)] != target_.inv(mor_map_[g]))
        return Verdict::no("inverse not preserved at " + show(g));
    }
    for (Obj x = 0; x < source_.num_objects(); ++x)
      if (mor_map_[source_.id(x)] != target_.id(obj_map_[x]))
        return Verdict::no("identity not preserved at " + show(x));
    for (Mor h = 0; h < source_.num_morphisms(); ++h)
      for (Mor g = 0; g < source_.num_morphisms(); ++g) {
        const Mor hg = source_.comp(h, g);
        if (hg == kUndefined) continue;
        if (mor_map_[hg] != target_.comp(mor_map_[h], mor_map_[g]))
          return Verdict::no("composition not preserved at (" + show(h) + "," + show(g) + ")");
      }
    return Verdict::ok();
  }

 private:
  GroupoidMorphism(Groupoid s, Groupoid t, std::vector<Obj> o, std::vector<Mor> m)
      : source_(std::move(s)), target_(std::move(t)), obj_map_(std::move(o)), mor_map_(std::move(m)) {}

  Groupoid source_;
  Groupoid target_;
  std::vector<Obj> obj_map_;
  std::vector<Mor> mor_map_;
};

/// Checks that p restricted to every star is a bijection onto the star of
/// the image object.
inline Verdict is_covering_morphism(const GroupoidMorphism& p) {
  const Groupoid& src = p.source();
  const Groupoid& tgt = p.target();
  for (Obj x = 0; x < src.num_objects(); ++x) {
    const Obj px = p.on_object(x);
    const auto up = star(src, x);
    const auto down = star(tgt, px);
    std::vector<Mor> seen(tgt.num_morphisms(), kUndefined);
    for (Mor b : up) {
      const Mor a = p(b);
      if (seen[a] != kUndefined)
        return Verdict::no("object " + show(x) + ": morphisms " + show(seen[a]) + " and " +
                           show(b) + " both map to " + show(a) + " (not injective on star)");
      seen[a] = b;
    }
    for (Mor a : down)
      if (seen[a] == kUndefined)
        return Verdict::no("object " + show(x) + ": morphism " + show(a) + " of St " + show(px) +
                           " has no lift (not surjective on star)");
  }
  return Verdict::ok();
}

/// The unique morphism in the star at x̃ lying over a.
inline Mor lifting_function(const GroupoidMorphism& p, Mor a, Obj x_tilde) {
  if (auto v = is_covering_morphism(p); !v) fail(ErrorCode::NotCovering, v.witness);
  require_object(p.source(), x_tilde);
  if (a >= p.target().num_morphisms()) fail(ErrorCode::NotFound, "morphism " + show(a));
  if (p.on_object(x_tilde) != p.target().d0(a))
    fail(ErrorCode::AnchorMismatch, "p(" + show(x_tilde) + ") = " + show(p.on_object(x_tilde)) +
                                        " but d0(" + show(a) + ") = " + show(p.target().d0(a)));
  for (Mor b : star(p.source(), x_tilde))
    if (p(b) == a) return b;
  fail(ErrorCode::InternalContradiction, "covering without lift");
}

/// Universal: both groupoids transitive and every hom-set of the cover has
/// at most one element.
inline Verdict is_universal_covering(const GroupoidMorphism& p) {
  if (auto v = is_covering_morphism(p); !v) fail(ErrorCode::NotCovering, v.witness);
  if (!classify_transitivity(p.source()).transitive) return Verdict::no("cover is not transitive");
  if (!classify_transitivity(p.target()).transitive) return Verdict::no("base is not transitive");
  const Groupoid& g = p.source();
  const std::size_t n = g.num_objects();
  std::vector<Mor> first(n * n, kUndefined);
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    auto& slot = first[g.d0(m) * n + g.d1(m)];
    if (slot != kUndefined)
      return Verdict::no("hom-set (" + show(g.d0(m)) + "," + show(g.d1(m)) + ") contains " +
                         show(slot) + " and " + show(m));
    slot = m;
  }
  return Verdict::ok();
}

/// Action of a groupoid on a finite set {0..carrier-1} anchored by ω.
/// act(g, s) is defined iff d0(g) = ω(s).
class GroupoidAction {
 public:
  GroupoidAction() = default;

  static GroupoidAction make(Groupoid groupoid, std::vector<Obj> anchor, std::vector<Elem> table) {
    GroupoidAction a(std::move(groupoid), std::move(anchor), std::move(table));
    if (auto v = a.check(); !v) fail(ErrorCode::InvalidAction, v.witness);
    return a;
  }

  static GroupoidAction unchecked(Groupoid groupoid, std::vector<Obj> anchor,
                                  std::vector<Elem> table) {
    return GroupoidAction(std::move(groupoid), std::move(anchor), std::move(table));
  }

  const Groupoid& groupoid() const { return groupoid_; }
  std::size_t carrier_size() const { return anchor_.size(); }
  Obj anchor(Elem s) const { return anchor_[s]; }
  const std::vector<Obj>& anchor_table() const { return anchor_; }
  const std::vector<Elem>& table() const { return table_; }
  bool defined(Mor g, Elem s) const { return groupoid_.d0(g) == anchor_[s]; }
  /// g•s, or kUndefined.
  Elem operator()(Mor g, Elem s) const { return table_[g * carrier_size() + s]; }

  Verdict check() const {
    const Groupoid& G = groupoid_;
    const std::size_t ns = carrier_size();
    if (table_.size() != G.num_morphisms() * ns) return Verdict::no("table has wrong size");
    for (Elem s = 0; s < ns; ++s)
      if (anchor_[s] >= G.num_objects()) return Verdict::no("anchor of " + show(s) + " out of range");
    for (Mor g = 0; g < G.num_morphisms(); ++g)
      for (Elem s = 0; s < ns; ++s) {
        const Elem t = (*this)(g, s);
        if (!defined(g, s)) {
          if (t != kUndefined) return Verdict::no("g•s defined off the pullback at (" + show(g) + "," + show(s) + ")");
          continue;
        }
        if (t >= ns) return Verdict::no("g•s undefined on the pullback at (" + show(g) + "," + show(s) + ")");
        if (anchor_[t] != G.d1(g))
          return Verdict::no("ω(g•s) != d1(g) at (" + show(g) + "," + show(s) + ")");
      }
    for (Elem s = 0; s < ns; ++s)
      if ((*this)(G.id(anchor_[s]), s) != s) return Verdict::no("identity moves " + show(s));
    for (Mor h = 0; h < G.num_morphisms(); ++h)
      for (Mor g = 0; g < G.num_morphisms(); ++g) {
        const Mor hg = G.comp(h, g);
        if (hg == kUndefined) continue;
        for (Elem s = 0; s < ns; ++s)
          if (defined(g, s) && (*this)(hg, s) != (*this)(h, (*this)(g, s)))
            return Verdict::no("(h∘g)•s != h•(g•s) at (" + show(h) + "," + show(g) + "," + show(s) + ")");
      }
    return Verdict::ok();
  }

  friend bool operator==(const GroupoidAction& a, const GroupoidAction& b) {
    return a.anchor_ == b.anchor_ && a.table_ == b.table_ && a.groupoid_ == b.groupoid_;
  }

 private:
  GroupoidAction(Groupoid g, std::vector<Obj> anchor, std::vector<Elem> table)
      : groupoid_(std::move(g)), anchor_(std::move(anchor)), table_(std::move(table)) {}

  Groupoid groupoid_;
  std::vector<Obj> anchor_;
  std::vector<Elem> table_;
};

/// G ⋉ S with its projection to G. Morphism i is pairs[i] = (g, s), listed
/// with g major and s minor.
struct ActionGroupoid {
  Groupoid groupoid;
  GroupoidMorphism projection;
  std::vector<std::pair<Mor, Elem>> pairs;

  Mor index_of(Mor g, Elem s) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair{g, s});
    return static_cast<Mor>(it - pairs.begin());
  }
};

/// Objects are S; (g,s): s -> g•s; (g',g•s)∘(g,s) = (g'∘g, s); q(g,s) = g.
inline ActionGroupoid action_groupoid(const GroupoidAction& act) {
  if (auto v = act.check(); !v) fail(ErrorCode::InvalidAction, v.witness);
  const Groupoid& G = act.groupoid();
  const std::size_t ns = act.carrier_size();
  ActionGroupoid out;
  for (Mor g = 0; g < G.num_morphisms(); ++g)
    for (Elem s = 0; s < ns; ++s)
      if (act.defined(g, s)) out.pairs.emplace_back(g, s);
  const std::size_t m = out.pairs.size();
  std::vector<Obj> d0(m), d1(m);
  std::vector<Mor> comp(m * m, kUndefined), id(ns), q(m);
  for (Mor i = 0; i < m; ++i) {
    const auto [g, s] = out.pairs[i];
    d0[i] = s;
    d1[i] = act(g, s);
    q[i] = g;
  }
  for (Elem s = 0; s < ns; ++s) id[s] = out.index_of(G.id(act.anchor(s)), s);
  for (Mor i = 0; i < m; ++i)
    for (Mor j = 0; j < m; ++j) {
      if (d0[i] != d1[j]) continue;
      const auto [g2, s2] = out.pairs[i];
      const auto [g1, s1] = out.pairs[j];
      comp[i * m + j] = out.index_of(G.comp(g2, g1), s1);
    }
  out.groupoid = Groupoid::make(ns, std::move(d0), std::move(d1), std::move(id), std::move(comp));
  out.projection = GroupoidMorphism::make(out.groupoid, G, act.anchor_table(), std::move(q));
  if (auto v = is_covering_morphism(out.projection); !v)
    fail(ErrorCode::InternalContradiction, "action groupoid projection: " + v.witness);
  return out;
}

/// f: S -> S' is a morphism of actions: ω'f = ω and f(g•s) = g•f(s).
inline Verdict act_morphism_check(const std::vector<Elem>& f, const GroupoidAction& act,
                                  const GroupoidAction& act2) {
  if (!(act.groupoid() == act2.groupoid())) return Verdict::no("actions of different groupoids");
  if (f.size() != act.carrier_size()) return Verdict::no("map has wrong domain size");
  for (Elem s = 0; s < f.size(); ++s) {
    if (f[s] >= act2.carrier_size()) return Verdict::no("image of " + show(s) + " out of range");
    if (act2.anchor(f[s]) != act.anchor(s)) return Verdict::no("anchor not preserved at s=" + show(s));
  }
  const Groupoid& G = act.groupoid();
  for (Mor g = 0; g < G.num_morphisms(); ++g)
    for (Elem s = 0; s < f.size(); ++s)
      if (act.defined(g, s) && f[act(g, s)] != act2(g, f[s]))
        return Verdict::no("f(g•s) != g•f(s) at (" + show(g) + "," + show(s) + ")");
  return Verdict::ok();
}

/// The action of the base on the object set of a covering:
/// g•x̃ = d1(S_q(g, x̃)), anchored by the object map.
inline GroupoidAction fiber_action(const GroupoidMorphism& q) {
  if (auto v = is_covering_morphism(q); !v) fail(ErrorCode::NotCovering, v.witness);
  const Groupoid& G = q.target();
  const Groupoid& H = q.source();
  const std::size_t ns = H.num_objects();
  std::vector<Elem> table(G.num_morphisms() * ns, kUndefined);
  for (Obj x = 0; x < ns; ++x)
    for (Mor b : star(H, x)) table[q(b) * ns + x] = H.d1(b);
  return GroupoidAction::make(G, q.obj_map(), std::move(table));
}

/// Canonical iso H -> G ⋉ Ob(H) over G for a covering q: h ↦ (q(h), d0(h)).
inline GroupoidMorphism covering_to_action_groupoid_iso(const GroupoidMorphism& q,
                                                        const ActionGroupoid& ag) {
  const Groupoid& H = q.source();
  std::vector<Obj> o(H.num_objects());
  for (Obj x = 0; x < o.size(); ++x) o[x] = x;
  std::vector<Mor> m(H.num_morphisms());
  for (Mor h = 0; h < m.size(); ++h) m[h] = ag.index_of(q(h), H.d0(h));
  return GroupoidMorphism::make(H, ag.groupoid, std::move(o), std::move(m));
}

/// Backtracking search for a groupoid isomorphism: object bijections first,
/// then morphisms hom-set by hom-set, checking composition as soon as both
/// factors and the composite are assigned.
inline std::optional<GroupoidMorphism> find_groupoid_isomorphism(const Groupoid& a,
                                                                 const Groupoid& b) {
  const std::size_t n = a.num_objects(), m = a.num_morphisms();
  if (n != b.num_objects() || m != b.num_morphisms()) return std::nullopt;
  auto profile = [](const Groupoid& g, Obj x) {
    return std::pair{star(g, x).size(), g.hom_set(x, x).size()};
  };
  std::vector<Obj> om(n, kUndefined);
  std::vector<bool> used_obj(n, false);
  std::optional<GroupoidMorphism> result;

  auto try_morphisms = [&]() -> bool {
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y)
        if (a.hom_set(x, y).size() != b.hom_set(om[x], om[y]).size()) return false;
    std::vector<Mor> mm(m, kUndefined);
    std::vector<bool> used(m, false);
    auto consistent = [&](Mor g) {
      for (Mor h = 0; h < m; ++h) {
        if (mm[h] == kUndefined) continue;
        for (auto [p, q] : {std::pair{g, h}, std::pair{h, g}}) {
          const Mor pq = a.comp(p, q);
          if (pq != kUndefined && mm[pq] != kUndefined && mm[pq] != b.comp(mm[p], mm[q]))
            return false;
        }
        const Mor gg = a.comp(g, g);
        if (gg != kUndefined && mm[gg] != kUndefined && mm[gg] != b.comp(mm[g], mm[g])) return false;
      }
      return true;
    };
    std::function<bool(Mor)> go = [&](Mor g) -> bool {
      if (g == m) return true;
      for (Mor c : b.hom_set(om[a.d0(g)], om[a.d1(g)])) {
        if (used[c]) continue;
        mm[g] = c;
        used[c] = true;
        if (consistent(g) && go(g + 1)) return true;
        used[c] = false;
        mm[g] = kUndefined;
      }
      return false;
    };
    if (!go(0)) return false;
    auto f = GroupoidMorphism::make(a, b, om, mm);
    result = f;
    return true;
  };

  std::function<bool(Obj)> assign = [&](Obj x) -> bool {
    if (x == n) return try_morphisms();
    for (Obj y = 0; y < n; ++y) {
      if (used_obj[y] || profile(a, x) != profile(b, y)) continue;
      om[x] = y;
      used_obj[y] = true;
      if (assign(x + 1)) return true;
      used_obj[y] = false;
    }
    return false;
  };
  assign(0);
  return result;
}

}  // namespace xmodkit
