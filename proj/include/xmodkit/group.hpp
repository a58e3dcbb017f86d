#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xmodkit/error.hpp"

namespace xmodkit {

/// Index of an element inside a finite group. The identity is always 0.
using Elem = std::uint32_t;

inline std::string show(Elem e) { return std::to_string(e); }

/// A finite group given by its operation table.
///
/// Values are immutable and cheap to copy: the table is shared. Equality
/// compares tables only, never labels.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(trivial()) {}

  /// Validates a square table and returns the group it defines. When the
  /// identity is not element 0 the elements are relabeled by swapping the
  /// identity with 0.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& rows,
                                std::string label = {}) {
    const std::size_t n = rows.size();
    if (n == 0) fail(ErrorCode::MalformedTable, "empty table");
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n)
        fail(ErrorCode::MalformedTable, "row " + std::to_string(i) + " has length " +
                                            std::to_string(rows[i].size()) + ", expected " +
                                            std::to_string(n));
      for (Elem v : rows[i]) {
        if (v >= n) fail(ErrorCode::MalformedTable, "entry " + show(v) + " out of range");
        flat.push_back(v);
      }
    }
    return from_flat(n, std::move(flat), std::move(label));
  }

  static FiniteGroup from_flat(std::size_t n, std::vector<Elem> flat, std::string label = {}) {
    if (n == 0 || flat.size() != n * n) fail(ErrorCode::MalformedTable, "table is not n x n");
    for (Elem v : flat)
      if (v >= n) fail(ErrorCode::MalformedTable, "entry " + show(v) + " out of range");
    auto at = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };

    std::optional<Elem> identity;
    for (std::size_t e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
      if (ok) identity = static_cast<Elem>(e);
    }
    if (!identity) fail(ErrorCode::NoIdentity, "no two-sided identity");
    const Elem e = *identity;

    for (std::size_t x = 0; x < n; ++x) {
      bool found = false;
      for (std::size_t y = 0; y < n && !found; ++y) found = at(x, y) == e && at(y, x) == e;
      if (!found) fail(ErrorCode::NoInverse, "element " + std::to_string(x) + " has no inverse");
    }

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = at(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c)))
            fail(ErrorCode::NotAssociative, "(" + std::to_string(a) + "," + std::to_string(b) +
                                                "," + std::to_string(c) + ")");
      }

    if (e != 0) {
      auto swap_label = [e](Elem v) -> Elem { return v == e ? 0 : (v == 0 ? e : v); };
      std::vector<Elem> relabeled(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          relabeled[swap_label(static_cast<Elem>(a)) * n + swap_label(static_cast<Elem>(b))] =
              swap_label(at(a, b));
      flat = std::move(relabeled);
    }
    return FiniteGroup(n, std::move(flat), std::move(label));
  }

  static FiniteGroup trivial() { return FiniteGroup(1, {0}, "Z1"); }

  std::size_t order() const { return data_->n; }
  Elem op(Elem a, Elem b) const { return data_->table[a * data_->n + b]; }
  Elem inv(Elem a) const { return data_->inv[a]; }
  static constexpr Elem identity() { return 0; }

  /// g + x - g
  Elem conj(Elem g, Elem x) const { return op(op(g, x), inv(g)); }

  /// a - b
  Elem sub(Elem a, Elem b) const { return op(a, inv(b)); }

  std::size_t element_order(Elem a) const { return data_->orders[a]; }
  bool is_abelian() const { return data_->abelian; }

  const std::string& label() const { return label_; }
  FiniteGroup with_label(std::string label) const {
    FiniteGroup g = *this;
    g.label_ = std::move(label);
    return g;
  }

  std::span<const Elem> table() const { return data_->table; }
  std::vector<std::vector<Elem>> rows() const {
    std::vector<std::vector<Elem>> r(order());
    for (std::size_t a = 0; a < order(); ++a)
      r[a].assign(data_->table.begin() + a * order(), data_->table.begin() + (a + 1) * order());
    return r;
  }

  auto elements() const {
    std::vector<Elem> v(order());
    std::iota(v.begin(), v.end(), Elem{0});
    return v;
  }

  friend bool operator==(const FiniteGroup& x, const FiniteGroup& y) {
    return x.data_ == y.data_ || (x.data_->n == y.data_->n && x.data_->table == y.data_->table);
  }

 private:
  struct Data {
    std::size_t n;
    std::vector<Elem> table;
    std::vector<Elem> inv;
    std::vector<std::size_t> orders;
    bool abelian;
  };

  // Table already validated with identity 0.
  FiniteGroup(std::size_t n, std::vector<Elem> table, std::string label)
      : label_(std::move(label)) {
    auto d = std::make_shared<Data>();
    d->n = n;
    d->table = std::move(table);
    d->inv.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (d->table[x * n + y] == 0) {
          d->inv[x] = static_cast<Elem>(y);
          break;
        }
    d->orders.assign(n, 1);
    for (std::size_t x = 0; x < n; ++x) {
      Elem p = static_cast<Elem>(x);
      std::size_t k = 1;
      while (p != 0) {
        p = d->table[p * n + x];
        ++k;
      }
      d->orders[x] = k;
    }
    d->abelian = true;
    for (std::size_t x = 0; x < n && d->abelian; ++x)
      for (std::size_t y = x + 1; y < n && d->abelian; ++y)
        d->abelian = d->table[x * n + y] == d->table[y * n + x];
    data_ = std::move(d);
  }

  std::shared_ptr<const Data> data_;
  std::string label_;
};

/// Sorted set of elements of a parent group, closed under the operation.
class Subgroup {
 public:
  /// Validates closure and returns the subgroup in canonical sorted form.
  static Subgroup make(FiniteGroup parent, std::vector<Elem> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<bool> in(parent.order(), false);
    for (Elem e : elements) {
      if (e >= parent.order()) fail(ErrorCode::NotSubgroup, "element " + show(e) + " out of range");
      in[e] = true;
    }
    if (elements.empty() || !in[0]) fail(ErrorCode::NotSubgroup, "missing identity");
    for (Elem a : elements) {
      if (!in[parent.inv(a)]) fail(ErrorCode::NotSubgroup, "not closed under inverse at " + show(a));
      for (Elem b : elements)
        if (!in[parent.op(a, b)])
          fail(ErrorCode::NotSubgroup, "not closed at (" + show(a) + "," + show(b) + ")");
    }
    return Subgroup(std::move(parent), std::move(elements), std::move(in));
  }

  static Subgroup trivial(const FiniteGroup& g) { return make(g, {0}); }
  static Subgroup whole(const FiniteGroup& g) { return make(g, g.elements()); }

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<Elem>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Elem e) const { return e < member_.size() && member_[e]; }

  bool is_subset_of(const Subgroup& other) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](Elem e) { return other.contains(e); });
  }

  /// Returns a conjugation witness (g, n) when not normal.
  std::optional<std::pair<Elem, Elem>> normality_witness() const {
    for (Elem g = 0; g < parent_.order(); ++g)
      for (Elem n : elements_)
        if (!contains(parent_.conj(g, n))) return std::pair{g, n};
    return std::nullopt;
  }
  bool is_normal() const { return !normality_witness(); }

  /// The subgroup as a group in its own right: element i is elements()[i].
  FiniteGroup as_group(std::string label = {}) const {
    const std::size_t k = elements_.size();
    std::vector<Elem> index(parent_.order(), 0);
    for (std::size_t i = 0; i < k; ++i) index[elements_[i]] = static_cast<Elem>(i);
    std::vector<Elem> flat(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        flat[i * k + j] = index[parent_.op(elements_[i], elements_[j])];
    return FiniteGroup::from_flat(k, std::move(flat), std::move(label));
  }

  /// Position of a member inside elements().
  Elem index_of(Elem e) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    return static_cast<Elem>(it - elements_.begin());
  }

  friend bool operator==(const Subgroup& x, const Subgroup& y) {
    return x.parent_ == y.parent_ && x.elements_ == y.elements_;
  }

 private:
  Subgroup(FiniteGroup parent, std::vector<Elem> elements, std::vector<bool> member)
      : parent_(std::move(parent)), elements_(std::move(elements)), member_(std::move(member)) {}

  FiniteGroup parent_;
  std::vector<Elem> elements_;
  std::vector<bool> member_;
};

/// Closure of a set of elements under the group operation.
inline Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem s : gens) {
      Elem p = g.op(members[i], s);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  return Subgroup::make(g, std::move(members));
}

/// Greedy generating set: scans elements in index order and keeps those not
/// already generated.
inline std::vector<Elem> generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  for (Elem x = 1; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    Subgroup h = generated_subgroup(g, gens);
    for (Elem e : h.elements()) in[e] = true;
  }
  return gens;
}

inline Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.op(a, b) == g.op(b, a);
    if (central) z.push_back(a);
  }
  return Subgroup::make(g, std::move(z));
}

/// All subgroups, smallest first, ties broken lexicographically on the
/// sorted element lists.
inline std::vector<Subgroup> subgroups(const FiniteGroup& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> frontier{{0}};
  seen.insert({0});
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& h : frontier) {
      std::vector<bool> in(g.order(), false);
      for (Elem e : h) in[e] = true;
      for (Elem x = 1; x < g.order(); ++x) {
        if (in[x]) continue;
        std::vector<Elem> gens = h;
        gens.push_back(x);
        auto bigger = generated_subgroup(g, gens).elements();
        if (seen.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Elem>> all(seen.begin(), seen.end());
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Subgroup> out;
  out.reserve(all.size());
  for (auto& s : all) out.push_back(Subgroup::make(g, std::move(s)));
  return out;
}

/// A homomorphism between finite groups stored as a lookup table.
class GroupHom {
 public:
  GroupHom() = default;

  static GroupHom make(FiniteGroup source, FiniteGroup target, std::vector<Elem> map) {
    if (map.size() != source.order())
      fail(ErrorCode::NotHomomorphism, "map has " + std::to_string(map.size()) +
                                           " entries, source order " +
                                           std::to_string(source.order()));
    for (Elem v : map)
      if (v >= target.order()) fail(ErrorCode::NotHomomorphism, "image " + show(v) + " out of range");
    if (map[0] != 0) fail(ErrorCode::NotHomomorphism, "identity not preserved");
    for (Elem a = 0; a < source.order(); ++a)
      for (Elem b = 0; b < source.order(); ++b)
        if (map[source.op(a, b)] != target.op(map[a], map[b]))
          fail(ErrorCode::NotHomomorphism, "(" + show(a) + "," + show(b) + ")");
    return GroupHom(std::move(source), std::move(target), std::move(map));
  }

  static GroupHom identity(const FiniteGroup& g) { return GroupHom(g, g, g.elements()); }
  static GroupHom zero(const FiniteGroup& s, const FiniteGroup& t) {
    return GroupHom(s, t, std::vector<Elem>(s.order(), 0));
  }

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem a) const { return map_[a]; }

  Subgroup kernel() const {
    std::vector<Elem> k;
    for (Elem a = 0; a < source_.order(); ++a)
      if (map_[a] == 0) k.push_back(a);
    return Subgroup::make(source_, std::move(k));
  }
  Subgroup image() const { return Subgroup::make(target_, map_); }

  bool is_injective() const { return kernel().size() == 1; }
  bool is_surjective() const { return image().size() == target_.order(); }
  bool is_iso() const { return source_.order() == target_.order() && is_injective(); }
  bool is_zero() const {
    return std::all_of(map_.begin(), map_.end(), [](Elem v) { return v == 0; });
  }

  GroupHom inverse() const {
    if (!is_iso()) fail(ErrorCode::NotIso, "map is not bijective");
    std::vector<Elem> m(map_.size());
    for (Elem a = 0; a < map_.size(); ++a) m[map_[a]] = a;
    return GroupHom(target_, source_, std::move(m));
  }

  friend bool operator==(const GroupHom& x, const GroupHom& y) {
    return x.map_ == y.map_ && x.source_ == y.source_ && x.target_ == y.target_;
  }

 private:
  GroupHom(FiniteGroup s, FiniteGroup t, std::vector<Elem> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

  friend GroupHom compose(const GroupHom& outer, const GroupHom& inner);

  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> map_;
};

/// outer ∘ inner
inline GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!(inner.target() == outer.source()))
    fail(ErrorCode::NotHomomorphism, "composition of non-matching homs");
  std::vector<Elem> m(inner.source().order());
  for (Elem a = 0; a < m.size(); ++a) m[a] = outer(inner(a));
  return GroupHom(inner.source(), outer.target(), std::move(m));
}

/// Action of an actor group on a target group by automorphisms.
class GroupAction {
 public:
  GroupAction() = default;

  /// Table is indexed [b][a] -> b·a.
  static GroupAction make(FiniteGroup actor, FiniteGroup target,
                          const std::vector<std::vector<Elem>>& rows) {
    if (rows.size() != actor.order()) fail(ErrorCode::BadAction, "wrong number of rows");
    std::vector<Elem> flat;
    flat.reserve(actor.order() * target.order());
    for (const auto& r : rows) {
      if (r.size() != target.order()) fail(ErrorCode::BadAction, "wrong row length");
      for (Elem v : r) {
        if (v >= target.order()) fail(ErrorCode::BadAction, "entry out of range");
        flat.push_back(v);
      }
    }
    return make_flat(std::move(actor), std::move(target), std::move(flat));
  }

  static GroupAction make_flat(FiniteGroup actor, FiniteGroup target, std::vector<Elem> flat) {
    GroupAction act(std::move(actor), std::move(target), std::move(flat));
    if (auto v = act.check(); !v) fail(ErrorCode::BadAction, v.witness);
    return act;
  }

  static GroupAction trivial(const FiniteGroup& actor, const FiniteGroup& target) {
    std::vector<Elem> flat;
    flat.reserve(actor.order() * target.order());
    for (Elem b = 0; b < actor.order(); ++b)
      for (Elem a = 0; a < target.order(); ++a) flat.push_back(a);
    return GroupAction(actor, target, std::move(flat));
  }

  /// Conjugation of a group on itself.
  static GroupAction conjugation(const FiniteGroup& g) {
    std::vector<Elem> flat;
    flat.reserve(g.order() * g.order());
    for (Elem b = 0; b < g.order(); ++b)
      for (Elem a = 0; a < g.order(); ++a) flat.push_back(g.conj(b, a));
    return GroupAction(g, g, std::move(flat));
  }

  /// Pulls an action back along a hom into its actor: x·a = f(x)·a.
  static GroupAction pullback(const GroupAction& act, const GroupHom& f) {
    if (!(f.target() == act.actor())) fail(ErrorCode::BadAction, "pullback along mismatched hom");
    std::vector<Elem> flat;
    flat.reserve(f.source().order() * act.target().order());
    for (Elem x = 0; x < f.source().order(); ++x)
      for (Elem a = 0; a < act.target().order(); ++a) flat.push_back(act(f(x), a));
    return GroupAction(f.source(), act.target(), std::move(flat));
  }

  /// Unvalidated table, for fuzzing and for the validators themselves.
  static GroupAction unchecked(FiniteGroup actor, FiniteGroup target, std::vector<Elem> flat) {
    return GroupAction(std::move(actor), std::move(target), std::move(flat));
  }

  /// Identity acts trivially, compatibility with the actor's operation,
  /// and each b·(-) an automorphism.
  Verdict check() const {
    const std::size_t na = target_.order(), nb = actor_.order();
    if (table_.size() != na * nb) return Verdict::no("table has wrong size");
    for (Elem v : table_)
      if (v >= na) return Verdict::no("entry out of range");
    for (Elem a = 0; a < na; ++a)
      if ((*this)(0, a) != a) return Verdict::no("identity moves " + show(a));
    for (Elem b = 0; b < nb; ++b) {
      std::vector<bool> hit(na, false);
      for (Elem a = 0; a < na; ++a) hit[(*this)(b, a)] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end())
        return Verdict::no("b=" + show(b) + " does not act bijectively");
      for (Elem a = 0; a < na; ++a)
        for (Elem a1 = 0; a1 < na; ++a1)
          if ((*this)(b, target_.op(a, a1)) != target_.op((*this)(b, a), (*this)(b, a1)))
            return Verdict::no("b=" + show(b) + " is not a hom at (" + show(a) + "," + show(a1) + ")");
    }
    for (Elem b1 = 0; b1 < nb; ++b1)
      for (Elem b2 = 0; b2 < nb; ++b2)
        for (Elem a = 0; a < na; ++a)
          if ((*this)(actor_.op(b1, b2), a) != (*this)(b1, (*this)(b2, a)))
            return Verdict::no("(b1+b2)·a != b1·(b2·a) at (" + show(b1) + "," + show(b2) + "," +
                               show(a) + ")");
    return Verdict::ok();
  }

  const FiniteGroup& actor() const { return actor_; }
  const FiniteGroup& target() const { return target_; }
  Elem operator()(Elem b, Elem a) const { return table_[b * target_.order() + a]; }
  const std::vector<Elem>& table() const { return table_; }
  std::vector<std::vector<Elem>> rows() const {
    std::vector<std::vector<Elem>> r(actor_.order());
    for (Elem b = 0; b < actor_.order(); ++b)
      for (Elem a = 0; a < target_.order(); ++a) r[b].push_back((*this)(b, a));
    return r;
  }

  bool is_trivial() const {
    for (Elem b = 0; b < actor_.order(); ++b)
      for (Elem a = 0; a < target_.order(); ++a)
        if ((*this)(b, a) != a) return false;
    return true;
  }

  friend bool operator==(const GroupAction& x, const GroupAction& y) {
    return x.table_ == y.table_ && x.actor_ == y.actor_ && x.target_ == y.target_;
  }

 private:
  GroupAction(FiniteGroup actor, FiniteGroup target, std::vector<Elem> table)
      : actor_(std::move(actor)), target_(std::move(target)), table_(std::move(table)) {}

  FiniteGroup actor_;
  FiniteGroup target_;
  std::vector<Elem> table_;
};

/// Quotient G/N with cosets ordered by least member, and the projection.
struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  std::vector<Elem> representatives;  // least member of each coset
};

inline Quotient quotient(const Subgroup& n, std::string label = {}) {
  const FiniteGroup& g = n.parent();
  if (auto w = n.normality_witness())
    fail(ErrorCode::NotNormal, "conjugating " + show(w->second) + " by " + show(w->first) +
                                   " leaves the subgroup");
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> coset_of(g.order(), unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] != unset) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : n.elements()) coset_of[g.op(x, m)] = c;
  }
  const std::size_t k = reps.size();
  std::vector<Elem> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = coset_of[g.op(reps[i], reps[j])];
  FiniteGroup q = FiniteGroup::from_flat(k, std::move(flat), std::move(label));
  GroupHom p = GroupHom::make(g, q, coset_of);
  return {std::move(q), std::move(p), std::move(reps)};
}

/// Kernel and image of a homomorphism.
struct HomInvariants {
  Subgroup kernel;
  Subgroup image;
};

inline HomInvariants hom_invariants(const GroupHom& h) { return {h.kernel(), h.image()}; }

/// Restricts a hom to a subgroup of its source; the result's source is
/// sub.as_group().
inline GroupHom restrict_to(const GroupHom& h, const Subgroup& sub) {
  std::vector<Elem> m;
  m.reserve(sub.size());
  for (Elem e : sub.elements()) m.push_back(h(e));
  return GroupHom::make(sub.as_group(), h.target(), std::move(m));
}

/// Inclusion of a subgroup into its parent.
inline GroupHom inclusion(const Subgroup& sub) {
  return GroupHom::make(sub.as_group(), sub.parent(), sub.elements());
}

}  // namespace xmodkit
