#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "xmodkit/group.hpp"

namespace xmodkit {

namespace detail {

/// Extends generator images to a map on the whole source group by
/// breadth-first search over right multiplication by generators. Returns
/// nullopt when two words for the same element disagree, i.e. the
/// assignment does not define a homomorphism.
template <class T, class Mul>
std::optional<std::vector<T>> extend_generator_images(const FiniteGroup& src,
                                                      const std::vector<Elem>& gens,
                                                      const std::vector<T>& images, const T& one,
                                                      Mul mul) {
  std::vector<std::optional<T>> img(src.order());
  img[0] = one;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem y = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem z = src.op(y, gens[k]);
      T v = mul(*img[y], images[k]);
      if (!img[z]) {
        img[z] = std::move(v);
        queue.push_back(z);
      } else if (!(*img[z] == v)) {
        return std::nullopt;
      }
    }
  }
  std::vector<T> out;
  out.reserve(img.size());
  for (auto& v : img) out.push_back(std::move(*v));
  return out;
}

/// Odometer over generator images; candidates[k] lists admissible images of
/// generator k. The callback returns false to stop early.
template <class T, class Mul, class Fn>
void for_each_extension(const FiniteGroup& src, const std::vector<Elem>& gens,
                        const std::vector<std::vector<T>>& candidates, const T& one, Mul mul,
                        Fn&& fn) {
  for (const auto& c : candidates)
    if (c.empty()) return;
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<T> images(gens.size());
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k) images[k] = candidates[k][pos[k]];
    if (auto full = extend_generator_images(src, gens, images, one, mul))
      if (!fn(*full)) return;
    std::size_t k = gens.size();
    while (k > 0) {
      --k;
      if (++pos[k] < candidates[k].size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
    if (gens.empty()) return;
  }
}

inline std::size_t perm_order(const std::vector<Elem>& p) {
  std::vector<Elem> q = p;
  std::size_t k = 1;
  auto is_id = [](const std::vector<Elem>& v) {
    for (Elem i = 0; i < v.size(); ++i)
      if (v[i] != i) return false;
    return true;
  };
  while (!is_id(q)) {
    std::vector<Elem> r(q.size());
    for (Elem i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    q = std::move(r);
    ++k;
  }
  return k;
}

}  // namespace detail

/// Calls fn(map) for every homomorphism src -> dst in a deterministic order
/// (lexicographic in the images of the greedy generators). Stops when fn
/// returns false.
template <class Fn>
void for_each_hom(const FiniteGroup& src, const FiniteGroup& dst, Fn&& fn,
                  bool bijective_only = false) {
  const auto gens = generators(src);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::size_t ord = src.element_order(gens[k]);
    for (Elem h = 0; h < dst.order(); ++h) {
      const std::size_t o = dst.element_order(h);
      if (bijective_only ? o == ord : ord % o == 0) candidates[k].push_back(h);
    }
  }
  auto mul = [&dst](Elem a, Elem b) { return dst.op(a, b); };
  detail::for_each_extension(src, gens, candidates, Elem{0}, mul, [&](std::vector<Elem>& m) {
    if (bijective_only) {
      std::vector<bool> hit(dst.order(), false);
      for (Elem v : m) hit[v] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) return true;
    }
    return fn(m);
  });
}

/// Every homomorphism G -> H.
inline std::vector<GroupHom> enumerate_homs(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<GroupHom> out;
  for_each_hom(g, h, [&](const std::vector<Elem>& m) {
    out.push_back(GroupHom::make(g, h, m));
    return true;
  });
  return out;
}

namespace detail {

struct GroupFingerprint {
  std::size_t order;
  bool abelian;
  std::vector<std::size_t> order_histogram;
  std::size_t center_size;
  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

inline GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint f{g.order(), g.is_abelian(), std::vector<std::size_t>(g.order() + 1, 0),
                     center(g).size()};
  for (Elem x = 0; x < g.order(); ++x) ++f.order_histogram[g.element_order(x)];
  return f;
}

}  // namespace detail

/// First isomorphism G -> H found by bijective generator-image search.
inline std::optional<GroupHom> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (!(detail::fingerprint(g) == detail::fingerprint(h))) return std::nullopt;
  std::optional<GroupHom> found;
  for_each_hom(
      g, h,
      [&](const std::vector<Elem>& m) {
        found = GroupHom::make(g, h, m);
        return false;
      },
      true);
  return found;
}

inline bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, h).has_value();
}

/// A permutation of a group's elements, used for automorphisms.
using Perm = std::vector<Elem>;

/// All automorphisms of G as permutations, sorted lexicographically; the
/// identity comes first.
inline std::vector<Perm> automorphisms(const FiniteGroup& g) {
  std::vector<Perm> out;
  for_each_hom(
      g, g,
      [&](const std::vector<Elem>& m) {
        out.push_back(m);
        return true;
      },
      true);
  std::sort(out.begin(), out.end());
  return out;
}

/// Largest automorphism group materialized as an operation table.
inline constexpr std::size_t kMaxAutomorphismGroupOrder = 2048;

/// Aut(G) as a finite group together with its evaluation table.
struct AutomorphismGroup {
  FiniteGroup group;
  std::vector<Perm> automorphisms;  // element i of group acts as automorphisms[i]

  Elem evaluate(Elem aut, Elem g) const { return automorphisms[aut][g]; }
};

/// Composition order is (a∘b)(g) = a(b(g)).
inline AutomorphismGroup automorphism_group(const FiniteGroup& g) {
  auto auts = automorphisms(g);
  const std::size_t k = auts.size();
  if (k > kMaxAutomorphismGroupOrder)
    fail(ErrorCode::CapExceeded, "Aut(" + g.label() + ") has order " + std::to_string(k));
  std::map<Perm, Elem> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(auts[i], static_cast<Elem>(i));
  std::vector<Elem> flat(k * k);
  Perm tmp(g.order());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      for (Elem x = 0; x < g.order(); ++x) tmp[x] = auts[i][auts[j][x]];
      flat[i * k + j] = index.at(tmp);
    }
  std::string label = g.label().empty() ? std::string{} : "Aut(" + g.label() + ")";
  return {FiniteGroup::from_flat(k, std::move(flat), std::move(label)), std::move(auts)};
}

/// Every action of B on A by automorphisms, i.e. every homomorphism
/// B -> Aut(A), enumerated without materializing Aut(A) as a table.
inline std::vector<GroupAction> enumerate_actions(const FiniteGroup& b, const FiniteGroup& a,
                                                  const std::vector<Perm>& auts_of_a) {
  const auto gens = generators(b);
  std::vector<std::size_t> aut_orders;
  aut_orders.reserve(auts_of_a.size());
  for (const auto& p : auts_of_a) aut_orders.push_back(detail::perm_order(p));
  std::vector<std::vector<Perm>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::size_t ord = b.element_order(gens[k]);
    for (std::size_t i = 0; i < auts_of_a.size(); ++i)
      if (ord % aut_orders[i] == 0) candidates[k].push_back(auts_of_a[i]);
  }
  Perm one = a.elements();
  auto mul = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (Elem i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  std::vector<GroupAction> out;
  detail::for_each_extension(b, gens, candidates, one, mul, [&](std::vector<Perm>& images) {
    std::vector<Elem> flat;
    flat.reserve(b.order() * a.order());
    for (const auto& p : images) flat.insert(flat.end(), p.begin(), p.end());
    out.push_back(GroupAction::unchecked(b, a, std::move(flat)));
    return true;
  });
  return out;
}

inline std::vector<GroupAction> enumerate_actions(const FiniteGroup& b, const FiniteGroup& a) {
  return enumerate_actions(b, a, automorphisms(a));
}

}  // namespace xmodkit
