#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "xmodkit/crossed_module.hpp"
#include "xmodkit/families.hpp"
#include "xmodkit/homs.hpp"
#include "xmodkit/lifting.hpp"
#include "xmodkit/parallel.hpp"
#include "xmodkit/serialize.hpp"

namespace xmodkit {

inline constexpr const char* kGeneratorVersion = "xmodkit 0.1.0";
inline constexpr std::size_t kDefaultOrderCap = 16;
inline constexpr std::size_t kHardOrderCap = 24;
inline constexpr std::size_t kMaxProduct = 64;

/// Groups of order <= max_order from the named families (cyclic, symmetric,
/// dihedral, dicyclic, direct products of earlier ones), one per isomorphism
/// class, ordered by order and then by family. Not every isomorphism class is
/// reached (A4 and the semidirect groups of order 16 are missing, for one).
inline std::vector<FiniteGroup> catalog_groups(std::size_t max_order,
                                               std::size_t order_cap = kDefaultOrderCap) {
  if (order_cap > kHardOrderCap)
    fail(ErrorCode::CapExceeded, "order cap " + std::to_string(order_cap) + " exceeds " +
                                     std::to_string(kHardOrderCap));
  if (max_order > order_cap)
    fail(ErrorCode::CapExceeded, "max order " + std::to_string(max_order) + " exceeds cap " +
                                     std::to_string(order_cap));
  std::vector<FiniteGroup> kept;
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::vector<FiniteGroup> cand{cyclic(n)};
    for (std::size_t k = 3, f = 6; f <= n; ++k, f *= k)
      if (f == n) cand.push_back(symmetric(k));
    if (n % 2 == 0 && n >= 4) cand.push_back(dihedral(n / 2));
    if (n % 4 == 0 && n >= 8) cand.push_back(dicyclic(n / 4));
    const std::size_t before = kept.size();
    for (std::size_t i = 0; i < before; ++i)
      for (std::size_t j = i; j < before; ++j)
        if (kept[i].order() >= 2 && kept[j].order() >= 2 &&
            kept[i].order() * kept[j].order() == n)
          cand.push_back(direct_product(kept[i], kept[j]));
    for (auto& g : cand) {
      bool seen = false;
      for (std::size_t i = before; i < kept.size() && !seen; ++i) seen = are_isomorphic(g, kept[i]);
      if (!seen) kept.push_back(std::move(g));
    }
  }
  return kept;
}

/// Greedy generating set of a permutation group given by all its elements.
inline std::vector<Perm> perm_generators(const std::vector<Perm>& group) {
  std::vector<Perm> gens;
  if (group.empty()) return gens;
  const std::size_t n = group.front().size();
  Perm one(n);
  for (Elem i = 0; i < n; ++i) one[i] = i;
  std::set<Perm> closure{one};
  for (const Perm& p : group) {
    if (closure.count(p)) continue;
    gens.push_back(p);
    std::vector<Perm> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm& q : frontier)
        for (const Perm& g : gens) {
          Perm r(n);
          for (Elem i = 0; i < n; ++i) r[i] = g[q[i]];
          if (closure.insert(r).second) next.push_back(std::move(r));
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

/// Crossed modules with the given A and B, one per isomorphism class of
/// (α, action) under Aut(A) × Aut(B), in first-found order (actions outer,
/// homs inner).
inline std::vector<CrossedModule> xmods_over(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  const auto auts_a = automorphisms(a);
  const auto auts_b = automorphisms(b);
  const auto actions = enumerate_actions(b, a, auts_a);
  const auto homs = enumerate_homs(a, b);
  const auto gens_a = perm_generators(auts_a);
  const auto gens_b = perm_generators(auts_b);

  auto key = [&](const std::vector<Elem>& alpha, const std::vector<Elem>& act) {
    std::string k;
    k.reserve((na + na * nb) * 2);
    for (Elem v : alpha) k.push_back(static_cast<char>(v)), k.push_back(static_cast<char>(v >> 8));
    for (Elem v : act) k.push_back(static_cast<char>(v)), k.push_back(static_cast<char>(v >> 8));
    return k;
  };
  // (f1, f2)·(α, act): α'(f1 a) = f2(α a), act'(f2 b, f1 a) = f1(act(b, a)).
  auto transform = [&](const Perm& f1, const Perm& f2, const std::vector<Elem>& alpha,
                       const std::vector<Elem>& act) {
    std::vector<Elem> al(na), ac(na * nb);
    for (Elem x = 0; x < na; ++x) al[f1[x]] = f2[alpha[x]];
    for (Elem y = 0; y < nb; ++y)
      for (Elem x = 0; x < na; ++x) ac[f2[y] * na + f1[x]] = f1[act[y * na + x]];
    return std::pair{std::move(al), std::move(ac)};
  };
  const Perm id_a = a.elements(), id_b = b.elements();

  std::unordered_set<std::string> seen;
  std::vector<CrossedModule> out;
  for (const GroupAction& act : actions) {
    for (const GroupHom& alpha : homs) {
      CrossedModule xm = CrossedModule::unchecked(alpha, act);
      if (xm.cm1_witness() || xm.cm2_witness()) continue;
      if (seen.count(key(alpha.map(), act.table()))) continue;
      std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> frontier{
          {alpha.map(), act.table()}};
      seen.insert(key(alpha.map(), act.table()));
      while (!frontier.empty()) {
        std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> next;
        for (const auto& [al, ac] : frontier) {
          auto visit = [&](const Perm& f1, const Perm& f2) {
            auto t = transform(f1, f2, al, ac);
            if (seen.insert(key(t.first, t.second)).second) next.push_back(std::move(t));
          };
          for (const Perm& g : gens_a) visit(g, id_b);
          for (const Perm& g : gens_b) visit(id_a, g);
        }
        frontier = std::move(next);
      }
      xm.validate();
      out.push_back(std::move(xm));
    }
  }
  return out;
}

struct CatalogXMod {
  std::string id;
  CrossedModule xm;
  std::vector<Lifting> liftings;  // enumerate_liftings, in order
};

struct Catalog {
  std::size_t max_order = 0;
  std::size_t max_product = kMaxProduct;
  std::string generator = kGeneratorVersion;
  std::vector<FiniteGroup> groups;
  std::vector<CatalogXMod> xmods;

  const FiniteGroup* find_group(const std::string& label) const {
    for (const auto& g : groups)
      if (g.label() == label) return &g;
    return nullptr;
  }
  const CatalogXMod* find_xmod(const std::string& id) const {
    for (const auto& x : xmods)
      if (x.id == id) return &x;
    return nullptr;
  }
};

inline std::string xmod_id(const CrossedModule& xm, std::size_t k) {
  return xm.a().label() + "-" + xm.b().label() + "-" + std::to_string(k);
}

inline Catalog generate_catalog(std::size_t max_order, std::size_t order_cap = kDefaultOrderCap) {
  Catalog cat;
  cat.max_order = max_order;
  cat.groups = catalog_groups(max_order, order_cap);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < cat.groups.size(); ++i)
    for (std::size_t j = 0; j < cat.groups.size(); ++j)
      if (cat.groups[i].order() * cat.groups[j].order() <= cat.max_product) pairs.emplace_back(i, j);
  std::vector<std::vector<CatalogXMod>> slots(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    auto xms = xmods_over(cat.groups[pairs[p].first], cat.groups[pairs[p].second]);
    for (std::size_t k = 0; k < xms.size(); ++k) {
      std::vector<Lifting> ls;
      for (auto& row : enumerate_liftings(xms[k])) ls.push_back(std::move(row.lifting));
      slots[p].push_back({xmod_id(xms[k], k), std::move(xms[k]), std::move(ls)});
    }
  });
  for (auto& s : slots)
    for (auto& x : s) cat.xmods.push_back(std::move(x));
  return cat;
}

inline Json to_json(const Catalog& cat) {
  Json j;
  j["provenance"] = {{"generator", cat.generator},
                     {"max_order", cat.max_order},
                     {"max_product", cat.max_product},
                     {"families", {"cyclic", "symmetric", "dihedral", "dicyclic", "direct_product"}}};
  j["groups"] = Json::array();
  for (const auto& g : cat.groups) j["groups"].push_back(to_json(g));
  j["xmods"] = Json::array();
  j["liftings"] = Json::object();
  for (const auto& x : cat.xmods) {
    Json e = to_json(x.xm, true);
    e["id"] = x.id;
    j["xmods"].push_back(std::move(e));
    Json ls = Json::array();
    for (const auto& l : x.liftings) ls.push_back(to_json(l, x.id));
    j["liftings"][x.id] = std::move(ls);
  }
  return j;
}

/// A catalog read back from JSON with every entry revalidated. Entries that
/// fail are dropped and reported in `failures`.
struct CatalogLoad {
  Catalog catalog;
  std::vector<std::string> failures;
};

inline CatalogLoad load_catalog(const Json& j) {
  CatalogLoad out;
  Catalog& cat = out.catalog;
  auto report = [&](const std::string& where, const std::exception& e) {
    out.failures.push_back(where + ": " + e.what());
  };
  try {
    const Json& prov = detail::field(j, "provenance");
    cat.max_order = detail::field(prov, "max_order").get<std::size_t>();
    cat.max_product = detail::field(prov, "max_product").get<std::size_t>();
    cat.generator = detail::field(prov, "generator").get<std::string>();
  } catch (const std::exception& e) {
    report("provenance", e);
  }
  std::set<std::string> labels;
  if (j.contains("groups") && j["groups"].is_array()) {
    for (std::size_t i = 0; i < j["groups"].size(); ++i) {
      try {
        FiniteGroup g = group_from_json(j["groups"][i]);
        if (!labels.insert(g.label()).second)
          fail(ErrorCode::ParseError, "duplicate label " + g.label());
        cat.groups.push_back(std::move(g));
      } catch (const std::exception& e) {
        std::string where = "group " + std::to_string(i);
        if (const Json& g = j["groups"][i]; g.is_object() && g.contains("label") && g["label"].is_string())
          where += " (" + g["label"].get<std::string>() + ")";
        report(where, e);
      }
    }
  } else {
    out.failures.push_back("groups: missing");
  }
  GroupLookup lookup = [&](const std::string& label) {
    if (const FiniteGroup* g = cat.find_group(label)) return *g;
    fail(ErrorCode::NotFound, "group " + label);
  };
  std::set<std::string> ids;
  if (j.contains("xmods") && j["xmods"].is_array()) {
    for (std::size_t i = 0; i < j["xmods"].size(); ++i) {
      const Json& e = j["xmods"][i];
      std::string id = "xmod " + std::to_string(i);
      try {
        id = detail::field(e, "id").get<std::string>();
        if (!ids.insert(id).second) fail(ErrorCode::ParseError, "duplicate id");
        cat.xmods.push_back({id, xmod_from_json(e, lookup), {}});
      } catch (const std::exception& ex) {
        report(id, ex);
      }
    }
  } else {
    out.failures.push_back("xmods: missing");
  }
  const Json empty = Json::object();
  const Json& lj = j.contains("liftings") ? j["liftings"] : empty;
  for (auto& x : cat.xmods) {
    if (!lj.contains(x.id)) {
      out.failures.push_back(x.id + ": liftings missing");
      continue;
    }
    const Json& arr = lj[x.id];
    for (std::size_t k = 0; k < arr.size(); ++k) {
      try {
        x.liftings.push_back(lifting_from_json(arr[k], [&](const std::string& ref) {
          if (ref != x.id) fail(ErrorCode::ParseError, "lifting filed under the wrong base");
          return x.xm;
        }));
      } catch (const std::exception& e) {
        report(x.id + " lifting " + std::to_string(k), e);
      }
    }
  }
  return out;
}

}  // namespace xmodkit
