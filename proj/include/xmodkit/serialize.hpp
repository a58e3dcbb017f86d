#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xmodkit/crossed_module.hpp"
#include "xmodkit/group_groupoid.hpp"
#include "xmodkit/lifting.hpp"

// JSON forms. Keys come out sorted (nlohmann::json uses an ordered map), so
// writing the same value twice yields the same bytes.
//   group      {"label", "order", "table": [[...]]}
//   hom        {"source": label, "target": label, "map": [...]}
//   xmod       {"A": group|label, "B": group|label, "alpha": [...], "action": [[...]]}
//   groupoid   {"objects", "d0", "d1", "id", "comp": [[...]]}, -1 where undefined
//   gg         groupoid fields plus "obj_group", "mor_group"
//   lifting    {"base": xmod|id, "X": group, "omega", "phi", "degree": n|null}

namespace xmodkit {

using Json = nlohmann::json;

/// Resolves a group referred to by label inside a larger document.
using GroupLookup = std::function<FiniteGroup(const std::string&)>;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::vector<Elem> elems(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::ParseError, std::string(what) + " is not an array");
  std::vector<Elem> v;
  v.reserve(j.size());
  for (const Json& e : j) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
      fail(ErrorCode::ParseError, std::string(what) + " has a non-index entry");
    v.push_back(e.get<Elem>());
  }
  return v;
}

inline std::vector<std::vector<Elem>> rows(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::ParseError, std::string(what) + " is not an array");
  std::vector<std::vector<Elem>> r;
  for (const Json& row : j) r.push_back(elems(row, what));
  return r;
}

inline Json rows_json(const std::vector<Elem>& flat, std::size_t width) {
  Json out = Json::array();
  for (std::size_t i = 0; i < flat.size(); i += width)
    out.push_back(std::vector<Elem>(flat.begin() + i, flat.begin() + i + width));
  return out;
}

inline std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& r) {
  std::vector<Elem> f;
  for (const auto& row : r) f.insert(f.end(), row.begin(), row.end());
  return f;
}

}  // namespace detail

inline Json to_json(const FiniteGroup& g) {
  return {{"label", g.label()}, {"order", g.order()}, {"table", g.rows()}};
}

/// Validates; a table whose identity is not at index 0 is rejected rather
/// than silently relabeled so that stored references stay meaningful.
inline FiniteGroup group_from_json(const Json& j) {
  const std::string label = detail::field(j, "label").get<std::string>();
  const std::size_t order = detail::field(j, "order").get<std::size_t>();
  auto table = detail::rows(detail::field(j, "table"), "table");
  if (table.size() != order) fail(ErrorCode::MalformedTable, label + ": order does not match table");
  FiniteGroup g = FiniteGroup::from_table(table, label);
  if (g.rows() != table) fail(ErrorCode::NoIdentity, label + ": identity is not element 0");
  return g;
}

inline Json to_json(const GroupHom& h) {
  return {{"source", h.source().label()}, {"target", h.target().label()}, {"map", h.map()}};
}

inline GroupHom hom_from_json(const Json& j, const GroupLookup& lookup) {
  return GroupHom::make(lookup(detail::field(j, "source").get<std::string>()),
                        lookup(detail::field(j, "target").get<std::string>()),
                        detail::elems(detail::field(j, "map"), "map"));
}

/// With by_label set, A and B are written as label references.
inline Json to_json(const CrossedModule& xm, bool by_label = false) {
  Json j;
  j["A"] = by_label ? Json(xm.a().label()) : to_json(xm.a());
  j["B"] = by_label ? Json(xm.b().label()) : to_json(xm.b());
  j["alpha"] = xm.alpha().map();
  j["action"] = detail::rows_json(xm.action().table(), xm.a().order());
  return j;
}

inline CrossedModule xmod_from_json(const Json& j, const GroupLookup& lookup = {}) {
  auto group = [&](const Json& g) {
    if (g.is_string()) {
      if (!lookup) fail(ErrorCode::ParseError, "group reference outside a catalog");
      return lookup(g.get<std::string>());
    }
    return group_from_json(g);
  };
  FiniteGroup a = group(detail::field(j, "A"));
  FiniteGroup b = group(detail::field(j, "B"));
  GroupHom alpha = GroupHom::make(a, b, detail::elems(detail::field(j, "alpha"), "alpha"));
  auto action = detail::rows(detail::field(j, "action"), "action");
  if (action.size() != b.order())
    fail(ErrorCode::MalformedTable, "action has " + std::to_string(action.size()) + " rows");
  return CrossedModule::make(alpha, GroupAction::make(b, a, action));
}

inline Json to_json(const Groupoid& g) {
  const std::size_t m = g.num_morphisms();
  Json comp = Json::array();
  for (Mor h = 0; h < m; ++h) {
    Json row = Json::array();
    for (Mor k = 0; k < m; ++k) {
      const Mor c = g.comp(h, k);
      row.push_back(c == kUndefined ? Json(-1) : Json(c));
    }
    comp.push_back(std::move(row));
  }
  return {{"objects", g.num_objects()}, {"d0", g.d0_table()}, {"d1", g.d1_table()},
          {"id", g.id_table()},         {"comp", std::move(comp)}};
}

inline Groupoid groupoid_from_json(const Json& j) {
  const std::size_t n = detail::field(j, "objects").get<std::size_t>();
  auto d0 = detail::elems(detail::field(j, "d0"), "d0");
  auto d1 = detail::elems(detail::field(j, "d1"), "d1");
  auto id = detail::elems(detail::field(j, "id"), "id");
  const Json& cj = detail::field(j, "comp");
  if (!cj.is_array() || cj.size() != d0.size())
    fail(ErrorCode::ParseError, "comp must have one row per morphism");
  std::vector<Mor> comp;
  for (const Json& row : cj) {
    if (!row.is_array() || row.size() != d0.size())
      fail(ErrorCode::ParseError, "comp row has the wrong length");
    for (const Json& e : row) {
      if (!e.is_number_integer()) fail(ErrorCode::ParseError, "comp entry is not an integer");
      const auto v = e.get<std::int64_t>();
      comp.push_back(v < 0 ? kUndefined : static_cast<Mor>(v));
    }
  }
  return Groupoid::make(n, std::move(d0), std::move(d1), std::move(id), std::move(comp));
}

inline Json to_json(const GroupGroupoid& gg) {
  Json j = to_json(gg.base());
  j["obj_group"] = to_json(gg.obj_group());
  j["mor_group"] = to_json(gg.mor_group());
  return j;
}

inline GroupGroupoid group_groupoid_from_json(const Json& j) {
  return GroupGroupoid::make(groupoid_from_json(j), group_from_json(detail::field(j, "obj_group")),
                             group_from_json(detail::field(j, "mor_group")));
}

/// base_ref, when given, replaces the inline base (catalog id).
inline Json to_json(const Lifting& l, const std::string& base_ref = {}) {
  Json j;
  j["base"] = base_ref.empty() ? to_json(l.base()) : Json(base_ref);
  j["X"] = to_json(l.x());
  j["omega"] = l.omega().map();
  j["phi"] = l.phi().map();
  auto d = l.degree();
  j["degree"] = d ? Json(*d) : Json(nullptr);
  return j;
}

/// Revalidates, and checks the stored degree against the recomputed one.
inline Lifting lifting_from_json(const Json& j,
                                 const std::function<CrossedModule(const std::string&)>& base_ref = {}) {
  const Json& bj = detail::field(j, "base");
  CrossedModule base;
  if (bj.is_string()) {
    if (!base_ref) fail(ErrorCode::ParseError, "base reference outside a catalog");
    base = base_ref(bj.get<std::string>());
  } else {
    base = xmod_from_json(bj);
  }
  Lifting l = validate_lifting({base, group_from_json(detail::field(j, "X")),
                                detail::elems(detail::field(j, "omega"), "omega"),
                                detail::elems(detail::field(j, "phi"), "phi"),
                                {}});
  const Json& dj = detail::field(j, "degree");
  auto d = l.degree();
  if (dj.is_null() != !d || (d && dj.get<std::size_t>() != *d))
    fail(ErrorCode::ParseError, "stored degree does not match |Ker ω|");
  return l;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(1) + "\n"; }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out.flush()) fail(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace xmodkit
