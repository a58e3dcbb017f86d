#pragma once

#include <charconv>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "xmodkit/catalog.hpp"
#include "xmodkit/dot.hpp"
#include "xmodkit/serialize.hpp"

// Textual references used by the command-line tool.
//
//   groups      Zn, Sk, Dn (order 2n), V4, Qm (dicyclic, order m), AxB
//   xmods       a JSON file holding an xmod
//               A-B-k               k-th crossed module over (A, B), as in the catalog
//               id:G  inner:G  zero:M:G[:k]  cyclic:N:M  normal:G:e1,e2,...
//   groupoids   a JSON file holding a groupoid or group-groupoid
//               eta:XMOD  group:G  discrete:N  regular:G  action:XMOD:k
//
// action:XMOD:k is the action groupoid of ψ applied to the k-th enumerated
// lifting of XMOD.

namespace xmodkit {

namespace detail {

inline std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

inline std::optional<FiniteGroup> try_parse_group(const std::string& label) {
  if (label == "V4") return dihedral(2);
  if (label.size() >= 2) {
    if (auto n = parse_count(std::string_view(label).substr(1)); n && *n >= 1) {
      switch (label[0]) {
        case 'Z':
          if (*n <= kHardOrderCap) return cyclic(*n);
          break;
        case 'S':
          if (*n >= 3 && *n <= 4) return symmetric(*n);
          break;
        case 'D':
          if (*n >= 3 && 2 * *n <= kHardOrderCap) return dihedral(*n);
          break;
        case 'Q':
          if (*n >= 8 && *n % 4 == 0 && *n <= kHardOrderCap) return dicyclic(*n / 4);
          break;
      }
    }
  }
  for (std::size_t i = 1; i + 1 < label.size(); ++i) {
    if (label[i] != 'x') continue;
    auto l = try_parse_group(label.substr(0, i));
    if (!l) continue;
    auto r = try_parse_group(label.substr(i + 1));
    if (r && l->order() * r->order() <= kHardOrderCap) return direct_product(*l, *r);
  }
  return std::nullopt;
}

}  // namespace detail

/// A group by label, from the catalog when one is given.
inline FiniteGroup resolve_group(const std::string& label, const Catalog* cat = nullptr) {
  if (cat)
    if (const FiniteGroup* g = cat->find_group(label)) return *g;
  if (auto g = detail::try_parse_group(label)) return *g;
  fail(ErrorCode::NotFound, "unknown group " + label);
}

inline CrossedModule resolve_xmod(const std::string& ref, const Catalog* cat = nullptr) {
  using detail::split;
  auto group = [&](const std::string& l) { return resolve_group(l, cat); };
  auto count = [&](const std::string& s) {
    auto v = detail::parse_count(s);
    if (!v) fail(ErrorCode::NotFound, "bad number \"" + s + "\" in " + ref);
    return *v;
  };
  const auto parts = split(ref, ':');
  const std::string& kind = parts[0];
  if (parts.size() == 2 && kind == "id") return xmod_identity(group(parts[1]));
  if (parts.size() == 2 && kind == "inner") return xmod_inner_automorphism(group(parts[1]));
  if ((parts.size() == 3 || parts.size() == 4) && kind == "zero") {
    FiniteGroup m = group(parts[1]), g = group(parts[2]);
    if (parts.size() == 3) return xmod_zero_module(m, g, GroupAction::trivial(g, m));
    auto acts = enumerate_actions(g, m);
    const std::size_t k = count(parts[3]);
    if (k >= acts.size()) fail(ErrorCode::NotFound, ref + ": only " + std::to_string(acts.size()) + " actions");
    return xmod_zero_module(m, g, acts[k]);
  }
  if (parts.size() == 3 && kind == "cyclic") {
    const std::size_t n = count(parts[1]), m = count(parts[2]);
    if (m == 0 || n == 0 || n % m != 0) fail(ErrorCode::NotFound, ref + ": M must divide N");
    FiniteGroup zn = cyclic(n), zm = cyclic(m);
    std::vector<Elem> alpha(n);
    for (Elem a = 0; a < n; ++a) alpha[a] = a % m;
    return xmod_trivial_action(GroupHom::make(zn, zm, std::move(alpha)));
  }
  if (parts.size() == 3 && kind == "normal") {
    FiniteGroup g = group(parts[1]);
    std::vector<Elem> gens;
    for (const auto& e : split(parts[2], ',')) {
      const std::size_t v = count(e);
      if (v >= g.order()) fail(ErrorCode::NotFound, ref + ": element " + e + " out of range");
      gens.push_back(static_cast<Elem>(v));
    }
    return xmod_from_normal_subgroup(g, generated_subgroup(g, gens));
  }
  if (parts.size() == 1) {
    if (std::filesystem::is_regular_file(ref)) {
      GroupLookup lookup = [&](const std::string& l) { return group(l); };
      return xmod_from_json(read_json_file(ref), lookup);
    }
    if (cat) {
      if (const CatalogXMod* x = cat->find_xmod(ref)) return x->xm;
      fail(ErrorCode::NotFound, "no crossed module " + ref + " in the catalog");
    }
    const auto ids = split(ref, '-');
    if (ids.size() == 3) {
      auto xs = xmods_over(group(ids[0]), group(ids[1]));
      const std::size_t k = count(ids[2]);
      if (k < xs.size()) return xs[k];
    }
  }
  fail(ErrorCode::NotFound, "cannot resolve crossed module " + ref);
}

/// The groupoid behind a reference, for export.
inline Groupoid resolve_groupoid(const std::string& ref, const Catalog* cat = nullptr) {
  const auto colon = ref.find(':');
  const std::string kind = ref.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : ref.substr(colon + 1);
  if (kind == "eta" && !rest.empty()) return eta(resolve_xmod(rest, cat)).base();
  if (kind == "group" && !rest.empty()) return Groupoid::from_group(resolve_group(rest, cat));
  if (kind == "discrete" && !rest.empty()) {
    auto n = detail::parse_count(rest);
    if (!n || *n == 0) fail(ErrorCode::NotFound, "bad object count in " + ref);
    return Groupoid::discrete(*n);
  }
  if (kind == "regular" && !rest.empty()) {
    FiniteGroup g = resolve_group(rest, cat);
    std::vector<Elem> table(g.order() * g.order());
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem s = 0; s < g.order(); ++s) table[a * g.order() + s] = g.op(a, s);
    return action_groupoid(GroupoidAction::make(Groupoid::from_group(g),
                                                std::vector<Obj>(g.order(), 0), std::move(table)))
        .groupoid;
  }
  if (kind == "action" && !rest.empty()) {
    const auto last = rest.rfind(':');
    if (last == std::string::npos) fail(ErrorCode::NotFound, "action:XMOD:k expected, got " + ref);
    auto k = detail::parse_count(rest.substr(last + 1));
    CrossedModule xm = resolve_xmod(rest.substr(0, last), cat);
    auto rows = enumerate_liftings(xm);
    if (!k || *k >= rows.size()) fail(ErrorCode::NotFound, ref + ": no such lifting");
    return action_groupoid(action_from_lifting(rows[*k].lifting).set_action()).groupoid;
  }
  if (colon == std::string::npos && std::filesystem::is_regular_file(ref))
    return groupoid_from_json(read_json_file(ref));
  fail(ErrorCode::NotFound, "cannot resolve groupoid " + ref);
}

}  // namespace xmodkit
