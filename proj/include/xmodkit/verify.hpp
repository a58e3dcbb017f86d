#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "xmodkit/catalog.hpp"
#include "xmodkit/equivalence.hpp"
#include "xmodkit/lifting.hpp"
#include "xmodkit/parallel.hpp"

namespace xmodkit {

/// One theorem checked over a family of catalog instances.
struct TheoremResult {
  std::string module;
  std::string theorem;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string witness;       // first failure, by instance index
  bool report_only = false;  // findings, not assertions
  std::string note;
};

struct VerifyReport {
  std::vector<TheoremResult> results;

  bool passed() const {
    return std::none_of(results.begin(), results.end(),
                        [](const TheoremResult& r) { return !r.report_only && r.failures > 0; });
  }

  std::string to_text() const {
    std::string out;
    for (const auto& r : results) {
      std::string tag = r.report_only ? "INFO" : (r.failures ? "FAIL" : "PASS");
      out += "[" + tag + "] " + r.module + ": " + r.theorem + " (" +
             std::to_string(r.instances) + " instances";
      if (r.report_only) out += ", " + std::to_string(r.failures) + " counterexamples";
      else if (r.failures) out += ", " + std::to_string(r.failures) + " failing";
      if (!r.note.empty()) out += ", " + r.note;
      out += ")";
      out += "\n";
      if (r.failures && !r.witness.empty()) out += "       first witness: " + r.witness + "\n";
    }
    return out;
  }
};

inline const std::vector<std::string>& verify_scopes() {
  static const std::vector<std::string> s{"all",          "finite-algebra-core", "groupoid-core",
                                          "group-groupoid", "crossed-module",    "equivalence",
                                          "liftings",     "cli-and-catalog"};
  return s;
}

namespace detail {

/// Runs fn(i) for every instance, in parallel, and keeps the lowest-index
/// failure as the witness. An exception counts as a failure.
template <class Fn>
TheoremResult run_theorem(std::string module, std::string theorem, std::size_t n, Fn&& fn) {
  std::vector<Verdict> slots(n);
  parallel_for(n, [&](std::size_t i) {
    try {
      slots[i] = fn(i);
    } catch (const std::exception& e) {
      slots[i] = Verdict::no(e.what());
    }
  });
  TheoremResult r{std::move(module), std::move(theorem), n, 0, {}, false, {}};
  for (std::size_t i = 0; i < n; ++i)
    if (!slots[i]) {
      if (!r.failures) r.witness = "instance " + std::to_string(i) + ": " + slots[i].witness;
      ++r.failures;
    }
  return r;
}

inline Verdict require(bool cond, const std::string& why) {
  return cond ? Verdict::ok() : Verdict::no(why);
}

/// Normal subgroups of g.
inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& s : subgroups(g))
    if (s.is_normal()) out.push_back(std::move(s));
  return out;
}

/// Transitivity flags from hom-set sizes.
inline TransitivityFlags count_flags(const Groupoid& g) {
  TransitivityFlags f{true, true, true, true};
  for (Obj x = 0; x < g.num_objects(); ++x)
    for (Obj y = 0; y < g.num_objects(); ++y) {
      const std::size_t c = g.hom_set(x, y).size();
      if (c > 1) f.simply_transitive = false;
      if (c != 1) f.one_transitive = false;
      if (x != y) {
        f.transitive = f.transitive && c > 0;
        f.totally_intransitive = f.totally_intransitive && c == 0;
      }
    }
  return f;
}

}  // namespace detail

/// Every theorem suite in `scope` over the loaded catalog. Entries that
/// failed to load are reported as failures of the catalog suite whatever the
/// scope.
inline VerifyReport verify_catalog(const CatalogLoad& load, const std::string& scope = "all") {
  if (std::find(verify_scopes().begin(), verify_scopes().end(), scope) == verify_scopes().end())
    fail(ErrorCode::NotFound, "unknown scope " + scope);
  const Catalog& cat = load.catalog;
  VerifyReport rep;
  auto want = [&](const char* module) { return scope == "all" || scope == module; };
  using detail::require;
  using detail::run_theorem;

  {
    TheoremResult r{"cli-and-catalog", "catalog entries revalidate on load",
                    cat.groups.size() + cat.xmods.size() + load.failures.size(), 0, {}, false, {}};
    r.failures = load.failures.size();
    if (!load.failures.empty()) r.witness = load.failures.front();
    rep.results.push_back(std::move(r));
  }

  const auto& xs = cat.xmods;
  struct LRef {
    std::size_t x, k;
  };
  std::vector<LRef> lrefs;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = 0; k < xs[i].liftings.size(); ++k) lrefs.push_back({i, k});
  auto lift = [&](std::size_t i) -> const Lifting& { return xs[lrefs[i].x].liftings[lrefs[i].k]; };
  auto base_of = [&](std::size_t i) -> const CrossedModule& { return xs[lrefs[i].x].xm; };

  if (want("finite-algebra-core")) {
    const auto& gs = cat.groups;
    rep.results.push_back(run_theorem("finite-algebra-core", "operation tables form groups", gs.size(),
                                      [&](std::size_t i) {
                                        auto t = gs[i].table();
                                        FiniteGroup::from_flat(gs[i].order(), {t.begin(), t.end()});
                                        return Verdict::ok();
                                      }));
    std::vector<GroupHom> homs;
    for (const auto& x : xs) {
      homs.push_back(x.xm.alpha());
      for (const auto& l : x.liftings) {
        homs.push_back(l.phi());
        homs.push_back(l.omega());
      }
    }
    rep.results.push_back(run_theorem(
        "finite-algebra-core", "|G| = |Ker h|·|Im h| for every catalog hom", homs.size(),
        [&](std::size_t i) {
          auto inv = hom_invariants(homs[i]);
          return require(inv.kernel.size() * inv.image.size() == homs[i].source().order(),
                         "first isomorphism theorem fails");
        }));
    std::vector<Subgroup> normals;
    for (const auto& g : gs)
      for (auto& n : detail::normal_subgroups(g)) normals.push_back(std::move(n));
    rep.results.push_back(run_theorem(
        "finite-algebra-core", "quotient projection has kernel N and |G/N| = |G|/|N|",
        normals.size(), [&](std::size_t i) {
          Quotient q = quotient(normals[i]);
          return require(q.projection.kernel() == normals[i] &&
                             q.group.order() * normals[i].size() == normals[i].parent().order(),
                         "quotient mismatch");
        }));
    rep.results.push_back(run_theorem(
        "finite-algebra-core", "automorphisms are distinct bijective homs", gs.size(),
        [&](std::size_t i) {
          auto auts = automorphisms(gs[i]);
          for (std::size_t k = 1; k < auts.size(); ++k)
            if (auts[k] == auts[k - 1]) return Verdict::no("repeated automorphism");
          for (const auto& p : auts)
            if (!GroupHom::make(gs[i], gs[i], p).is_iso()) return Verdict::no("not bijective");
          return Verdict::ok();
        }));
  }

  if (want("groupoid-core")) {
    rep.results.push_back(run_theorem(
        "groupoid-core", "transitivity flags match hom-set counts on η(xm)", xs.size(),
        [&](std::size_t i) {
          const Groupoid g = eta(xs[i].xm).base();
          return require(classify_transitivity(g) == detail::count_flags(g),
                         classify_transitivity(g).to_string());
        }));
    rep.results.push_back(run_theorem(
        "groupoid-core", "action groupoid projection is a covering; lifting function inverts (q, d0)",
        lrefs.size(), [&](std::size_t i) {
          GroupoidAction act = action_from_lifting(lift(i)).set_action();
          ActionGroupoid ag = action_groupoid(act);
          if (auto v = is_covering_morphism(ag.projection); !v) return v;
          const Groupoid& H = ag.groupoid;
          const Groupoid& G = act.groupoid();
          for (Obj s = 0; s < H.num_objects(); ++s)
            for (Mor g : star(G, act.anchor(s))) {
              const Mor b = lifting_function(ag.projection, g, s);
              if (ag.projection(b) != g || H.d0(b) != s) return Verdict::no("S_q mismatch");
            }
          return Verdict::ok();
        }));
    rep.results.push_back(run_theorem(
        "groupoid-core", "action -> covering -> fiber action round-trips", lrefs.size(),
        [&](std::size_t i) {
          GroupoidAction act = action_from_lifting(lift(i)).set_action();
          ActionGroupoid ag = action_groupoid(act);
          GroupoidAction back = fiber_action(ag.projection);
          if (back.table() != act.table() || back.anchor_table() != act.anchor_table())
            return Verdict::no("fiber action differs");
          auto iso = covering_to_action_groupoid_iso(ag.projection, ag);
          return require(iso.is_iso(), "canonical iso is not bijective");
        }));
  }

  if (want("group-groupoid")) {
    rep.results.push_back(run_theorem(
        "group-groupoid", "η(xm) satisfies the group-groupoid axioms; d1 on Ker d0 is a hom",
        xs.size(), [&](std::size_t i) {
          GroupGroupoid g = eta(xs[i].xm);
          g.validate();
          Subgroup k = g.kernel_d0();
          std::vector<Elem> d1;
          for (Mor m : k.elements()) d1.push_back(g.base().d1(m));
          GroupHom::make(k.as_group(), g.obj_group(), d1);
          return Verdict::ok();
        }));
    rep.results.push_back(run_theorem(
        "group-groupoid", "action group-groupoid projection is a covering and a hom",
        lrefs.size(), [&](std::size_t i) {
          ActionGroupGroupoid agg = action_group_groupoid(action_from_lifting(lift(i)));
          if (auto v = is_covering_morphism(agg.projection.functor); !v) return v;
          GroupHom::make(agg.groupoid.mor_group(), agg.projection.target.mor_group(),
                         agg.projection.functor.mor_map());
          return Verdict::ok();
        }));
  }

  if (want("crossed-module")) {
    rep.results.push_back(run_theorem("crossed-module", "catalog entries satisfy CM1 and CM2",
                                      xs.size(), [&](std::size_t i) {
                                        xs[i].xm.validate();
                                        return Verdict::ok();
                                      }));
    rep.results.push_back(run_theorem(
        "crossed-module", "Im α normal, Ker α central, Cok α actions well defined", xs.size(),
        [&](std::size_t i) {
          xmod_properties(xs[i].xm);
          return Verdict::ok();
        }));
    rep.results.push_back(run_theorem(
        "crossed-module", "flag implications", xs.size(), [&](std::size_t i) {
          auto f = classify_xmod_transitivity(xs[i].xm);
          if (f.one_transitive && !(f.transitive && f.simply_transitive))
            return Verdict::no("1-transitive but not both");
          if (f.totally_intransitive && f.transitive && xs[i].xm.b().order() != 1)
            return Verdict::no("totally intransitive and transitive with |B| > 1");
          return Verdict::ok();
        }));
    const auto& gs = cat.groups;
    rep.results.push_back(run_theorem(
        "crossed-module", "normal-subgroup and inner-automorphism constructions", gs.size(),
        [&](std::size_t i) {
          for (const auto& n : detail::normal_subgroups(gs[i])) xmod_properties(xmod_from_normal_subgroup(gs[i], n));
          if (automorphisms(gs[i]).size() <= kMaxAutomorphismGroupOrder)
            xmod_properties(xmod_inner_automorphism(gs[i]));
          return Verdict::ok();
        }));
    std::vector<std::pair<std::size_t, std::size_t>> zm;
    for (std::size_t m = 0; m < gs.size(); ++m)
      for (std::size_t g = 0; g < gs.size(); ++g)
        if (gs[m].is_abelian() && gs[m].order() * gs[g].order() <= cat.max_product) zm.emplace_back(m, g);
    rep.results.push_back(run_theorem(
        "crossed-module", "zero-map construction over every action", zm.size(),
        [&](std::size_t i) {
          const auto& m = gs[zm[i].first];
          const auto& g = gs[zm[i].second];
          for (const auto& act : enumerate_actions(g, m)) xmod_properties(xmod_zero_module(m, g, act));
          return Verdict::ok();
        }));
  }

  if (want("equivalence")) {
    rep.results.push_back(run_theorem(
        "equivalence", "δη(xm) ≅ xm via (a ↦ (a,0), 1) and |Mor η(xm)| = |A|·|B|", xs.size(),
        [&](std::size_t i) {
          const auto& xm = xs[i].xm;
          roundtrip_xmod(xm);
          return require(eta(xm).base().num_morphisms() == xm.a().order() * xm.b().order(),
                         "wrong morphism count");
        }));
    rep.results.push_back(run_theorem(
        "equivalence", "ηδ(G) ≅ G via (a,b) ↦ a + 1_b on η-images and action group-groupoids",
        xs.size() + lrefs.size(), [&](std::size_t i) {
          if (i < xs.size()) {
            roundtrip_gg(eta(xs[i].xm));
          } else {
            auto agg = action_group_groupoid(action_from_lifting(lift(i - xs.size())));
            if (agg.groupoid.base().num_morphisms() <= kMaxProduct) roundtrip_gg(agg.groupoid);
          }
          return Verdict::ok();
        }));
    rep.results.push_back(run_theorem(
        "equivalence", "transitivity flags of xm and η(xm) agree", xs.size(), [&](std::size_t i) {
          auto t = transitivity_correspondence(xs[i].xm);
          return require(t.agree(), t.xmod_flags.to_string() + " vs " + t.groupoid_flags.to_string());
        }));
    rep.results.push_back(run_theorem(
        "equivalence", "η(g∘f) = η(g)∘η(f) and δη(f) = f on lifting morphisms", lrefs.size(),
        [&](std::size_t i) {
          const Lifting& l = lift(i);
          XModMorphism g = lifting_to_covering(l).morphism;
          // f = (1, φ): (A, A, 1) -> (A, X, φ)
          XModMorphism f = XModMorphism::make(xmod_identity(l.base().a()), g.source,
                                              GroupHom::identity(l.base().a()), l.phi());
          XModMorphism gf = compose(g, f);
          auto eg = eta(g), ef = eta(f), egf = eta(gf);
          for (Mor m = 0; m < egf.functor.mor_map().size(); ++m)
            if (egf.functor(m) != eg.functor(ef.functor(m))) return Verdict::no("η not functorial");
          XModMorphism back = delta(eta(gf));
          return require(back.on_b == gf.on_b && back.on_a.map() == gf.on_a.map(),
                         "δη(f) != f");
        }));
  }

  if (want("liftings")) {
    const char* M = "liftings";
    rep.results.push_back(run_theorem(M, "CM1/CM2 verdict equals φ̄-hom verdict", lrefs.size(),
                                      [&](std::size_t i) {
                                        const Lifting& l = lift(i);
                                        auto r = check_lifting_routes(
                                            {l.base(), l.x(), l.omega().map(), l.phi().map(), {}});
                                        return require(r.cm.holds && r.hom.holds,
                                                       r.cm.witness + r.hom.witness);
                                      }));
    rep.results.push_back(run_theorem(M, "Ker φ ⊆ Ker α", lrefs.size(), [&](std::size_t i) {
      return require(lift(i).phi().kernel().is_subset_of(base_of(i).alpha().kernel()), "");
    }));
    rep.results.push_back(run_theorem(
        M, "one lifting per C ≤ Ker α with Ker φ = C and |Ker ω|·|C| = |Ker α|", xs.size(),
        [&](std::size_t i) {
          const auto& xm = xs[i].xm;
          auto cs = kernel_subgroups(xm);
          if (cs.size() != xs[i].liftings.size()) return Verdict::no("wrong number of liftings");
          for (std::size_t k = 0; k < cs.size(); ++k) {
            Lifting l = lifting_from_central_subgroup(xm, cs[k]);
            if (!(l == xs[i].liftings[k])) return Verdict::no("stored lifting differs for C" + std::to_string(k));
            if (!(l.phi().kernel() == cs[k])) return Verdict::no("Ker φ != C");
            if (l.omega().kernel().size() * cs[k].size() != xm.alpha().kernel().size())
              return Verdict::no("|Ker ω|·|C| != |Ker α|");
          }
          return Verdict::ok();
        }));
    rep.results.push_back(run_theorem(
        M, "transitive base: isomorphic iff equal kernels; degree = |Ker α / Ker φ|", xs.size(),
        [&](std::size_t i) {
          const auto& xm = xs[i].xm;
          if (!xm.alpha().is_surjective()) return Verdict::ok();
          const auto& ls = xs[i].liftings;
          for (std::size_t p = 0; p < ls.size(); ++p) {
            if (ls[p].degree() != xm.alpha().kernel().size() / ls[p].phi().kernel().size())
              return Verdict::no("degree mismatch");
            // an isomorphic copy with the same kernel, relabeled by an automorphism of X
            auto auts = automorphisms(ls[p].x());
            GroupHom g = GroupHom::make(ls[p].x(), ls[p].x(), auts.back());
            Lifting moved = transport_lifting(ls[p], GroupHom::identity(xm.b()), g);
            if (!find_lifting_isomorphism(moved, ls[p])) return Verdict::no("equal kernels, no iso");
            for (std::size_t q = 0; q < ls.size(); ++q) {
              const bool same = ls[p].phi().kernel() == ls[q].phi().kernel();
              if (same != find_lifting_isomorphism(ls[p], ls[q]).has_value())
                return Verdict::no("kernel criterion fails for pair " + std::to_string(p) + "," +
                                   std::to_string(q));
            }
          }
          return Verdict::ok();
        }));
    rep.results.push_back(run_theorem(
        M, "(1_A, A, α) lifts to every enumerated lifting", xs.size(), [&](std::size_t i) {
          auto u = universal_lifting(xs[i].xm);
          return require(u.to_enumerated.size() == xs[i].liftings.size(), "missing morphisms");
        }));
    rep.results.push_back(run_theorem(M, "θψ = 1 on liftings", lrefs.size(), [&](std::size_t i) {
      return theta_psi_roundtrip(lift(i));
    }));
    rep.results.push_back(run_theorem(
        M, "ψθ = 1 on group-groupoid actions", lrefs.size() + 2 * xs.size(), [&](std::size_t i) {
          if (i < lrefs.size()) return psi_theta_roundtrip(action_from_lifting(lift(i)));
          i -= lrefs.size();
          GroupGroupoid g = eta(xs[i / 2].xm);
          return psi_theta_roundtrip(i % 2 ? regular_gg_action(g) : gg_action_on_kernel_quotient(g));
        }));
    rep.results.push_back(run_theorem(
        M, "Ker d0 / G(0) action gives the natural lifting's kernel", xs.size(),
        [&](std::size_t i) {
          GroupGroupoid g = eta(xs[i].xm);
          Lifting l = lifting_from_action(gg_action_on_kernel_quotient(g), delta(g));
          return require(l.phi().kernel() == l.base().alpha().kernel(), "Ker φ != Ker α");
        }));
    rep.results.push_back(run_theorem(
        M, "lifting -> covering -> lifting is the identity; reverse is (f2, 1)", lrefs.size(),
        [&](std::size_t i) {
          CoveringXModMorphism c = lifting_to_covering(lift(i));
          if (!(covering_to_lifting(c) == lift(i))) return Verdict::no("lifting changed");
          covering_roundtrip_iso(c);
          return Verdict::ok();
        }));
    rep.results.push_back(run_theorem(
        M, "1-liftings of transitive bases have ω an isomorphism", lrefs.size(),
        [&](std::size_t i) {
          if (lift(i).degree() == std::optional<std::size_t>(1)) one_lifting_check(lift(i));
          return Verdict::ok();
        }));
    rep.results.push_back(run_theorem(
        M, "simply transitive base gives simply transitive liftings", lrefs.size(),
        [&](std::size_t i) {
          if (!base_of(i).alpha().is_injective()) return Verdict::ok();
          return require(lift(i).phi().is_injective(), "φ not injective");
        }));
    rep.results.push_back(run_theorem(
        M, "lifting-of-lifting iff Ker φ̃ ⊆ Ker φ", xs.size(), [&](std::size_t i) {
          const auto& ls = xs[i].liftings;
          for (const auto& l1 : ls)
            for (const auto& l2 : ls) is_lifting_of_lifting(l1, l2);
          return Verdict::ok();
        }));
    rep.results.push_back(run_theorem(
        M, "composites of liftings are liftings", lrefs.size(), [&](std::size_t i) {
          const Lifting& l = lift(i);
          if (!(compose_liftings(l, identity_lifting(l.as_xmod())) == l))
            return Verdict::no("L ∘ identity != L");
          Lifting c = compose_liftings(l, natural_lifting(l.as_xmod()));
          for (const auto& e : xs[lrefs[i].x].liftings)
            if (e.phi().kernel() == c.phi().kernel()) return Verdict::ok();
          return Verdict::no("composite kernel not among the enumerated liftings");
        }));
    rep.results.push_back(run_theorem(
        M, "xm lifts (A, Aut A, ι) over θ", xs.size(), [&](std::size_t i) {
          if (automorphisms(xs[i].xm.a()).size() > kMaxAutomorphismGroupOrder) return Verdict::ok();
          lifting_to_covering(lifting_over_automorphisms(xs[i].xm));
          return Verdict::ok();
        }));
    {
      TheoremResult r = run_theorem(
          M, "φ(A) normal in X for liftings of inclusion crossed modules (checked conjecture)",
          lrefs.size(), [&](std::size_t i) {
            if (!base_of(i).alpha().is_injective()) return Verdict::ok();
            return require(phi_image_normal(lift(i)), "φ(A) not normal");
          });
      r.report_only = true;
      rep.results.push_back(std::move(r));
    }
    {
      // Exploration on small bases: liftings over all catalog X of order <= 8
      // that are not quotient-type (φ not onto).
      std::vector<std::size_t> small;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i].xm.a().order() <= 4 && xs[i].xm.b().order() <= 4) small.push_back(i);
      std::vector<std::size_t> extra(small.size(), 0);
      std::vector<FiniteGroup> xgroups;
      for (const auto& g : cat.groups)
        if (g.order() <= 8) xgroups.push_back(g);
      TheoremResult r = run_theorem(
          M, "exhaustive search: transitive classes match enumerate_liftings (small bases)",
          small.size(), [&](std::size_t k) {
            const auto& x = xs[small[k]];
            LiftingSearch s = search_liftings(x.xm, xgroups, 8);
            extra[k] = s.classes() - s.transitive_classes();
            return require(s.transitive_classes() == x.liftings.size(),
                           std::to_string(s.transitive_classes()) + " transitive classes vs " +
                               std::to_string(x.liftings.size()));
          });
      std::size_t total = 0, bases = 0;
      for (std::size_t e : extra) total += e, bases += e > 0;
      r.note = "non-transitive classes found: " + std::to_string(total) + " over " +
               std::to_string(bases) + " bases";
      rep.results.push_back(std::move(r));
    }
  }

  if (want("cli-and-catalog")) {
    rep.results.push_back(run_theorem("cli-and-catalog", "write/read/rewrite is byte-identical", 1,
                                      [&](std::size_t) {
                                        const std::string a = dump(to_json(cat));
                                        CatalogLoad again = load_catalog(Json::parse(a));
                                        if (!again.failures.empty())
                                          return Verdict::no(again.failures.front());
                                        return require(dump(to_json(again.catalog)) == a,
                                                       "bytes differ");
                                      }));
  }
  return rep;
}

}  // namespace xmodkit
