#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "xmodkit/xmodkit.hpp"

using namespace xmodkit;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

std::optional<Catalog> load_for_refs(const std::string& path) {
  if (path.empty()) return std::nullopt;
  CatalogLoad load = load_catalog(read_json_file(path));
  if (!load.failures.empty())
    fail(ErrorCode::ParseError, path + ": " + load.failures.front());
  return std::move(load.catalog);
}

std::string set_string(const Subgroup& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s.elements()[i]);
  return out + "}";
}

int cmd_catalog(std::size_t max_order, std::size_t order_cap, const std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  Catalog cat = generate_catalog(max_order, order_cap);
  write_text_file(out, dump(to_json(cat)));
  std::size_t lifts = 0;
  for (const auto& x : cat.xmods) lifts += x.liftings.size();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%zu groups, %zu crossed modules, %zu liftings -> %s (%.2fs)\n", cat.groups.size(),
              cat.xmods.size(), lifts, out.c_str(), secs);
  return kOk;
}

int cmd_liftings(const std::string& ref, bool as_json, const std::string& catalog_path) {
  auto cat = load_for_refs(catalog_path);
  CrossedModule xm = resolve_xmod(ref, cat ? &*cat : nullptr);
  auto rows = enumerate_liftings(xm);
  if (as_json) {
    Json out;
    out["xmod"] = to_json(xm);
    out["liftings"] = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["kernel"] = r.kernel.elements();
      row["X_order"] = r.lifting.x().order();
      row["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
      row["flags"] = r.flags.to_string();
      row["iso_class"] = r.iso_class;
      row["lifting"] = to_json(r.lifting);
      out["liftings"].push_back(std::move(row));
    }
    std::cout << dump(out);
    return kOk;
  }
  std::printf("%s\n", xm.describe().c_str());
  std::printf("|Ker alpha| = %zu, %s\n", xm.alpha().kernel().size(),
              xm.alpha().is_surjective() ? "transitive" : "not transitive");
  std::printf("%3s  %-20s %4s %5s %7s  %-40s %5s\n", "#", "kernel C", "|C|", "|X|", "degree",
              "flags of (A,X,phi)", "class");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::printf("%3zu  %-20s %4zu %5zu %7s  %-40s %5zu\n", i, set_string(r.kernel).c_str(),
                r.kernel.size(), r.lifting.x().order(),
                r.degree ? std::to_string(*r.degree).c_str() : "-", r.flags.to_string().c_str(),
                r.iso_class);
  }
  return kOk;
}

int cmd_verify(const std::string& scope, const std::string& catalog_path) {
  const auto t0 = std::chrono::steady_clock::now();
  Json j = read_json_file(catalog_path);
  CatalogLoad load;
  try {
    load = load_catalog(j);
  } catch (const Error& e) {
    std::printf("[FAIL] cli-and-catalog: catalog could not be loaded\n       %s\n", e.what());
    return kVerifyFailed;
  }
  VerifyReport rep = verify_catalog(load, scope);
  std::fputs(rep.to_text().c_str(), stdout);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s (%zu theorems, scope %s, %u threads, %.2fs)\n", rep.passed() ? "PASSED" : "FAILED",
              rep.results.size(), scope.c_str(), thread_count(), secs);
  return rep.passed() ? kOk : kVerifyFailed;
}

int cmd_export_dot(const std::string& ref, const std::string& out, bool identities,
                   const std::string& catalog_path) {
  auto cat = load_for_refs(catalog_path);
  Groupoid g = resolve_groupoid(ref, cat ? &*cat : nullptr);
  write_text_file(out, to_dot(g, identities, ref));
  std::printf("%zu objects, %zu morphisms -> %s\n", g.num_objects(), g.num_morphisms(), out.c_str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite crossed modules, group-groupoids and their liftings"};
  app.require_subcommand(1);

  std::size_t max_order = 0, order_cap = kDefaultOrderCap;
  std::string out, ref, scope = "all", catalog_path;
  bool as_json = false, identities = false;

  auto* catalog = app.add_subcommand("catalog", "generate a catalog of groups, crossed modules and liftings");
  catalog->add_option("--max-order", max_order, "largest group order")->required();
  catalog->add_option("--order-cap", order_cap, "raise the order cap (at most 24)");
  catalog->add_option("--out", out, "output JSON path")->required();

  auto* liftings = app.add_subcommand("liftings", "enumerate the liftings of a crossed module");
  liftings->add_option("--xmod", ref, "crossed module reference")->required();
  liftings->add_flag("--json", as_json, "print JSON instead of a table");
  liftings->add_option("--catalog", catalog_path, "resolve references against this catalog");

  auto* verify = app.add_subcommand("verify", "check every theorem suite over a catalog");
  verify->add_option("--scope", scope, "all or a module name")
      ->check(CLI::IsMember(verify_scopes()));
  verify->add_option("--catalog", catalog_path, "catalog JSON path")->required();

  auto* dot = app.add_subcommand("export-dot", "write a groupoid as Graphviz DOT");
  dot->add_option("--ref", ref, "groupoid reference")->required();
  dot->add_option("--out", out, "output path")->required();
  dot->add_flag("--include-identities", identities, "also draw identity morphisms");
  dot->add_option("--catalog", catalog_path, "resolve references against this catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*catalog) return cmd_catalog(max_order, order_cap, out);
    if (*liftings) return cmd_liftings(ref, as_json, catalog_path);
    if (*verify) return cmd_verify(scope, catalog_path);
    if (*dot) return cmd_export_dot(ref, out, identities, catalog_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
