#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"

using namespace xmodkit;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  CliRun r;
  const std::string cmd = std::string(XMODKIT_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("xmodkit_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) +
            "_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path path(const std::string& name) const { return dir_ / name; }
  fs::path dir_;
};

std::vector<std::string> labels(const std::vector<FiniteGroup>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(g.label());
  return out;
}

std::size_t lines_starting(const std::string& text, const std::string& prefix) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

TEST(Catalog, MaxOrderFour) {
  Catalog c = generate_catalog(4);
  EXPECT_EQ(labels(c.groups), (std::vector<std::string>{"Z1", "Z2", "Z3", "Z4", "V4"}));
  EXPECT_EQ(c.xmods.size(), 51u);
  std::size_t liftings = 0;
  for (const auto& x : c.xmods) liftings += x.liftings.size();
  EXPECT_EQ(liftings, 126u);
}

TEST(Catalog, MaxOrderOne) {
  Catalog c = generate_catalog(1);
  ASSERT_EQ(c.groups.size(), 1u);
  ASSERT_EQ(c.xmods.size(), 1u);
  EXPECT_EQ(c.xmods[0].id, "Z1-Z1-0");
}

TEST(Catalog, MaxOrderSixHasInnerS3) {
  Catalog c = generate_catalog(6);
  ASSERT_NE(c.find_group("S3"), nullptr);
  CrossedModule inner = xmod_inner_automorphism(*c.find_group("S3"));
  std::size_t hits = 0;
  for (const auto& x : c.xmods)
    if (x.xm.a().order() == 6 && x.xm.b().order() == 6)
      hits += find_xmod_isomorphism(x.xm, inner).has_value();
  EXPECT_EQ(hits, 1u);
}

TEST(Catalog, GroupsPairwiseNonIsomorphic) {
  auto gs = catalog_groups(12);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gs[i].order() == gs[j].order() && gs[i].order() <= 8) {
        EXPECT_FALSE(oracle::isomorphic(gs[i].rows(), gs[j].rows()))
            << gs[i].label() << " " << gs[j].label();
      }
  EXPECT_EQ(catalog_groups(8).size(), 14u);
}

TEST(Catalog, CapsEnforced) {
  EXPECT_EQ(oracle::error_code([] { catalog_groups(17); }), ErrorCode::CapExceeded);
  EXPECT_EQ(oracle::error_code([] { catalog_groups(25, 30); }), ErrorCode::CapExceeded);
}

TEST(Serialization, CatalogRewriteIsByteIdentical) {
  const std::string first = dump(to_json(generate_catalog(6)));
  CatalogLoad load = load_catalog(Json::parse(first));
  EXPECT_TRUE(load.failures.empty());
  EXPECT_EQ(dump(to_json(load.catalog)), first);
}

TEST(Serialization, GroupoidAndLiftingRoundTrip) {
  CrossedModule xm = xmod_trivial_action(GroupHom::make(cyclic(4), cyclic(2), {0, 1, 0, 1}));
  GroupGroupoid g = eta(xm);
  EXPECT_EQ(groupoid_from_json(to_json(g.base())), g.base());
  EXPECT_EQ(group_groupoid_from_json(to_json(g)), g);
  for (const auto& row : enumerate_liftings(xm)) {
    Json j = to_json(row.lifting, "base");
    Lifting back = lifting_from_json(j, [&](const std::string&) { return xm; });
    EXPECT_EQ(back, row.lifting);
    EXPECT_EQ(j["degree"], row.degree ? Json(*row.degree) : Json(nullptr));
  }
  EXPECT_EQ(xmod_from_json(to_json(xm)), xm);
}

TEST(Serialization, IdentityOffZeroRejected) {
  Json j = {{"label", "G"}, {"order", 2}, {"table", {{1, 0}, {0, 1}}}};
  EXPECT_EQ(oracle::error_code([&] { group_from_json(j); }), ErrorCode::NoIdentity);
}

TEST(Dot, Examples) {
  const std::string eta_dot = to_dot(eta(xmod_identity(cyclic(2))).base());
  EXPECT_EQ(eta_dot, "digraph \"G\" {\n  0;\n  1;\n  0 -> 1 [label=\"2\"];\n  1 -> 0 [label=\"3\"];\n}\n");
  EXPECT_EQ(to_dot(Groupoid::discrete(3)), "digraph \"G\" {\n  0;\n  1;\n  2;\n}\n");
  const std::string reg = to_dot(resolve_groupoid("regular:Z2"));
  EXPECT_EQ(lines_starting(reg, "  0 -> 1"), 1u);
  EXPECT_EQ(lines_starting(reg, "  1 -> 0"), 1u);
  const std::string with_ids = to_dot(Groupoid::discrete(2), true);
  EXPECT_EQ(lines_starting(with_ids, "  0 -> 0"), 1u);
}

TEST(Refs, GroupLabels) {
  EXPECT_EQ(resolve_group("Z5").order(), 5u);
  EXPECT_EQ(resolve_group("S3").order(), 6u);
  EXPECT_EQ(resolve_group("D4").order(), 8u);
  EXPECT_EQ(resolve_group("Q8").order(), 8u);
  EXPECT_EQ(resolve_group("V4").order(), 4u);
  EXPECT_EQ(resolve_group("Z2xZ3").order(), 6u);
  EXPECT_EQ(resolve_group("Z2xZ2xZ2").order(), 8u);
  EXPECT_EQ(oracle::error_code([] { resolve_group("W7"); }), ErrorCode::NotFound);
}

TEST(Refs, CrossedModules) {
  EXPECT_EQ(resolve_xmod("id:S3"), xmod_identity(symmetric(3)));
  EXPECT_EQ(resolve_xmod("cyclic:4:2").alpha().map(), (std::vector<Elem>{0, 1, 0, 1}));
  EXPECT_TRUE(resolve_xmod("zero:Z2:Z2").alpha().is_zero());
  EXPECT_EQ(resolve_xmod("inner:S3").b().order(), 6u);
  EXPECT_EQ(resolve_xmod("normal:Z4:2").a().order(), 2u);
  EXPECT_EQ(resolve_xmod("Z4-Z2-0"), xmods_over(cyclic(4), cyclic(2))[0]);
  EXPECT_EQ(oracle::error_code([] { resolve_xmod("bogus"); }), ErrorCode::NotFound);
}

TEST_F(TempDir, CliCatalogThenVerify) {
  const auto cat = path("cat.json");
  CliRun gen = cli("catalog --max-order 4 --out " + cat.string());
  ASSERT_EQ(gen.code, 0) << gen.out;
  EXPECT_NE(gen.out.find("5 groups, 51 crossed modules, 126 liftings"), std::string::npos) << gen.out;
  EXPECT_EQ(slurp(cat), dump(to_json(generate_catalog(4))));

  CliRun v = cli("verify --catalog " + cat.string());
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(lines_starting(v.out, "[FAIL]"), 0u);
  EXPECT_NE(v.out.find("PASSED"), std::string::npos);

  CliRun scoped = cli("verify --scope liftings --catalog " + cat.string());
  EXPECT_EQ(scoped.code, 0) << scoped.out;
  EXPECT_GT(lines_starting(scoped.out, "[PASS] liftings:"), 0u);
  EXPECT_EQ(lines_starting(scoped.out, "[PASS] equivalence:"), 0u);
  EXPECT_EQ(lines_starting(scoped.out, "[PASS] crossed-module:"), 0u);
  EXPECT_EQ(lines_starting(scoped.out, "[PASS] cli-and-catalog: catalog entries revalidate"), 1u);
}

TEST_F(TempDir, CliCorruptedTableFailsVerify) {
  const auto cat = path("cat.json");
  Json j = to_json(generate_catalog(4));
  for (auto& g : j["groups"])
    if (g["label"] == "Z3") g["table"][1][1] = 1;
  write_text_file(cat.string(), dump(j));
  CliRun v = cli("verify --catalog " + cat.string());
  EXPECT_EQ(v.code, 1) << v.out;
  EXPECT_GT(lines_starting(v.out, "[FAIL]"), 0u) << v.out;
  EXPECT_NE(v.out.find("Z3"), std::string::npos);
}

TEST_F(TempDir, CliExportDot) {
  const auto out = path("g.dot");
  CliRun r = cli("export-dot --ref eta:id:Z2 --out " + out.string());
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(slurp(out), to_dot(eta(xmod_identity(cyclic(2))).base(), false, "eta:id:Z2"));
  CliRun d = cli("export-dot --ref discrete:3 --out " + out.string());
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(lines_starting(slurp(out), "  0 ->"), 0u);
  CliRun missing = cli("export-dot --ref eta:nothing --out " + out.string());
  EXPECT_EQ(missing.code, 2);
  CliRun io = cli("export-dot --ref discrete:1 --out " + path("no/such/dir/g.dot").string());
  EXPECT_EQ(io.code, 2);
}

TEST(Cli, LiftingsTables) {
  CliRun m = cli("liftings --xmod cyclic:4:2");
  ASSERT_EQ(m.code, 0) << m.out;
  EXPECT_EQ(lines_starting(m.out, "  0  "), 1u) << m.out;
  EXPECT_EQ(lines_starting(m.out, "  1  "), 1u) << m.out;
  EXPECT_EQ(lines_starting(m.out, "  2  "), 0u) << m.out;

  CliRun z = cli("liftings --xmod zero:Z2:Z2 --json");
  ASSERT_EQ(z.code, 0) << z.out;
  Json j = Json::parse(z.out);
  EXPECT_EQ(j["liftings"].size(), 2u);

  CliRun id = cli("liftings --xmod id:S3 --json");
  EXPECT_EQ(Json::parse(id.out)["liftings"].size(), 1u);
  CliRun mj = cli("liftings --xmod cyclic:4:2 --json");
  Json mm = Json::parse(mj.out);
  ASSERT_EQ(mm["liftings"].size(), 2u);
  EXPECT_EQ(mm["liftings"][0]["degree"], 2);
  EXPECT_EQ(mm["liftings"][1]["degree"], 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
  EXPECT_EQ(cli("liftings --xmod bogus").code, 2);
  EXPECT_EQ(cli("verify --scope nothing --catalog x.json").code, 2);
  EXPECT_EQ(cli("verify --catalog /nonexistent/cat.json").code, 2);
  EXPECT_EQ(cli("catalog --max-order 30 --out /tmp/unused.json").code, 2);
}
