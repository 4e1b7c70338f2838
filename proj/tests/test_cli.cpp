#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "polytrunc/io.hpp"

namespace polytrunc {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records_of(const std::string& report) {
  std::vector<nlohmann::json> out;
  std::istringstream in(report);
  std::string line;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line.starts_with("## records")) {
      inside = true;
    } else if (line.starts_with("## ")) {
      inside = false;
    } else if (inside && !line.empty()) {
      out.push_back(nlohmann::json::parse(line));
    }
  }
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("polytrunc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_text(const std::string& name, const std::string& text) {
    auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string write_polytopes(const std::string& name, const std::vector<Polytope3>& ps) {
    auto bytes = write_planar_code(ps);
    auto path = (dir_ / name).string();
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    return path;
  }
  std::string catalog_file(const std::string& name) {
    return write_text(name + ".txt", write_canonical_text(catalog(name)));
  }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"validate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"validate", (dir_ / "missing").string()}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, Validate) {
  auto good = run({"validate", catalog_file("tetrahedron")});
  EXPECT_EQ(good.code, cli::kExitOk) << good.err;
  auto recs = records_of(good.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0]["schema"], cli::kReportSchema);

  auto bad = run({"validate", write_text("bad.txt", "4\n1 2 3\n0 3 2\n0 1 3\n0 2\n")});
  EXPECT_EQ(bad.code, cli::kExitUsage);

  auto syntax = run({"validate", write_text("syntax.txt", "4\n1 2 3\n0 3 x\n")});
  EXPECT_EQ(syntax.code, cli::kExitUsage);
  EXPECT_NE(syntax.err.find("line 3"), std::string::npos);
}

TEST_F(CliTest, ValidateMixedPlanarCode) {
  RotationSpec k5{{1, 2, 3, 4}, {0, 4, 3, 2}, {0, 1, 4, 3}, {0, 2, 1, 4}, {0, 3, 2, 1}};
  std::vector<RotationSpec> specs{catalog("cube").rotation(), k5};
  auto bytes = write_planar_code(specs);
  auto path = (dir_ / "mixed.pc").string();
  std::ofstream(path, std::ios::binary).write(reinterpret_cast<const char*>(bytes.data()),
                                              static_cast<std::streamsize>(bytes.size()));
  auto r = run({"validate", path});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_EQ(records_of(r.out).size(), 2u);
}

TEST_F(CliTest, PVectorAndBelts) {
  auto file = write_polytopes("all.pc", {catalog("cube"), catalog("triangular_prism")});
  auto pv = run({"pvector", file});
  EXPECT_EQ(pv.code, cli::kExitOk) << pv.err;
  EXPECT_EQ(records_of(pv.out).size(), 2u);

  auto belts = run({"belts", file});
  EXPECT_EQ(belts.code, cli::kExitOk) << belts.err;
  auto recs = records_of(belts.out);
  ASSERT_EQ(recs.size(), 2u);
}

TEST_F(CliTest, TruncateToFile) {
  auto out = (dir_ / "prism.txt").string();
  auto r = run({"truncate", catalog_file("tetrahedron"), "--edges", "0-1", "-o", out});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(is_isomorphic(load_polytope_file(out).at(0).polytope.value(), catalog("triangular_prism")));
}

TEST_F(CliTest, TruncateErrors) {
  auto tet = catalog_file("tetrahedron");
  EXPECT_EQ(run({"truncate", tet}).code, cli::kExitUsage);
  EXPECT_EQ(run({"truncate", tet, "--edges", "0-1,1-2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"truncate", tet, "--edges", "0-9"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"truncate", tet, "--edges", "0+1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"truncate", tet, "--all-edges", "--index", "3"}).code, cli::kExitUsage);
}

TEST_F(CliTest, Flagcheck) {
  auto prism = catalog_file("triangular_prism");
  auto yes = run({"flagcheck", prism, "--edges", "0-3", "--verify"});
  EXPECT_EQ(yes.code, cli::kExitOk) << yes.err;
  auto no = run({"flagcheck", prism, "--edges", "0-1", "--verify"});
  EXPECT_EQ(no.code, cli::kExitOk) << no.err;
  auto recs = records_of(yes.out);
  ASSERT_FALSE(recs.empty());
}

TEST_F(CliTest, Flagify) {
  auto out = (dir_ / "flag.pc").string();
  auto r = run({"flagify", write_polytopes("in.pc", {catalog("cube"), catalog("dodecahedron")}), "-o", out});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  auto back = valid_polytopes(load_polytope_file(out));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(p_vector(back[0]), (PVector{{4, 6}, {6, 12}}));

  EXPECT_EQ(run({"flagify", catalog_file("tetrahedron")}).code, cli::kExitUsage);
}

TEST_F(CliTest, Verify) {
  auto r = run({"verify", "--polytope", "tetrahedron", "--exhaustive"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(records_of(r.out).size(), 14u);

  auto s = run({"verify", "--polytope", "dodecahedron", "--sample", "20", "--seed", "5", "--summary-only"});
  EXPECT_EQ(s.code, cli::kExitOk) << s.err;
  EXPECT_TRUE(records_of(s.out).empty());

  EXPECT_EQ(run({"verify", "--polytope", "dodecahedron", "--exhaustive"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--polytope", "cube", "--sample", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--polytope", "icosahedron", "--exhaustive"}).code, cli::kExitUsage);
}

TEST_F(CliTest, VerifyIsReproducible) {
  std::vector<std::string> args{"verify", "--polytope", "cube", "--sample", "30", "--seed", "9"};
  auto a = run(args);
  auto b = run(args);
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, Scan) {
  auto r = run({"scan", "--catalog", "--target", "5=12", "--flagify"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_FALSE(records_of(r.out).empty());
  EXPECT_EQ(run({"scan", "--target", "5=12"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"scan", "--catalog", "--target", "6=1"}).code, cli::kExitUsage);
}

}  // namespace
}  // namespace polytrunc
