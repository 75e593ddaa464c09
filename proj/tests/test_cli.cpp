#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"
#include "qsr/constructions.hpp"
#include "qsr/ring_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qring");
  std::ostringstream out, err;
  const int code = qring::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qring_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write_ring(const qsr::FiniteRing& r) {
    return write(r.name().substr(0, 2) + std::to_string(r.order()) + ".json", qsr::save_ring(r));
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, Validate) {
  const auto z6 = write_ring(qsr::make_cyclic(6));
  auto r = run({"validate", z6});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order: 6"), std::string::npos);
  EXPECT_NE(r.out.find("unital: yes"), std::string::npos);

  r = run({"validate", z6, "--ideals"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("right ideals: 4"), std::string::npos);

  const auto bad = write("bad.json", R"({"name": "bad", "order": 2,
    "add": [[0,1],[1,0]], "mul": [[1,1],[1,1]]})");
  r = run({"validate", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotDistributive"), std::string::npos);
  EXPECT_NE(r.err.find("(0, 0, 0)"), std::string::npos);

  EXPECT_EQ(run({"validate", (dir_ / "missing.json").string()}).code, 2);
  EXPECT_EQ(run({"validate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(CliTest, Ideals) {
  auto r = run({"ideals", write_ring(qsr::make_cyclic(4)), "--json"});
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.at("ideals").size(), 3u);
  const auto& mid = doc["ideals"][1];
  EXPECT_EQ(mid.at("members"), nlohmann::json({0, 2}));
  EXPECT_TRUE(mid.at("superfluous").get<bool>());
  EXPECT_TRUE(mid.at("quite_superfluous").get<bool>());

  r = run({"ideals", write_ring(qsr::make_nonunital_ideal(2, 4)), "--json"});
  ASSERT_EQ(r.code, 0);
  doc = nlohmann::json::parse(r.out);
  for (const auto& row : doc.at("ideals")) {
    const bool whole = row.at("members").size() == 4;
    if (!whole) EXPECT_FALSE(row.at("regular").get<bool>());
    EXPECT_TRUE(row.at("quite_superfluous").get<bool>());
  }

  r = run({"ideals", write_ring(qsr::make_cyclic(1))});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1 right ideals"), std::string::npos);

  r = run({"ideals", write_ring(qsr::make_cyclic(12)), "--max-order", "8"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("OrderCapExceeded"), std::string::npos);
}

TEST_F(CliTest, Radical) {
  auto r = run({"radical", write_ring(qsr::make_cyclic(4))});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("agreement: yes"), std::string::npos);

  r = run({"radical", write_ring(qsr::make_null(3)), "--json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  for (const char* key : {"definition", "maximal", "quite_superfluous", "eq1", "eq2"}) {
    EXPECT_EQ(doc.at("radical").at(key), nlohmann::json({0, 1, 2}));
  }

  r = run({"radical", write_ring(qsr::make_cyclic(4)), "--inject-fault"});
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, Verify) {
  auto r = run({"verify", "--catalog", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto all = nlohmann::json::parse(r.out);
  EXPECT_GE(all.size(), 16u);
  for (const auto& rep : all) EXPECT_TRUE(rep.at("agreement").get<bool>());

  EXPECT_EQ(run({"verify", write_ring(qsr::make_cyclic(6))}).code, 0);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--catalog", "--inject-fault"}).code, 1);
  EXPECT_EQ(run({"verify", (dir_ / "nope.json").string()}).code, 2);

  const fs::path out = dir_ / "reports";
  r = run({"verify", "--catalog", "--out", out.string()});
  EXPECT_EQ(r.code, 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(out)) {
    std::ifstream in(entry.path());
    const auto doc = nlohmann::json::parse(in);
    EXPECT_TRUE(doc.contains("checks"));
    ++files;
  }
  EXPECT_EQ(files, all.size());
}

TEST_F(CliTest, VerifyIsDeterministic) {
  const auto a = run({"verify", "--catalog", "--json"});
  const auto b = run({"verify", "--catalog", "--json"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, Qdemo) {
  const auto a = run({"qdemo"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_NE(a.out.find("all checks pass"), std::string::npos);

  const auto b = run({"qdemo", "--seed", "42"});
  const auto c = run({"qdemo", "--seed", "42"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out, c.out);
  EXPECT_NE(a.out, b.out);

  EXPECT_EQ(run({"qdemo", "--inject-fault"}).code, 1);
}

TEST_F(CliTest, CatalogExportFeedsVerify) {
  const fs::path out = dir_ / "rings";
  ASSERT_EQ(run({"catalog", out.string()}).code, 0);
  std::vector<std::string> args{"verify"};
  for (const auto& entry : fs::directory_iterator(out)) args.push_back(entry.path().string());
  EXPECT_GE(args.size(), 17u);
  EXPECT_EQ(run(args).code, 0);
}
