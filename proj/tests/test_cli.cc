// Copyright 2026 The cagen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cagen/cli.h"
#include "cagen/errors.h"
#include "cagen/io.h"
#include "cagen/rng.h"

namespace cagen {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cagen_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void put(const std::string& name, const std::string& text) const { io::write_file(dir_ / name, text); }
  std::string get(const std::string& name) const { return io::read_file(dir_ / name); }

  fs::path dir_;
};

TEST_F(CliTest, CounterModeExample) {
  const auto r = cli({"generate", "--type", "counter_mode", "--n", "10", "--op", "add_mod", "--s", "3",
                      "--length", "4", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "3,4,5,6\n");
}

TEST_F(CliTest, RawAndJsonFormats) {
  const auto raw = cli({"generate", "--type", "counter_mode", "--n", "300", "--s", "257", "--length", "2",
                        "--format", "raw"});
  ASSERT_EQ(raw.out.size(), 16u);
  EXPECT_EQ(static_cast<unsigned char>(raw.out[0]), 1u);
  EXPECT_EQ(static_cast<unsigned char>(raw.out[1]), 1u);
  EXPECT_EQ(static_cast<unsigned char>(raw.out[8]), 2u);
  const auto js = cli({"generate", "--type", "counter_mode", "--n", "10", "--s", "3", "--length", "3",
                       "--format", "json"});
  const auto j = io::Json::parse(js.out);
  EXPECT_EQ(j.at("outputs"), (io::Json{3, 4, 5}));
}

TEST_F(CliTest, MeshedRoundTrip) {
  const auto adv = cli({"adversary", "--n", "8", "--variant", "square_add_mod", "--out", path("m8")});
  ASSERT_EQ(adv.code, 0) << adv.err;
  EXPECT_EQ(adv.out, get("m8.meta.json"));
  const auto meta = io::Json::parse(adv.out);
  EXPECT_EQ(meta.at("total_diversity"), 4);
  EXPECT_EQ(meta.at("expected_period"), 8);
  for (const char* table : {"m8.json", "m8.bin"}) {
    const auto gen = cli({"generate", "--type", "counter_assisted", "--n", "8", "--table", path(table),
                          "--seed", "2", "--length", "9", "--observe", "states"});
    EXPECT_EQ(gen.out, "2,1,2,3,6,1,6,3,2\n") << table;
  }
  const auto v = cli({"validate", path("m8.meta.json")});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(v.out, "ok meshed_metadata\n");
  const auto gen_from_meta = cli({"generate", "--generator-file", path("m8.meta.json"), "--length", "9"});
  EXPECT_EQ(gen_from_meta.code, 2);  // metadata is not a generator document
  // The generator object embedded in the metadata runs as is.
  put("run.json", io::dump(io::Json{{"generator", meta.at("generator")}, {"seed", 2}, {"length", 9}}));
  const auto via_config = cli({"generate", "--config", path("run.json"), "--observe", "states"});
  EXPECT_EQ(via_config.out, "2,1,2,3,6,1,6,3,2\n") << via_config.err;
}

TEST_F(CliTest, TamperedMetadataIsRejected) {
  ASSERT_EQ(cli({"adversary", "--n", "32", "--out", path("m")}).code, 0);
  auto meta = io::Json::parse(get("m.meta.json"));
  meta["x"] = 2;
  put("bad.meta.json", io::dump(meta));
  EXPECT_EQ(cli({"validate", path("bad.meta.json")}).code, 2);
  auto table = io::Json::parse(get("m.json"));
  table["table"][0] = 5;
  put("m.json", io::dump(table));
  const auto r = cli({"validate", path("m.meta.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("does not match"), std::string::npos);
}

TEST_F(CliTest, ConstructionErrorsAreReportedVerbatim) {
  const auto r = cli({"adversary", "--n", "14", "--out", path("x")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err, "error: n/2 must be a perfect square\n");
  EXPECT_FALSE(fs::exists(path("x.json")));
  EXPECT_EQ(cli({"adversary", "--n", "64", "--variant", "power_of_two_xor", "--x", "1", "--y", "2",
                 "--out", path("x")}).code,
            2);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"generate", "--bogus"}).code, 2);
  EXPECT_EQ(cli({"generate", "--type", "counter_mode", "--n", "ten"}).code, 2);
  EXPECT_EQ(cli({"generate", "--type", "warp", "--n", "10"}).code, 2);
  EXPECT_EQ(cli({"generate", "--type", "counter_assisted", "--n", "10", "--f", "identity", "--op", "xor"}).code, 2);
  const auto guard = cli({"diversity", "--type", "counter_assisted", "--n", "1000000", "--f", "negation"});
  EXPECT_EQ(guard.code, 1);
  EXPECT_NE(guard.err.find("error: "), std::string::npos);
  EXPECT_EQ(cli({"validate", path("missing.json")}).code, 2);
  put("broken.json", "{ not json");
  EXPECT_EQ(cli({"validate", path("broken.json")}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST_F(CliTest, FlagsOverrideConfig) {
  put("c.json", R"({"type": "counter_mode", "n": 10, "s": 3, "length": 4})");
  EXPECT_EQ(cli({"generate", "--config", path("c.json")}).out, "3,4,5,6\n");
  EXPECT_EQ(cli({"generate", "--config", path("c.json"), "--s", "5"}).out, "5,6,7,8\n");
  put("bad.json", R"({"type": "counter_mode", "n": "ten"})");
  const auto r = cli({"generate", "--config", path("bad.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--n"), std::string::npos);
}

TEST_F(CliTest, DiversityCurvesWithBounds) {
  const auto r = cli({"diversity", "--type", "counter_assisted", "--n", "16", "--f", "constant:0",
                      "--kmax", "16"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::Json::parse(r.out);
  EXPECT_EQ(j.at("values").size(), 16u);
  EXPECT_EQ(j.at("upper_bound"), false);
  for (std::size_t k = 1; k <= 16; ++k) {
    EXPECT_GE(j.at("values")[k - 1].get<std::uint64_t>(), j.at("bounds").at("eta")[k - 1].get<std::uint64_t>());
  }
  put("curve.json", r.out);
  EXPECT_EQ(cli({"validate", path("curve.json"), "--emit"}).out, r.out);

  const auto sampled = cli({"diversity", "--type", "counter_assisted", "--n", "100000", "--f", "negation",
                            "--sampled", "4", "--kmax", "8"});
  ASSERT_EQ(sampled.code, 0) << sampled.err;
  EXPECT_EQ(io::Json::parse(sampled.out).at("upper_bound"), true);

  put("seq.csv", "1,2,1,2,3\n");
  const auto seq = cli({"diversity", "--input", path("seq.csv"), "--format", "csv"});
  EXPECT_EQ(seq.out, "k,diversity\n1,1\n2,2\n3,2\n4,2\n5,3\n");
}

TEST_F(CliTest, CycleReports) {
  const auto r = cli({"cycle", "--f", "negation", "--n", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::Json::parse(r.out);
  EXPECT_EQ(j.at("p_min"), 1);
  EXPECT_TRUE(j.contains("seeds"));
  EXPECT_FALSE(io::Json::parse(cli({"cycle", "--f", "negation", "--n", "6", "--seeds", "never"}).out)
                   .contains("seeds"));
  put("cyc.json", r.out);
  EXPECT_EQ(cli({"validate", path("cyc.json"), "--emit"}).out, r.out);
}

TEST_F(CliTest, ValidateEmitIsAFixedPoint) {
  put("gen.json", R"({"type": "cascade", "n": 16, "f": "random", "op": "xor",
                      "inner": {"generator": {"type": "counter_assisted", "n": 16, "f": "negation"}, "seed": 3}})");
  const auto once = cli({"validate", path("gen.json"), "--emit"});
  ASSERT_EQ(once.code, 0) << once.err;
  put("gen2.json", once.out);
  EXPECT_EQ(cli({"validate", path("gen2.json"), "--emit"}).out, once.out);

  put("ts.json", R"({"type": "t_step", "n": 16, "t": 2, "f": "mixer:abc", "op": "xor",
                     "output": {"kind": "lucks", "g": "identity", "h": {"width": 4, "key": "1011001"}}})");
  const auto ts = cli({"validate", path("ts.json"), "--emit"});
  ASSERT_EQ(ts.code, 0) << ts.err;
  put("ts2.json", ts.out);
  EXPECT_EQ(cli({"validate", path("ts2.json"), "--emit"}).out, ts.out);

  const auto d = cli({"distinguish", "--n", "1024", "--k", "16", "--trials", "50"});
  put("exp.json", d.out);
  EXPECT_EQ(cli({"validate", path("exp.json"), "--emit"}).out, d.out);

  ASSERT_EQ(cli({"adversary", "--n", "32", "--out", path("m")}).code, 0);
  EXPECT_EQ(cli({"validate", path("m.json"), "--emit"}).out, get("m.json"));
  EXPECT_EQ(cli({"validate", path("m.bin"), "--emit"}).out, get("m.bin"));
  EXPECT_EQ(cli({"validate", path("m.meta.json"), "--emit"}).out, get("m.meta.json"));
}

TEST_F(CliTest, EveryCommandIsDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"generate", "--type", "counter_assisted", "--n", "256", "--f", "random", "--length", "100"},
      {"generate", "--type", "t_step", "--n", "64", "--t", "3", "--f", "random", "--length", "20"},
      {"diversity", "--type", "counter_assisted", "--n", "64", "--f", "random"},
      {"diversity", "--type", "counter_assisted", "--n", "100000", "--f", "random", "--sampled", "3", "--kmax", "10"},
      {"cycle", "--f", "random", "--n", "128"},
      {"adversary", "--n", "32", "--random-fill", "--out", path("r")},
      {"distinguish", "--n", "4096", "--k", "32", "--trials", "300"},
  };
  for (auto cmd : commands) {
    cmd.push_back("--rng-seed");
    cmd.push_back("42");
    const auto a = cli(cmd);
    const auto b = cli(cmd);
    EXPECT_EQ(a.code, 0) << cmd[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << cmd[0];
    cmd.back() = "43";
    EXPECT_NE(cli(cmd).out, a.out) << cmd[0];
  }
}

TEST(Io, FunctionTableFormats) {
  Rng rng(40);
  const auto f = FunctionTable::table(StateSpace(50), rng.table(50));
  EXPECT_EQ(io::function_table_from_binary(io::function_table_to_binary(f)).tabulate(), f.tabulate());
  io::ParseContext ctx;
  EXPECT_EQ(io::function_table_from_json(io::function_table_to_json(f), ctx).tabulate(), f.tabulate());
  const auto aff = io::function_table_from_json(io::Json("affine:3:1"), ctx, 10);
  EXPECT_EQ(aff(2), 7u);
  EXPECT_THROW(io::function_table_from_json(io::Json("affine:3"), ctx, 10), ConfigError);
  EXPECT_THROW(io::function_table_from_json(io::Json{{"n", 2}, {"table", {0, 2}}}, ctx), ConfigError);
  EXPECT_THROW(io::function_table_from_binary("FTBL"), ConfigError);
  std::string truncated = io::function_table_to_binary(f);
  truncated.pop_back();
  EXPECT_THROW(io::function_table_from_binary(truncated), ConfigError);
}

TEST(Io, RandomTablesDrawSuccessiveStreams) {
  io::ParseContext a;
  a.rng_seed = 7;
  const auto f1 = io::function_table_from_json(io::Json("random"), a, 64);
  const auto f2 = io::function_table_from_json(io::Json("random"), a, 64);
  EXPECT_NE(f1.tabulate(), f2.tabulate());
  io::ParseContext b;
  b.rng_seed = 7;
  EXPECT_EQ(io::function_table_from_json(io::Json("random"), b, 64).tabulate(), f1.tabulate());
}

}  // namespace
}  // namespace cagen
