#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = alexinv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
  const Result r = run(std::move(args));
  EXPECT_EQ(r.code, expected_code) << r.err;
  return json::parse(r.out);
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ComputeCorpusEntry) {
  const json j = run_json({"compute", "--corpus", "mapping-torus-A"});
  EXPECT_EQ(j["b1"], 1);
  EXPECT_EQ(j["torsion"], json::array({2}));
  EXPECT_EQ(j["delta"], "t^2 - 4*t + 1");
  EXPECT_EQ(j["symmetry"], "UnitSymmetric");
  EXPECT_EQ(j["source"], "corpus:mapping-torus-A");
  for (const auto& [name, ok] : j["checks"].items()) EXPECT_TRUE(ok.get<bool>()) << name;
  EXPECT_TRUE(j["checks"].contains("expected_delta"));

  const json t3 = run_json({"compute", "--corpus", "t3"});
  EXPECT_EQ(t3["b1"], 3);
  EXPECT_EQ(t3["delta"], "1");
}

TEST(Cli, ComputeFile) {
  const auto path = write_temp("alexinv_cli_trefoil.txt", "# trefoil\n<x, y | x y x = y x y>\n");
  const json j = run_json({"compute", path.string()});
  EXPECT_EQ(j["delta"], "t^2 - t + 1");
  EXPECT_EQ(j["source"], path.string());

  const Result text = run({"compute", path.string(), "--no-json"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("delta: t^2 - t + 1"), std::string::npos);
}

TEST(Cli, ComputeFailures) {
  // b1 = 0: a precondition failure, not a usage error.
  const auto finite = write_temp("alexinv_cli_finite.txt", "<x | x>");
  EXPECT_EQ(run({"compute", finite.string()}).code, 1);

  const auto junk = write_temp("alexinv_cli_nonsense.txt", "this is not a presentation");
  const Result bad = run({"compute", junk.string()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("parse error"), std::string::npos);

  EXPECT_EQ(run({"compute", "/nonexistent/alexinv.txt"}).code, 2);
  EXPECT_EQ(run({"compute", "--corpus", "no-such-entry"}).code, 2);
  EXPECT_EQ(run({"compute"}).code, 2);
  EXPECT_EQ(run({"compute", finite.string(), "--corpus", "t3"}).code, 2);
}

TEST(Cli, Classify) {
  const json a = run_json({"classify", "t^2 - 4*t + 1"});
  EXPECT_EQ(a["symmetry"], "UnitSymmetric");
  EXPECT_EQ(a["witness"], "t^-1");
  EXPECT_EQ(a["trace"], -2);
  EXPECT_EQ(a["realizable"], true);

  const json b = run_json({"classify", "t - 1"});
  EXPECT_EQ(b["symmetry"], "ModUnitSymmetric");
  EXPECT_EQ(b["realizable"], false);

  const json c = run_json({"classify", "t1*t2 + 1"});
  EXPECT_EQ(c["arity"], 2);
  EXPECT_TRUE(c["realizable"].is_null());

  const json d = run_json({"classify", "t + 1 + t^-1"});
  EXPECT_EQ(d["symmetry"], "Symmetric");
  EXPECT_EQ(d["levine_hypotheses"]["is_symmetric"], true);

  const json e = run_json({"classify", "t + t^-1"});
  EXPECT_EQ(e["symmetry"], "Symmetric");
  EXPECT_EQ(e["trace"], 2);
  EXPECT_EQ(e["realizable"], true);

  EXPECT_EQ(run({"classify", "t +* 1"}).code, 2);
  EXPECT_EQ(run({"classify", "0"}).code, 1);
  EXPECT_EQ(run({"classify", "t1 + t2", "--arity", "1"}).code, 2);
}

TEST(Cli, VerifySuites) {
  for (const std::string theorem :
       {"levine", "blanchfield", "b1-one-characterization", "torsion-cover", "hironaka", "shalen-wagreich", "b1-ge-4"}) {
    const json j = run_json({"verify", theorem, "--cases", "10", "--max-degree", "4"});
    EXPECT_EQ(j["theorem"], theorem);
    EXPECT_EQ(j["status"], "ok") << theorem;
    EXPECT_EQ(j["failed"], 0) << theorem;
    EXPECT_GT(j["passed"].get<int>(), 0) << theorem;
  }
}

TEST(Cli, VerifyExplicitRequests) {
  const json a = run_json({"verify", "torsion-cover", "--corpus", "mapping-torus-A", "--primes", "3"});
  EXPECT_EQ(a["passed"], 1);
  EXPECT_EQ(run_json({"verify", "levine", "--seed", "7", "--cases", "50"})["passed"], 50);
  EXPECT_EQ(run_json({"verify", "blanchfield", "--corpus", "all"})["status"], "ok");

  // Delta = 1 but the (Z/2)^2 cover has torsion of order 4.
  const json h = run_json({"verify", "torsion-cover", "--corpus", "heisenberg", "--primes", "2"}, 1);
  EXPECT_EQ(h["status"], "failed");
  EXPECT_EQ(h["counterexample"]["lhs"], 4);
  EXPECT_EQ(h["counterexample"]["rhs"], 1);

  const Result over = run({"verify", "shalen-wagreich", "--corpus", "connected-sum-5", "--primes", "3",
                           "--max-index", "100"});
  EXPECT_EQ(over.code, 3);
  EXPECT_NE(over.err.find("resource limit"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "riemann"}).code, 2);
  EXPECT_EQ(run({"verify", "levine", "--max-degree", "99"}).code, 2);
  EXPECT_EQ(run({"verify", "hironaka", "--corpus", "lens-space"}).code, 2);
  EXPECT_EQ(run({"corpus", "show", "lens-space"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CorpusListing) {
  const Result list = run({"corpus", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("# mapping-torus-A:"), std::string::npos);
  EXPECT_NE(list.out.find("# connected-sum-5:"), std::string::npos);

  const Result show = run({"corpus", "show", "mapping-torus-A"});
  EXPECT_EQ(show.code, 0);
  EXPECT_NE(show.out.find("# delta = t^2 - 4*t + 1"), std::string::npos);
  // The printed presentation is accepted by compute.
  const auto path = write_temp("alexinv_cli_show.txt", show.out);
  EXPECT_EQ(run_json({"compute", path.string()})["delta"], "t^2 - 4*t + 1");
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"verify", "levine", "--seed", "7", "--cases", "20"},
        std::vector<std::string>{"verify", "hironaka"}, std::vector<std::string>{"compute", "--corpus", "heisenberg"},
        std::vector<std::string>{"corpus", "list"}}) {
    const Result first = run(args), second = run(args);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.code, second.code);
  }
  EXPECT_NE(run({"verify", "levine", "--seed", "1", "--cases", "5"}).out,
            run({"verify", "levine", "--seed", "2", "--cases", "5"}).out);
}
