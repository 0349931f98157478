#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "skewres_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "skewres");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = skewres::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("generators and pfaffians") {
  auto r = run({"generators", "--n", "4"});
  CHECK(r.code == skewres::cli::kExitOk);
  CHECK(contains(r.out, "-x14*y1-x24*y2-x34*y3"));
  auto p = run({"pfaffian", "--n", "5", "--delete", "5"});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "x12*x34"));
}

TEST_CASE("colon and conjecture verification") {
  auto c = run({"colon", "--n", "4"});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "equal"));
  auto v = run({"verify", "--n", "4", "--conjecture", "1"});
  CHECK(v.code == 0);
  CHECK(contains(v.out, "conjecture 1 at n = 4"));
  CHECK(contains(v.out, ": equal"));
  auto v2 = run({"verify", "--n", "4", "--conjecture", "2"});
  CHECK(v2.code == 0);
  CHECK(contains(v2.out, "vacuous"));
  auto seven = run({"verify", "--n", "7", "--conjecture", "2", "--field", "fp"});
  CHECK(seven.code == 0);
  CHECK(contains(seven.out, "conjecture 2 at n = 7"));
  auto lemmas = run({"verify", "--n", "5", "--field", "fp", "--lemmas"});
  CHECK(lemmas.code == 0);
  CHECK(contains(lemmas.out, "identity (i): pass as stated"));
  CHECK(contains(lemmas.out, "regular sequence: yes"));
}

TEST_CASE("resolve prints the Betti table and round trips through a file") {
  auto r = run({"resolve", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "total: 1 3 2"));
  CHECK(contains(r.out, "verification: pass"));
  auto path = std::filesystem::temp_directory_path() / "skewres_cli_test_l4.json";
  auto w = run({"resolve", "--n", "4", "--mode", "direct", "--out", path.string()});
  CHECK(w.code == 0);
  auto b = run({"betti", "--in", path.string()});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "total: 1 4 7 5 1"));
  auto bj = run({"--json", "betti", "--in", path.string()});
  CHECK(nlohmann::json::parse(bj.out).at("ranks") == nlohmann::json::array({1, 4, 7, 5, 1}));
  std::ofstream(path) << "{\"format\": 1}";
  CHECK(run({"betti", "--in", path.string()}).code == skewres::cli::kExitUsage);
  std::filesystem::remove(path);
  CHECK(run({"betti", "--in", path.string()}).code != 0);
}

TEST_CASE("JSON output") {
  auto r = run({"--json", "resolve", "--n", "4", "--field", "fp"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("n") == 4);
  auto g = nlohmann::json::parse(run({"--json", "gb", "--n", "3", "--ideal", "I", "--order", "lex"}).out);
  CHECK(g.at("order") == "lex");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == skewres::cli::kExitUsage);
  CHECK(run({"resolve"}).code == skewres::cli::kExitUsage);
  CHECK(run({"resolve", "--n", "1"}).code == skewres::cli::kExitUsage);
  CHECK(run({"resolve", "--n", "3", "--field", "fp:100"}).code == skewres::cli::kExitUsage);
  CHECK(run({"resolve", "--n", "3", "--mode", "fast"}).code == skewres::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == skewres::cli::kExitUsage);
  CHECK(run({"--help"}).code == skewres::cli::kExitOk);
}

TEST_CASE("timeouts exit with 1") {
  CHECK(run({"--timeout", "0", "gb", "--n", "3"}).code == skewres::cli::kExitUsage);
  auto r = run({"--timeout", "0.5", "resolve", "--n", "7", "--mode", "direct"});
  CHECK(r.code == skewres::cli::kExitFailure);
  CHECK(contains(r.err, "timeout"));
}
