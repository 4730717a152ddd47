#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "commands.hpp"
#include "qcanon/io.hpp"
#include "qcanon/laurent.hpp"

using namespace qcanon;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fixture_dir() {
  const char* d = std::getenv("QCANON_FIXTURES");
  return d ? fs::path(d) : fs::path("fixtures");
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("qcanon_test_" + name); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"roots", "--preset", "A3"}).code == cli::ok);
  CHECK(run({"roots", "--preset", "A4"}).code == cli::config_error);
  CHECK(run({"gram", "--preset", "A3", "--weight", "2,2"}).code == cli::config_error);
  CHECK(run({"gram", "--preset", "A3", "--weight", "2,-1,1"}).code == cli::config_error);
  CHECK(run({"gram", "--preset", "A3", "--weight", "1,1,1", "--max-height", "3"}).code == cli::config_error);
  CHECK(run({"gram", "--preset", "B2", "--weight", "1,1", "--basis", "modified"}).code == cli::config_error);
  CHECK(run({"transition", "--preset", "A3", "--fold", "A3->G2", "--weight", "1,1,1"}).code == cli::config_error);
  CHECK(run({"frobnicate"}).code == cli::config_error);
  CHECK(run({"check", "--preset", "A3", "--suite", "nonsense"}).code == cli::config_error);
  CHECK(run({"--help"}).code == cli::ok);
  const Result r = run({"roots", "--preset", "A4"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("roots output") {
  const Result r = run({"roots", "--preset", "A3", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["betas"].size() == 6);
  std::vector<std::string> names;
  for (const auto& b : j["betas"]) names.push_back(b["root"].get<std::string>());
  CHECK(names == std::vector<std::string>{"1", "1'", "11'2", "1'2", "12", "2"});
  CHECK(j["betas"][2]["coords"] == Json::array({1, 1, 1}));
  const Result t = run({"roots", "--preset", "G2", "--format", "tsv"});
  CHECK(t.code == 0);
  CHECK(t.out.find('\t') != std::string::npos);
}

TEST_CASE("JSON output is byte-identical across runs") {
  const std::vector<std::string> args = {"transition", "--preset", "A3", "--fold", "A3->B2",
                                         "--max-height", "4", "--format", "json"};
  const Result a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["blocks"].size() == weights_up_to(3, 4).size());
  const Result g1 = run({"gram", "--preset", "D4", "--weight", "1,1,1,1", "--format", "json"});
  const Result g2 = run({"gram", "--preset", "D4", "--weight", "1,1,1,1", "--format", "json"});
  CHECK(g1.out == g2.out);
}

TEST_CASE("config file and flag overrides") {
  const fs::path cfg = scratch("run.cfg");
  {
    std::ofstream f(cfg);
    f << "# B2 through its unfolding\npreset = A3\nfold = A3->B2\nweight = 2,2,1\nbasis = modified\nformat = json\n";
  }
  const Result a = run({"transition", "--config", cfg.string()});
  REQUIRE(a.code == 0);
  const Json j = Json::parse(a.out);
  CHECK(j["basis"] == "modified");
  CHECK(j["weight"] == Json::array({2, 2, 1}));
  CHECK(j.contains("sigma"));
  const Result b = run({"transition", "--config", cfg.string(), "--basis", "symmetric"});
  REQUIRE(b.code == 0);
  CHECK(Json::parse(b.out)["basis"] == "symmetric");

  {
    std::ofstream f(cfg);
    f << "labels = a,b,c\nform = 2,-1,0;-1,2,-1;0,-1,2\nweight = 1,1,1\nformat = json\n";
  }
  const Result c = run({"gram", "--config", cfg.string()});
  CHECK(c.code == 0);
  CHECK(Json::parse(c.out)["index"].size() == 4);
  {
    std::ofstream f(cfg);
    f << "colour = red\n";
  }
  CHECK(run({"gram", "--config", cfg.string()}).code == cli::config_error);
  CHECK(run({"gram", "--config", scratch("missing.cfg").string()}).code == cli::config_error);
  fs::remove(cfg);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const fs::path p = scratch("out.json");
  const Result a = run({"gram", "--preset", "G2", "--weight", "2,1", "--format", "json"});
  const Result b = run({"gram", "--preset", "G2", "--weight", "2,1", "--format", "json", "--out", p.string()});
  REQUIRE(b.code == 0);
  CHECK(b.out.empty());
  CHECK(slurp(p) == a.out);
  fs::remove(p);
}

TEST_CASE("fixtures round-trip") {
  const fs::path dir = fixture_dir();
  REQUIRE(fs::is_directory(dir));
  int seen = 0;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    const Json want = Json::parse(slurp(entry.path()));
    RunConfig cfg;
    cfg.preset = want["preset"].get<std::string>();
    cfg.fold = want["fold"].get<std::string>();
    cfg.basis = want["basis"].get<std::string>();
    cfg.format = "json";
    std::string w;
    for (const auto& x : want["weight"]) w += (w.empty() ? "" : ",") + std::to_string(x.get<int>());
    cfg.weight = w;
    CHECK(entry.path() == fs::path(cli::fixture_path(dir.string(), cfg.preset, want["weight"].get<RootVector>())));
    std::ostringstream out;
    REQUIRE(cli::cmd_transition(cfg, out) == 0);
    CHECK(Json::parse(out.str()) == want);
    // every stored entry is a readable rational function
    for (const char* key : {"lambda", "H", "P", "Q"})
      for (const auto& row : want[key])
        for (const auto& e : row) CHECK_NOTHROW(parse_rational(e.get<std::string>()));
  }
  CHECK(seen == 4);
}

TEST_CASE("check command") {
  const Result a = run({"check", "--preset", "A3", "--suite", "factorization", "--max-height", "4"});
  CHECK(a.code == cli::ok);
  CHECK(a.out.rfind("PASS", 0) == 0);
  const Result b = run({"check", "--preset", "B2", "--suite", "all", "--max-height", "3", "--format", "json"});
  CHECK(b.code == cli::ok);
  CHECK(Json::parse(b.out)["ok"] == true);
  const Result c = run({"check", "--preset", "A3", "--suite", "sums", "--max-height", "3", "--format", "json"});
  CHECK(c.code == cli::ok);
  CHECK(Json::parse(c.out)["reports"][0]["gating"] == false);
}

TEST_CASE("the installed binary") {
  const char* bin = std::getenv("QCANON_BIN");
  if (!bin) return;
  const std::string quiet = " >/dev/null 2>&1";
  const auto code = [&](const std::string& args) {
    const int s = std::system((std::string(bin) + " " + args + quiet).c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(code("roots --preset E6") == 0);
  CHECK(code("roots --preset A2") == 2);
  CHECK(code("gram --preset A3 --weight x") == 2);
}
