#include <doctest.h>

#include <json.hpp>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "grmir/cli.hpp"

using namespace grmir;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
  json doc;  // parsed stdout when it is JSON
};

CliResult run(std::vector<std::string> args, bool parse_json = true) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (parse_json && !r.out.empty() && r.out[0] == '{')
    r.doc = json::parse(r.out);
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("grmir-cli-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("a-series json output") {
  CliResult r = run({"a-series", "--k", "2", "--n", "4", "--max-m", "2",
                     "--no-cache"});
  REQUIRE(r.code == 0);
  REQUIRE(r.err.empty());
  CHECK(r.doc["command"] == "a-series");
  CHECK(r.doc["k"] == 2);
  CHECK(r.doc["n"] == 4);
  CHECK(r.doc["max_m"] == 2);
  REQUIRE(r.doc["rows"].size() == 3);
  CHECK(r.doc["rows"][0]["m"] == 0);
  CHECK(r.doc["rows"][0]["a_m"] == "1");
  CHECK(r.doc["rows"][1]["a_m"] == "48");
  CHECK(r.doc["rows"][2]["a_m"] == "15120");
}

TEST_CASE("a-series csv and pretty output") {
  CliResult csv = run({"a-series", "--k", "1", "--n", "2", "--max-m", "3",
                       "--no-cache", "--format", "csv"}, false);
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "m,a_m\n0,1\n1,2\n2,6\n3,20\n");

  CliResult pretty = run({"a-series", "--k", "1", "--n", "2", "--max-m", "1",
                          "--no-cache", "--format", "pretty"}, false);
  REQUIRE(pretty.code == 0);
  CHECK(pretty.out == "a_0 = 1\na_1 = 2\n");
}

TEST_CASE("a-series output is deterministic") {
  auto args = std::vector<std::string>{"a-series", "--k", "2", "--n", "4",
                                       "--max-m", "3", "--no-cache"};
  CliResult a = run(args, false);
  CliResult b = run(args, false);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("a-series cache roundtrip") {
  TempDir tmp;
  std::vector<std::string> args{"a-series", "--k",         "2",
                                "--n",      "4",           "--max-m",
                                "2",        "--cache-dir", tmp.path.string()};
  CliResult first = run(args, false);
  REQUIRE(first.code == 0);

  int entries = 0;
  fs::path entry;
  for (const auto& e : fs::directory_iterator(tmp.path)) {
    ++entries;
    entry = e.path();
  }
  REQUIRE(entries == 1);

  CliResult second = run(args, false);
  CHECK(second.code == 0);
  CHECK(second.out == first.out);

  std::vector<std::string> verify = args;
  verify.push_back("--verify-cache");
  CliResult ok = run(verify, false);
  CHECK(ok.code == 0);
  CHECK(ok.err.empty());

  // a corrupted payload must be reported, not silently served
  json stored;
  {
    std::ifstream in(entry);
    in >> stored;
  }
  stored["payload"][1]["a_m"] = "47";
  {
    std::ofstream out(entry);
    out << stored;
  }
  CliResult bad = run(verify, false);
  CHECK(bad.code == 1);
  CHECK(bad.err.find("cache mismatch") != std::string::npos);
}

TEST_CASE("constant-term reports both engines") {
  CliResult r = run({"constant-term", "--k", "2", "--n", "4", "--d", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["engine"] == "both");
  CHECK(r.doc["engines_agree"] == true);
  CHECK(r.doc["flows"]["z_degree"] == 1);
  CHECK(r.doc["flows"]["coeff"] == "48");
  CHECK(r.doc["direct"] == r.doc["flows"]);

  const json& graph = r.doc["graph"];
  CHECK(graph["k"] == 2);
  CHECK(graph["n"] == 4);
  REQUIRE(graph["vertices"].size() == 6);
  int boxes = 0, z1 = 0, z2 = 0;
  for (const json& v : graph["vertices"]) {
    std::string type = v["type"];
    if (type == "box") {
      ++boxes;
      CHECK(v.contains("col"));
      CHECK(v.contains("row"));
      CHECK(v.contains("weight"));
    } else if (type == "z1") {
      ++z1;
    } else {
      CHECK(type == "z2");
      ++z2;
    }
  }
  CHECK(boxes == 4);
  CHECK(z1 == 1);
  CHECK(z2 == 1);
  REQUIRE(graph["edges"].size() == 6);
  for (const json& e : graph["edges"]) REQUIRE(e.size() == 2);
}

TEST_CASE("constant-term single engine and vanishing degrees") {
  CliResult r = run({"constant-term", "--k", "1", "--n", "3", "--d", "3",
                     "--engine", "flows"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["engine"] == "flows");
  CHECK_FALSE(r.doc.contains("engines_agree"));
  CHECK(r.doc["result"]["coeff"] == "6");

  CliResult zero = run({"constant-term", "--k", "1", "--n", "3", "--d", "4",
                        "--engine", "direct"});
  REQUIRE(zero.code == 0);
  CHECK(zero.doc["result"]["coeff"] == "0");
  CHECK(zero.doc["result"]["z_degree"].is_null());
}

TEST_CASE("vertex command in both modes") {
  CliResult gen = run({"vertex", "--k", "1", "--n", "2", "--d", "2", "--omega",
                       "2", "--u", "0,5"});
  REQUIRE(gen.code == 0);
  CHECK(gen.doc["mode"] == "generic");
  CHECK(gen.doc["u"] == json::array({"0", "5"}));
  CHECK(gen.doc["value"] == "4");

  CliResult u0 = run({"vertex", "--k", "2", "--n", "4", "--d", "1", "--omega",
                      "3/2"});
  REQUIRE(u0.code == 0);
  CHECK(u0.doc["mode"] == "u0");
  CHECK_FALSE(u0.doc.contains("u"));
  CHECK(u0.doc["omega"] == "3/2");
  CHECK(u0.doc["value"] == "63/8");
}

TEST_CASE("phi-series output") {
  CliResult r = run({"phi-series", "--k", "2", "--n", "4", "--max-d", "1",
                     "--no-cache"});
  REQUIRE(r.code == 0);
  REQUIRE(r.doc["series"].size() == 2);
  CHECK(r.doc["series"][0]["coeffs"] == json::array({"1"}));
  CHECK(r.doc["series"][1]["coeffs"] ==
        json::array({"0", "0", "2", "-2", "2"}));

  CliResult csv = run({"phi-series", "--k", "1", "--n", "2", "--max-d", "1",
                       "--no-cache", "--format", "csv"}, false);
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "d,omega_power,coeff\n0,0,1\n1,0,0\n1,1,0\n1,2,1\n");

  CliResult pretty = run({"phi-series", "--k", "2", "--n", "4", "--max-d", "1",
                          "--no-cache", "--format", "pretty"}, false);
  REQUIRE(pretty.code == 0);
  CHECK(pretty.out.find("2*w^4 - 2*w^3 + 2*w^2") != std::string::npos);
}

TEST_CASE("limit-check command") {
  CliResult r = run({"limit-check", "--k", "1", "--n", "2", "--d", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["degree"] == 4);
  CHECK(r.doc["expected_degree"] == 4);
  CHECK(r.doc["degree_ok"] == true);
  CHECK(r.doc["leading"] == "1/4");
  CHECK(r.doc["expected"] == "1/4");
  CHECK(r.doc["leading_ok"] == true);
  CHECK(r.doc["pass"] == true);
}

TEST_CASE("dwork-check ratio, mutation, and factorization") {
  CliResult r = run({"dwork-check", "--k", "1", "--n", "2", "--p", "3", "--s",
                     "1", "--cutoff", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["mode"] == "ratio");
  CHECK(r.doc["mutated"] == false);
  CHECK(r.doc["p"] == "3");
  CHECK(r.doc["pass"] == true);
  CHECK(r.doc["first_failure_degree"].is_null());

  CliResult m = run({"dwork-check", "--k", "1", "--n", "2", "--p", "3", "--s",
                     "1", "--cutoff", "4", "--mutate"});
  CHECK(m.code == 1);
  CHECK(m.doc["pass"] == false);
  CHECK(m.doc["first_failure_degree"] == 1);

  CliResult f = run({"dwork-check", "--k", "1", "--n", "2", "--p", "3", "--s",
                     "1", "--cutoff", "4", "--levels", "1"});
  REQUIRE(f.code == 0);
  CHECK(f.doc["mode"] == "factorization");
  CHECK(f.doc["levels"] == 1);
  CHECK(f.doc["pass"] == true);

  CliResult both = run({"dwork-check", "--k", "1", "--n", "2", "--p", "3",
                        "--mutate", "--levels", "1"}, false);
  CHECK(both.code == 2);
}

TEST_CASE("polytope-check command") {
  CliResult r = run({"polytope-check", "--k", "1", "--n", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["dim"] == 2);
  CHECK(r.doc["points"].size() == 3);
  CHECK(r.doc["reflexive"] == true);
  CHECK(r.doc["origin_interior"] == true);
  CHECK(r.doc["interior_points"] == json::array({json::array({0, 0})}));
  CHECK(r.doc["pass"] == true);
  for (const json& f : r.doc["facets"]) {
    CHECK(f["rhs"] == 1);
    CHECK(f["normal"].size() == 2);
  }
}

TEST_CASE("verify-all runs the acceptance battery") {
  CliResult r = run({"verify-all"});
  REQUIRE(r.code == 0);
  REQUIRE(r.doc["criteria"].size() == 11);
  for (const json& c : r.doc["criteria"]) CHECK(c["pass"] == true);

  CliResult pretty = run({"verify-all", "--format", "pretty"}, false);
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("11/11 criteria passed") != std::string::npos);
}

TEST_CASE("help and version exit cleanly") {
  CliResult help = run({"--help"}, false);
  CHECK(help.code == 0);
  CHECK(help.out.find("a-series") != std::string::npos);

  CliResult sub = run({"vertex", "--help"}, false);
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--omega") != std::string::npos);

  CliResult ver = run({"--version"}, false);
  CHECK(ver.code == 0);
  CHECK(ver.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"no-such-command"}, false).code == 2);
  CHECK(run({}, false).code == 2);
  CHECK(run({"a-series", "--k", "1", "--n", "2"}, false).code == 2);
  CHECK(run({"a-series", "--k", "1", "--n", "2", "--max-m", "2", "--bogus"},
            false).code == 2);
  CHECK(run({"a-series", "--k", "1", "--n", "2", "--max-m", "2", "--format",
             "xml"}, false).code == 2);

  // shape validation
  CliResult shape = run({"a-series", "--k", "2", "--n", "3", "--max-m", "1"},
                        false);
  CHECK(shape.code == 2);
  CHECK(shape.err.find("error:") != std::string::npos);

  // budget violations are usage errors, not failures
  CHECK(run({"a-series", "--k", "1", "--n", "2", "--max-m", "600",
             "--no-cache"}, false).code == 2);
  CHECK(run({"phi-series", "--k", "2", "--n", "6", "--max-d", "1",
             "--no-cache"}, false).code == 2);
  CHECK(run({"dwork-check", "--k", "1", "--n", "2", "--p", "4"}, false).code ==
        2);

  // csv makes no sense for single-value commands
  CHECK(run({"vertex", "--k", "1", "--n", "2", "--d", "1", "--omega", "1",
             "--format", "csv"}, false).code == 2);
  CHECK(run({"limit-check", "--k", "1", "--n", "2", "--d", "1", "--format",
             "csv"}, false).code == 2);
}
