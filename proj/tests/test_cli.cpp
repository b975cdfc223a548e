#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cherednik/cli.hpp"
#include "cherednik/report.hpp"

using namespace cherednik;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

std::vector<std::string> split(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> v;
  for (std::string w; is >> w;) v.push_back(w);
  return v;
}

Outcome run(const std::string& args) {
  std::ostringstream out, err;
  const int code = cli::run(split(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden outputs") {
  std::ifstream manifest(std::string(CHEREDNIK_GOLDEN_DIR) + "/manifest.txt");
  REQUIRE(manifest.good());
  int count = 0;
  for (std::string line; std::getline(manifest, line);) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    const std::string file = line.substr(0, tab), args = line.substr(tab + 1);
    CAPTURE(args);
    const Outcome o = run(args);
    CHECK(o.code == 0);
    CHECK(o.out == slurp(std::string(CHEREDNIK_GOLDEN_DIR) + "/" + file));
    ++count;

    // JSON reports parse back into the request and result they came from.
    const cli::Request req = cli::parse_request(split(args));
    if (file.ends_with(".json") && req.subcommand == "classify") {
      const auto r = classify_from_json(Json::parse(o.out));
      CHECK(type_label(r.type) == req.type);
      CHECK(r.chi == req.chi);
      CHECK(r == classify(parse_root_type(req.type), req.chi, req.k));
    } else if (file.ends_with(".json") && req.subcommand == "gram") {
      const auto g = gram_from_json(Json::parse(o.out));
      CHECK(g.degree == req.degree);
      CHECK(g.symbolic == req.symbolic);
      const RootType t = parse_root_type(req.type);
      if (g.symbolic)
        CHECK(g.symbolic_matrix == gram_symbolic(t, req.chi, req.degree).symbolic_matrix);
      else
        CHECK(g.evaluated == gram_evaluated(t, req.chi, req.k, req.degree).evaluated);
    } else if (file.ends_with(".json") && req.subcommand == "conjecture") {
      CHECK(conjecture_from_json(Json::parse(o.out)).max_q == req.max_q);
    }
  }
  CHECK(count >= 10);
}

TEST_CASE("documented examples") {
  const Json a = Json::parse(run("classify --type A2 --chi triv --k -1/3").out);
  CHECK(a["finite"] == true);
  CHECK(a["m"] == 0);
  CHECK(a["graded_dims"] == Json::array({1}));
  CHECK(a["dim"] == 1);
  CHECK(Json::parse(run("conjecture --max-q 15").out)["verified_up_to"] == 31);
  CHECK(Json::parse(run("classify --type B2 --chi std --k1 1/2 --k2 1/2").out)["finite"] ==
        false);
}

TEST_CASE("usage and parse errors exit with 1 before computing") {
  for (const char* args : {
           "",
           "frobnicate",
           "classify --type A2 --chi triv --k 1/x",
           "classify --type A2 --chi triv --k 0.5",
           "classify --type A2 --chi triv --k 1/0",
           "classify --type C2 --chi triv --k 1",
           "classify --type A2 --k 1",
           "classify --type A2 --chi triv",
           "classify --type A2 --chi tau --k 1",
           "classify --type A1 --chi triv --k1 1 --k2 2",
           "classify --type B2 --chi triv --k 1 --k1 1",
           "classify --type B2 --chi triv --k2 1",
           "classify --type A2 --chi triv --k 1 --format xml",
           "gram --type A2 --chi triv --symbolic --k 1 --degree 1",
           "gram --type A2 --chi triv --symbolic --degree 4",
           "gram --type A2 --chi triv --degree 1",
           "sweep --type A2 --chi triv --k1-range 1:0:1",
           "sweep --type A2 --chi triv --k1-range 0:1:0",
           "sweep --type A2 --chi triv --k1-range 0:1",
           "sweep --type A2 --chi triv --k1-range 0:1:1 --k2-range 0:1:1",
           "sweep --type A2 --chi triv --k1-range 0:100000:1/2",
           "conjecture",
       }) {
    CAPTURE(args);
    const Outcome o = run(args);
    CHECK(o.code == 1);
    CHECK(o.out.empty());
    CHECK_FALSE(o.err.empty());
  }
}

TEST_CASE("help exits with 0") {
  const Outcome o = run("--help");
  CHECK(o.code == 0);
  CHECK(o.out.find("classify") != std::string::npos);
}

TEST_CASE("sweep output is independent of the thread count") {
  const std::string base = "sweep --type G2 --chi triv --k1-range -1/2:0:1/6 --k2-range -1/2:0:1/6";
  const Outcome one = run(base + " --threads 1");
  const Outcome four = run(base + " --threads 4");
  const Outcome again = run(base + " --threads 4");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(four.out == again.out);
  CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 1 + 16);
}

TEST_CASE("selftest is deterministic for a fixed seed") {
  const Outcome a = run("selftest --seed 3");
  const Outcome b = run("selftest --seed 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("FAIL") == std::string::npos);
}

TEST_CASE("request parsing") {
  const auto r = cli::parse_request(split("classify --type B2 --chi std --k1 1/2 --k2 -3/4 --max-degree 7"));
  CHECK(r.subcommand == "classify");
  CHECK(r.k == std::vector<Rat>{Rat(1, 2), Rat(-3, 4)});
  CHECK(r.max_degree == 7);
  CHECK(cli::expand(cli::parse_range("-1/2:1/2:1/4")).size() == 5);
  CHECK(cli::expand(cli::parse_range("0:1:2/3")) == std::vector<Rat>{Rat(0), Rat(2, 3)});
  CHECK_THROWS_AS(cli::parse_range("0:1:-1"), parse_error);
}
