#include <doctest.h>

#include <sstream>

#include "cherednik/report.hpp"

using namespace cherednik;

TEST_CASE("ClassifyResult JSON round trip") {
  const std::vector<std::pair<RootType, std::vector<Rat>>> cases{
      {RootType::A1, {Rat(-5, 2)}},          {RootType::A2, {Rat(-4, 3)}},
      {RootType::A2, {Rat(1, 7)}},           {RootType::B2, {Rat(-1, 2), Rat(-1, 2)}},
      {RootType::B2, {Rat(1, 4), Rat(-5, 4)}}, {RootType::G2, {Rat(-1, 6), Rat(-1, 6)}},
  };
  for (const auto& [t, k] : cases)
    for (const auto& chi : irreps(t)) {
      const ClassifyResult r = classify(t, chi.label, k);
      const Json j = to_json(r);
      CHECK(classify_from_json(j) == r);
      CHECK(classify_from_json(Json::parse(j.dump())) == r);
    }
}

TEST_CASE("GramReport JSON round trip, evaluated and symbolic") {
  auto same = [](const GramReport& a, const GramReport& b) {
    return a.type == b.type && a.chi == b.chi && a.k == b.k && a.symbolic == b.symbolic &&
           a.degree == b.degree && a.size == b.size && a.rank == b.rank &&
           a.nullity == b.nullity && a.evaluated == b.evaluated &&
           a.symbolic_matrix == b.symbolic_matrix;
  };
  for (RootType t : kAllTypes)
    for (const auto& chi : irreps(t)) {
      std::vector<Rat> k{Rat(-1, 3)};
      if (root_system(t).num_orbits == 2) k.push_back(Rat(2, 5));
      const auto e = gram_evaluated(t, chi.label, k, 2);
      CHECK(same(gram_from_json(Json::parse(to_json(e).dump())), e));
      const auto s = gram_symbolic(t, chi.label, 2);
      CHECK(same(gram_from_json(Json::parse(to_json(s).dump())), s));
    }
}

TEST_CASE("ConjectureReport JSON round trip") {
  ConjectureReport r{7, 15, std::nullopt};
  CHECK(to_json(r).dump() == R"({"max_q":7,"verified_up_to":15,"first_failure":null})");
  const auto back = conjecture_from_json(to_json(r));
  CHECK(back.max_q == 7);
  CHECK(back.verified_up_to == 15);
  r.first_failure = 9;
  CHECK(conjecture_from_json(to_json(r)).first_failure == 9);
}

TEST_CASE("malformed reports are rejected") {
  Json j = to_json(classify(RootType::A2, "triv", {Rat(-1, 3)}));
  j.erase("finite");
  CHECK_THROWS_AS(classify_from_json(j), parse_error);
  Json g = to_json(gram_evaluated(RootType::A1, "triv", {Rat(1)}, 1));
  g["matrix"][0][0] = "1/0";
  CHECK_THROWS_AS(gram_from_json(g), parse_error);
  g["mode"] = "numeric";
  CHECK_THROWS_AS(gram_from_json(g), parse_error);
}

TEST_CASE("CSV rows") {
  CHECK(csv_header() == "type,k1,k2,chi,finite,m,dim");
  CHECK(csv_row(classify(RootType::A2, "triv", {Rat(-4, 3)})) == "A2,-4/3,-4/3,triv,true,3,16");
  CHECK(csv_row(classify(RootType::B2, "std", {Rat(1, 2), Rat(1, 3)})) ==
        "B2,1/2,1/3,std,false,,");
}

TEST_CASE("info: character table in JSON and aligned text") {
  for (RootType t : kAllTypes) {
    const Json j = info_json(t);
    const RootSystem& rs = root_system(t);
    CHECK(j["order"] == rs.order());
    CHECK(j["positive_roots"].size() == rs.positive.size());
    CHECK(j["irreps"].size() == irreps(t).size());
    CHECK(j["classes"].size() == irreps(t).size());
    for (const auto& chi : j["irreps"]) CHECK(chi["character"][0] == std::to_string(chi["dim"].get<int>()));

    std::istringstream table(info_table(t));
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(table, line))
      if (!line.empty()) rows.push_back(line);
    // Header, invariants, class names, sizes and one row per irrep.
    REQUIRE(rows.size() == 4 + irreps(t).size());
    for (std::size_t i = 3; i < rows.size(); ++i) CHECK(rows[i].size() == rows[2].size());
  }
}
