#include <doctest.h>

#include <bitset>
#include <chrono>
#include <filesystem>
#include <fstream>

#include "coxcensus/census.hpp"
#include "coxcensus/errors.hpp"
#include "coxcensus/families.hpp"
#include "coxcensus/fixtures.hpp"
#include "coxcensus/lattice.hpp"

using namespace coxcensus;

namespace {

std::filesystem::path fresh_dir(const char* name) {
  auto d = std::filesystem::temp_directory_path() / (std::string("coxcensus-test-") + name + "-" +
                                                   std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("lattice members are character preimages") {
  for (TetrahedronLabels l : {TetrahedronLabels{5, 5, 2, 2, 3, 3}, TetrahedronLabels{5, 5, 2, 2, 2, 3},
                              TetrahedronLabels{4, 3, 2, 2, 2, 3}}) {
    FamilyLattice L(l);
    CHECK(L.top() == ambient_kind(l));
    unsigned top_bits = FamilyLattice::subgroup_bits(L.top());
    for (auto k : L.kinds()) {
      CAPTURE(kind_name(k));
      unsigned bits = FamilyLattice::subgroup_bits(k);
      CHECK(L.index(k) == (std::size_t{1} << (std::bitset<3>(top_bits).count() - std::bitset<3>(bits).count())));
      CHECK_FALSE(L.table(k).defect().has_value());
      for (const auto& w : L.generators(k)) CHECK((L.character(w) & ~bits) == 0);
      for (const auto& w : L.embedding(k)) CHECK((L.character(w) & ~bits) == 0);
    }
  }
}

TEST_CASE("record JSON round trip and determinism") {
  AnalyzeOptions o;
  auto a = analyze("T(3,3;2,2;3,3)", "A4", o);
  auto b = analyze("T(3,3;2,2;3,3)", "A4", o);
  CHECK(to_json(a) == to_json(b));
  CHECK(census_record_from_json(to_json(a)) == a);
  CHECK(a.class_count == a.classes.size());
  auto text = to_text(a);
  CHECK(text.find("Z4^2") != std::string::npos);
  auto j = to_json(a);
  auto pos = j.find("\"class_count\": 5");
  REQUIRE(pos != std::string::npos);
  j.replace(pos, 16, "\"class_count\": 4");
  CHECK_THROWS(census_record_from_json(j));
  CHECK_THROWS(census_record_from_json("{"));
}

TEST_CASE("cold and warm cache give identical records") {
  auto dir = fresh_dir("cache");
  AnalyzeOptions o;
  o.cache_dir = dir.string();
  auto cold = to_json(analyze("Ttau(5,5;2,2;3,3)", "A5", o));
  CHECK(std::filesystem::exists(dir / "records"));
  auto warm = to_json(analyze("Ttau(5,5;2,2;3,3)", "A5", o));
  auto warm2 = to_json(analyze("Ttau(5,5;2,2;3,3)", "A5", o));
  CHECK(cold == warm);
  CHECK(warm == warm2);
  AnalyzeOptions none;
  CHECK(to_json(analyze("Ttau(5,5;2,2;3,3)", "A5", none)) == cold);
  // A corrupted cache entry is ignored, not trusted.
  for (const auto& f : std::filesystem::directory_iterator(dir / "records")) std::ofstream(f.path()) << "{garbage";
  CHECK(to_json(analyze("Ttau(5,5;2,2;3,3)", "A5", o)) == cold);
  std::filesystem::remove_all(dir);
}

TEST_CASE("threads do not change results") {
  AnalyzeOptions one, four;
  four.threads = 4;
  CHECK(to_json(analyze("T(5,5;2,2;3,3)", "A5", one)) == to_json(analyze("T(5,5;2,2;3,3)", "A5", four)));
}

TEST_CASE("analyze errors") {
  CHECK_THROWS_AS(analyze("T(3,3;2,2;3,3)", "M24"), std::invalid_argument);
  CHECK_THROWS_AS(analyze("Q(3,3;2,2;3,3)", "A4"), ParseError);
  AnalyzeOptions tight;
  tight.search_budget = 3;
  try {
    analyze("T(5,5;2,2;3,3)", "A5", tight);
    FAIL("no budget error");
  } catch (const BudgetExceeded& e) {
    CHECK_FALSE(e.stage().empty());
  }
}

TEST_CASE("fixture parsing") {
  CHECK_THROWS_AS(parse_fixtures(""), ParseError);
  CHECK_THROWS_AS(parse_fixtures("{\"entries\": []}"), ParseError);
  CHECK_THROWS_AS(parse_fixtures("{\"entries\": [{\"id\": \"x\", \"tier\": \"slow\", \"citation\": \"c\"}]}"), ParseError);
  CHECK_THROWS_AS(parse_fixtures("{\"entries\": [{\"id\": \"x\", \"tier\": \"quick\"}]}"), ParseError);
  auto f = parse_fixtures(R"json({"entries": [{"id": "a4", "tier": "quick", "family": "T(3,3;2,2;3,3)",
    "target": "A4", "citation": "test", "class_count": 5, "h1": ["Z^3", "Z4 x Z4", "Z4^2", "Z2^5", "Z2^5"]}]})json");
  REQUIRE(f.size() == 1);
  CHECK((*f[0].h1)[1] == "Z4^2");
  auto rep = reproduce_paper(f, Tier::Quick, {});
  CHECK(rep.exit_code() == 0);
  CHECK(rep.checks.size() == 2);
  f[0].class_count = 4;
  rep = reproduce_paper(f, Tier::Quick, {});
  CHECK(rep.exit_code() == 1);
  CHECK(rep.to_text().find("expected 4") != std::string::npos);
  CHECK(reproduce_paper(f, Tier::Extended, {}).checks.empty());
}

TEST_CASE("shipped fixtures parse and cite every entry") {
  auto f = load_fixtures(default_fixtures_path());
  CHECK(f.size() >= 15);
  for (const auto& e : f) {
    CHECK_FALSE(e.citation.empty());
    CHECK((e.tier == "quick" || e.tier == "extended"));
  }
  auto geo = check_geometry_lists("g", "c");
  CHECK(geo.size() == 28);
  for (const auto& c : geo) CHECK(c.passed);
}
