#include <doctest.h>

#include <random>

#include "coxcensus/errors.hpp"
#include "coxcensus/integer_matrix.hpp"
#include "coxcensus/presentation.hpp"
#include "coxcensus/smith.hpp"

using namespace coxcensus;

TEST_CASE("DSL parses powers, commutators and equations") {
  auto p = parse_presentation("gens a, b;\nrels a^2, b^3, (ab)^5, a b a^-1 b^-1 = ab;");
  REQUIRE(p.generator_count() == 2);
  REQUIRE(p.relators().size() == 4);
  CHECK(p.relators()[0] == Word{1, 1});
  CHECK(p.relators()[2] == Word{1, 2}.power(5));
  CHECK(*p.find_generator("b") == 2);
  CHECK(p.generator_name(1) == "a");
  CHECK(abelian_invariants(p).to_string() == "0");
}

TEST_CASE("relators are stored cyclically reduced") {
  auto p = parse_presentation("gens x, y; rels x y x^-1 y^2 x x^-1, y^-1 x y;");
  CHECK(p.relators()[0] == cyclic_reduce(Word{1, 2, -1, 2, 2}));
  CHECK(p.relators()[1] == Word{1});
}

TEST_CASE("DSL round trip on random presentations") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    int gens = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<std::string> names;
    for (int g = 0; g < gens; ++g) names.push_back(g % 2 ? "f" + std::to_string(g) : std::string(1, char('a' + g)));
    std::vector<Word> rels;
    int nrel = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int r = 0; r < nrel; ++r) {
      std::vector<int> v(std::uniform_int_distribution<std::size_t>(1, 15)(rng));
      for (auto& x : v) x = std::uniform_int_distribution<int>(1, gens)(rng) * (rng() % 2 ? 1 : -1);
      rels.emplace_back(v);
    }
    Presentation p(names, rels);
    CHECK(parse_presentation(serialize(p)) == p);
  }
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_presentation("gens a; rels b^2;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a rels a;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a, a; rels a;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a; rels a^-2;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a; rels [a,a];"), ParseError);
  try {
    parse_presentation("gens a;\nrels a^2, (a;");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("abelianized relator matrix") {
  auto p = parse_presentation("gens a, b; rels a^4, b^6, a b a^-1 b^-1;");
  auto m = abelianized_relator_matrix(p);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(m.get(0, 0) == 4);
  CHECK(m.get(2, 0) == 0);
  CHECK(abelian_invariants(p).to_string() == "Z2 x Z3 x Z4");
}

TEST_CASE("short relator elimination keeps the group") {
  auto p = parse_presentation("gens a, b, c; rels a = b, c, b^5, (ab)^3;");
  auto r = eliminate_short_relators(p);
  CHECK(r.reduced.generator_count() < p.generator_count());
  CHECK(abelian_invariants(r.reduced) == abelian_invariants(p));
  CHECK(r.generator_images.size() == 3);
}
