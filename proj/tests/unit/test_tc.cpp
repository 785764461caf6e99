#include <doctest.h>

#include <random>

#include "coxcensus/coset_table.hpp"
#include "coxcensus/presentation.hpp"
#include "coxcensus/reidemeister_schreier.hpp"
#include "coxcensus/smith.hpp"
#include "coxcensus/table_cache.hpp"
#include "coxcensus/todd_coxeter.hpp"

using namespace coxcensus;

namespace {

std::size_t order_of(const char* text, std::size_t max = 1'000'000) {
  auto p = std::make_shared<const Presentation>(parse_presentation(text));
  ToddCoxeterOptions o;
  o.max_cosets = max;
  auto r = todd_coxeter(p, {}, o);
  REQUIRE(r.closed());
  CHECK_FALSE(r.table->defect().has_value());
  return r.table->index();
}

}  // namespace

TEST_CASE("orders of finite presentations") {
  CHECK(order_of("gens a, b; rels a^2, b^3, (ab)^5;") == 60);
  CHECK(order_of("gens a, b; rels a^2, b^3, (ab)^4;") == 24);
  CHECK(order_of("gens a, b; rels a^2, b^3, (ab)^7, (a b a^-1 b^-1)^4;") == 168);
  CHECK(order_of("gens a, b; rels a^8, b^2 = a^4, b^-1 a b a;") == 16);
  CHECK(order_of("gens a, b, c; rels a^2, b^2, c^2, (ab)^3, (bc)^5, (ac)^2;") == 120);
  CHECK(order_of("gens a, b; rels a b a^-1 b^-1 b^-1, b a b^-1 a^-1 a^-1;") == 1);
  CHECK(order_of("gens a; rels a^12;") == 12);
}

TEST_CASE("subgroup index") {
  auto p = std::make_shared<const Presentation>(
      parse_presentation("gens a, b, c; rels a^2, b^2, c^2, (ab)^3, (bc)^5, (ac)^2;"));
  std::vector<Word> h{Word{1}, Word{2}};
  auto r = todd_coxeter(p, h);
  REQUIRE(r.closed());
  CHECK(r.table->index() == 20);
  CHECK_FALSE(r.table->defect().has_value());
  for (const auto& w : h) CHECK(r.table->apply(0, w) == 0);
}

TEST_CASE("overflow is reported") {
  auto p = std::make_shared<const Presentation>(parse_presentation("gens a, b; rels a^2, b^3;"));
  ToddCoxeterOptions o;
  o.max_cosets = 500;
  auto r = todd_coxeter(p, {}, o);
  CHECK_FALSE(r.closed());
  CHECK(r.total_defined >= 500);
  CHECK_FALSE(quotient_order(*p, {}, 500).has_value());
  std::vector<Word> extra{Word{1, 2}.power(5)};
  CHECK(*quotient_order(*p, extra, 500) == 60);
}

TEST_CASE("validator rejects damaged tables") {
  auto p = std::make_shared<const Presentation>(parse_presentation("gens a, b; rels a^2, b^3, (ab)^5;"));
  auto t = *todd_coxeter(p, {}).table;
  auto raw = t.raw();
  std::swap(raw[0], raw[2]);
  CosetTable bad(p, "", {}, t.index(), raw);
  CHECK(bad.defect().has_value());
  // Ignoring a relator is caught too.
  auto q = std::make_shared<const Presentation>(parse_presentation("gens a, b; rels a^2, b^3, (ab)^4;"));
  auto t24 = *todd_coxeter(q, {}).table;
  CosetTable wrong(p, "", {}, t24.index(), t24.raw());
  CHECK(wrong.defect().has_value());
}

TEST_CASE("table cache round trip") {
  auto p = std::make_shared<const Presentation>(parse_presentation("gens a, b; rels a^2, b^3, (ab)^5;"));
  std::vector<Word> h{Word{2}};
  auto t = *todd_coxeter(p, h).table;
  auto back = table_from_json(table_to_json(t), p);
  CHECK(back.raw() == t.raw());
  CHECK(back.index() == 20);
  auto other = std::make_shared<const Presentation>(parse_presentation("gens a, b; rels a^2, b^3, (ab)^4;"));
  CHECK_THROWS(table_from_json(table_to_json(t), other));
  CHECK(table_cache_key(*p, h) == table_cache_key(*p, h));
  CHECK(table_cache_key(*p, h) != table_cache_key(*p, {}));
  CHECK(content_hash("").size() == 16);
}

TEST_CASE("Reidemeister-Schreier") {
  // A5 with the subgroup <b> of index 20: the subgroup is Z3.
  auto p = std::make_shared<const Presentation>(parse_presentation("gens a, b; rels a^2, b^3, (ab)^5;"));
  std::vector<Word> h{Word{2}};
  auto t = *todd_coxeter(p, h).table;
  auto rs = reidemeister_schreier(t);
  CHECK(abelian_invariants(rs).to_string() == "Z3");
  CHECK(subgroup_abelian_invariants(t).to_string() == "Z3");
  CHECK(subgroup_abelian_invariants(t.with_tree_order(TreeOrder::Reverse)).to_string() == "Z3");
  auto s = schreier_generators(t);
  CHECK(s.generator_count() == t.index() * (p->generator_count() - 1) + 1);
  for (std::size_t i = 0; i < s.words.size(); ++i) CHECK(t.apply(0, s.words[i]) == 0);
  CHECK_THROWS_AS(rewrite(t, s, Word{1}), std::invalid_argument);
}

TEST_CASE("abelian invariants of subgroups do not depend on the tree") {
  // Commutator subgroup of a free product quotient and some small-index
  // subgroups of triangle groups.
  const char* presentations[] = {
      "gens a, b; rels a^2, b^3, (ab)^7;",
      "gens a, b, c; rels a^2, b^2, c^2, (ab)^4, (bc)^4, (ca)^2;",
      "gens x, y; rels x^3, y^3, (xy)^3;",
  };
  std::mt19937 rng(8);
  for (const char* text : presentations) {
    auto p = std::make_shared<const Presentation>(parse_presentation(text));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Word> h;
      for (int k = 0; k < 2; ++k) {
        std::vector<int> v(std::uniform_int_distribution<std::size_t>(2, 9)(rng));
        for (auto& x : v)
          x = std::uniform_int_distribution<int>(1, static_cast<int>(p->generator_count()))(rng) * (rng() % 2 ? 1 : -1);
        h.emplace_back(v);
      }
      ToddCoxeterOptions o;
      o.max_cosets = 20000;
      auto r = todd_coxeter(p, h, o);
      if (!r.closed()) continue;
      CHECK_FALSE(r.table->defect().has_value());
      auto fwd = subgroup_abelian_invariants(*r.table);
      auto rev = subgroup_abelian_invariants(r.table->with_tree_order(TreeOrder::Reverse));
      CHECK(fwd == rev);
      CHECK(abelian_invariants(reidemeister_schreier(*r.table)) == fwd);
    }
  }
}
