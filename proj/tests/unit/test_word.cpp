#include <doctest.h>

#include <random>

#include "coxcensus/word.hpp"
#include "../oracles.hpp"

using namespace coxcensus;

namespace {

Word random_word(std::mt19937& rng, int gens, std::size_t max_len) {
  std::uniform_int_distribution<int> g(1, gens), s(0, 1);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::vector<int> v(len(rng));
  for (auto& x : v) x = s(rng) ? g(rng) : -g(rng);
  return Word(v);
}

}  // namespace

TEST_CASE("free_reduce agrees with repeated cancellation") {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Word w = random_word(rng, 3, 40);
    CHECK(free_reduce(w).letters() == oracle::free_reduce(w.letters()));
  }
}

TEST_CASE("inverse and power") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 4, 20);
    CHECK(free_reduce(w * w.inverse()).empty());
    CHECK(free_reduce(w.power(3)) == free_reduce(w * w * w));
    CHECK(free_reduce(w.power(-2)) == free_reduce(w.inverse() * w.inverse()));
    CHECK(w.power(0).empty());
  }
}

TEST_CASE("cyclic reduction is conjugation invariant") {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(rng, 3, 20), u = random_word(rng, 3, 6);
    Word c = cyclic_reduce(w);
    if (!c.empty()) CHECK(c[0] != -c[c.size() - 1]);
    CHECK(canonical_cyclic_form(w) == canonical_cyclic_form(u * w * u.inverse()));
    CHECK(canonical_cyclic_form(w) == canonical_cyclic_form(w.inverse()));
  }
}

TEST_CASE("proper power root") {
  Word ab{1, 2};
  auto [root, k] = proper_power_root(ab.power(6));
  CHECK(root == ab);
  CHECK(k == 6);
  auto [r2, k2] = proper_power_root(Word{1, 2, 1, -2});
  CHECK(k2 == 1);
  CHECK(r2 == Word{1, 2, 1, -2});
}

TEST_CASE("exponent sums and substitution") {
  Word w{1, 2, -1, 2, 2, -3};
  CHECK(exponent_sums(w, 3) == std::vector<long>{0, 3, -1});
  std::vector<Word> images{Word{2}, Word{1, 1}, Word{}};
  CHECK(free_reduce(substitute(Word{1, -2, 3}, images)) == Word{2, -1, -1});
}
