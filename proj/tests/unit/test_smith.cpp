#include <doctest.h>

#include <random>
#include <sstream>

#include "coxcensus/errors.hpp"
#include "coxcensus/integer_matrix.hpp"
#include "coxcensus/smith.hpp"
#include "../oracles.hpp"

using namespace coxcensus;

namespace {

IntegerMatrix random_sparse(std::mt19937& rng, std::size_t rows, std::size_t cols, double density, long bound) {
  IntegerMatrix m(rows, cols);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<long> v(-bound, bound);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (u(rng) < density) m.set(i, j, v(rng));
  return m;
}

std::vector<mpz_class> nonunit_chain(const std::vector<mpz_class>& d) {
  return AbelianInvariants::from_diagonal(0, d).torsion;
}

}  // namespace

TEST_CASE("invariant factors match the elementary-operation oracle up to 8x8") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    std::size_t c = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    auto m = random_sparse(rng, r, c, 0.6, trial % 3 == 0 ? 30 : 6);
    auto ours = smith_invariant_factors(m);
    auto ref = oracle::smith_diagonal(m.to_dense());
    // Same multiset after normalisation to a divisibility chain.
    CHECK(ours.size() == ref.size());
    CHECK(nonunit_chain(ours) == nonunit_chain(ref));
    if (r == c) {
      mpz_class det = abs(oracle::bareiss_determinant(m.to_dense()));
      mpz_class prod = 1;
      for (const auto& d : ours) prod *= d;
      CHECK((ours.size() == r ? prod : mpz_class(0)) == det);
    }
  }
}

TEST_CASE("divisibility chain and permutation invariance on 1000 sparse matrices") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
    std::size_t c = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
    auto m = random_sparse(rng, r, c, std::uniform_real_distribution<double>(0.02, 0.3)(rng), 9);
    auto d = smith_invariant_factors(m);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] > 0);
      CHECK(d[i + 1] % d[i] == 0);
    }
    std::vector<std::size_t> ro(r), co(c);
    for (std::size_t i = 0; i < r; ++i) ro[i] = i;
    for (std::size_t j = 0; j < c; ++j) co[j] = j;
    std::shuffle(ro.begin(), ro.end(), rng);
    std::shuffle(co.begin(), co.end(), rng);
    CHECK(smith_invariant_factors(m.permuted(ro, co)) == d);
    auto inv = cokernel_invariants(m);
    CHECK(inv.rank == c - d.size());
  }
}

TEST_CASE("sparse matrix text format") {
  std::istringstream in("3 2 3\n1 1 2\n2 2 -4\n3 1 6\n0 0 0\n");
  auto m = read_sparse_matrix(in);
  CHECK(m.rows() == 3);
  CHECK(m.get(1, 1) == -4);
  std::ostringstream out;
  write_sparse_matrix(out, m);
  std::istringstream back(out.str());
  CHECK(read_sparse_matrix(back).to_dense() == m.to_dense());
  CHECK(cokernel_invariants(m).to_string() == "Z2 x Z4");
  std::istringstream bad("2 2 1\n3 1 5\n");
  CHECK_THROWS(read_sparse_matrix(bad));
}

TEST_CASE("budget on fill-in") {
  std::mt19937 rng(1);
  auto m = random_sparse(rng, 40, 40, 0.5, 50);
  SnfOptions tiny;
  tiny.max_nonzeros = 10;
  CHECK_THROWS_AS(smith_invariant_factors(m, tiny), BudgetExceeded);
}

TEST_CASE("from_diagonal and parse") {
  auto a = AbelianInvariants::from_diagonal(1, {6, 0, 4, 1});
  CHECK(a.rank == 2);
  CHECK(a.to_string() == "Z^2 x Z2 x Z3 x Z4");
  CHECK(AbelianInvariants::parse("Z^2 × Z12 x Z2") == a);
  CHECK(AbelianInvariants::parse("trivial").trivial());
  CHECK(AbelianInvariants::parse("Z2^4 x Z4 x Z5^3").to_string() == "Z2^4 x Z4 x Z5^3");
}
