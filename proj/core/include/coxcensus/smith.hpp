#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "coxcensus/abelian_invariants.hpp"
#include "coxcensus/integer_matrix.hpp"

namespace coxcensus {

class Presentation;

struct SnfOptions {
  // Abort (BudgetExceeded, stage "snf") once the working matrix holds more
  // nonzero entries than this.
  std::size_t max_nonzeros = 200'000'000;
};

struct SnfStats {
  std::size_t unit_pivots = 0;
  std::size_t other_pivots = 0;
  std::size_t peak_nonzeros = 0;
};

// Nonzero invariant factors d1 | d2 | ... of m (units included).
std::vector<mpz_class> smith_invariant_factors(const IntegerMatrix& m, const SnfOptions& options = {},
                                               SnfStats* stats = nullptr);

// Z^cols / rowspace(m).
AbelianInvariants cokernel_invariants(const IntegerMatrix& m, const SnfOptions& options = {},
                                      SnfStats* stats = nullptr);

AbelianInvariants abelian_invariants(const Presentation& p, const SnfOptions& options = {});

}  // namespace coxcensus
