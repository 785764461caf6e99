#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace coxcensus {

// Z^rank x Z_{t1} x ... x Z_{tk} with 1 < t1 | t2 | ... | tk.
struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;

  // Any list of nonnegative diagonal entries; zeros add to the rank, units
  // vanish, the rest is brought into divisibility-chain form.
  static AbelianInvariants from_diagonal(std::size_t free_rank, std::vector<mpz_class> diagonal);

  // Accepts the output of to_string plus "Zn" for non-prime-power n, unicode
  // "×", and "0" / "1" / "trivial".
  static AbelianInvariants parse(std::string_view text);

  bool trivial() const noexcept { return rank == 0 && torsion.empty(); }
  mpz_class torsion_order() const;

  // Prime-power cyclic orders, ascending.
  std::vector<mpz_class> primary_factors() const;

  // Free part first, then primary factors by increasing order, e.g.
  // "Z^5 x Z2^2", "Z2^4 x Z4 x Z5^3". The trivial group prints as "0".
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b);
  friend std::strong_ordering operator<=>(const AbelianInvariants& a, const AbelianInvariants& b);
};

}  // namespace coxcensus
