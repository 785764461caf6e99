#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace coxcensus {

// Permutation of {0, ..., degree-1}. Products act on the right: (p * q)(x) =
// q(p(x)), i.e. apply p first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<std::uint32_t>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  std::uint32_t image(std::size_t x) const { return images_.at(x); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation power(long k) const;
  std::uint64_t order() const;
  // Smallest moved point, or degree() for the identity.
  std::size_t first_moved_point() const noexcept;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string cycle_string() const;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Direct product acting on disjoint sets of points (a's points first).
Permutation direct_sum(const Permutation& a, const Permutation& b);

}  // namespace coxcensus
