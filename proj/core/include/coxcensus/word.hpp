#pragma once

#include <cstddef>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coxcensus {

// Letters are nonzero ints: +g is generator g (1-based), -g its inverse.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<int> letters);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word inverse() const;
  // Negative exponents raise the inverse.
  Word power(long k) const;
  int max_generator() const noexcept;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);

// Smallest rotation among all rotations of w and of w^-1 (w cyclically reduced
// first), ordered shortlex. Two relators generate the same normal closure
// contribution trivially iff their canonical forms agree.
Word canonical_cyclic_form(const Word& w);

// Writes w (assumed cyclically reduced) as root^k with k maximal.
std::pair<Word, long> proper_power_root(const Word& w);

std::vector<long> exponent_sums(const Word& w, std::size_t generator_count);

// Replaces generator g by images[g-1].
Word substitute(const Word& w, std::span<const Word> images);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace coxcensus
