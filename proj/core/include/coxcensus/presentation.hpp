#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxcensus/word.hpp"

namespace coxcensus {

class IntegerMatrix;

// Finite group presentation. Relators are kept freely and cyclically reduced;
// trivial relators are dropped, order is preserved.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  std::size_t generator_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::string& generator_name(int g) const { return names_.at(static_cast<std::size_t>(g - 1)); }
  std::optional<int> find_generator(std::string_view name) const;

  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t total_relator_length() const noexcept;

  void add_relator(const Word& w);

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

// DSL:  gens a, b;  rels a^2, b^3, (ab)^5, a b a^-1 = b^-1 ...;
// Atoms are generator names or parenthesised words, optionally raised to a
// positive power or to -1; "lhs = rhs" stands for lhs * rhs^-1.
Presentation parse_presentation(std::string_view text);

// Parses a word over the generators of p (same atom syntax as the DSL).
Word parse_word(std::string_view text, const Presentation& p);

std::string format_word(const Word& w, const std::vector<std::string>& names);
std::string format_word(const Word& w, const Presentation& p);

// Inverse of parse_presentation: parse_presentation(serialize(p)) == p.
std::string serialize(const Presentation& p);

// One row per relator, one column per generator; entries are exponent sums.
IntegerMatrix abelianized_relator_matrix(const Presentation& p);

// Removes generators that are forced by relators of length one or two.
// generator_images[g-1] expresses original generator g in the reduced
// presentation, so any homomorphism out of `reduced` pulls back.
struct ShortRelatorReduction {
  Presentation reduced;
  std::vector<Word> generator_images;
};
ShortRelatorReduction eliminate_short_relators(const Presentation& p);

}  // namespace coxcensus
