#pragma once

#include <cstdint>
#include <vector>

#include "coxcensus/abelian_invariants.hpp"
#include "coxcensus/coset_table.hpp"
#include "coxcensus/integer_matrix.hpp"
#include "coxcensus/smith.hpp"

namespace coxcensus {

// Schreier generators rep(i) x rep(i x)^-1 for the non-tree edges (i, x) of
// the table's spanning tree, numbered by coset then generator.
struct SchreierGenerators {
  std::vector<std::int32_t> edge;  // (coset * k + g-1) -> generator index, -1 on tree edges
  std::vector<Word> words;         // as words in the ambient generators
  std::size_t generator_count() const noexcept { return words.size(); }
};

SchreierGenerators schreier_generators(const CosetTable& t);

// Rewrites a word that traces from `start` back to `start` into the Schreier
// generators (letters are 1-based Schreier generator indices). Throws
// std::invalid_argument if the word does not return.
Word rewrite(const CosetTable& t, const SchreierGenerators& s, const Word& w, std::size_t start = 0);

struct RsStats {
  std::size_t raw_relators = 0;  // index * |relators| before dropping trivial ones
};

// Presentation of the subgroup on generators s1, s2, ...
Presentation reidemeister_schreier(const CosetTable& t, RsStats* stats = nullptr);

// Abelianised relator matrix of the subgroup, built directly from the traces.
IntegerMatrix subgroup_relator_matrix(const CosetTable& t, const SchreierGenerators& s);

AbelianInvariants subgroup_abelian_invariants(const CosetTable& t, const SnfOptions& options = {});

}  // namespace coxcensus
