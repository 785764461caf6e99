#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "coxcensus/finite_group.hpp"
#include "coxcensus/presentation.hpp"

namespace coxcensus {

struct Epimorphism {
  std::shared_ptr<const Presentation> source;
  std::shared_ptr<const FiniteGroup> target;
  std::vector<Permutation> images;  // one per source generator

  Permutation evaluate(const Word& w) const;
  bool respects_relators() const;
  bool surjective() const;
};

// Requires the homomorphism to send `word` to `value`.
struct ImageConstraint {
  Word word;
  Permutation value;
};

struct EpiSearchOptions {
  std::uint64_t node_budget = 500'000'000;
  // Fix the first branching generator to conjugacy class representatives.
  // Ignored when image constraints are given.
  bool class_representatives = true;
  bool require_surjective = true;
  std::size_t max_solutions = SIZE_MAX;
  std::uint64_t fingerprint_seed = 0x636f7863656e7375ull;
  std::size_t fingerprint_words = 64;
  std::size_t fingerprint_word_length = 12;
};

struct EpiClass {
  Epimorphism representative;
  std::vector<std::uint32_t> fingerprint;  // image orders of fixed pseudo-random words
  std::uint64_t members_found = 0;         // raw solutions that fell in this class
  std::string fingerprint_hex() const;
};

struct EpiSearchResult {
  std::vector<EpiClass> classes;  // sorted by fingerprint
  std::uint64_t raw_solutions = 0;
  std::uint64_t nodes = 0;
};

// All epimorphisms source -> target up to equality of kernels. Throws
// BudgetExceeded (stage "epi-search") when the node budget runs out.
EpiSearchResult enumerate_epimorphisms(std::shared_ptr<const Presentation> source,
                                       std::shared_ptr<const FiniteGroup> target, const EpiSearchOptions& options = {});

// Raw homomorphisms satisfying the relators and the constraints.
std::vector<Epimorphism> find_homomorphisms(std::shared_ptr<const Presentation> source,
                                            std::shared_ptr<const FiniteGroup> target,
                                            std::span<const ImageConstraint> constraints,
                                            const EpiSearchOptions& options = {}, std::uint64_t* nodes = nullptr);

// Certified: walks the regular action of a and checks that b factors through
// it bijectively.
bool kernels_equal(const Epimorphism& a, const Epimorphism& b);

std::vector<std::uint32_t> kernel_fingerprint(const Epimorphism& e, const EpiSearchOptions& options = {});

}  // namespace coxcensus
