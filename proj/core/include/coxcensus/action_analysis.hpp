#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxcensus/ambient_action.hpp"
#include "coxcensus/epimorphism.hpp"
#include "coxcensus/lattice.hpp"

namespace coxcensus {

// Moves a homomorphism from build_presentation({labels, kind}) to the
// Reidemeister-Schreier presentation of the same subgroup of the ambient
// group, by constrained search. `solutions` is the number of lifts found
// (capped at 2); the lift is set only when it is unique.
struct Lift {
  std::optional<Epimorphism> hom;
  std::size_t solutions = 0;
};
Lift lift_to_subgroup_presentation(const FamilyLattice& lattice, FamilyKind kind, const Epimorphism& e,
                                   std::uint64_t node_budget = 50'000'000);
// Same, for a homomorphism whose i-th source generator is the ambient word
// words[i] (in the generator names of lattice.ambient()).
Lift lift_by_words(const FamilyLattice& lattice, FamilyKind kind, const Epimorphism& e, std::span<const Word> words,
                   std::uint64_t node_budget = 50'000'000);

// A proper-power relator u^k yields the elements u^(k/p), p | k prime, which
// the presentation forces to be nontrivial of order p. If adjoining one of
// them collapses the group to an order not divisible by the target order,
// no epimorphism onto the target can kill it.
struct TorsionRoot {
  Word element;
  std::uint64_t order = 0;  // p
  std::optional<std::size_t> collapse_order;
  bool safe_by_collapse = false;
};
std::vector<TorsionRoot> torsion_roots(const Presentation& p, std::uint64_t target_order, std::size_t max_cosets);

enum class Verdict { Admissible, Inadmissible, Undetermined };
std::string to_string(Verdict v);

struct AdmissibilityReport {
  bool admissible = false;
  // Method (a): every local finite subgroup of the ambient group acts freely
  // on the cosets of the kernel.
  bool local_groups_free = false;
  std::vector<std::string> non_free_local_groups;
  Verdict method_a = Verdict::Undetermined;
  // Method (b): no relator root lies in the kernel. Surviving roots decide
  // admissibility only when every torsion element of the source is
  // conjugate to a power of a root, which holds for the rotation groups T.
  bool roots_survive = false;
  Verdict method_b = Verdict::Undetermined;
  std::vector<std::string> killed_roots;
  std::size_t roots_by_collapse = 0;
  std::size_t roots_by_image = 0;
};
AdmissibilityReport check_admissibility(const AmbientAction& a, const Epimorphism& e,
                                        std::span<const TorsionRoot> roots, bool roots_cover_torsion);

struct ActionRecord {
  AdmissibilityReport admissibility;
  bool orientable = false;
  std::vector<FamilyKind> contained_in;
  std::vector<FamilyKind> normal_in;
  std::vector<ExtensionQuotient> quotients;  // one per entry of normal_in
  std::optional<ActionType> type;
  std::optional<FamilyKind> type_group;
  std::optional<std::uint64_t> type_group_quotient_order;
  std::optional<std::uint64_t> genus;
};

ActionRecord classify_action(const AmbientAction& a, const Epimorphism& e, std::span<const TorsionRoot> roots,
                             bool roots_cover_torsion, std::uint64_t fingerprint_limit = 5000);

}  // namespace coxcensus
