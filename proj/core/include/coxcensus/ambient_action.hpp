#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxcensus/epimorphism.hpp"
#include "coxcensus/fingerprint.hpp"
#include "coxcensus/lattice.hpp"
#include "coxcensus/perm_group.hpp"

namespace coxcensus {

// Action of the ambient group W of a lattice on the cosets of the kernel K
// of a homomorphism from a member subgroup X. Points are pairs (g, i) with g
// in the image and i a coset of X in W, numbered i * |image| + g; point 0 is
// the coset K itself.
class AmbientAction {
 public:
  // `hom` is defined on lattice.subgroup_presentation(kind).
  AmbientAction(const FamilyLattice& lattice, FamilyKind kind, const Epimorphism& hom);

  const FamilyLattice& lattice() const noexcept { return *lattice_; }
  FamilyKind kind() const noexcept { return kind_; }
  std::size_t degree() const noexcept { return degree_; }
  // Action of ambient generator g (0-based).
  const Permutation& generator(std::size_t g) const { return gens_.at(g); }
  std::size_t apply(std::size_t point, int letter) const {
    return letter > 0 ? gens_[static_cast<std::size_t>(letter - 1)][point]
                      : inv_[static_cast<std::size_t>(-letter - 1)][point];
  }
  std::size_t apply(std::size_t point, const Word& w) const;
  Permutation evaluate(const Word& w) const;

  // Character values of the elements of K (a subspace of Z2^3, as a mask of
  // which of the 8 values occur).
  unsigned kernel_character_values() const noexcept { return kernel_chi_; }
  bool kernel_in(FamilyKind y) const;
  // No element of K reverses orientation.
  bool kernel_orientation_preserving() const noexcept { return (kernel_chi_ & 0xAAu) == 0; }

  // Coset table of K in W.
  CosetTable coset_table(TreeOrder order = TreeOrder::Forward) const;

 private:
  const FamilyLattice* lattice_;
  FamilyKind kind_;
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_, inv_;
  unsigned kernel_chi_ = 0;
};

// Stab_a(p) == Stab_b(q) as subgroups of W (both actions transitive).
bool same_stabilizer(const AmbientAction& a, std::size_t p, const AmbientAction& b, std::size_t q);

// Orbit of `point` under the subgroup Y of W, in breadth-first order.
std::vector<std::size_t> subgroup_orbit(const AmbientAction& a, FamilyKind y, std::size_t point = 0);

bool kernel_normal_in(const AmbientAction& a, FamilyKind y);
bool kernels_conjugate_in(const AmbientAction& a, const AmbientAction& b, FamilyKind y);
bool kernels_equal(const AmbientAction& a, const AmbientAction& b);

// Every orbit of the local group has full length, i.e. K meets no conjugate
// of it nontrivially.
bool acts_freely(const AmbientAction& a, const LocalGroup& g);

struct ExtensionQuotient {
  FamilyKind kind;
  std::uint64_t order = 0;
  PermGroup group{0, {}};                       // regular action on the orbit of K under Y
  std::optional<GroupFingerprint> fingerprint;  // when small enough to enumerate
  std::vector<std::string> consistent_with;
};

// Y/K for K normal in Y. Throws std::invalid_argument if K is not normal in Y.
ExtensionQuotient extension_quotient(const AmbientAction& a, FamilyKind y, std::uint64_t fingerprint_limit = 5000);

}  // namespace coxcensus
