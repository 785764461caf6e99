#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxcensus/abelian_invariants.hpp"
#include "coxcensus/finite_group.hpp"

namespace coxcensus {

// Isomorphism invariants used to recognise small groups. Equal fingerprints
// do not prove isomorphism, so matches are reported as "consistent with".
struct GroupFingerprint {
  std::uint64_t order = 0;
  AbelianInvariants abelianization;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::map<std::uint64_t, std::uint64_t> element_order_counts;

  std::string to_string() const;
  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const FiniteGroup& g);

// Subgroup generated by the given elements, as a sorted index list.
std::vector<std::size_t> subgroup_closure(const FiniteGroup& g, const std::vector<std::size_t>& gens);

// Catalog groups (see catalog.hpp) whose fingerprint equals fp.
std::vector<std::string> consistent_catalog_groups(const GroupFingerprint& fp);

}  // namespace coxcensus
