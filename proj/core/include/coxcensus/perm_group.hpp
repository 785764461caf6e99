#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "coxcensus/permutation.hpp"

namespace coxcensus {

// Permutation group on a fixed number of points. The stabiliser chain is
// built by deterministic Schreier-Sims on first use and never changes.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  std::vector<std::uint32_t> base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;

 private:
  struct Level {
    std::uint32_t point;
    std::vector<Permutation> gens;       // strong generators fixing earlier base points
    std::vector<Permutation> gen_invs;
    std::vector<std::int32_t> via;       // generator index that reached the point, -1 root, -2 absent
    std::vector<std::uint32_t> orbit;
  };
  struct Chain {
    std::vector<Level> levels;
  };

  struct Lazy {
    std::once_flag once;
    Chain chain;
  };

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  // Shared between copies; the chain is a pure function of the generators.
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();

  const Chain& chain() const;
  static void build(Chain& c, std::size_t degree, const std::vector<Permutation>& gens);
};

// Order of the group generated by gens (all of the same degree).
std::uint64_t group_order(std::span<const Permutation> gens);

}  // namespace coxcensus
