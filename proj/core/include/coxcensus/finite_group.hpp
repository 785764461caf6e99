#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxcensus/perm_group.hpp"

namespace coxcensus {

// Explicit element list of a small permutation group, with index lookup,
// element orders and conjugacy classes. Element 0 is the identity and the
// numbering is a deterministic breadth-first order from the generators.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 2'000'000;

  explicit FiniteGroup(PermGroup group, std::string name = {}, std::size_t max_order = kDefaultMaxOrder);

  const PermGroup& group() const noexcept { return group_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return group_.degree(); }

  const Permutation& element(std::size_t i) const { return elements_.at(i); }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::uint64_t element_order(std::size_t i) const { return orders_[i]; }

  std::size_t class_count() const noexcept { return class_reps_.size(); }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  // Smallest element index in each class, ascending.
  const std::vector<std::size_t>& class_representatives() const noexcept { return class_reps_; }
  const std::vector<std::size_t>& class_sizes() const noexcept { return class_sizes_; }

  // Indices of the generators of group().
  const std::vector<std::size_t>& generator_indices() const noexcept { return gen_index_; }

 private:
  PermGroup group_;
  std::string name_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> class_reps_;
  std::vector<std::size_t> class_sizes_;
  std::vector<std::size_t> gen_index_;
};

}  // namespace coxcensus
