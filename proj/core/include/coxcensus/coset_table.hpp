#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxcensus/presentation.hpp"

namespace coxcensus {

enum class TreeOrder { Forward, Reverse };

// Complete coset table of a finite-index subgroup. Column 2(g-1) holds the
// action of generator g, column 2(g-1)+1 that of its inverse. Coset 0 is the
// subgroup. A spanning (Schreier) tree is fixed by breadth-first search from
// coset 0 scanning columns in ascending (Forward) or descending (Reverse)
// order.
class CosetTable {
 public:
  CosetTable(std::shared_ptr<const Presentation> presentation, std::string subgroup_description,
             std::vector<Word> subgroup_words, std::size_t index, std::vector<std::int32_t> action,
             TreeOrder order = TreeOrder::Forward);

  const Presentation& presentation() const noexcept { return *presentation_; }
  const std::shared_ptr<const Presentation>& presentation_ptr() const noexcept { return presentation_; }
  const std::string& subgroup_description() const noexcept { return subgroup_; }
  const std::vector<Word>& subgroup_words() const noexcept { return subgroup_words_; }

  std::size_t index() const noexcept { return index_; }
  std::size_t generator_count() const noexcept { return gens_; }
  std::size_t column_count() const noexcept { return 2 * gens_; }

  static std::size_t column(int letter) noexcept {
    return 2 * static_cast<std::size_t>((letter < 0 ? -letter : letter) - 1) + (letter < 0 ? 1 : 0);
  }
  std::size_t image(std::size_t coset, int letter) const {
    return static_cast<std::size_t>(table_[coset * 2 * gens_ + column(letter)]);
  }
  std::size_t apply(std::size_t coset, const Word& w) const;
  const std::vector<std::int32_t>& raw() const noexcept { return table_; }

  TreeOrder tree_order() const noexcept { return order_; }
  CosetTable with_tree_order(TreeOrder order) const;
  // Letter on the tree edge into `coset` (0 for the root) and its parent.
  int parent_letter(std::size_t coset) const { return parent_letter_[coset]; }
  std::size_t parent(std::size_t coset) const { return parent_[coset]; }
  // Tree path from coset 0 to `coset`.
  Word transversal(std::size_t coset) const;
  bool is_tree_edge(std::size_t coset, int generator) const;

  // Empty when the table is a complete, consistent coset table of a
  // subgroup containing subgroup_words(); otherwise names the first defect.
  std::optional<std::string> defect() const;

 private:
  std::shared_ptr<const Presentation> presentation_;
  std::string subgroup_;
  std::vector<Word> subgroup_words_;
  std::size_t index_ = 0;
  std::size_t gens_ = 0;
  std::vector<std::int32_t> table_;
  TreeOrder order_ = TreeOrder::Forward;
  std::vector<std::size_t> parent_;
  std::vector<int> parent_letter_;

  void build_tree();
};

// Renumbers `action` (rows of 2k entries) by breadth-first order from coset
// 0, dropping unreachable rows. Returns the new index.
std::size_t standardize_action(std::vector<std::int32_t>& action, std::size_t generator_count);

}  // namespace coxcensus
