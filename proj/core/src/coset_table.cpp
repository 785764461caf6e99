#include "coxcensus/coset_table.hpp"

#include <cstdint>
#include <stdexcept>

namespace coxcensus {

CosetTable::CosetTable(std::shared_ptr<const Presentation> presentation, std::string subgroup_description,
                       std::vector<Word> subgroup_words, std::size_t index, std::vector<std::int32_t> action,
                       TreeOrder order)
    : presentation_(std::move(presentation)),
      subgroup_(std::move(subgroup_description)),
      subgroup_words_(std::move(subgroup_words)),
      index_(index),
      gens_(presentation_->generator_count()),
      table_(std::move(action)),
      order_(order) {
  if (table_.size() != index_ * 2 * gens_) throw std::invalid_argument("CosetTable: table size does not match index");
  for (auto v : table_)
    if (v < 0 || static_cast<std::size_t>(v) >= index_)
      throw std::invalid_argument("CosetTable: entry out of range or undefined");
  build_tree();
}

void CosetTable::build_tree() {
  parent_.assign(index_, SIZE_MAX);
  parent_letter_.assign(index_, 0);
  if (index_ == 0) return;
  parent_[0] = 0;
  std::vector<std::size_t> queue{0};
  const std::size_t cols = 2 * gens_;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::size_t c = queue[k];
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t col = order_ == TreeOrder::Forward ? j : cols - 1 - j;
      auto d = static_cast<std::size_t>(table_[c * cols + col]);
      if (parent_[d] != SIZE_MAX) continue;
      parent_[d] = c;
      int g = static_cast<int>(col / 2) + 1;
      parent_letter_[d] = col % 2 == 0 ? g : -g;
      queue.push_back(d);
    }
  }
  if (queue.size() != index_) throw std::invalid_argument("CosetTable: action is not transitive");
}

CosetTable CosetTable::with_tree_order(TreeOrder order) const {
  return CosetTable(presentation_, subgroup_, subgroup_words_, index_, table_, order);
}

std::size_t CosetTable::apply(std::size_t coset, const Word& w) const {
  for (int x : w) coset = image(coset, x);
  return coset;
}

Word CosetTable::transversal(std::size_t coset) const {
  std::vector<int> rev;
  while (coset != 0) {
    rev.push_back(parent_letter_[coset]);
    coset = parent_[coset];
  }
  return Word(std::vector<int>(rev.rbegin(), rev.rend()));
}

bool CosetTable::is_tree_edge(std::size_t coset, int generator) const {
  std::size_t t = image(coset, generator);
  return (t != 0 && parent_[t] == coset && parent_letter_[t] == generator) ||
         (coset != 0 && parent_[coset] == t && parent_letter_[coset] == -generator);
}

std::optional<std::string> CosetTable::defect() const {
  const std::size_t cols = 2 * gens_;
  for (std::size_t c = 0; c < index_; ++c) {
    for (std::size_t col = 0; col < cols; ++col) {
      auto d = static_cast<std::size_t>(table_[c * cols + col]);
      std::size_t back = col ^ 1u;
      if (static_cast<std::size_t>(table_[d * cols + back]) != c)
        return "coset " + std::to_string(c) + ": column " + std::to_string(col) + " has no matching inverse entry";
    }
  }
  for (std::size_t c = 0; c < index_; ++c)
    for (std::size_t r = 0; r < presentation_->relators().size(); ++r)
      if (apply(c, presentation_->relators()[r]) != c)
        return "relator " + std::to_string(r + 1) + " does not close at coset " + std::to_string(c);
  for (std::size_t s = 0; s < subgroup_words_.size(); ++s)
    if (apply(0, subgroup_words_[s]) != 0) return "subgroup generator " + std::to_string(s + 1) + " moves coset 0";
  return std::nullopt;
}

std::size_t standardize_action(std::vector<std::int32_t>& action, std::size_t generator_count) {
  const std::size_t cols = 2 * generator_count;
  const std::size_t rows = cols == 0 ? 1 : action.size() / cols;
  std::vector<std::int32_t> renum(rows, -1);
  std::vector<std::size_t> order{0};
  renum[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t col = 0; col < cols; ++col) {
      auto d = action[order[k] * cols + col];
      if (d >= 0 && renum[static_cast<std::size_t>(d)] < 0) {
        renum[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
        order.push_back(static_cast<std::size_t>(d));
      }
    }
  }
  std::vector<std::int32_t> out(order.size() * cols);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t col = 0; col < cols; ++col) {
      auto d = action[order[k] * cols + col];
      out[k * cols + col] = d < 0 ? -1 : renum[static_cast<std::size_t>(d)];
    }
  action = std::move(out);
  return order.size();
}

}  // namespace coxcensus
