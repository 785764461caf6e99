#include "coxcensus/finite_group.hpp"

#include <cstdint>
#include <stdexcept>

#include "coxcensus/errors.hpp"

namespace coxcensus {

FiniteGroup::FiniteGroup(PermGroup group, std::string name, std::size_t max_order)
    : group_(std::move(group)), name_(std::move(name)) {
  const auto& gens = group_.generators();
  elements_.push_back(Permutation(group_.degree()));
  index_.emplace(elements_[0], 0);
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (const auto& g : gens) {
      Permutation y = elements_[k] * g;
      if (index_.contains(y)) continue;
      if (elements_.size() >= max_order)
        throw BudgetExceeded("enumerate", "group has more than " + std::to_string(max_order) + " elements");
      index_.emplace(y, static_cast<std::uint32_t>(elements_.size()));
      elements_.push_back(std::move(y));
    }
  }
  for (const auto& g : gens) gen_index_.push_back(*index_of(g));

  const std::size_t n = elements_.size();
  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = *index_of(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }

  class_of_.assign(n, SIZE_MAX);
  std::vector<Permutation> ginv;
  for (const auto& g : gens) ginv.push_back(g.inverse());
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of_[i] != SIZE_MAX) continue;
    const std::size_t c = class_reps_.size();
    class_reps_.push_back(i);
    std::vector<std::size_t> todo{i};
    class_of_[i] = c;
    for (std::size_t k = 0; k < todo.size(); ++k) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        std::size_t y = *index_of(ginv[s] * elements_[todo[k]] * gens[s]);
        if (class_of_[y] == SIZE_MAX) {
          class_of_[y] = c;
          todo.push_back(y);
        }
      }
    }
    class_sizes_.push_back(todo.size());
  }
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::multiply(std::size_t i, std::size_t j) const {
  auto r = index_of(elements_[i] * elements_[j]);
  if (!r) throw std::logic_error("FiniteGroup::multiply: product left the group");
  return *r;
}

}  // namespace coxcensus
