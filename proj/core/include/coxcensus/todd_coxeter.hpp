#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "coxcensus/coset_table.hpp"

namespace coxcensus {

class FiniteGroup;
class Permutation;

struct ToddCoxeterOptions {
  std::size_t max_cosets = 1'000'000;
  bool lookahead = true;
};

struct ToddCoxeterResult {
  std::optional<CosetTable> table;  // set iff the enumeration closed
  std::size_t total_defined = 0;
  std::size_t peak_live = 0;
  bool closed() const noexcept { return table.has_value(); }
};

// Coset enumeration (HLT with lookahead) for the subgroup generated by
// `subgroup` in the group presented by p. Overflow is reported, not thrown.
ToddCoxeterResult todd_coxeter(std::shared_ptr<const Presentation> p, std::span<const Word> subgroup,
                               const ToddCoxeterOptions& options = {});
ToddCoxeterResult todd_coxeter(const Presentation& p, std::span<const Word> subgroup,
                               const ToddCoxeterOptions& options = {});

// The regular action of the image of a homomorphism: cosets of its kernel,
// one per element of `target` reachable from the images.
CosetTable table_from_images(std::shared_ptr<const Presentation> source, std::span<const Permutation> images,
                             const FiniteGroup& target);

// Order of the quotient of p by the normal closure of `extra`, or nullopt if
// the enumeration of the trivial subgroup overflows `max_cosets`.
std::optional<std::size_t> quotient_order(const Presentation& p, std::span<const Word> extra, std::size_t max_cosets);

}  // namespace coxcensus
