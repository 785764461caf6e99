#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "coxcensus/finite_group.hpp"
#include "coxcensus/perm_group.hpp"

namespace coxcensus {

// Names as printed: A4, S4, A5, S5, D6 (dihedral of order 12), Z2, A4xZ2,
// S4xZ2, A5xZ2, S5xZ2, PSL(2,7), PSL(2,7)xZ2, PSL(2,11), PGL(2,11),
// PGL(2,11)xZ2, PSL(2,19). Lookup also accepts the unicode "×".
std::vector<std::string> catalog_names();
std::string canonical_group_name(std::string_view name);
bool in_catalog(std::string_view name);

// Throws std::invalid_argument for unknown names.
PermGroup catalog_group(std::string_view name);
// Enumerated and cached; safe to call from several threads.
std::shared_ptr<const FiniteGroup> catalog_finite_group(std::string_view name);

// PSL(2,q) and PGL(2,q) on the q+1 points of the projective line, q prime.
PermGroup projective_special_linear(unsigned q);
PermGroup projective_general_linear(unsigned q);
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

}  // namespace coxcensus
