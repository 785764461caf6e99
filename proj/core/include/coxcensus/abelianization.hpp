#pragma once

#include "coxcensus/abelian_invariants.hpp"
#include "coxcensus/coset_table.hpp"
#include "coxcensus/epimorphism.hpp"
#include "coxcensus/smith.hpp"

namespace coxcensus {

// Abelian invariants of ker(e), via the regular coset table of e, its
// Reidemeister-Schreier relator matrix and the sparse Smith form.
AbelianInvariants kernel_abelianization(const Epimorphism& e, TreeOrder order = TreeOrder::Forward,
                                        const SnfOptions& options = {});

CosetTable kernel_table(const Epimorphism& e, TreeOrder order = TreeOrder::Forward);

}  // namespace coxcensus
