#include "coxcensus/abelianization.hpp"

#include "coxcensus/reidemeister_schreier.hpp"
#include "coxcensus/todd_coxeter.hpp"

namespace coxcensus {

CosetTable kernel_table(const Epimorphism& e, TreeOrder order) {
  auto t = table_from_images(e.source, e.images, *e.target);
  return order == TreeOrder::Forward ? t : t.with_tree_order(order);
}

AbelianInvariants kernel_abelianization(const Epimorphism& e, TreeOrder order, const SnfOptions& options) {
  return subgroup_abelian_invariants(kernel_table(e, order), options);
}

}  // namespace coxcensus
