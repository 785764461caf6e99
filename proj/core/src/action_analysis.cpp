#include "coxcensus/action_analysis.hpp"

#include <set>

#include "coxcensus/todd_coxeter.hpp"

namespace coxcensus {

Lift lift_to_subgroup_presentation(const FamilyLattice& lattice, FamilyKind kind, const Epimorphism& e,
                                   std::uint64_t node_budget) {
  return lift_by_words(lattice, kind, e, lattice.embedding(kind), node_budget);
}

Lift lift_by_words(const FamilyLattice& lattice, FamilyKind kind, const Epimorphism& e, std::span<const Word> emb,
                   std::uint64_t node_budget) {
  if (emb.size() != e.images.size())
    throw std::invalid_argument("lift_to_subgroup_presentation: homomorphism has the wrong number of generators");
  std::vector<ImageConstraint> cons;
  for (std::size_t i = 0; i < emb.size(); ++i)
    cons.push_back({rewrite(lattice.table(kind), lattice.schreier(kind), emb[i]), e.images[i]});
  EpiSearchOptions opt;
  opt.require_surjective = false;
  opt.max_solutions = 2;
  opt.node_budget = node_budget;
  auto found = find_homomorphisms(lattice.subgroup_presentation(kind), e.target, cons, opt);
  Lift out;
  out.solutions = found.size();
  if (found.size() == 1) out.hom = std::move(found[0]);
  return out;
}

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    out.push_back(p);
    while (k % p == 0) k /= p;
  }
  if (k > 1) out.push_back(k);
  return out;
}

}  // namespace

std::vector<TorsionRoot> torsion_roots(const Presentation& p, std::uint64_t target_order, std::size_t max_cosets) {
  std::vector<TorsionRoot> out;
  std::set<Word> seen;
  for (const auto& r : p.relators()) {
    auto [u, k] = proper_power_root(r);
    if (k < 2) continue;
    for (auto q : prime_divisors(static_cast<std::uint64_t>(k))) {
      Word w = u.power(k / static_cast<long>(q));
      if (!seen.insert(canonical_cyclic_form(w)).second) continue;
      TorsionRoot t;
      t.element = w;
      t.order = q;
      Word extra[1] = {w};
      t.collapse_order = quotient_order(p, extra, max_cosets);
      t.safe_by_collapse = t.collapse_order && *t.collapse_order % target_order != 0;
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Admissible:
      return "admissible";
    case Verdict::Inadmissible:
      return "inadmissible";
    case Verdict::Undetermined:
      return "undetermined";
  }
  return "?";
}

AdmissibilityReport check_admissibility(const AmbientAction& a, const Epimorphism& e,
                                        std::span<const TorsionRoot> roots, bool roots_cover_torsion) {
  AdmissibilityReport r;
  for (const auto& g : a.lattice().local_groups())
    if (!acts_freely(a, g)) r.non_free_local_groups.push_back(g.name);
  r.local_groups_free = r.non_free_local_groups.empty();
  for (const auto& t : roots) {
    if (t.safe_by_collapse) {
      ++r.roots_by_collapse;
      continue;
    }
    ++r.roots_by_image;
    if (e.evaluate(t.element).is_identity()) r.killed_roots.push_back(format_word(t.element, *e.source));
  }
  r.roots_survive = r.killed_roots.empty();
  r.method_a = r.local_groups_free ? Verdict::Admissible : Verdict::Inadmissible;
  r.method_b = !r.roots_survive     ? Verdict::Inadmissible
               : roots_cover_torsion ? Verdict::Admissible
                                     : Verdict::Undetermined;
  r.admissible = r.local_groups_free && r.roots_survive;
  return r;
}

namespace {

int type_rank(ActionType t) {
  switch (t) {
    case ActionType::Type12:
      return 0;
    case ActionType::Type24NonInterchanging:
    case ActionType::Type24Interchanging:
      return 1;
    case ActionType::Type48:
      return 2;
  }
  return -1;
}

}  // namespace

ActionRecord classify_action(const AmbientAction& a, const Epimorphism& e, std::span<const TorsionRoot> roots,
                             bool roots_cover_torsion, std::uint64_t fingerprint_limit) {
  ActionRecord rec;
  rec.admissibility = check_admissibility(a, e, roots, roots_cover_torsion);
  rec.orientable = a.kernel_orientation_preserving();
  const auto& L = a.lattice();
  for (FamilyKind y : L.kinds()) {
    if (!a.kernel_in(y)) continue;
    rec.contained_in.push_back(y);
    if (!kernel_normal_in(a, y)) continue;
    rec.normal_in.push_back(y);
    rec.quotients.push_back(extension_quotient(a, y, fingerprint_limit));
  }
  if (!rec.admissibility.admissible) return rec;
  for (std::size_t i = 0; i < rec.normal_in.size(); ++i) {
    auto t = type_for_kind(L.labels(), rec.normal_in[i]);
    if (!t) continue;
    if (rec.type && type_rank(*rec.type) >= type_rank(*t)) continue;
    rec.type = *t;
    rec.type_group = rec.normal_in[i];
    rec.type_group_quotient_order = rec.quotients[i].order;
  }
  if (rec.type) rec.genus = genus_from_order(*rec.type_group_quotient_order, *rec.type);
  return rec;
}

}  // namespace coxcensus
