#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "coxcensus/coset_table.hpp"
#include "coxcensus/families.hpp"
#include "coxcensus/reidemeister_schreier.hpp"

namespace coxcensus {

// A finite subgroup of the ambient group given by generator words, with its
// order. Every torsion element of the ambient group is conjugate into one of
// these.
struct LocalGroup {
  std::string name;
  std::vector<Word> generators;
  std::uint64_t order = 0;
};

// All family groups for one label set, realised as subgroups of the largest
// twisted Coxeter group W the labels allow. A character W -> Z2^3 sends each
// reflection to bit 0, t to bit 1 and m to bit 2; every family group is the
// preimage of a coordinate subspace, so its coset table in W is read off
// directly.
class FamilyLattice {
 public:
  explicit FamilyLattice(const TetrahedronLabels& labels);
  FamilyLattice(const TetrahedronLabels& labels, FamilyKind top);

  const TetrahedronLabels& labels() const noexcept { return labels_; }
  FamilyKind top() const noexcept { return top_; }
  const std::shared_ptr<const Presentation>& ambient() const noexcept { return ambient_; }

  static unsigned subgroup_bits(FamilyKind k);
  unsigned generator_character(std::size_t generator) const { return gen_bits_.at(generator); }
  unsigned character(const Word& w) const;

  bool contains(FamilyKind k) const;
  // Member kinds in all_kinds() order.
  const std::vector<FamilyKind>& kinds() const noexcept { return kinds_; }
  std::size_t index(FamilyKind k) const { return member(k).table.index(); }
  const CosetTable& table(FamilyKind k) const { return member(k).table; }
  const SchreierGenerators& schreier(FamilyKind k) const { return member(k).schreier; }
  const std::shared_ptr<const Presentation>& subgroup_presentation(FamilyKind k) const { return member(k).rs; }
  // Ambient words for the generators of build_presentation({labels, k}).
  const std::vector<Word>& embedding(FamilyKind k) const { return member(k).embedding; }
  // Generators of the subgroup as ambient words (the nontrivial Schreier
  // generators, deduplicated).
  const std::vector<Word>& generators(FamilyKind k) const { return member(k).generators; }

  const std::vector<LocalGroup>& local_groups() const noexcept { return local_; }

 private:
  struct Member {
    FamilyKind kind;
    CosetTable table;
    SchreierGenerators schreier;
    std::shared_ptr<const Presentation> rs;
    std::vector<Word> embedding;
    std::vector<Word> generators;
  };

  TetrahedronLabels labels_;
  FamilyKind top_;
  std::shared_ptr<const Presentation> ambient_;
  std::vector<unsigned> gen_bits_;
  std::vector<FamilyKind> kinds_;
  std::vector<Member> members_;
  std::vector<LocalGroup> local_;

  const Member& member(FamilyKind k) const;
  void build();
};

// The maximal kind for the labels: C with every applicable twist.
FamilyKind ambient_kind(const TetrahedronLabels& labels);

}  // namespace coxcensus
