#include "coxcensus/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coxcensus {

FamilyKind ambient_kind(const TetrahedronLabels& labels) {
  return make_kind(false, tau_applicable(labels), mu_applicable(labels));
}

unsigned FamilyLattice::subgroup_bits(FamilyKind k) {
  return (is_tetrahedral(k) ? 0u : 1u) | (has_tau(k) ? 2u : 0u) | (has_mu(k) ? 4u : 0u);
}

FamilyLattice::FamilyLattice(const TetrahedronLabels& labels) : FamilyLattice(labels, ambient_kind(labels)) {}

FamilyLattice::FamilyLattice(const TetrahedronLabels& labels, FamilyKind top) : labels_(labels), top_(top) {
  if (is_tetrahedral(top)) throw std::invalid_argument("FamilyLattice: the ambient group must contain reflections");
  if (!kind_applicable(labels, top))
    throw std::invalid_argument("FamilyLattice: " + kind_name(top) + " is not defined for " + labels.to_string());
  build();
}

unsigned FamilyLattice::character(const Word& w) const {
  unsigned v = 0;
  for (int x : w) v ^= gen_bits_.at(static_cast<std::size_t>(std::abs(x) - 1));
  return v;
}

bool FamilyLattice::contains(FamilyKind k) const { return std::find(kinds_.begin(), kinds_.end(), k) != kinds_.end(); }

const FamilyLattice::Member& FamilyLattice::member(FamilyKind k) const {
  for (const auto& m : members_)
    if (m.kind == k) return m;
  throw std::invalid_argument("FamilyLattice: " + kind_name(k) + " is not a subgroup of " + kind_name(top_) + "(" +
                              labels_.to_string() + ")");
}

namespace {

std::vector<Word> embedding_words(FamilyKind k, const Presentation& w) {
  auto gen = [&](const char* name) { return Word{*w.find_generator(name)}; };
  if (!is_tetrahedral(k)) {
    std::vector<Word> out;
    std::vector<std::string> names{"f1", "f2", "f3", "f4"};
    if (has_tau(k)) names.push_back("t");
    if (has_mu(k)) names.push_back("m");
    for (const auto& n : names) out.push_back(gen(n.c_str()));
    return out;
  }
  const Word F1 = gen("f1"), F2 = gen("f2"), F3 = gen("f3"), F4 = gen("f4");
  if (!has_tau(k)) {
    std::vector<Word> out{F1 * F2, F2 * F3, F3 * F1 * F4 * F3, F3 * F4};
    if (has_mu(k)) out.push_back(gen("m"));
    return out;
  }
  const Word T = gen("t");
  std::vector<Word> out{F3 * F1 * T, T, F1 * F4, F4 * F3};
  if (has_mu(k)) out.push_back(F3 * F4 * gen("m"));
  return out;
}

}  // namespace

void FamilyLattice::build() {
  ambient_ = std::make_shared<const Presentation>(build_presentation({labels_, top_}));
  const auto& W = *ambient_;
  const std::size_t k = W.generator_count();
  for (std::size_t g = 0; g < k; ++g) {
    const auto& name = W.generator_name(static_cast<int>(g) + 1);
    gen_bits_.push_back(name == "t" ? 2u : name == "m" ? 4u : 1u);
  }
  const unsigned top_bits = subgroup_bits(top_);

  for (FamilyKind kind : all_kinds()) {
    unsigned bits = subgroup_bits(kind);
    if ((bits & ~top_bits) != 0 || !kind_applicable(labels_, kind)) continue;
    // Cosets are the values of the character modulo the subspace.
    const unsigned quotient = top_bits & ~bits;
    std::vector<int> coset_of(8, -1);
    std::vector<unsigned> value{0};
    coset_of[0] = 0;
    for (std::size_t q = 0; q < value.size(); ++q)
      for (std::size_t g = 0; g < k; ++g) {
        unsigned v = (value[q] ^ gen_bits_[g]) & quotient;
        if (coset_of[v] < 0) {
          coset_of[v] = static_cast<int>(value.size());
          value.push_back(v);
        }
      }
    const std::size_t index = value.size();
    std::vector<std::int32_t> action(index * 2 * k);
    for (std::size_t c = 0; c < index; ++c)
      for (std::size_t g = 0; g < k; ++g) {
        auto d = coset_of[(value[c] ^ gen_bits_[g]) & quotient];
        action[c * 2 * k + 2 * g] = d;
        action[c * 2 * k + 2 * g + 1] = d;
      }
    CosetTable table(ambient_, kind_name(kind), {}, index, std::move(action));
    auto schreier = schreier_generators(table);
    auto rs = std::make_shared<const Presentation>(reidemeister_schreier(table));
    auto emb = embedding_words(kind, W);
    std::vector<Word> gens;
    std::set<Word> seen;
    for (const auto& w : schreier.words)
      if (w.size() > 0 && seen.insert(w).second) gens.push_back(w);
    members_.push_back({kind, std::move(table), std::move(schreier), std::move(rs), std::move(emb), std::move(gens)});
    kinds_.push_back(kind);
  }

  auto gen = [&](const char* name) { return Word{*W.find_generator(name)}; };
  const Word F[4] = {gen("f1"), gen("f2"), gen("f3"), gen("f4")};
  for (const auto& v : vertex_groups(labels_)) {
    LocalGroup g;
    g.name = "vertex<f" + std::to_string(v.faces[0]) + ",f" + std::to_string(v.faces[1]) + ",f" +
             std::to_string(v.faces[2]) + ">";
    for (int f : v.faces) g.generators.push_back(F[f - 1]);
    g.order = v.order;
    local_.push_back(std::move(g));
  }
  const auto L = static_cast<std::uint64_t>(labels_.n), M = static_cast<std::uint64_t>(labels_.m);
  if (has_tau(top_)) {
    const Word T = gen("t");
    local_.push_back({"edge<f1,f3,t>", {F[0], F[2], T}, 4 * L});
    local_.push_back({"edge<f2,f4,t>", {F[1], F[3], T}, 4 * M});
  }
  if (has_mu(top_)) {
    const Word U = gen("m");
    local_.push_back({"edge<f1,f2,m>", {F[0], F[1], U}, 4 * static_cast<std::uint64_t>(labels_.c)});
    local_.push_back({"edge<f3,f4,m>", {F[2], F[3], U}, 4 * static_cast<std::uint64_t>(labels_.d)});
  }
  if (has_tau(top_) && has_mu(top_)) {
    const Word TU = gen("t") * gen("m");
    local_.push_back({"edge<f1,f4,tm>", {F[0], F[3], TU}, 4 * static_cast<std::uint64_t>(labels_.b)});
    local_.push_back({"edge<f2,f3,tm>", {F[1], F[2], TU}, 4 * static_cast<std::uint64_t>(labels_.a)});
    local_.push_back({"centre<t,m>", {gen("t"), gen("m")}, 4});
  }
}

}  // namespace coxcensus
