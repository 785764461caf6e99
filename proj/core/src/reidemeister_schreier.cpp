#include "coxcensus/reidemeister_schreier.hpp"

#include <stdexcept>

namespace coxcensus {

SchreierGenerators schreier_generators(const CosetTable& t) {
  const std::size_t k = t.generator_count();
  SchreierGenerators s;
  s.edge.assign(t.index() * k, -1);
  for (std::size_t c = 0; c < t.index(); ++c) {
    for (std::size_t g = 1; g <= k; ++g) {
      int x = static_cast<int>(g);
      if (t.is_tree_edge(c, x)) continue;
      s.edge[c * k + g - 1] = static_cast<std::int32_t>(s.words.size());
      s.words.push_back(free_reduce(t.transversal(c) * Word{x} * t.transversal(t.image(c, x)).inverse()));
    }
  }
  return s;
}

namespace {

// Appends the Schreier letters met while tracing w from `start`; returns the
// end coset.
std::size_t trace(const CosetTable& t, const SchreierGenerators& s, const Word& w, std::size_t start,
                  std::vector<int>& out) {
  const std::size_t k = t.generator_count();
  std::size_t c = start;
  for (int x : w) {
    if (x > 0) {
      auto id = s.edge[c * k + static_cast<std::size_t>(x) - 1];
      if (id >= 0) out.push_back(id + 1);
      c = t.image(c, x);
    } else {
      std::size_t d = t.image(c, x);
      auto id = s.edge[d * k + static_cast<std::size_t>(-x) - 1];
      if (id >= 0) out.push_back(-(id + 1));
      c = d;
    }
  }
  return c;
}

}  // namespace

Word rewrite(const CosetTable& t, const SchreierGenerators& s, const Word& w, std::size_t start) {
  std::vector<int> out;
  if (trace(t, s, w, start, out) != start) throw std::invalid_argument("rewrite: word does not lie in the subgroup");
  return free_reduce(Word(std::move(out)));
}

Presentation reidemeister_schreier(const CosetTable& t, RsStats* stats) {
  auto s = schreier_generators(t);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.generator_count(); ++i) names.push_back("s" + std::to_string(i + 1));
  Presentation p(std::move(names), {});
  std::size_t raw = 0;
  for (std::size_t c = 0; c < t.index(); ++c) {
    for (const auto& r : t.presentation().relators()) {
      std::vector<int> out;
      trace(t, s, r, c, out);
      ++raw;
      p.add_relator(Word(std::move(out)));
    }
  }
  if (stats) stats->raw_relators = raw;
  return p;
}

IntegerMatrix subgroup_relator_matrix(const CosetTable& t, const SchreierGenerators& s) {
  IntegerMatrix m(0, s.generator_count());
  std::vector<int> out;
  for (std::size_t c = 0; c < t.index(); ++c) {
    for (const auto& r : t.presentation().relators()) {
      out.clear();
      trace(t, s, r, c, out);
      std::vector<IntegerMatrix::Entry> e;
      e.reserve(out.size());
      for (int x : out) e.push_back({static_cast<std::uint32_t>((x < 0 ? -x : x) - 1), mpz_class(x < 0 ? -1 : 1)});
      m.append_row(std::move(e));
    }
  }
  return m;
}

AbelianInvariants subgroup_abelian_invariants(const CosetTable& t, const SnfOptions& options) {
  return cokernel_invariants(subgroup_relator_matrix(t, schreier_generators(t)), options);
}

}  // namespace coxcensus
