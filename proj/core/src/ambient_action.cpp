#include "coxcensus/ambient_action.hpp"

#include <random>
#include <stdexcept>

#include "coxcensus/catalog.hpp"

namespace coxcensus {

AmbientAction::AmbientAction(const FamilyLattice& lattice, FamilyKind kind, const Epimorphism& hom)
    : lattice_(&lattice), kind_(kind) {
  const CosetTable& t = lattice.table(kind);
  const SchreierGenerators& s = lattice.schreier(kind);
  const FiniteGroup& G = *hom.target;
  if (hom.source->generator_count() != s.generator_count())
    throw std::invalid_argument("AmbientAction: homomorphism is not defined on the subgroup presentation");
  std::vector<std::size_t> img;
  for (const auto& p : hom.images) {
    auto i = G.index_of(p);
    if (!i) throw std::invalid_argument("AmbientAction: image outside the target group");
    img.push_back(*i);
  }
  const std::size_t order = G.size(), index = t.index(), k = t.generator_count();
  degree_ = order * index;
  std::vector<std::vector<std::uint32_t>> images(k, std::vector<std::uint32_t>(degree_));
  for (std::size_t i = 0; i < index; ++i)
    for (std::size_t x = 0; x < k; ++x) {
      std::size_t j = t.image(i, static_cast<int>(x + 1));
      auto id = s.edge[i * k + x];
      for (std::size_t g = 0; g < order; ++g) {
        std::size_t h = id < 0 ? g : G.multiply(g, img[static_cast<std::size_t>(id)]);
        images[x][i * order + g] = static_cast<std::uint32_t>(j * order + h);
      }
    }
  for (auto& im : images) {
    gens_.emplace_back(std::move(im));
    inv_.push_back(gens_.back().inverse());
  }

  // chi on K: tree words have a definite character; each non-tree edge
  // contributes a Schreier generator of K.
  std::vector<int> chi(degree_, -1);
  std::vector<std::size_t> queue{0};
  chi[0] = 0;
  unsigned span = 1;  // mask over the 8 values; 0 is always present
  auto add = [&](unsigned v) {
    unsigned next = span;
    for (unsigned u = 0; u < 8; ++u)
      if (span >> u & 1) next |= 1u << (u ^ v);
    span = next;
  };
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t p = queue[q];
    for (std::size_t x = 0; x < k; ++x) {
      std::size_t r = gens_[x][p];
      unsigned v = static_cast<unsigned>(chi[p]) ^ lattice.generator_character(x);
      if (chi[r] < 0) {
        chi[r] = static_cast<int>(v);
        queue.push_back(r);
      } else if (static_cast<unsigned>(chi[r]) != v) {
        add(v ^ static_cast<unsigned>(chi[r]));
      }
    }
  }
  if (queue.size() != degree_) throw std::logic_error("AmbientAction: action is not transitive");
  kernel_chi_ = span;
}

std::size_t AmbientAction::apply(std::size_t point, const Word& w) const {
  for (int x : w) point = apply(point, x);
  return point;
}

Permutation AmbientAction::evaluate(const Word& w) const {
  std::vector<std::uint32_t> im(degree_);
  for (std::size_t p = 0; p < degree_; ++p) im[p] = static_cast<std::uint32_t>(apply(p, w));
  return Permutation(std::move(im));
}

bool AmbientAction::kernel_in(FamilyKind y) const {
  unsigned allowed = FamilyLattice::subgroup_bits(y);
  for (unsigned v = 0; v < 8; ++v)
    if ((kernel_chi_ >> v & 1) && (v & ~allowed)) return false;
  return true;
}

CosetTable AmbientAction::coset_table(TreeOrder order) const {
  const std::size_t k = gens_.size();
  std::vector<std::int32_t> action(degree_ * 2 * k);
  for (std::size_t p = 0; p < degree_; ++p)
    for (std::size_t x = 0; x < k; ++x) {
      action[p * 2 * k + 2 * x] = static_cast<std::int32_t>(gens_[x][p]);
      action[p * 2 * k + 2 * x + 1] = static_cast<std::int32_t>(inv_[x][p]);
    }
  standardize_action(action, k);
  return CosetTable(lattice_->ambient(), "kernel of a quotient of " + kind_name(kind_), {}, degree_, std::move(action),
                    order);
}

bool same_stabilizer(const AmbientAction& a, std::size_t p, const AmbientAction& b, std::size_t q) {
  if (a.degree() != b.degree() || &a.lattice() != &b.lattice()) {
    if (a.degree() != b.degree()) return false;
    if (a.lattice().ambient()->generator_count() != b.lattice().ambient()->generator_count()) return false;
  }
  const std::size_t k = a.lattice().ambient()->generator_count();
  std::vector<std::size_t> map(a.degree(), SIZE_MAX);
  std::vector<std::size_t> queue{p};
  map[p] = q;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::size_t x = queue[i];
    for (std::size_t g = 0; g < k; ++g) {
      std::size_t xa = a.generator(g)[x];
      std::size_t xb = b.generator(g)[map[x]];
      if (map[xa] == SIZE_MAX) {
        map[xa] = xb;
        queue.push_back(xa);
      } else if (map[xa] != xb) {
        return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<Permutation> subgroup_generator_perms(const AmbientAction& a, FamilyKind y) {
  std::vector<Permutation> out;
  for (const auto& w : a.lattice().generators(y)) out.push_back(a.evaluate(w));
  return out;
}

std::vector<std::size_t> orbit_of(const std::vector<Permutation>& gens, std::size_t degree, std::size_t point) {
  std::vector<char> seen(degree, 0);
  std::vector<std::size_t> orbit{point};
  seen[point] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : gens) {
      std::size_t r = g[orbit[i]];
      if (!seen[r]) {
        seen[r] = 1;
        orbit.push_back(r);
      }
    }
  return orbit;
}

}  // namespace

std::vector<std::size_t> subgroup_orbit(const AmbientAction& a, FamilyKind y, std::size_t point) {
  return orbit_of(subgroup_generator_perms(a, y), a.degree(), point);
}

bool kernel_normal_in(const AmbientAction& a, FamilyKind y) {
  if (!a.kernel_in(y)) return false;
  for (const auto& w : a.lattice().generators(y)) {
    std::size_t q = a.apply(0, w);
    if (q != 0 && !same_stabilizer(a, 0, a, q)) return false;
  }
  return true;
}

bool kernels_equal(const AmbientAction& a, const AmbientAction& b) { return same_stabilizer(a, 0, b, 0); }

bool kernels_conjugate_in(const AmbientAction& a, const AmbientAction& b, FamilyKind y) {
  if (a.degree() != b.degree()) return false;
  // Conjugates of Stab_b(0) by Y are the stabilisers of the points of 0 * Y.
  auto orbit = subgroup_orbit(b, y);
  // Prefilter by which of a few random words fix the point.
  std::mt19937_64 rng(0x6b65726e656cull);
  const int k = static_cast<int>(a.lattice().ambient()->generator_count());
  std::vector<Permutation> pa, pb;
  for (int i = 0; i < 32; ++i) {
    std::vector<int> l;
    for (int j = 0; j < 10; ++j) l.push_back(static_cast<int>(rng() % static_cast<unsigned>(k)) + 1);
    Word w(std::move(l));
    pa.push_back(a.evaluate(w));
    pb.push_back(b.evaluate(w));
  }
  auto pattern = [](const std::vector<Permutation>& ps, std::size_t p) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (ps[i][p] == p) m |= 1ull << i;
    return m;
  };
  const std::uint64_t want = pattern(pa, 0);
  for (std::size_t q : orbit) {
    if (pattern(pb, q) != want) continue;
    if (same_stabilizer(a, 0, b, q)) return true;
  }
  return false;
}

bool acts_freely(const AmbientAction& a, const LocalGroup& g) {
  std::vector<Permutation> gens;
  for (const auto& w : g.generators) gens.push_back(a.evaluate(w));
  std::vector<char> done(a.degree(), 0);
  for (std::size_t p = 0; p < a.degree(); ++p) {
    if (done[p]) continue;
    auto orbit = orbit_of(gens, a.degree(), p);
    if (orbit.size() != g.order) return false;
    for (auto x : orbit) done[x] = 1;
  }
  return true;
}

ExtensionQuotient extension_quotient(const AmbientAction& a, FamilyKind y, std::uint64_t fingerprint_limit) {
  if (!kernel_normal_in(a, y))
    throw std::invalid_argument("extension_quotient: kernel is not normal in " + kind_name(y));
  auto all = subgroup_generator_perms(a, y);
  auto orbit = orbit_of(all, a.degree(), 0);
  std::vector<std::int64_t> pos(a.degree(), -1);
  for (std::size_t i = 0; i < orbit.size(); ++i) pos[orbit[i]] = static_cast<std::int64_t>(i);
  // The action on the orbit is regular, so a generator is redundant exactly
  // when it does not enlarge the orbit of 0.
  std::vector<Permutation> chosen;
  std::size_t reached = 1;
  for (const auto& g : all) {
    if (reached == orbit.size()) break;
    chosen.push_back(g);
    auto o = orbit_of(chosen, a.degree(), 0);
    if (o.size() == reached)
      chosen.pop_back();
    else
      reached = o.size();
  }
  std::vector<Permutation> restricted;
  for (const auto& g : chosen) {
    std::vector<std::uint32_t> im(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) im[i] = static_cast<std::uint32_t>(pos[g[orbit[i]]]);
    restricted.emplace_back(std::move(im));
  }
  ExtensionQuotient q;
  q.kind = y;
  q.order = orbit.size();
  q.group = PermGroup(orbit.size(), restricted);
  if (q.group.order() != q.order) throw std::logic_error("extension_quotient: action on the orbit is not regular");
  if (q.order <= fingerprint_limit) {
    FiniteGroup fg(q.group);
    q.fingerprint = fingerprint(fg);
    q.consistent_with = consistent_catalog_groups(*q.fingerprint);
  }
  return q;
}

}  // namespace coxcensus
