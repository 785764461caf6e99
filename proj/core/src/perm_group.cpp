#include "coxcensus/perm_group.hpp"

#include <stdexcept>

namespace coxcensus {

namespace {

struct Sifted {
  Permutation residue;
  std::size_t level;
};

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
}

const PermGroup::Chain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] { build(lazy_->chain, degree_, generators_); });
  return lazy_->chain;
}

namespace {

// Orbit of the level's base point with a Schreier vector.
template <class Level>
void compute_orbit(Level& L, std::size_t degree) {
  L.gen_invs.clear();
  for (const auto& g : L.gens) L.gen_invs.push_back(g.inverse());
  L.via.assign(degree, -2);
  L.orbit.clear();
  L.via[L.point] = -1;
  L.orbit.push_back(L.point);
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    std::uint32_t x = L.orbit[k];
    for (std::size_t s = 0; s < L.gens.size(); ++s) {
      std::uint32_t y = L.gens[s][x];
      if (L.via[y] == -2) {
        L.via[y] = static_cast<std::int32_t>(s);
        L.orbit.push_back(y);
      }
    }
  }
}

// g * u_beta^{-1} where beta = g(point): walks the Schreier vector back to
// the base point.
template <class Level>
Permutation strip_level(const Level& L, Permutation g) {
  std::uint32_t x = g[L.point];
  while (L.via[x] >= 0) {
    const auto& inv = L.gen_invs[static_cast<std::size_t>(L.via[x])];
    g = g * inv;
    x = inv[x];
  }
  return g;
}

template <class Level>
Permutation transversal(const Level& L, std::uint32_t beta, std::size_t degree) {
  Permutation u_inv(degree);
  std::uint32_t x = beta;
  while (L.via[x] >= 0) {
    const auto& inv = L.gen_invs[static_cast<std::size_t>(L.via[x])];
    u_inv = u_inv * inv;
    x = inv[x];
  }
  return u_inv.inverse();
}

}  // namespace

void PermGroup::build(Chain& c, std::size_t degree, const std::vector<Permutation>& gens) {
  auto& levels = c.levels;
  auto fixes_prefix = [&](const Permutation& g, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l)
      if (g[levels[l].point] != levels[l].point) return false;
    return true;
  };
  auto new_level = [&](std::uint32_t point) {
    Level L;
    L.point = point;
    levels.push_back(std::move(L));
  };

  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    if (fixes_prefix(g, levels.size())) new_level(static_cast<std::uint32_t>(g.first_moved_point()));
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (const auto& g : gens)
      if (!g.is_identity() && fixes_prefix(g, l)) levels[l].gens.push_back(g);
    compute_orbit(levels[l], degree);
  }

  auto sift = [&](Permutation h, std::size_t from) -> Sifted {
    for (std::size_t l = from; l < levels.size(); ++l) {
      if (levels[l].via[h[levels[l].point]] == -2) return {std::move(h), l};
      h = strip_level(levels[l], std::move(h));
    }
    return {std::move(h), levels.size()};
  };

  std::size_t i = levels.size();
  while (i > 0) {
    std::size_t li = i - 1;
    bool restarted = false;
    for (std::size_t k = 0; k < levels[li].orbit.size() && !restarted; ++k) {
      std::uint32_t beta = levels[li].orbit[k];
      Permutation u = transversal(levels[li], beta, degree);
      for (std::size_t s = 0; s < levels[li].gens.size(); ++s) {
        Permutation h = strip_level(levels[li], u * levels[li].gens[s]);
        auto [res, j] = sift(std::move(h), li + 1);
        if (j == levels.size() && res.is_identity()) continue;
        if (j == levels.size()) new_level(static_cast<std::uint32_t>(res.first_moved_point()));
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels[l].gens.push_back(res);
          compute_orbit(levels[l], degree);
        }
        i = j + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::uint64_t PermGroup::order() const {
  std::uint64_t o = 1;
  for (const auto& L : chain().levels) o *= L.orbit.size();
  return o;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Permutation h = p;
  for (const auto& L : chain().levels) {
    if (L.via[h[L.point]] == -2) return false;
    h = strip_level(L, std::move(h));
  }
  return h.is_identity();
}

std::vector<std::uint32_t> PermGroup::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& L : chain().levels) b.push_back(L.point);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> v;
  for (const auto& L : chain().levels) v.push_back(L.orbit.size());
  return v;
}

std::uint64_t group_order(std::span<const Permutation> gens) {
  if (gens.empty()) return 1;
  return PermGroup(gens[0].degree(), std::vector<Permutation>(gens.begin(), gens.end())).order();
}

}  // namespace coxcensus
