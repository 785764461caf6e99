#include "coxcensus/fingerprint.hpp"

#include <algorithm>
#include <mutex>

#include "coxcensus/catalog.hpp"

namespace coxcensus {

std::vector<std::size_t> subgroup_closure(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<char> in(g.size(), 0);
  std::vector<std::size_t> elems{0};
  in[0] = 1;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (std::size_t s : gens) {
      std::size_t y = g.multiply(elems[k], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

namespace {

std::vector<std::size_t> derived_subgroup(const FiniteGroup& g) {
  const auto& gens = g.generator_indices();
  std::vector<std::size_t> dgens;
  for (std::size_t a : gens)
    for (std::size_t b : gens) {
      std::size_t c = g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
      if (c != 0) dgens.push_back(c);
    }
  for (;;) {
    auto d = subgroup_closure(g, dgens);
    std::vector<char> in(g.size(), 0);
    for (auto x : d) in[x] = 1;
    bool grew = false;
    for (std::size_t i = 0; i < dgens.size() && !grew; ++i)
      for (std::size_t s : gens) {
        std::size_t y = g.multiply(g.multiply(g.inverse(s), dgens[i]), s);
        if (!in[y]) {
          dgens.push_back(y);
          grew = true;
          break;
        }
      }
    if (!grew) return d;
  }
}

unsigned long ilog(std::uint64_t n, std::uint64_t p) {
  unsigned long k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint fp;
  fp.order = g.size();
  for (std::size_t i = 0; i < g.size(); ++i) ++fp.element_order_counts[g.element_order(i)];

  const auto& gens = g.generator_indices();
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool central = true;
    for (std::size_t s : gens)
      if (g.multiply(i, s) != g.multiply(s, i)) {
        central = false;
        break;
      }
    if (central) ++fp.center_order;
  }

  auto d = derived_subgroup(g);
  fp.derived_order = d.size();
  std::vector<char> in_d(g.size(), 0);
  for (auto x : d) in_d[x] = 1;

  // Orders in G/G' determine the abelian quotient: for each prime p the
  // number of elements killed by p^j is p^(sum_i min(j, e_i)).
  std::map<std::uint64_t, std::uint64_t> coset_orders;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::uint64_t k = 1;
    std::size_t p = i;
    while (!in_d[p]) {
      p = g.multiply(p, i);
      ++k;
    }
    ++coset_orders[k];
  }
  std::uint64_t a_order = g.size() / d.size();
  std::vector<mpz_class> factors;
  std::uint64_t rest = a_order;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    std::vector<unsigned long> L{0};
    for (std::uint64_t pj = p;; pj *= p) {
      std::uint64_t cnt = 0;
      for (auto [o, c] : coset_orders)
        if (pj % o == 0) cnt += c;
      L.push_back(ilog(cnt / d.size(), p));
      if (L.back() == L[L.size() - 2]) break;
    }
    // c[j] = #{i : e_i >= j}
    std::vector<unsigned long> c(L.size(), 0);
    for (std::size_t j = 1; j < L.size(); ++j) c[j] = L[j] - L[j - 1];
    mpz_class pj = 1;
    for (std::size_t j = 1; j + 1 < c.size() + 1; ++j) {
      pj *= static_cast<unsigned long>(p);
      unsigned long next = j + 1 < c.size() ? c[j + 1] : 0;
      for (unsigned long t = 0; t < c[j] - next; ++t) factors.push_back(pj);
    }
  }
  fp.abelianization = AbelianInvariants::from_diagonal(0, factors);
  return fp;
}

std::string GroupFingerprint::to_string() const {
  std::string s = "order " + std::to_string(order) + ", abelianization " + abelianization.to_string() + ", center " +
                  std::to_string(center_order) + ", derived " + std::to_string(derived_order) + ", element orders {";
  bool first = true;
  for (auto [o, c] : element_order_counts) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(o) + ":" + std::to_string(c);
  }
  return s + "}";
}

std::vector<std::string> consistent_catalog_groups(const GroupFingerprint& fp) {
  static std::mutex mu;
  static std::map<std::string, GroupFingerprint> known;
  std::vector<std::string> out;
  for (const auto& name : catalog_names()) {
    auto g = catalog_finite_group(name);
    if (g->size() != fp.order) continue;
    GroupFingerprint f;
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = known.find(name);
      if (it != known.end()) f = it->second;
    }
    if (f.order == 0) {
      f = fingerprint(*g);
      std::lock_guard<std::mutex> lock(mu);
      known[name] = f;
    }
    if (f == fp) out.push_back(name);
  }
  return out;
}

}  // namespace coxcensus
