#include "coxcensus/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace coxcensus {

namespace {

unsigned primitive_root(unsigned q) {
  for (unsigned g = 2; g < q; ++g) {
    unsigned x = 1, k = 0;
    do {
      x = x * g % q;
      ++k;
    } while (x != 1);
    if (k == q - 1) return g;
  }
  return 1;
}

unsigned inverse_mod(unsigned a, unsigned q) {
  for (unsigned x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  throw std::invalid_argument("inverse_mod: not invertible");
}

// z -> z+1, z -> k z, z -> -1/z on {0..q-1, inf=q}.
PermGroup projective_group(unsigned q, unsigned k) {
  const unsigned inf = q;
  std::vector<std::uint32_t> t(q + 1), s(q + 1), w(q + 1);
  for (unsigned z = 0; z < q; ++z) {
    t[z] = (z + 1) % q;
    s[z] = z * k % q;
    w[z] = z == 0 ? inf : (q - inverse_mod(z, q)) % q;
  }
  t[inf] = inf;
  s[inf] = inf;
  w[inf] = 0;
  return PermGroup(q + 1, {Permutation(t), Permutation(s), Permutation(w)});
}

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Permutation cycle(std::size_t degree, std::vector<std::uint32_t> pts) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation(std::move(img));
}

PermGroup build(const std::string& name) {
  if (name == "Z2") return PermGroup(2, {cycle(2, {0, 1})});
  if (name == "A4") return PermGroup(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  if (name == "S4") return PermGroup(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
  if (name == "A5") return PermGroup(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1, 2})});
  if (name == "S5") return PermGroup(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1})});
  if (name == "D6") return PermGroup(6, {cycle(6, {0, 1, 2, 3, 4, 5}), cycle(6, {1, 5}) * cycle(6, {2, 4})});
  if (name == "PSL(2,7)") return projective_special_linear(7);
  if (name == "PSL(2,11)") return projective_special_linear(11);
  if (name == "PGL(2,11)") return projective_general_linear(11);
  if (name == "PSL(2,19)") return projective_special_linear(19);
  auto x = name.rfind("xZ2");
  if (x != std::string::npos && x + 3 == name.size())
    return direct_product(build(name.substr(0, x)), build("Z2"));
  throw std::invalid_argument("unknown target group '" + name + "'");
}

}  // namespace

PermGroup projective_special_linear(unsigned q) {
  if (!is_prime(q) || q < 3) throw std::invalid_argument("projective_special_linear: q must be an odd prime");
  unsigned g = primitive_root(q);
  return projective_group(q, g * g % q);
}

PermGroup projective_general_linear(unsigned q) {
  if (!is_prime(q) || q < 3) throw std::invalid_argument("projective_general_linear: q must be an odd prime");
  return projective_group(q, primitive_root(q));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(direct_sum(g, Permutation(b.degree())));
  for (const auto& g : b.generators()) gens.push_back(direct_sum(Permutation(a.degree()), g));
  return PermGroup(a.degree() + b.degree(), std::move(gens));
}

std::vector<std::string> catalog_names() {
  return {"A4",       "S4",          "A5",        "S5",        "D6",           "Z2",        "A4xZ2",    "S4xZ2",
          "A5xZ2",    "S5xZ2",       "PSL(2,7)",  "PSL(2,7)xZ2", "PSL(2,11)", "PGL(2,11)", "PGL(2,11)xZ2",
          "PSL(2,19)"};
}

std::string canonical_group_name(std::string_view name) {
  std::string s;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name.compare(i, 2, "\xC3\x97") == 0) {
      s += 'x';
      ++i;
    } else if (name[i] != ' ') {
      s += name[i];
    }
  }
  return s;
}

bool in_catalog(std::string_view name) {
  auto c = canonical_group_name(name);
  for (const auto& n : catalog_names())
    if (n == c) return true;
  return false;
}

PermGroup catalog_group(std::string_view name) {
  auto c = canonical_group_name(name);
  if (!in_catalog(c)) throw std::invalid_argument("unknown target group '" + std::string(name) + "'");
  return build(c);
}

std::shared_ptr<const FiniteGroup> catalog_finite_group(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const FiniteGroup>> cache;
  auto c = canonical_group_name(name);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(c);
    if (it != cache.end()) return it->second;
  }
  auto g = std::make_shared<const FiniteGroup>(catalog_group(c), c);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(c, g).first->second;
}

}  // namespace coxcensus
