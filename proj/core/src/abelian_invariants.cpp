#include "coxcensus/abelian_invariants.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "coxcensus/errors.hpp"

namespace coxcensus {

namespace {

std::vector<mpz_class> to_chain(std::vector<mpz_class> d) {
  for (auto& x : d) x = abs(x);
  d.erase(std::remove_if(d.begin(), d.end(), [](const mpz_class& x) { return x <= 1; }), d.end());
  std::sort(d.begin(), d.end());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      mpz_class g = gcd(d[i], d[j]);
      mpz_class l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  }
  d.erase(std::remove_if(d.begin(), d.end(), [](const mpz_class& x) { return x <= 1; }), d.end());
  return d;
}

// Splits n into prime powers. Trial division handles everything that shows
// up in practice; a leftover cofactor is kept whole.
void prime_power_split(mpz_class n, std::vector<mpz_class>& out) {
  for (unsigned long p = 2; p < 1'000'000 && n > 1; ++p) {
    if (mpz_class(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    mpz_class q = 1;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      q *= p;
      n /= p;
    }
    out.push_back(q);
  }
  if (n > 1) out.push_back(n);
}

}  // namespace

AbelianInvariants AbelianInvariants::from_diagonal(std::size_t free_rank, std::vector<mpz_class> diagonal) {
  AbelianInvariants a;
  a.rank = free_rank;
  std::vector<mpz_class> nz;
  for (auto& x : diagonal) {
    if (x == 0)
      ++a.rank;
    else
      nz.push_back(abs(x));
  }
  a.torsion = to_chain(std::move(nz));
  return a;
}

mpz_class AbelianInvariants::torsion_order() const {
  mpz_class t = 1;
  for (const auto& x : torsion) t *= x;
  return t;
}

std::vector<mpz_class> AbelianInvariants::primary_factors() const {
  std::vector<mpz_class> out;
  for (const auto& t : torsion) prime_power_split(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string AbelianInvariants::to_string() const {
  std::vector<std::string> parts;
  if (rank == 1)
    parts.push_back("Z");
  else if (rank > 1)
    parts.push_back("Z^" + std::to_string(rank));
  auto pf = primary_factors();
  for (std::size_t i = 0; i < pf.size();) {
    std::size_t j = i;
    while (j < pf.size() && pf[j] == pf[i]) ++j;
    std::string s = "Z" + pf[i].get_str();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    parts.push_back(s);
    i = j;
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

AbelianInvariants AbelianInvariants::parse(std::string_view text) {
  std::string s;
  // Normalise the unicode multiplication sign and drop whitespace.
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 2, "\xC3\x97") == 0) {
      s += 'x';
      ++i;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
    }
  }
  if (s == "0" || s == "1" || s == "trivial") return {};
  AbelianInvariants a;
  std::vector<mpz_class> cyc;
  std::size_t pos = 0;
  auto fail = [&](const std::string& m) -> void { throw ParseError(1, pos + 1, m + " in '" + std::string(text) + "'"); };
  auto number = [&]() {
    std::string d;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) d += s[pos++];
    return d;
  };
  while (pos < s.size()) {
    if (s[pos] != 'Z') fail("expected 'Z'");
    ++pos;
    std::string mod = number();
    std::size_t mult = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      std::string e = number();
      if (e.empty()) fail("expected a multiplicity");
      mult = std::stoul(e);
    }
    if (mod.empty()) {
      a.rank += mult;
    } else {
      mpz_class m(mod);
      if (m < 2) fail("cyclic factor order must be at least 2");
      for (std::size_t k = 0; k < mult; ++k) cyc.push_back(m);
    }
    if (pos < s.size()) {
      if (s[pos] != 'x') fail("expected 'x'");
      ++pos;
      if (pos == s.size()) fail("dangling 'x'");
    }
  }
  a.torsion = to_chain(std::move(cyc));
  return a;
}

bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
  return a.rank == b.rank && a.torsion == b.torsion;
}

std::strong_ordering operator<=>(const AbelianInvariants& a, const AbelianInvariants& b) {
  if (a.rank != b.rank) return a.rank <=> b.rank;
  if (a.torsion.size() != b.torsion.size()) return a.torsion.size() <=> b.torsion.size();
  for (std::size_t i = 0; i < a.torsion.size(); ++i) {
    int c = cmp(a.torsion[i], b.torsion[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace coxcensus
