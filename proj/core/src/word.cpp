#include "coxcensus/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxcensus {

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int x : letters_)
    if (x == 0) throw std::invalid_argument("word letter 0 is not a generator");
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
  return r;
}

Word Word::power(long k) const {
  if (k < 0) return inverse().power(-k);
  Word r;
  r.letters_.reserve(letters_.size() * static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) r.letters_.insert(r.letters_.end(), letters_.begin(), letters_.end());
  return r;
}

int Word::max_generator() const noexcept {
  int m = 0;
  for (int x : letters_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word free_reduce(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word(std::move(out));
}

Word cyclic_reduce(const Word& w) {
  Word reduced = free_reduce(w);
  const auto& l = reduced.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i] == -l[j - 1]) {
    ++i;
    --j;
  }
  return Word(std::vector<int>(l.begin() + static_cast<long>(i), l.begin() + static_cast<long>(j)));
}

namespace {

// Booth-style least rotation would do; relators are short so the quadratic
// scan is fine and easier to trust.
std::vector<int> least_rotation(const std::vector<int>& v) {
  std::vector<int> best = v;
  std::vector<int> cur(v.size());
  for (std::size_t s = 1; s < v.size(); ++s) {
    for (std::size_t i = 0; i < v.size(); ++i) cur[i] = v[(s + i) % v.size()];
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

Word canonical_cyclic_form(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  auto a = least_rotation(c.letters());
  auto b = least_rotation(c.inverse().letters());
  return Word(std::min(a, b));
}

std::pair<Word, long> proper_power_root(const Word& w) {
  const auto& l = w.letters();
  const std::size_t n = l.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = l[i] == l[i - p];
    if (periodic) return {Word(std::vector<int>(l.begin(), l.begin() + static_cast<long>(p))), static_cast<long>(n / p)};
  }
  return {w, n == 0 ? 0 : 1};
}

std::vector<long> exponent_sums(const Word& w, std::size_t generator_count) {
  std::vector<long> s(generator_count, 0);
  for (int x : w) {
    std::size_t g = static_cast<std::size_t>(x < 0 ? -x : x);
    if (g > generator_count) throw std::out_of_range("exponent_sums: generator index out of range");
    s[g - 1] += x < 0 ? -1 : 1;
  }
  return s;
}

Word substitute(const Word& w, std::span<const Word> images) {
  std::vector<int> out;
  for (int x : w) {
    std::size_t g = static_cast<std::size_t>(x < 0 ? -x : x);
    if (g > images.size()) throw std::out_of_range("substitute: generator index out of range");
    const auto& img = images[g - 1].letters();
    if (x > 0)
      out.insert(out.end(), img.begin(), img.end());
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(-*it);
  }
  return Word(std::move(out));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : w) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace coxcensus
