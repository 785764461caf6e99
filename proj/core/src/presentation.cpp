#include "coxcensus/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace coxcensus {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw std::invalid_argument("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
  }
  for (const auto& r : relators) add_relator(r);
}

void Presentation::add_relator(const Word& w) {
  if (w.max_generator() > static_cast<int>(names_.size()))
    throw std::invalid_argument("relator uses an undeclared generator");
  Word r = cyclic_reduce(w);
  if (!r.empty()) relators_.push_back(std::move(r));
}

std::optional<int> Presentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i + 1);
  return std::nullopt;
}

std::size_t Presentation::total_relator_length() const noexcept {
  std::size_t t = 0;
  for (const auto& r : relators_) t += r.size();
  return t;
}

namespace {

// Runs of a repeated letter collapse to x^k, or (x^-1)^k for inverse runs.
std::string format_plain(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    std::size_t run = j - i;
    const std::string& nm = names.at(static_cast<std::size_t>(std::abs(l[i]) - 1));
    if (!out.empty()) out += ' ';
    if (l[i] > 0)
      out += run == 1 ? nm : nm + "^" + std::to_string(run);
    else
      out += run == 1 ? nm + "^-1" : "(" + nm + "^-1)^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  auto [root, k] = proper_power_root(w);
  if (k <= 1) return format_plain(w, names);
  if (root.size() == 1)
    return root[0] > 0 ? format_plain(root, names) + "^" + std::to_string(k)
                       : "(" + format_plain(root, names) + ")^" + std::to_string(k);
  return "(" + format_plain(root, names) + ")^" + std::to_string(k);
}

std::string format_word(const Word& w, const Presentation& p) { return format_word(w, p.generator_names()); }

std::string serialize(const Presentation& p) {
  std::string out = "gens ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i) out += ", ";
    out += p.generator_names()[i];
  }
  out += ";\nrels ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) out += ", ";
    out += format_word(p.relators()[i], p);
  }
  out += ";\n";
  return out;
}

ShortRelatorReduction eliminate_short_relators(const Presentation& p) {
  const int n = static_cast<int>(p.generator_count());
  // expr[g] is the current value of generator g as a word in the original
  // generators that are still alive.
  std::vector<Word> expr(static_cast<std::size_t>(n));
  for (int g = 1; g <= n; ++g) expr[static_cast<std::size_t>(g - 1)] = Word{g};
  std::vector<bool> alive(static_cast<std::size_t>(n), true);

  auto normalize = [](std::vector<Word> rels) {
    std::set<Word> seen;
    std::vector<Word> out;
    for (auto& r : rels) {
      Word c = cyclic_reduce(r);
      if (c.empty()) continue;
      if (seen.insert(canonical_cyclic_form(c)).second) out.push_back(std::move(c));
    }
    return out;
  };
  std::vector<Word> rels = normalize(p.relators());

  for (;;) {
    // Shortest relator first; among length-two relators drop the larger index.
    int victim = 0;
    Word value;
    for (const auto& r : rels) {
      if (r.size() == 1) {
        victim = std::abs(r[0]);
        value = Word{};
        break;
      }
    }
    if (victim == 0) {
      for (const auto& r : rels) {
        if (r.size() != 2 || std::abs(r[0]) == std::abs(r[1])) continue;
        int x = r[0], y = r[1];
        if (std::abs(x) < std::abs(y)) std::swap(x, y);
        // x y = 1 (up to rotation) so x = y^-1.
        value = x > 0 ? Word{-y} : Word{y};
        victim = std::abs(x);
        break;
      }
    }
    if (victim == 0) break;
    std::vector<Word> images(static_cast<std::size_t>(n));
    for (int g = 1; g <= n; ++g) images[static_cast<std::size_t>(g - 1)] = g == victim ? value : Word{g};
    for (auto& r : rels) r = substitute(r, images);
    rels = normalize(std::move(rels));
    for (auto& e : expr) e = free_reduce(substitute(e, images));
    alive[static_cast<std::size_t>(victim - 1)] = false;
  }

  std::vector<int> renumber(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::string> names;
  for (int g = 1; g <= n; ++g) {
    if (!alive[static_cast<std::size_t>(g - 1)]) continue;
    names.push_back(p.generator_name(g));
    renumber[static_cast<std::size_t>(g)] = static_cast<int>(names.size());
  }
  auto relabel = [&](const Word& w) {
    std::vector<int> l;
    l.reserve(w.size());
    for (int x : w) l.push_back(x > 0 ? renumber[static_cast<std::size_t>(x)] : -renumber[static_cast<std::size_t>(-x)]);
    return Word(std::move(l));
  };
  ShortRelatorReduction out;
  std::vector<Word> new_rels;
  for (const auto& r : rels) new_rels.push_back(relabel(r));
  out.reduced = Presentation(std::move(names), std::move(new_rels));
  for (const auto& e : expr) out.generator_images.push_back(relabel(e));
  return out;
}

}  // namespace coxcensus
