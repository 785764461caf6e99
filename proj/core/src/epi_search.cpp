#include "coxcensus/epimorphism.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "coxcensus/errors.hpp"
#include "coxcensus/perm_group.hpp"

namespace coxcensus {

Permutation Epimorphism::evaluate(const Word& w) const {
  Permutation r(target->degree());
  for (int x : w) {
    const auto& p = images.at(static_cast<std::size_t>(std::abs(x) - 1));
    r = x > 0 ? r * p : r * p.inverse();
  }
  return r;
}

bool Epimorphism::respects_relators() const {
  for (const auto& r : source->relators())
    if (!evaluate(r).is_identity()) return false;
  return true;
}

bool Epimorphism::surjective() const {
  return PermGroup(target->degree(), images).order() == target->size();
}

std::string EpiClass::fingerprint_hex() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : fingerprint) {
    h ^= x;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Constraint {
  std::vector<int> letters;  // signed, 1-based over reduced generators
  std::size_t value;         // element index
  std::vector<int> gens;     // distinct generators (0-based)
  int unassigned = 0;
};

class Search {
 public:
  Search(const Presentation& reduced, const FiniteGroup& g, std::vector<Constraint> cons, bool class_reps,
         std::uint64_t budget, std::size_t max_solutions)
      : g_(g), k_(reduced.generator_count()), cons_(std::move(cons)), budget_(budget), max_solutions_(max_solutions) {
    const std::size_t n = g_.size();
    for (std::size_t i = 0; i < n; ++i) inv_.push_back(g_.inverse(i));
    identity_ = Permutation(g_.degree());

    occurs_.assign(k_, {});
    std::vector<std::vector<char>> allowed(k_, std::vector<char>(n, 1));
    for (std::size_t c = 0; c < cons_.size(); ++c) {
      auto& C = cons_[c];
      std::vector<int> seen;
      for (int x : C.letters) {
        int gi = std::abs(x) - 1;
        if (std::find(seen.begin(), seen.end(), gi) == seen.end()) seen.push_back(gi);
      }
      C.gens = seen;
      C.unassigned = static_cast<int>(seen.size());
      for (int gi : seen) occurs_[static_cast<std::size_t>(gi)].push_back(c);
      // x^m = v restricts x to m-th roots of v.
      if (seen.size() == 1) {
        int gi = seen[0];
        for (std::size_t e = 0; e < n; ++e) {
          if (!allowed[static_cast<std::size_t>(gi)][e]) continue;
          if (evaluate_with(C.letters, gi, e) != C.value) allowed[static_cast<std::size_t>(gi)][e] = 0;
        }
      }
    }
    cand_.assign(k_, {});
    allowed_ = allowed;
    for (std::size_t gi = 0; gi < k_; ++gi)
      for (std::size_t e = 0; e < n; ++e)
        if (allowed[gi][e]) cand_[gi].push_back(e);

    order_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      if (cand_[a].size() != cand_[b].size()) return cand_[a].size() < cand_[b].size();
      return occurs_[a].size() > occurs_[b].size();
    });
    if (class_reps && k_ > 0) {
      std::size_t first = order_[0];
      std::vector<std::size_t> reps;
      for (std::size_t e : cand_[first])
        if (g_.class_representatives()[g_.class_of(e)] == e) reps.push_back(e);
      cand_[first] = reps;
    }
    value_.assign(k_, SIZE_MAX);
  }

  template <class F>
  void run(F&& on_leaf) {
    on_leaf_ = [&](const std::vector<std::size_t>& v) { return on_leaf(v); };
    for (std::size_t gi = 0; gi < k_; ++gi)
      if (cand_[gi].empty()) return;
    // Constraints without generators (e.g. a constant word) must already hold.
    for (const auto& C : cons_)
      if (C.gens.empty() && C.value != 0) return;
    dfs();
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  const FiniteGroup& g_;
  std::size_t k_;
  std::vector<Constraint> cons_;
  std::uint64_t budget_;
  std::size_t max_solutions_;
  std::size_t solutions_ = 0;
  bool stop_ = false;
  std::vector<std::size_t> inv_;
  Permutation identity_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<std::vector<std::size_t>> cand_;
  std::vector<std::vector<char>> allowed_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> value_;
  std::vector<std::size_t> trail_;
  std::uint64_t nodes_ = 0;
  std::function<bool(const std::vector<std::size_t>&)> on_leaf_;

  std::size_t evaluate_with(const std::vector<int>& letters, int gi, std::size_t e) const {
    Permutation r = identity_;
    for (int x : letters) {
      std::size_t idx = static_cast<std::size_t>(std::abs(x) - 1) == static_cast<std::size_t>(gi) ? e : SIZE_MAX;
      r = r * g_.element(x > 0 ? idx : inv_[idx]);
    }
    return *g_.index_of(r);
  }

  std::size_t elem(int x) const {
    std::size_t v = value_[static_cast<std::size_t>(std::abs(x) - 1)];
    return x > 0 ? v : inv_[v];
  }

  bool holds(const Constraint& C) const {
    Permutation r = identity_;
    for (int x : C.letters) r = r * g_.element(elem(x));
    return r == g_.element(C.value);
  }

  // The single unassigned generator occurs once in C: solve for it.
  bool deduce(const Constraint& C, int& gen, std::size_t& val) const {
    int free_gen = -1;
    for (int gi : C.gens)
      if (value_[static_cast<std::size_t>(gi)] == SIZE_MAX) free_gen = gi;
    std::size_t pos = SIZE_MAX;
    for (std::size_t i = 0; i < C.letters.size(); ++i) {
      if (std::abs(C.letters[i]) - 1 == free_gen) {
        if (pos != SIZE_MAX) return false;
        pos = i;
      }
    }
    Permutation u = identity_, v = identity_;
    for (std::size_t i = 0; i < pos; ++i) u = u * g_.element(elem(C.letters[i]));
    for (std::size_t i = pos + 1; i < C.letters.size(); ++i) v = v * g_.element(elem(C.letters[i]));
    // u y v = R  =>  y = u^-1 R v^-1
    Permutation y = u.inverse() * g_.element(C.value) * v.inverse();
    std::size_t yi = *g_.index_of(y);
    if (C.letters[pos] < 0) yi = inv_[yi];
    gen = free_gen;
    val = yi;
    return true;
  }

  bool assign(std::size_t gi, std::size_t v) {
    std::vector<std::pair<std::size_t, std::size_t>> pending{{gi, v}};
    while (!pending.empty()) {
      auto [x, val] = pending.back();
      pending.pop_back();
      if (value_[x] != SIZE_MAX) {
        if (value_[x] != val) return false;
        continue;
      }
      if (!allowed_[x][val]) return false;
      value_[x] = val;
      trail_.push_back(x);
      // Counters are updated for every constraint before any early exit so
      // that undo() restores them exactly.
      for (std::size_t c : occurs_[x]) --cons_[c].unassigned;
      for (std::size_t c : occurs_[x]) {
        auto& C = cons_[c];
        if (C.unassigned == 0) {
          if (!holds(C)) return false;
        } else if (C.unassigned == 1) {
          int dg;
          std::size_t dv;
          if (deduce(C, dg, dv)) pending.push_back({static_cast<std::size_t>(dg), dv});
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      std::size_t x = trail_.back();
      trail_.pop_back();
      for (std::size_t c : occurs_[x]) ++cons_[c].unassigned;
      value_[x] = SIZE_MAX;
    }
  }

  void dfs() {
    std::size_t next = SIZE_MAX;
    for (std::size_t i : order_)
      if (value_[i] == SIZE_MAX) {
        next = i;
        break;
      }
    if (next == SIZE_MAX) {
      if (on_leaf_(value_)) {
        if (++solutions_ >= max_solutions_) stop_ = true;
      }
      return;
    }
    for (std::size_t v : cand_[next]) {
      if (stop_) return;
      if (++nodes_ > budget_)
        throw BudgetExceeded("epi-search", "node budget of " + std::to_string(budget_) + " exhausted");
      std::size_t mark = trail_.size();
      if (assign(next, v)) dfs();
      undo(mark);
    }
  }
};

std::vector<int> to_letters(const Word& w) { return w.letters(); }

}  // namespace

std::vector<Epimorphism> find_homomorphisms(std::shared_ptr<const Presentation> source,
                                            std::shared_ptr<const FiniteGroup> target,
                                            std::span<const ImageConstraint> constraints,
                                            const EpiSearchOptions& options, std::uint64_t* nodes) {
  auto red = eliminate_short_relators(*source);
  std::vector<Constraint> cons;
  for (const auto& r : red.reduced.relators()) cons.push_back({to_letters(r), 0, {}, 0});
  for (const auto& c : constraints) {
    auto idx = target->index_of(c.value);
    if (!idx) throw std::invalid_argument("find_homomorphisms: constraint value outside the target");
    Word w = free_reduce(substitute(c.word, red.generator_images));
    cons.push_back({to_letters(w), *idx, {}, 0});
  }
  const std::size_t k = red.reduced.generator_count();
  Search s(red.reduced, *target, std::move(cons), options.class_representatives && constraints.empty(),
           options.node_budget, options.max_solutions);
  std::vector<Epimorphism> out;
  s.run([&](const std::vector<std::size_t>& v) {
    std::vector<Permutation> reduced_images;
    for (std::size_t i = 0; i < k; ++i) reduced_images.push_back(target->element(v[i]));
    if (options.require_surjective) {
      if (PermGroup(target->degree(), reduced_images).order() != target->size()) return false;
    }
    Epimorphism e{source, target, {}};
    Epimorphism r{std::make_shared<const Presentation>(red.reduced), target, reduced_images};
    for (const auto& img : red.generator_images) e.images.push_back(r.evaluate(img));
    out.push_back(std::move(e));
    return true;
  });
  if (nodes) *nodes = s.nodes();
  return out;
}

std::vector<std::uint32_t> kernel_fingerprint(const Epimorphism& e, const EpiSearchOptions& options) {
  std::mt19937_64 rng(options.fingerprint_seed);
  const auto k = static_cast<std::uint64_t>(e.source->generator_count());
  std::vector<std::uint32_t> fp;
  if (k == 0) return fp;
  for (std::size_t i = 0; i < options.fingerprint_words; ++i) {
    std::vector<int> l;
    for (std::size_t j = 0; j < options.fingerprint_word_length; ++j) {
      std::uint64_t r = rng();
      int g = static_cast<int>(r % k) + 1;
      l.push_back((r >> 32) & 1 ? -g : g);
    }
    fp.push_back(static_cast<std::uint32_t>(e.evaluate(Word(std::move(l))).order()));
  }
  return fp;
}

bool kernels_equal(const Epimorphism& a, const Epimorphism& b) {
  if (a.source->generator_count() != b.source->generator_count()) return false;
  if (a.images.size() != b.images.size()) return false;
  // BFS over the image of a; b must be a well-defined bijective function of it.
  const FiniteGroup& ga = *a.target;
  const FiniteGroup& gb = *b.target;
  const std::size_t k = a.images.size();
  std::vector<std::size_t> ia, ib;
  for (std::size_t i = 0; i < k; ++i) {
    auto x = ga.index_of(a.images[i]);
    auto y = gb.index_of(b.images[i]);
    if (!x || !y) return false;
    ia.push_back(*x);
    ia.push_back(ga.inverse(*x));
    ib.push_back(*y);
    ib.push_back(gb.inverse(*y));
  }
  std::vector<std::size_t> map(ga.size(), SIZE_MAX);
  std::vector<char> hit(gb.size(), 0);
  std::vector<std::size_t> queue{0};
  map[0] = 0;
  hit[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t x = queue[q];
    for (std::size_t s = 0; s < ia.size(); ++s) {
      std::size_t xa = ga.multiply(x, ia[s]);
      std::size_t xb = gb.multiply(map[x], ib[s]);
      if (map[xa] == SIZE_MAX) {
        if (hit[xb]) return false;
        hit[xb] = 1;
        map[xa] = xb;
        queue.push_back(xa);
      } else if (map[xa] != xb) {
        return false;
      }
    }
  }
  // The map is well defined and injective, so the kernels coincide.
  return true;
}

EpiSearchResult enumerate_epimorphisms(std::shared_ptr<const Presentation> source,
                                       std::shared_ptr<const FiniteGroup> target, const EpiSearchOptions& options) {
  EpiSearchResult res;
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> by_fp;
  std::vector<EpiClass> classes;
  auto raw = find_homomorphisms(source, target, {}, options, &res.nodes);
  res.raw_solutions = raw.size();
  for (auto& e : raw) {
    auto fp = kernel_fingerprint(e, options);
    auto& bucket = by_fp[fp];
    bool found = false;
    for (std::size_t c : bucket) {
      if (kernels_equal(classes[c].representative, e)) {
        ++classes[c].members_found;
        found = true;
        break;
      }
    }
    if (found) continue;
    bucket.push_back(classes.size());
    classes.push_back({std::move(e), fp, 1});
  }
  // Deterministic order: by fingerprint, then by the images of the
  // representative (bucket collisions are rare).
  std::stable_sort(classes.begin(), classes.end(), [](const EpiClass& x, const EpiClass& y) {
    if (x.fingerprint != y.fingerprint) return x.fingerprint < y.fingerprint;
    return x.representative.images < y.representative.images;
  });
  res.classes = std::move(classes);
  return res;
}

}  // namespace coxcensus
