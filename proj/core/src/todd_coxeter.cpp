#include "coxcensus/todd_coxeter.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "coxcensus/finite_group.hpp"

namespace coxcensus {

namespace {

// Letter -> column, as in CosetTable.
inline std::size_t col_of(int x) { return CosetTable::column(x); }

enum class Status { Ok, Compacted, Overflow };

class Enumerator {
 public:
  Enumerator(const Presentation& p, const ToddCoxeterOptions& opt) : opt_(opt), cols_(2 * p.generator_count()) {
    for (const auto& r : p.relators()) {
      std::vector<std::size_t> c;
      for (int x : r) c.push_back(col_of(x));
      rels_.push_back(std::move(c));
    }
    new_coset();
  }

  bool run(std::span<const Word> subgroup) {
    std::vector<std::vector<std::size_t>> sub;
    for (const auto& w : subgroup) {
      std::vector<std::size_t> c;
      for (int x : w) c.push_back(col_of(x));
      sub.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < sub.size();) {
      Status st = scan_and_fill(0, sub[i]);
      if (st == Status::Overflow) return false;
      i = st == Status::Compacted ? 0 : i + 1;
    }
    cur_ = 0;
    while (cur_ < rep_.size()) {
      if (rep_[cur_] != cur_) {
        ++cur_;
        continue;
      }
      Status st = process(cur_);
      if (st == Status::Overflow) return false;
      if (st == Status::Ok) ++cur_;
    }
    return true;
  }

  std::vector<std::int32_t> compact_table(std::size_t& index) {
    std::vector<std::int32_t> action(table_);
    // Dead rows are unreachable from coset 0, so standardising drops them.
    index = standardize_action(action, cols_ / 2);
    return action;
  }

  std::size_t total_defined() const { return total_defined_; }
  std::size_t peak_live() const { return peak_live_; }

 private:
  const ToddCoxeterOptions& opt_;
  std::size_t cols_;
  std::vector<std::vector<std::size_t>> rels_;
  std::vector<std::int32_t> table_;
  std::vector<std::size_t> rep_;
  std::vector<std::size_t> queue_;
  std::size_t live_ = 0;
  std::size_t total_defined_ = 0;
  std::size_t peak_live_ = 0;
  std::size_t cur_ = 0;

  std::int32_t& at(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }

  void new_coset() {
    table_.resize(table_.size() + cols_, -1);
    rep_.push_back(rep_.size());
    ++live_;
    ++total_defined_;
    peak_live_ = std::max(peak_live_, live_);
  }

  // Relators at c, then fill the rest of c's row.
  Status process(std::size_t c) {
    for (const auto& r : rels_) {
      Status st = scan_and_fill(c, r);
      if (st != Status::Ok) return st;
      if (rep_[c] != c) return Status::Ok;
    }
    for (std::size_t col = 0; col < cols_; ++col) {
      if (at(c, col) >= 0) continue;
      Status st = define(c, col);
      if (st != Status::Ok) return st;
    }
    return Status::Ok;
  }

  Status define(std::size_t c, std::size_t col) {
    if (rep_.size() >= opt_.max_cosets) {
      if (!opt_.lookahead) return Status::Overflow;
      std::size_t before = rep_.size();
      lookahead();
      compact();
      if (rep_.size() >= opt_.max_cosets || before - rep_.size() < std::max<std::size_t>(1, opt_.max_cosets / 100))
        return Status::Overflow;
      return Status::Compacted;
    }
    std::size_t d = rep_.size();
    new_coset();
    at(c, col) = static_cast<std::int32_t>(d);
    at(d, col ^ 1u) = static_cast<std::int32_t>(c);
    return Status::Ok;
  }

  std::size_t find(std::size_t c) {
    std::size_t r = c;
    while (rep_[r] != r) r = rep_[r];
    while (rep_[c] != r) {
      std::size_t n = rep_[c];
      rep_[c] = r;
      c = n;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t k = 0; k < queue_.size(); ++k) {
      std::size_t g = queue_[k];
      for (std::size_t col = 0; col < cols_; ++col) {
        std::int32_t dv = at(g, col);
        if (dv < 0) continue;
        auto d = static_cast<std::size_t>(dv);
        if (at(d, col ^ 1u) == static_cast<std::int32_t>(g)) at(d, col ^ 1u) = -1;
        std::size_t mu = find(g), nu = find(d);
        if (at(mu, col) >= 0)
          merge(nu, static_cast<std::size_t>(at(mu, col)));
        else if (at(nu, col ^ 1u) >= 0)
          merge(mu, static_cast<std::size_t>(at(nu, col ^ 1u)));
        else {
          at(mu, col) = static_cast<std::int32_t>(nu);
          at(nu, col ^ 1u) = static_cast<std::int32_t>(mu);
        }
      }
    }
  }

  // One pass over r at c. Returns true when the relator is fully traced (or
  // closed by a deduction/coincidence); otherwise leaves the gap position
  // in (f, i).
  bool scan_once(std::size_t c, const std::vector<std::size_t>& r, std::size_t& f, std::size_t& i) {
    f = c;
    std::size_t b = c;
    i = 0;
    std::size_t j = r.size();
    while (i < j && at(f, r[i]) >= 0) f = static_cast<std::size_t>(at(f, r[i++]));
    if (i == j) {
      if (f != b) coincidence(f, b);
      return true;
    }
    while (j > i && at(b, r[j - 1] ^ 1u) >= 0) b = static_cast<std::size_t>(at(b, r[--j] ^ 1u));
    if (j == i) {
      coincidence(f, b);
      return true;
    }
    if (j == i + 1) {
      at(f, r[i]) = static_cast<std::int32_t>(b);
      at(b, r[i] ^ 1u) = static_cast<std::int32_t>(f);
      return true;
    }
    return false;
  }

  Status scan_and_fill(std::size_t c, const std::vector<std::size_t>& r) {
    if (r.empty()) return Status::Ok;
    for (;;) {
      std::size_t f = 0, i = 0;
      if (scan_once(c, r, f, i)) return Status::Ok;
      Status st = define(f, r[i]);
      if (st != Status::Ok) return st;
    }
  }

  void lookahead() {
    for (std::size_t c = 0; c < rep_.size(); ++c) {
      for (const auto& r : rels_) {
        if (rep_[c] != c || r.empty()) break;
        std::size_t f = 0, i = 0;
        scan_once(c, r, f, i);
      }
    }
  }

  // Order-preserving renumbering of the live cosets; cur_ follows.
  void compact() {
    std::vector<std::int32_t> renum(rep_.size(), -1);
    std::size_t n = 0, new_cur = SIZE_MAX;
    for (std::size_t c = 0; c < rep_.size(); ++c) {
      if (c >= cur_ && new_cur == SIZE_MAX) new_cur = n;
      if (rep_[c] == c) renum[c] = static_cast<std::int32_t>(n++);
    }
    std::vector<std::int32_t> nt(n * cols_, -1);
    for (std::size_t c = 0; c < rep_.size(); ++c) {
      if (rep_[c] != c) continue;
      for (std::size_t col = 0; col < cols_; ++col) {
        auto d = at(c, col);
        nt[static_cast<std::size_t>(renum[c]) * cols_ + col] = d < 0 ? -1 : renum[static_cast<std::size_t>(d)];
      }
    }
    table_ = std::move(nt);
    rep_.resize(n);
    for (std::size_t c = 0; c < n; ++c) rep_[c] = c;
    live_ = n;
    cur_ = new_cur == SIZE_MAX ? n : new_cur;
  }
};

}  // namespace

ToddCoxeterResult todd_coxeter(std::shared_ptr<const Presentation> p, std::span<const Word> subgroup,
                               const ToddCoxeterOptions& options) {
  for (const auto& w : subgroup)
    if (w.max_generator() > static_cast<int>(p->generator_count()))
      throw std::invalid_argument("todd_coxeter: subgroup word uses an undeclared generator");
  ToddCoxeterResult res;
  Enumerator e(*p, options);
  bool ok = e.run(subgroup);
  res.total_defined = e.total_defined();
  res.peak_live = e.peak_live();
  if (!ok) return res;
  std::size_t index = 0;
  auto action = e.compact_table(index);
  std::string desc = "<";
  for (std::size_t i = 0; i < subgroup.size(); ++i) desc += (i ? ", " : "") + format_word(subgroup[i], *p);
  desc += ">";
  res.table.emplace(p, desc, std::vector<Word>(subgroup.begin(), subgroup.end()), index, std::move(action));
  return res;
}

ToddCoxeterResult todd_coxeter(const Presentation& p, std::span<const Word> subgroup,
                               const ToddCoxeterOptions& options) {
  return todd_coxeter(std::make_shared<const Presentation>(p), subgroup, options);
}

CosetTable table_from_images(std::shared_ptr<const Presentation> source, std::span<const Permutation> images,
                             const FiniteGroup& target) {
  const std::size_t k = source->generator_count();
  if (images.size() != k) throw std::invalid_argument("table_from_images: wrong number of images");
  std::vector<std::size_t> img, inv;
  for (const auto& g : images) {
    auto i = target.index_of(g);
    if (!i) throw std::invalid_argument("table_from_images: image outside the target group");
    img.push_back(*i);
    inv.push_back(target.inverse(*i));
  }
  // Breadth-first over the reachable elements, numbering cosets on the fly.
  std::vector<std::int32_t> number(target.size(), -1);
  std::vector<std::size_t> elems{0};
  number[0] = 0;
  std::vector<std::int32_t> action;
  for (std::size_t c = 0; c < elems.size(); ++c) {
    for (std::size_t g = 0; g < k; ++g) {
      for (int s = 0; s < 2; ++s) {
        std::size_t y = target.multiply(elems[c], s == 0 ? img[g] : inv[g]);
        if (number[y] < 0) {
          number[y] = static_cast<std::int32_t>(elems.size());
          elems.push_back(y);
        }
        action.push_back(number[y]);
      }
    }
  }
  return CosetTable(std::move(source), "kernel", {}, elems.size(), std::move(action));
}

std::optional<std::size_t> quotient_order(const Presentation& p, std::span<const Word> extra, std::size_t max_cosets) {
  Presentation q = p;
  for (const auto& w : extra) q.add_relator(w);
  ToddCoxeterOptions opt;
  opt.max_cosets = max_cosets;
  auto r = todd_coxeter(q, {}, opt);
  if (!r.closed()) return std::nullopt;
  return r.table->index();
}

}  // namespace coxcensus
