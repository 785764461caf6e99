#include "coxcensus/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "coxcensus/errors.hpp"
#include "coxcensus/presentation.hpp"

namespace coxcensus {

namespace {

using Entry = IntegerMatrix::Entry;
using Row = std::vector<Entry>;

class Eliminator {
 public:
  Eliminator(const IntegerMatrix& m, const SnfOptions& opt, SnfStats& stats)
      : opt_(opt), stats_(stats), rows_(m.rows()), col_rows_(m.cols()), col_count_(m.cols(), 0),
        row_alive_(m.rows(), 1), stamp_(m.rows(), 0) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      rows_[r] = m.row(r);
      for (const auto& e : rows_[r]) {
        col_rows_[e.col].push_back(static_cast<std::uint32_t>(r));
        ++col_count_[e.col];
      }
      nnz_ += rows_[r].size();
    }
    stats_.peak_nonzeros = nnz_;
  }

  std::vector<mpz_class> run() {
    unit_phase();
    general_phase();
    return std::move(diagonal_);
  }

 private:
  const SnfOptions& opt_;
  SnfStats& stats_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;  // superset of rows with an entry
  std::vector<std::size_t> col_count_;                // exact
  std::vector<char> row_alive_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t clock_ = 0;
  std::size_t nnz_ = 0;
  std::vector<mpz_class> diagonal_;
  std::set<std::pair<std::size_t, std::uint32_t>> queue_;
  bool queue_active_ = false;
  Row scratch_;

  static const mpz_class* find(const Row& row, std::uint32_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t k) { return e.col < k; });
    return it != row.end() && it->col == c ? &it->value : nullptr;
  }

  // Live rows holding a nonzero in column c, other than `skip`, deduplicated.
  std::vector<std::uint32_t> column(std::uint32_t c, std::uint32_t skip) {
    ++clock_;
    std::vector<std::uint32_t> out;
    std::vector<std::uint32_t> kept;
    for (std::uint32_t t : col_rows_[c]) {
      if (!row_alive_[t] || stamp_[t] == clock_) continue;
      stamp_[t] = clock_;
      if (!find(rows_[t], c)) continue;
      kept.push_back(t);
      if (t != skip) out.push_back(t);
    }
    col_rows_[c] = std::move(kept);
    return out;
  }

  // rows_[t] -= q * rows_[p]
  void row_sub(std::uint32_t t, const mpz_class& q, std::uint32_t p) {
    const Row& a = rows_[t];
    const Row& b = rows_[p];
    scratch_.clear();
    scratch_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
        scratch_.push_back(a[i++]);
      } else if (i == a.size() || b[j].col < a[i].col) {
        scratch_.push_back({b[j].col, -q * b[j].value});
        ++col_count_[b[j].col];
        col_rows_[b[j].col].push_back(t);
        ++j;
      } else {
        mpz_class v = a[i].value - q * b[j].value;
        if (v != 0)
          scratch_.push_back({a[i].col, std::move(v)});
        else
          --col_count_[a[i].col];
        ++i;
        ++j;
      }
    }
    nnz_ = nnz_ - a.size() + scratch_.size();
    std::swap(rows_[t], scratch_);
    if (nnz_ > stats_.peak_nonzeros) stats_.peak_nonzeros = nnz_;
    if (nnz_ > opt_.max_nonzeros)
      throw BudgetExceeded("snf", "working matrix exceeded " + std::to_string(opt_.max_nonzeros) + " nonzeros");
    if (queue_active_) queue_.insert({rows_[t].size(), t});
  }

  void drop_row(std::uint32_t r) {
    for (const auto& e : rows_[r]) --col_count_[e.col];
    nnz_ -= rows_[r].size();
    rows_[r].clear();
    row_alive_[r] = 0;
  }

  // Pivot (r, c) with a unit entry: clear the column with row operations; the
  // rest of row r then dies under column operations that touch nothing else.
  void unit_pivot(std::uint32_t r, std::uint32_t c) {
    mpz_class u = *find(rows_[r], c);
    for (std::uint32_t t : column(c, r)) {
      mpz_class q = *find(rows_[t], c) * u;
      row_sub(t, q, r);
    }
    drop_row(r);
    col_rows_[c].clear();
    diagonal_.push_back(1);
    ++stats_.unit_pivots;
  }

  void unit_phase() {
    queue_active_ = true;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) queue_.insert({rows_[r].size(), r});
    while (!queue_.empty()) {
      auto [len, r] = *queue_.begin();
      queue_.erase(queue_.begin());
      if (!row_alive_[r] || len != rows_[r].size()) continue;
      if (len == 0) {
        row_alive_[r] = 0;
        continue;
      }
      std::uint32_t best = 0;
      std::size_t best_count = SIZE_MAX;
      bool found = false;
      for (const auto& e : rows_[r]) {
        if (e.value != 1 && e.value != -1) continue;
        if (col_count_[e.col] < best_count) {
          best_count = col_count_[e.col];
          best = e.col;
          found = true;
        }
      }
      if (found) unit_pivot(r, best);
    }
    queue_active_ = false;
  }

  void general_phase() {
    for (;;) {
      // Smallest absolute value; ties by Markowitz cost, then row, then column.
      bool found = false;
      std::uint32_t pr = 0, pc = 0;
      mpz_class best_abs;
      std::size_t best_cost = 0;
      for (std::uint32_t r = 0; r < rows_.size(); ++r) {
        if (!row_alive_[r]) continue;
        if (rows_[r].empty()) {
          row_alive_[r] = 0;
          continue;
        }
        for (const auto& e : rows_[r]) {
          mpz_class a = abs(e.value);
          std::size_t cost = (rows_[r].size() - 1) * (col_count_[e.col] - 1);
          int c = found ? cmp(a, best_abs) : -1;
          if (c < 0 || (c == 0 && cost < best_cost)) {
            found = true;
            best_abs = a;
            best_cost = cost;
            pr = r;
            pc = e.col;
          }
        }
      }
      if (!found) return;
      if (best_abs == 1) {
        unit_pivot(pr, pc);
        continue;
      }
      mpz_class v = *find(rows_[pr], pc);
      bool column_clean = true;
      for (std::uint32_t t : column(pc, pr)) {
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), find(rows_[t], pc)->get_mpz_t(), v.get_mpz_t());
        if (q != 0) row_sub(t, q, pr);
        if (find(rows_[t], pc)) column_clean = false;
      }
      if (!column_clean) continue;
      // Column pc now only meets row pr, so column operations against it only
      // change row pr.
      Row& row = rows_[pr];
      Row kept;
      bool row_clean = true;
      for (auto& e : row) {
        if (e.col == pc) {
          kept.push_back(e);
          continue;
        }
        mpz_class rem;
        mpz_tdiv_r(rem.get_mpz_t(), e.value.get_mpz_t(), v.get_mpz_t());
        if (rem != 0) {
          kept.push_back({e.col, rem});
          row_clean = false;
        } else {
          --col_count_[e.col];
          --nnz_;
        }
      }
      row = std::move(kept);
      if (!row_clean) continue;
      diagonal_.push_back(abs(v));
      drop_row(pr);
      col_rows_[pc].clear();
      ++stats_.other_pivots;
    }
  }
};

}  // namespace

std::vector<mpz_class> smith_invariant_factors(const IntegerMatrix& m, const SnfOptions& options, SnfStats* stats) {
  SnfStats local;
  Eliminator el(m, options, stats ? *stats : local);
  std::vector<mpz_class> d = el.run();
  std::size_t units = 0;
  std::vector<mpz_class> rest;
  for (auto& x : d) {
    if (x == 1)
      ++units;
    else
      rest.push_back(std::move(x));
  }
  auto a = AbelianInvariants::from_diagonal(0, rest);
  // from_diagonal drops units produced by gcd normalisation; count them back.
  std::vector<mpz_class> out(units + rest.size() - a.torsion.size(), mpz_class(1));
  out.insert(out.end(), a.torsion.begin(), a.torsion.end());
  return out;
}

AbelianInvariants cokernel_invariants(const IntegerMatrix& m, const SnfOptions& options, SnfStats* stats) {
  auto d = smith_invariant_factors(m, options, stats);
  return AbelianInvariants::from_diagonal(m.cols() - d.size(), d);
}

AbelianInvariants abelian_invariants(const Presentation& p, const SnfOptions& options) {
  return cokernel_invariants(abelianized_relator_matrix(p), options);
}

}  // namespace coxcensus
