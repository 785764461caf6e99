#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

namespace coxcensus {

// Row-major sparse integer matrix with exact entries.
class IntegerMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    mpz_class value;
  };

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  static IntegerMatrix from_dense(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept;

  mpz_class get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const mpz_class& v);
  void add(std::size_t r, std::size_t c, const mpz_class& v);
  // Entries need not be sorted; repeated columns are summed.
  void append_row(std::vector<Entry> entries);

  const std::vector<Entry>& row(std::size_t r) const { return rows_.at(r); }

  // new(i, j) = old(row_order[i], col_order[j]).
  IntegerMatrix permuted(const std::vector<std::size_t>& row_order, const std::vector<std::size_t>& col_order) const;
  std::vector<std::vector<mpz_class>> to_dense() const;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

// Text format: "rows cols nnz" then nnz lines "r c value" with 1-based
// indices. An optional "0 0 0" terminator line is accepted.
IntegerMatrix read_sparse_matrix(std::istream& in);
void write_sparse_matrix(std::ostream& out, const IntegerMatrix& m);

}  // namespace coxcensus
