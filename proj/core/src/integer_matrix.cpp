#include "coxcensus/integer_matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "coxcensus/errors.hpp"
#include "coxcensus/presentation.hpp"

namespace coxcensus {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntegerMatrix m(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("from_dense: ragged rows");
    std::vector<Entry> e;
    for (std::size_t c = 0; c < cols; ++c)
      if (r[c] != 0) e.push_back({static_cast<std::uint32_t>(c), mpz_class(r[c])});
    m.append_row(std::move(e));
  }
  return m;
}

std::size_t IntegerMatrix::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

mpz_class IntegerMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.col < k; });
  if (it != row.end() && it->col == c) return it->value;
  return 0;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const mpz_class& v) {
  if (c >= cols_) throw std::out_of_range("IntegerMatrix::set: column out of range");
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.col < k; });
  if (it != row.end() && it->col == c) {
    if (v == 0)
      row.erase(it);
    else
      it->value = v;
  } else if (v != 0) {
    row.insert(it, Entry{static_cast<std::uint32_t>(c), v});
  }
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const mpz_class& v) { set(r, c, get(r, c) + v); }

void IntegerMatrix::append_row(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  std::vector<Entry> row;
  for (auto& e : entries) {
    if (e.col >= cols_) throw std::out_of_range("IntegerMatrix::append_row: column out of range");
    if (!row.empty() && row.back().col == e.col)
      row.back().value += e.value;
    else
      row.push_back(std::move(e));
    if (row.back().value == 0) row.pop_back();
  }
  rows_.push_back(std::move(row));
}

IntegerMatrix IntegerMatrix::permuted(const std::vector<std::size_t>& row_order,
                                      const std::vector<std::size_t>& col_order) const {
  if (row_order.size() != rows() || col_order.size() != cols_)
    throw std::invalid_argument("permuted: order sizes do not match");
  std::vector<std::uint32_t> new_col(cols_);
  for (std::size_t j = 0; j < cols_; ++j) new_col[col_order[j]] = static_cast<std::uint32_t>(j);
  IntegerMatrix m(0, cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    std::vector<Entry> e;
    for (const auto& x : rows_[row_order[i]]) e.push_back({new_col[x.col], x.value});
    m.append_row(std::move(e));
  }
  return m;
}

std::vector<std::vector<mpz_class>> IntegerMatrix::to_dense() const {
  std::vector<std::vector<mpz_class>> d(rows(), std::vector<mpz_class>(cols_, 0));
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& e : rows_[r]) d[r][e.col] = e.value;
  return d;
}

IntegerMatrix read_sparse_matrix(std::istream& in) {
  std::size_t line = 0;
  std::string text;
  auto next_line = [&]() -> bool {
    while (std::getline(in, text)) {
      ++line;
      auto p = text.find_first_not_of(" \t\r");
      if (p == std::string::npos || text[p] == '#' || text[p] == '%') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(1, 1, "empty matrix file");
  std::size_t rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream hs(text);
    if (!(hs >> rows >> cols >> nnz)) throw ParseError(line, 1, "expected header 'rows cols nnz'");
  }
  std::vector<std::vector<IntegerMatrix::Entry>> buf(rows);
  for (std::size_t k = 0; k < nnz; ++k) {
    if (!next_line()) throw ParseError(line + 1, 1, "expected " + std::to_string(nnz) + " entries, got " + std::to_string(k));
    std::istringstream ls(text);
    std::size_t r = 0, c = 0;
    std::string v;
    if (!(ls >> r >> c >> v)) throw ParseError(line, 1, "expected 'row col value'");
    if (r < 1 || r > rows || c < 1 || c > cols) throw ParseError(line, 1, "index out of range");
    mpz_class val;
    if (val.set_str(v, 10) != 0) throw ParseError(line, 1, "bad integer '" + v + "'");
    buf[r - 1].push_back({static_cast<std::uint32_t>(c - 1), val});
  }
  if (next_line()) {
    std::istringstream ls(text);
    long a = -1, b = -1, c = -1;
    ls >> a >> b >> c;
    if (!(a == 0 && b == 0 && c == 0)) throw ParseError(line, 1, "trailing data after the declared entries");
  }
  IntegerMatrix m(0, cols);
  for (auto& r : buf) m.append_row(std::move(r));
  return m;
}

void write_sparse_matrix(std::ostream& out, const IntegerMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) out << r + 1 << ' ' << e.col + 1 << ' ' << e.value.get_str() << '\n';
}

IntegerMatrix abelianized_relator_matrix(const Presentation& p) {
  IntegerMatrix m(0, p.generator_count());
  for (const auto& r : p.relators()) {
    auto sums = exponent_sums(r, p.generator_count());
    std::vector<IntegerMatrix::Entry> e;
    for (std::size_t g = 0; g < sums.size(); ++g)
      if (sums[g] != 0) e.push_back({static_cast<std::uint32_t>(g), mpz_class(sums[g])});
    m.append_row(std::move(e));
  }
  return m;
}

}  // namespace coxcensus
