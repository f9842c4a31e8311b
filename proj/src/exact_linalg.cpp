#include "confspace/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace confspace {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void RationalMatrix::check_bounds(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw std::out_of_range("matrix index (" + std::to_string(row) + ", " + std::to_string(col) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

void RationalMatrix::set(std::size_t row, std::size_t col, const Rational& value) {
  check_bounds(row, col);
  if (value == 0) {
    data_[row].erase(col);
  } else {
    data_[row][col] = value;
  }
}

void RationalMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  check_bounds(row, col);
  if (value == 0) return;
  auto [it, inserted] = data_[row].try_emplace(col, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) data_[row].erase(it);
  }
}

Rational RationalMatrix::at(std::size_t row, std::size_t col) const {
  check_bounds(row, col);
  const auto it = data_[row].find(col);
  return it == data_[row].end() ? Rational(0) : it->second;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
  }
  return t;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

// Divides out the content and normalizes the leading coefficient to be positive.
void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

IntRow to_integer_row(const RationalMatrix::Row& row) {
  Integer lcm = 1;
  for (const auto& [c, v] : row) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    Integer scaled = lcm / v.get_den() * v.get_num();
    out.emplace_back(c, std::move(scaled));
  }
  make_primitive(out);
  return out;
}

// row <- a*row - b*pivot where a, b are the cofactors that cancel the shared
// leading column.
void eliminate(IntRow& row, const IntRow& pivot) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
  const Integer a = pivot.front().second / g;
  const Integer b = row.front().second / g;

  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto r = row.begin() + 1;
  auto p = pivot.begin() + 1;
  Integer tmp;
  while (r != row.end() || p != pivot.end()) {
    if (p == pivot.end() || (r != row.end() && r->first < p->first)) {
      out.emplace_back(r->first, a * r->second);
      ++r;
    } else if (r == row.end() || p->first < r->first) {
      out.emplace_back(p->first, -b * p->second);
      ++p;
    } else {
      tmp = a * r->second - b * p->second;
      if (tmp != 0) out.emplace_back(r->first, tmp);
      ++r;
      ++p;
    }
  }
  make_primitive(out);
  row = std::move(out);
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) rows.push_back(to_integer_row(m.row(r)));
  }
  // Sparsest rows first keeps fill-in low; ties keep input order.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const IntRow& x, const IntRow& y) { return x.size() < y.size(); });

  std::vector<IntRow> pivot_of_col(m.cols());
  std::size_t found = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      IntRow& pivot = pivot_of_col[lead];
      if (pivot.empty()) {
        pivot = std::move(row);
        ++found;
        break;
      }
      eliminate(row, pivot);
    }
  }
  return found;
}

std::size_t betti_from_ranks(std::size_t dim, std::size_t rank_out, std::size_t rank_in) {
  if (rank_out + rank_in > dim) {
    throw std::logic_error("ranks " + std::to_string(rank_out) + " + " + std::to_string(rank_in) +
                           " exceed dimension " + std::to_string(dim));
  }
  return dim - rank_out - rank_in;
}

}  // namespace confspace
