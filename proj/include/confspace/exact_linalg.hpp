#ifndef CONFSPACE_EXACT_LINALG_HPP
#define CONFSPACE_EXACT_LINALG_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "confspace/rational.hpp"

namespace confspace {

/**
 * Sparse matrix over the rationals, stored row-wise. Zero entries are never
 * stored; writing a zero erases the entry.
 */
class RationalMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  void set(std::size_t row, std::size_t col, const Rational& value);
  void add(std::size_t row, std::size_t col, const Rational& value);
  Rational at(std::size_t row, std::size_t col) const;

  const Row& row(std::size_t r) const { return data_.at(r); }

  RationalMatrix transposed() const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  void check_bounds(std::size_t row, std::size_t col) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

// Exact rank over Q.
std::size_t rank(const RationalMatrix& m);

// dim - rank_out - rank_in. Throws std::logic_error if the ranks exceed the
// dimension, which cannot happen for the differentials of a chain complex.
std::size_t betti_from_ranks(std::size_t dim, std::size_t rank_out, std::size_t rank_in);

}  // namespace confspace

#endif  // CONFSPACE_EXACT_LINALG_HPP
