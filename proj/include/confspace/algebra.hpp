#ifndef CONFSPACE_ALGEBRA_HPP
#define CONFSPACE_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "confspace/rational.hpp"

namespace confspace {

struct BasisClass {
  std::string name;
  int degree = 0;

  bool operator==(const BasisClass&) const = default;
};

/**
 * Finite presentation of a graded-commutative ring: H*(M;Q) for a closed
 * manifold, or the compactly supported ring H_c*(M;Q) (possibly without a
 * unit) for an open one.
 *
 * Products are stored as structure constants
 *
 *     b_i * b_j = sum_k c[i][j][k] b_k,
 *
 * with missing entries meaning zero. The object is a plain value; nothing is
 * checked on construction. Run validate_algebra() before handing it to the
 * complex builders.
 */
class CohomologyAlgebra {
 public:
  // result basis index -> coefficient
  using Terms = std::map<std::size_t, Rational>;
  using ProductTable = std::map<std::pair<std::size_t, std::size_t>, Terms>;

  CohomologyAlgebra() = default;
  CohomologyAlgebra(std::string name, int dimension, bool closed, std::vector<BasisClass> basis,
                    std::optional<int> connectivity = std::nullopt);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  bool closed() const { return closed_; }
  std::optional<int> connectivity() const { return connectivity_; }
  void set_connectivity(std::optional<int> r) { connectivity_ = r; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<BasisClass>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  int degree(std::size_t i) const { return basis_.at(i).degree; }
  std::optional<std::size_t> find(std::string_view name) const;

  std::vector<std::size_t> classes_of_degree(int p) const;
  std::size_t dim_in_degree(int p) const;

  // Overwrites c[left][right][result]; a zero coefficient erases the entry.
  void set_product(std::size_t left, std::size_t right, std::size_t result, const Rational& coeff);
  // Marks the pair (left, right) as explicitly specified without adding a
  // term, so that complete_unit_products() leaves it alone.
  void declare_product(std::size_t left, std::size_t right);

  const Terms& product(std::size_t left, std::size_t right) const;
  Rational coefficient(std::size_t left, std::size_t right, std::size_t result) const;
  const ProductTable& products() const { return products_; }
  bool has_product_entry(std::size_t left, std::size_t right) const;

  // For a closed algebra with a unique degree-0 class u, fills u*x = x and
  // x*u = x for every pair that has no explicit entry.
  void complete_unit_products();

  bool operator==(const CohomologyAlgebra&) const = default;

 private:
  std::string name_;
  int dimension_ = 0;
  bool closed_ = true;
  std::optional<int> connectivity_;
  std::vector<BasisClass> basis_;
  ProductTable products_;
};

enum class Severity { kError, kWarning };

struct ValidationIssue {
  Severity severity;
  std::string check;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const;
  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool has_error(std::string_view check) const;
};

ValidationReport validate_algebra(const CohomologyAlgebra& algebra);

struct CoproductTerm {
  std::size_t left;
  std::size_t right;
  Rational coeff;

  bool operator==(const CoproductTerm&) const = default;
};

// Diagonal comultiplication on the homology class dual to basis class `c`
// (homology degree q). Literal transpose of the product table: every ordered
// pair (a, b) with c[a][b][c] != 0, in lexicographic order of (a, b).
// Throws std::invalid_argument on an open algebra or if deg(c) != q.
std::vector<CoproductTerm> comultiplication(const CohomologyAlgebra& algebra, int q, std::size_t c);

// Kunneth product with Koszul-signed structure constants
// (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'. Both inputs closed or both
// open; throws std::invalid_argument otherwise.
CohomologyAlgebra tensor_product(const CohomologyAlgebra& lhs, const CohomologyAlgebra& rhs);

}  // namespace confspace

#endif  // CONFSPACE_ALGEBRA_HPP
