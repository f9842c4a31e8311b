#include "confspace/algebra.hpp"

#include <set>
#include <stdexcept>

#include "confspace/exact_linalg.hpp"

namespace confspace {

CohomologyAlgebra::CohomologyAlgebra(std::string name, int dimension, bool closed,
                                     std::vector<BasisClass> basis, std::optional<int> connectivity)
    : name_(std::move(name)),
      dimension_(dimension),
      closed_(closed),
      connectivity_(connectivity),
      basis_(std::move(basis)) {}

std::optional<std::size_t> CohomologyAlgebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> CohomologyAlgebra::classes_of_degree(int p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree == p) out.push_back(i);
  }
  return out;
}

std::size_t CohomologyAlgebra::dim_in_degree(int p) const { return classes_of_degree(p).size(); }

void CohomologyAlgebra::set_product(std::size_t left, std::size_t right, std::size_t result,
                                    const Rational& coeff) {
  if (left >= size() || right >= size() || result >= size()) {
    throw std::out_of_range("product index outside basis of '" + name_ + "'");
  }
  Terms& terms = products_[{left, right}];
  if (coeff == 0) {
    terms.erase(result);
  } else {
    terms[result] = coeff;
  }
}

void CohomologyAlgebra::declare_product(std::size_t left, std::size_t right) {
  if (left >= size() || right >= size()) {
    throw std::out_of_range("product index outside basis of '" + name_ + "'");
  }
  products_[{left, right}];
}

const CohomologyAlgebra::Terms& CohomologyAlgebra::product(std::size_t left,
                                                           std::size_t right) const {
  static const Terms kEmpty;
  const auto it = products_.find({left, right});
  return it == products_.end() ? kEmpty : it->second;
}

Rational CohomologyAlgebra::coefficient(std::size_t left, std::size_t right,
                                        std::size_t result) const {
  const Terms& terms = product(left, right);
  const auto it = terms.find(result);
  return it == terms.end() ? Rational(0) : it->second;
}

bool CohomologyAlgebra::has_product_entry(std::size_t left, std::size_t right) const {
  return products_.contains({left, right});
}

void CohomologyAlgebra::complete_unit_products() {
  if (!closed_) return;
  const auto units = classes_of_degree(0);
  if (units.size() != 1) return;
  const std::size_t u = units.front();
  for (std::size_t x = 0; x < size(); ++x) {
    if (!has_product_entry(u, x)) set_product(u, x, x, 1);
    if (!has_product_entry(x, u)) set_product(x, u, x, 1);
  }
}

bool ValidationReport::ok() const { return error_count() == 0; }

std::size_t ValidationReport::error_count() const {
  std::size_t n = 0;
  for (const auto& i : issues) n += i.severity == Severity::kError;
  return n;
}

std::size_t ValidationReport::warning_count() const { return issues.size() - error_count(); }

bool ValidationReport::has_error(std::string_view check) const {
  for (const auto& i : issues) {
    if (i.severity == Severity::kError && i.check == check) return true;
  }
  return false;
}

namespace {

int koszul_sign(int p, int q) { return (p % 2 != 0 && q % 2 != 0) ? -1 : 1; }

class Validator {
 public:
  explicit Validator(const CohomologyAlgebra& a) : a_(a) {}

  ValidationReport run() {
    check_dimension();
    check_basis();
    // Structural checks below index by degree and would be noise on a
    // malformed basis.
    if (!report_.ok()) return std::move(report_);
    check_degree_additivity();
    check_commutativity();
    check_associativity();
    if (a_.closed()) {
      check_closed();
    } else {
      check_open();
    }
    return std::move(report_);
  }

 private:
  void error(std::string check, std::string message) {
    report_.issues.push_back({Severity::kError, std::move(check), std::move(message)});
  }
  void warning(std::string check, std::string message) {
    report_.issues.push_back({Severity::kWarning, std::move(check), std::move(message)});
  }
  const std::string& nm(std::size_t i) const { return a_.basis()[i].name; }

  void check_dimension() {
    if (a_.dimension() < 0 || a_.dimension() % 2 != 0) {
      error("dimension", "dimension " + std::to_string(a_.dimension()) +
                             " is not a nonnegative even integer");
    }
    if (a_.connectivity() && *a_.connectivity() < 0) {
      error("connectivity", "connectivity must be nonnegative");
    }
  }

  void check_basis() {
    std::set<std::string> seen;
    for (const auto& b : a_.basis()) {
      if (b.name.empty()) error("unique-names", "basis class with empty name");
      if (!seen.insert(b.name).second) error("unique-names", "duplicate basis name '" + b.name + "'");
      if (b.degree < 0 || b.degree > a_.dimension()) {
        error("degree-range", "class '" + b.name + "' has degree " + std::to_string(b.degree) +
                                  " outside [0, " + std::to_string(a_.dimension()) + "]");
      }
    }
  }

  void check_degree_additivity() {
    for (const auto& [pair, terms] : a_.products()) {
      const auto [i, j] = pair;
      for (const auto& [k, c] : terms) {
        if (a_.degree(k) != a_.degree(i) + a_.degree(j)) {
          error("degree-additivity", nm(i) + " * " + nm(j) + " has a term in " + nm(k) +
                                         " of degree " + std::to_string(a_.degree(k)));
        }
      }
    }
  }

  void check_commutativity() {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      for (std::size_t j = i; j < a_.size(); ++j) {
        const auto& ij = a_.product(i, j);
        const auto& ji = a_.product(j, i);
        const int s = koszul_sign(a_.degree(i), a_.degree(j));
        bool good = ij.size() == ji.size();
        for (auto it = ij.begin(); good && it != ij.end(); ++it) {
          const auto jt = ji.find(it->first);
          good = jt != ji.end() && jt->second == s * it->second;
        }
        if (!good) {
          error("graded-commutativity", nm(i) + " * " + nm(j) + " != (-1)^(" +
                                            std::to_string(a_.degree(i)) + "*" +
                                            std::to_string(a_.degree(j)) + ") " + nm(j) + " * " +
                                            nm(i));
        }
      }
    }
  }

  // (x * y) as a sparse vector, times z on the right or left.
  CohomologyAlgebra::Terms multiply(const CohomologyAlgebra::Terms& lhs, std::size_t rhs) const {
    CohomologyAlgebra::Terms out;
    for (const auto& [m, c] : lhs) {
      for (const auto& [k, d] : a_.product(m, rhs)) out[k] += c * d;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }
  CohomologyAlgebra::Terms multiply(std::size_t lhs, const CohomologyAlgebra::Terms& rhs) const {
    CohomologyAlgebra::Terms out;
    for (const auto& [m, c] : rhs) {
      for (const auto& [k, d] : a_.product(lhs, m)) out[k] += c * d;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  void check_associativity() {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      for (std::size_t j = 0; j < a_.size(); ++j) {
        const auto& ij = a_.product(i, j);
        for (std::size_t l = 0; l < a_.size(); ++l) {
          if (multiply(ij, l) != multiply(i, a_.product(j, l))) {
            error("associativity", "(" + nm(i) + " * " + nm(j) + ") * " + nm(l) + " != " + nm(i) +
                                       " * (" + nm(j) + " * " + nm(l) + ")");
          }
        }
      }
    }
  }

  void check_closed() {
    const auto units = a_.classes_of_degree(0);
    const auto tops = a_.classes_of_degree(a_.dimension());
    if (units.size() != 1) {
      error("unit", "closed algebra needs exactly one class of degree 0, found " +
                        std::to_string(units.size()));
    } else {
      const std::size_t u = units.front();
      for (std::size_t x = 0; x < a_.size(); ++x) {
        const CohomologyAlgebra::Terms identity{{x, Rational(1)}};
        if (a_.product(u, x) != identity || a_.product(x, u) != identity) {
          error("unit", "'" + nm(u) + "' does not act as the identity on '" + nm(x) + "'");
        }
      }
    }
    if (tops.size() != 1) {
      error("top-class", "closed algebra needs exactly one class of degree " +
                             std::to_string(a_.dimension()) + ", found " +
                             std::to_string(tops.size()));
      return;
    }
    if (a_.dimension() == 0) return;
    const std::size_t top = tops.front();
    for (int p = 0; p <= a_.dimension(); ++p) {
      const auto rows = a_.classes_of_degree(p);
      const auto cols = a_.classes_of_degree(a_.dimension() - p);
      RationalMatrix pairing(rows.size(), cols.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          pairing.set(r, c, a_.coefficient(rows[r], cols[c], top));
        }
      }
      if (rows.size() != cols.size() || rank(pairing) != rows.size()) {
        error("poincare-pairing", "pairing A^" + std::to_string(p) + " x A^" +
                                      std::to_string(a_.dimension() - p) +
                                      " -> A^top is degenerate");
      }
    }
  }

  void check_open() {
    const std::size_t top = a_.dim_in_degree(a_.dimension());
    if (top != 1) {
      warning("top-class", "open algebra has dim A^" + std::to_string(a_.dimension()) + " = " +
                               std::to_string(top) + " (expected 1 for a connected orientable M)");
    }
  }

  const CohomologyAlgebra& a_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate_algebra(const CohomologyAlgebra& algebra) {
  return Validator(algebra).run();
}

std::vector<CoproductTerm> comultiplication(const CohomologyAlgebra& algebra, int q,
                                            std::size_t c) {
  if (!algebra.closed()) {
    throw std::invalid_argument("comultiplication is only defined for closed algebras");
  }
  if (c >= algebra.size() || algebra.degree(c) != q) {
    throw std::invalid_argument("basis class index does not have homology degree " +
                                std::to_string(q));
  }
  std::vector<CoproductTerm> out;
  for (const auto& [pair, terms] : algebra.products()) {
    const auto it = terms.find(c);
    if (it != terms.end()) out.push_back({pair.first, pair.second, it->second});
  }
  return out;
}

CohomologyAlgebra tensor_product(const CohomologyAlgebra& lhs, const CohomologyAlgebra& rhs) {
  if (lhs.closed() != rhs.closed()) {
    throw std::invalid_argument("tensor product of a closed and an open algebra");
  }
  const int d = lhs.dimension() + rhs.dimension();
  if (d % 2 != 0) throw std::invalid_argument("tensor product has odd dimension");

  const std::size_t nr = rhs.size();
  std::vector<BasisClass> basis;
  basis.reserve(lhs.size() * nr);
  for (const auto& a : lhs.basis()) {
    for (const auto& b : rhs.basis()) basis.push_back({a.name + "*" + b.name, a.degree + b.degree});
  }
  CohomologyAlgebra out(lhs.name() + "x" + rhs.name(), d, lhs.closed(), std::move(basis));

  for (const auto& [lp, lterms] : lhs.products()) {
    for (const auto& [rp, rterms] : rhs.products()) {
      const auto [a, a2] = lp;
      const auto [b, b2] = rp;
      const int sign = koszul_sign(rhs.degree(b), lhs.degree(a2));
      const std::size_t left = a * nr + b;
      const std::size_t right = a2 * nr + b2;
      out.declare_product(left, right);
      for (const auto& [x, cx] : lterms) {
        for (const auto& [y, cy] : rterms) out.set_product(left, right, x * nr + y, sign * cx * cy);
      }
    }
  }
  return out;
}

}  // namespace confspace
