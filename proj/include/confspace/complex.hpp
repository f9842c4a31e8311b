#ifndef CONFSPACE_COMPLEX_HPP
#define CONFSPACE_COMPLEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "confspace/algebra.hpp"
#include "confspace/exact_linalg.hpp"

namespace confspace {

enum class GeneratorKind { kV, kW };

/// One generator of Sym(V* (+) W*). `source` is the basis class of the ring
/// it suspends: s^d b lands in V at degree d - |b|, s^{2d-1} b lands in W at
/// degree 2d - 1 - |b|.
struct Generator {
  GeneratorKind kind;
  std::size_t source;
  int degree;

  bool odd() const { return degree % 2 != 0; }
};

/**
 * The suspended generator lists V* and W*. Generators are indexed 0..size()-1
 * with all V generators first, each block sorted by degree and then by source
 * index. That global index order is the canonical factor order of every
 * monomial, and all Koszul signs are measured against it.
 */
class GeneratorSet {
 public:
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& operator[](std::size_t g) const { return gens_[g]; }
  std::size_t size() const { return gens_.size(); }
  std::size_t v_count() const { return v_count_; }
  std::size_t w_count() const { return gens_.size() - v_count_; }
  bool is_v(std::size_t g) const { return g < v_count_; }

  std::size_t v_of(std::size_t source) const { return v_of_source_.at(source); }
  std::size_t w_of(std::size_t source) const { return w_of_source_.at(source); }

  int dimension() const { return dimension_; }
  bool closed() const { return closed_; }

  // v_d (dual of the point class), v_0 (dual of the fundamental class) and
  // w_{2d-1}; present only for closed algebras.
  std::optional<std::size_t> v_top() const { return v_top_; }
  std::optional<std::size_t> v_bottom() const { return v_bottom_; }
  std::optional<std::size_t> w_top() const { return w_top_; }

  std::string label(std::size_t g, const CohomologyAlgebra& algebra) const;

 private:
  friend GeneratorSet build_generators(const CohomologyAlgebra& algebra);

  std::vector<Generator> gens_;
  std::size_t v_count_ = 0;
  std::vector<std::size_t> v_of_source_;
  std::vector<std::size_t> w_of_source_;
  int dimension_ = 0;
  bool closed_ = false;
  std::optional<std::size_t> v_top_;
  std::optional<std::size_t> v_bottom_;
  std::optional<std::size_t> w_top_;
};

GeneratorSet build_generators(const CohomologyAlgebra& algebra);

/// Exponent vector over a GeneratorSet, in canonical generator order.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t generator_count) : exps_(generator_count, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  Exponent operator[](std::size_t g) const { return exps_[g]; }
  Exponent& operator[](std::size_t g) { return exps_[g]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::size_t generator_count() const { return exps_.size(); }

  int length(const GeneratorSet& gens) const;  // #V + 2 #W
  int weight(const GeneratorSet& gens) const;  // #W
  int degree(const GeneratorSet& gens) const;

  // Factors with multiplicity, in canonical order.
  std::vector<std::size_t> factors() const;

  std::string to_string(const GeneratorSet& gens, const CohomologyAlgebra& algebra) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sorts an arbitrary product of generators into canonical order. Returns the
/// monomial and the Koszul sign of the sort, or nullopt if an odd generator
/// repeats (the product is zero).
std::optional<std::pair<Monomial, int>> normalize_product(const GeneratorSet& gens,
                                                          std::span<const std::size_t> factors);

/// Sparse rational combination of monomials.
class ChainVector {
 public:
  using Terms = std::unordered_map<Monomial, Rational, MonomialHash>;

  void add(const Monomial& m, const Rational& coeff);
  Rational coefficient(const Monomial& m) const;
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool operator==(const ChainVector&) const = default;

 private:
  Terms terms_;
};

// Thrown when an enumeration would exceed the caller's monomial budget.
class BasisLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered monomial bases of the pieces Omega_k^{i,w}, keyed by
/// (total degree i, weight w).
struct BigradedBasis {
  using SliceKey = std::pair<int, int>;

  int k = 0;
  bool reduced = false;
  std::map<SliceKey, std::vector<Monomial>> slices;
  std::vector<std::string> notices;

  std::size_t total_size() const;
  std::size_t dim(SliceKey key) const;
};

inline constexpr std::size_t kDefaultMaxBasis = 2'000'000;

/// All monomials of length k, sliced by (degree, weight). With `reduced` on a
/// closed algebra the multiples of v_d^2 and w_{2d-1} are left out (requires
/// k >= 2); on an open algebra `reduced` changes nothing and adds a notice.
/// Throws std::invalid_argument for k < 0 or a reduced request with k < 2,
/// BasisLimitError past `max_basis` monomials.
BigradedBasis enumerate_basis(const GeneratorSet& gens, int k, bool reduced,
                              std::size_t max_basis = kDefaultMaxBasis);

/// Quotient by the acyclic ideal (v_d^2, w_{2d-1}): drops every monomial
/// divisible by v_d^2 or w_{2d-1}.
BigradedBasis reduce_complex(const GeneratorSet& gens, const BigradedBasis& basis);

bool in_reduced_basis(const GeneratorSet& gens, const Monomial& m);

enum class DifferentialKind {
  kCohomological,  // D, degree +1, weight -1 (closed manifolds)
  kHomological,    // boundary, degree -1, weight +1 (open manifolds)
};

DifferentialKind natural_differential(const CohomologyAlgebra& algebra);

/**
 * The differential of the complex, with the ring data pre-tabulated.
 *
 * D is the derivation with D(v) = 0 and D(w_c) = sum_{a,b} c[a][b][c] v_a v_b
 * (the transpose of the product), extended by
 *     D(x y) = D(x) y + (-1)^{|x|} x D(y).
 *
 * The boundary is the coderivation that contracts an ordered pair of
 * V factors s^d a, s^d b (a before b canonically) to
 *     (-1)^{|s^d b|} s^{2d-1}(a b),
 * summed over all pairs of factor positions, each term carrying the Koszul
 * sign of pulling the pair to the front. W factors are never contracted.
 */
class Differential {
 public:
  // `gens` must outlive the Differential. Throws std::invalid_argument for D
  // on an open algebra.
  Differential(const CohomologyAlgebra& algebra, const GeneratorSet& gens, DifferentialKind kind);

  DifferentialKind kind() const { return kind_; }
  int degree_shift() const { return kind_ == DifferentialKind::kCohomological ? 1 : -1; }
  int weight_shift() const { return -degree_shift(); }

  ChainVector apply(const Monomial& m) const;
  ChainVector apply(const ChainVector& v) const;

 private:
  struct Quadratic {
    std::size_t first;
    std::size_t second;
    Rational coeff;
  };
  struct Linear {
    std::size_t target;
    Rational coeff;
  };

  void apply_cohomological(const Monomial& m, const Rational& scale, ChainVector& out) const;
  void apply_homological(const Monomial& m, const Rational& scale, ChainVector& out) const;

  const GeneratorSet* gens_;
  DifferentialKind kind_;
  // D: W generator -> image in Sym^2 V.
  std::vector<std::vector<Quadratic>> w_image_;
  // boundary: (V generator, V generator) in canonical order -> image in W.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Linear>> contraction_;
};

ChainVector differential_closed(const CohomologyAlgebra& algebra, const GeneratorSet& gens,
                                const Monomial& m);
ChainVector differential_open(const CohomologyAlgebra& algebra, const GeneratorSet& gens,
                              const Monomial& m);

/// Matrix of `diff` from slice `source` to the slice it maps into.
RationalMatrix slice_matrix(const Differential& diff, const GeneratorSet& gens,
                            const BigradedBasis& basis, BigradedBasis::SliceKey source);

/// Matrix of the differential out of each slice, keyed by source slice.
/// Rows index the target slice, columns the source slice, both in basis order.
/// Terms outside the target slice must be multiples of v_d^2 or w_{2d-1} and
/// are dropped (the induced differential on the reduced quotient).
std::map<BigradedBasis::SliceKey, RationalMatrix> assemble_matrices(const CohomologyAlgebra& algebra,
                                                                    const GeneratorSet& gens,
                                                                    const BigradedBasis& basis,
                                                                    DifferentialKind kind);

}  // namespace confspace

#endif  // CONFSPACE_COMPLEX_HPP
