#ifndef CONFSPACE_ANALYSIS_HPP
#define CONFSPACE_ANALYSIS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confspace/algebra.hpp"
#include "confspace/complex.hpp"

namespace confspace {

struct ComputeOptions {
  std::size_t max_basis = kDefaultMaxBasis;
  // 0 = hardware concurrency.
  unsigned threads = 0;
  // Defaults to D for closed rings and the boundary for open ones.
  std::optional<DifferentialKind> differential;
};

/// Rational Betti numbers of C_k(M) for one k.
struct BettiTable {
  int k = 0;
  bool reduced = false;
  DifferentialKind differential = DifferentialKind::kCohomological;
  std::map<int, std::size_t> betti;  // nonzero entries only
  std::map<BigradedBasis::SliceKey, std::size_t> slice_dims;

  std::size_t at(int degree) const;
  // Highest degree with nonzero Betti number; nullopt for an empty complex.
  std::optional<int> chdim_rational() const;
  long long euler_characteristic() const;          // from betti
  long long complex_euler_characteristic() const;  // from slice dimensions
};

// Throws std::invalid_argument for an invalid algebra, k < 0, or a reduced
// request outside closed k >= 2; BasisLimitError past options.max_basis.
BettiTable betti_table(const CohomologyAlgebra& algebra, int k, bool reduced,
                       const ComputeOptions& options = {});

// n = dim A^{d-1}.
std::size_t codimension_one_rank(const CohomologyAlgebra& algebra);

// Highest nonzero rational cohomology degree of C_k(M). Uses the reduced
// complex when that is available (closed, k >= 2). A lower bound for the
// integral Chdim; equal to it whenever predicted_chdim() applies.
int chdim(const CohomologyAlgebra& algebra, int k, const ComputeOptions& options = {});

// (d-1)k for open rings with n >= 1, k >= 1; (d-1)k + 1 for closed rings with
// n >= 2, k >= 3; nullopt otherwise.
std::optional<int> predicted_chdim(const CohomologyAlgebra& algebra, int k);

// Binomial lower bounds on the rank of the top cohomology group. nullopt
// outside open n >= 1, k >= 2 / closed n >= 2, k >= 3.
std::optional<Integer> lower_bound_rank(long n, long k, bool closed);

// Kallel: (d-1)k - r + 1 without boundary, (d-1)k - r with boundary or
// removed set. nullopt for k < 2 or r < 0.
std::optional<int> kallel_upper_bound(int d, int k, int r, bool boundary_or_U_nonempty);

// Lower bound for Chdim of the ordered configuration space F_k(M).
std::optional<int> ordered_lower_bound(const CohomologyAlgebra& algebra, int k);

enum class TheoremId { kT1, kT2, kT3, kT4, kKallel, kC51, kC52 };
enum class VerdictStatus { kConfirmed, kViolated, kNotApplicable };

std::string_view to_string(TheoremId id);
std::string_view to_string(VerdictStatus status);

struct TheoremVerdict {
  int k = 0;
  TheoremId theorem = TheoremId::kT1;
  bool applicable = false;
  std::optional<Integer> predicted;
  std::optional<Integer> computed;
  VerdictStatus status = VerdictStatus::kNotApplicable;
  std::string relation;  // "==", ">=" or "<="
};

/// One verdict per theorem per k in 1..k_max, in theorem order.
std::vector<TheoremVerdict> verify_theorems(const CohomologyAlgebra& algebra, int k_max,
                                            const ComputeOptions& options = {});

}  // namespace confspace

#endif  // CONFSPACE_ANALYSIS_HPP
