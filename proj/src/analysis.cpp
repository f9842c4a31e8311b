#include "confspace/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace confspace {

std::size_t BettiTable::at(int degree) const {
  const auto it = betti.find(degree);
  return it == betti.end() ? 0 : it->second;
}

std::optional<int> BettiTable::chdim_rational() const {
  if (betti.empty()) return std::nullopt;
  return betti.rbegin()->first;
}

long long BettiTable::euler_characteristic() const {
  long long chi = 0;
  for (const auto& [i, b] : betti) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(b);
  return chi;
}

long long BettiTable::complex_euler_characteristic() const {
  long long chi = 0;
  for (const auto& [key, dim] : slice_dims) {
    chi += (key.first % 2 == 0 ? 1 : -1) * static_cast<long long>(dim);
  }
  return chi;
}

namespace {

void require_valid(const CohomologyAlgebra& algebra) {
  const ValidationReport report = validate_algebra(algebra);
  if (report.ok()) return;
  for (const auto& issue : report.issues) {
    if (issue.severity == Severity::kError) {
      throw std::invalid_argument("invalid algebra '" + algebra.name() + "': " + issue.check +
                                  ": " + issue.message);
    }
  }
}

std::vector<std::size_t> slice_ranks(const Differential& diff, const GeneratorSet& gens,
                                     const BigradedBasis& basis,
                                     const std::vector<BigradedBasis::SliceKey>& keys,
                                     unsigned threads) {
  std::vector<std::size_t> ranks(keys.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < keys.size(); i = next++) {
      try {
        ranks[i] = rank(slice_matrix(diff, gens, basis, keys[i]));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, keys.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return ranks;
}

}  // namespace

BettiTable betti_table(const CohomologyAlgebra& algebra, int k, bool reduced,
                       const ComputeOptions& options) {
  require_valid(algebra);
  if (k < 0) throw std::invalid_argument("number of points must be nonnegative");
  const DifferentialKind kind = options.differential.value_or(natural_differential(algebra));
  if (reduced && (!algebra.closed() || k < 2 || kind != DifferentialKind::kCohomological)) {
    throw std::invalid_argument(
        "the reduced complex needs a closed manifold, k >= 2 and the differential D");
  }

  const GeneratorSet gens = build_generators(algebra);
  const BigradedBasis basis = enumerate_basis(gens, k, reduced, options.max_basis);
  const Differential diff(algebra, gens, kind);

  std::vector<BigradedBasis::SliceKey> keys;
  for (const auto& [key, monos] : basis.slices) keys.push_back(key);
  const std::vector<std::size_t> ranks = slice_ranks(diff, gens, basis, keys, options.threads);

  std::map<BigradedBasis::SliceKey, std::size_t> rank_out;
  for (std::size_t i = 0; i < keys.size(); ++i) rank_out[keys[i]] = ranks[i];

  BettiTable table;
  table.k = k;
  table.reduced = basis.reduced;
  table.differential = kind;
  for (const auto& [key, monos] : basis.slices) {
    table.slice_dims[key] = monos.size();
    const BigradedBasis::SliceKey from{key.first - diff.degree_shift(),
                                       key.second - diff.weight_shift()};
    const auto in = rank_out.find(from);
    const std::size_t b =
        betti_from_ranks(monos.size(), rank_out[key], in == rank_out.end() ? 0 : in->second);
    if (b != 0) table.betti[key.first] += b;
  }
  return table;
}

std::size_t codimension_one_rank(const CohomologyAlgebra& algebra) {
  return algebra.dim_in_degree(algebra.dimension() - 1);
}

int chdim(const CohomologyAlgebra& algebra, int k, const ComputeOptions& options) {
  const bool reduced = algebra.closed() && k >= 2;
  const auto top = betti_table(algebra, k, reduced, options).chdim_rational();
  if (!top) throw std::logic_error("complex has no cohomology at all");
  return *top;
}

std::optional<int> predicted_chdim(const CohomologyAlgebra& algebra, int k) {
  const int d = algebra.dimension();
  const std::size_t n = codimension_one_rank(algebra);
  if (!algebra.closed() && n >= 1 && k >= 1) return (d - 1) * k;
  if (algebra.closed() && n >= 2 && k >= 3) return (d - 1) * k + 1;
  return std::nullopt;
}

namespace {

Integer binomial(long top, long bottom) {
  Integer out;
  if (top < 0 || bottom < 0 || bottom > top) return out = 0;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

}  // namespace

std::optional<Integer> lower_bound_rank(long n, long k, bool closed) {
  if (closed) {
    if (n < 2 || k < 3) return std::nullopt;
    if (k % 2 == 0) return n * binomial(k / 2 + n - 2, n - 1) - binomial(k / 2 + n - 1, n - 1);
    return binomial((k - 1) / 2 + n - 1, n - 1);
  }
  if (n < 1 || k < 2) return std::nullopt;
  if (k % 2 == 0) return binomial(k / 2 + n - 1, n - 1);
  return n * binomial((k - 1) / 2 + n - 1, n - 1);
}

std::optional<int> kallel_upper_bound(int d, int k, int r, bool boundary_or_U_nonempty) {
  if (k < 2 || r < 0) return std::nullopt;
  return (d - 1) * k - r + (boundary_or_U_nonempty ? 0 : 1);
}

std::optional<int> ordered_lower_bound(const CohomologyAlgebra& algebra, int k) {
  return predicted_chdim(algebra, k);
}

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kT1: return "T1";
    case TheoremId::kT2: return "T2";
    case TheoremId::kT3: return "T3";
    case TheoremId::kT4: return "T4";
    case TheoremId::kKallel: return "Kallel";
    case TheoremId::kC51: return "C51";
    case TheoremId::kC52: return "C52";
  }
  return "?";
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kConfirmed: return "confirmed";
    case VerdictStatus::kViolated: return "violated";
    case VerdictStatus::kNotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

TheoremVerdict judge(int k, TheoremId id, std::optional<Integer> predicted, const Integer& computed,
                     std::string relation) {
  TheoremVerdict v;
  v.k = k;
  v.theorem = id;
  v.relation = std::move(relation);
  v.applicable = predicted.has_value();
  if (!v.applicable) return v;
  v.predicted = std::move(predicted);
  v.computed = computed;
  bool holds = false;
  if (v.relation == "==") holds = computed == *v.predicted;
  if (v.relation == ">=") holds = computed >= *v.predicted;
  if (v.relation == "<=") holds = computed <= *v.predicted;
  v.status = holds ? VerdictStatus::kConfirmed : VerdictStatus::kViolated;
  return v;
}

std::optional<Integer> widen(std::optional<int> x) {
  if (!x) return std::nullopt;
  return Integer(*x);
}

}  // namespace

std::vector<TheoremVerdict> verify_theorems(const CohomologyAlgebra& algebra, int k_max,
                                            const ComputeOptions& options) {
  const bool closed = algebra.closed();
  const int d = algebra.dimension();
  const long n = static_cast<long>(codimension_one_rank(algebra));
  std::vector<TheoremVerdict> out;
  for (int k = 1; k <= k_max; ++k) {
    const BettiTable table = betti_table(algebra, k, closed && k >= 2, options);
    const Integer top(*table.chdim_rational());
    const auto predicted = widen(predicted_chdim(algebra, k));
    const int top_degree = (d - 1) * k + (closed ? 1 : 0);
    const Integer top_betti(static_cast<unsigned long>(table.at(top_degree)));
    const auto bound = lower_bound_rank(n, k, closed);
    const auto kallel = algebra.connectivity()
                            ? widen(kallel_upper_bound(d, k, *algebra.connectivity(), !closed))
                            : std::nullopt;
    const auto ordered = widen(ordered_lower_bound(algebra, k));

    out.push_back(judge(k, TheoremId::kT1, closed ? std::nullopt : predicted, top, "=="));
    out.push_back(judge(k, TheoremId::kT2, closed ? predicted : std::nullopt, top, "=="));
    out.push_back(judge(k, TheoremId::kT3, closed ? std::nullopt : bound, top_betti, ">="));
    out.push_back(judge(k, TheoremId::kT4, closed ? bound : std::nullopt, top_betti, ">="));
    out.push_back(judge(k, TheoremId::kKallel, kallel, top, "<="));
    out.push_back(judge(k, TheoremId::kC51, closed ? std::nullopt : ordered, top, ">="));
    out.push_back(judge(k, TheoremId::kC52, closed ? ordered : std::nullopt, top, ">="));
  }
  return out;
}

}  // namespace confspace
