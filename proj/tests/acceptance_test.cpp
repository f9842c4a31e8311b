// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "confspace/analysis.hpp"
#include "confspace/cli.hpp"
#include "confspace/presets.hpp"
#include "support/test_support.hpp"

namespace confspace {
namespace {

using Betti = std::map<int, std::size_t>;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string str(const Betti& b) {
  std::ostringstream os;
  os << '{';
  for (auto it = b.begin(); it != b.end(); ++it) {
    os << (it == b.begin() ? "" : ", ") << it->first << ':' << it->second;
  }
  os << '}';
  return os.str();
}

std::vector<CohomologyAlgebra> presets() {
  std::vector<CohomologyAlgebra> out;
  for (const auto& key : preset_catalog()) out.push_back(get_preset(key));
  return out;
}

long multisets(long n, long s) {
  if (s == 0) return 1;
  if (n == 0) return 0;
  long total = 0;
  for (long first = 0; first < n; ++first) total += multisets(n - first, s - 1);
  return total;
}

// Top-rank bound evaluated straight from the closed-form binomials.
long derived_bound(long n, long k, bool closed) {
  if (!closed) return k % 2 == 0 ? multisets(n, k / 2) : n * multisets(n, (k - 1) / 2);
  return k % 2 == 0 ? n * multisets(n, k / 2 - 1) - multisets(n, k / 2) : multisets(n, (k - 1) / 2);
}

Outcome arithmeticity_closed() {
  Outcome o;
  for (const char* key : {"torus", "genus:2"}) {
    const CohomologyAlgebra a = get_preset(key);
    std::optional<int> previous;
    for (int k = 3; k <= 7; ++k) {
      const int c = chdim(a, k);
      o.require(c == k + 1, std::string(key) + " k=" + std::to_string(k) + " chdim=" + std::to_string(c));
      if (previous) o.require(c - *previous == 1, std::string(key) + " difference at k=" + std::to_string(k));
      previous = c;
    }
  }
  return o;
}

Outcome arithmeticity_open() {
  Outcome o;
  for (const char* key : {"genus:1-punctured", "genus:2-punctured"}) {
    const CohomologyAlgebra a = get_preset(key);
    for (int k = 1; k <= 7; ++k) {
      const int c = chdim(a, k);
      o.require(c == k, std::string(key) + " k=" + std::to_string(k) + " chdim=" + std::to_string(c));
    }
  }
  return o;
}

Outcome rank_lower_bounds() {
  struct Check {
    const char* key;
    int k;
    int degree;
    long n;
    bool closed;
  };
  const Check checks[] = {
      {"torus", 3, 4, 2, true},           {"torus", 4, 5, 2, true},
      {"torus", 5, 6, 2, true},           {"genus:1-punctured", 2, 2, 2, false},
      {"genus:1-punctured", 3, 3, 2, false}, {"genus:2", 3, 4, 4, true},
  };
  const long expected[] = {2, 1, 3, 2, 4, 4};
  Outcome o;
  for (std::size_t i = 0; i < std::size(checks); ++i) {
    const Check& c = checks[i];
    const CohomologyAlgebra a = get_preset(c.key);
    const long bound = derived_bound(c.n, c.k, c.closed);
    const std::string tag = std::string(c.key) + " k=" + std::to_string(c.k);
    o.require(bound == expected[i], tag + " derived bound " + std::to_string(bound));
    o.require(lower_bound_rank(c.n, c.k, c.closed) == Integer(bound), tag + " library bound");
    o.require(codimension_one_rank(a) == static_cast<std::size_t>(c.n), tag + " n");
    const std::size_t top = betti_table(a, c.k, c.closed).at(c.degree);
    o.require(static_cast<long>(top) >= bound, tag + " betti " + std::to_string(top));
  }
  return o;
}

Outcome arnold_oracle() {
  Outcome o;
  const CohomologyAlgebra r2 = get_preset("r2");
  for (int k = 2; k <= 10; ++k) {
    const Betti b = betti_table(r2, k, false).betti;
    o.require(b == Betti{{0, 1}, {1, 1}}, "k=" + std::to_string(k) + " " + str(b));
  }
  return o;
}

// Hand evaluation of the sphere complexes. Generators: v0, v2 (even),
// w1, w3 (odd); D(w1) = 2 v0 v2, D(w3) = v2^2, D(v) = 0.
//   k = 2: v0^2 | w1 | v0 v2 | w3 | v2^2, D(w1) = 2 v0 v2, D(w3) = v2^2.
//   k = 3: v0^3 | v0 w1 | v0^2 v2 | v2 w1, v0 w3 | v0 v2^2 | v2 w3 | v2^3,
//          D(v0 w1) = 2 v0^2 v2, D(v2 w1) = 2 v0 v2^2, D(v0 w3) = v0 v2^2,
//          D(v2 w3) = v2^3.
struct HandComplex {
  std::vector<std::size_t> dims;                    // by degree
  std::map<int, testing::DenseMatrix> d;           // degree i -> i+1
};

Betti hand_betti(const HandComplex& c) {
  Betti out;
  std::vector<std::size_t> rank(c.dims.size() + 1, 0);
  for (const auto& [i, m] : c.d) rank[i] = testing::dense_rank(m);
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    const std::size_t in = i == 0 ? 0 : rank[i - 1];
    const std::size_t b = c.dims[i] - rank[i] - in;
    if (b != 0) out[static_cast<int>(i)] = b;
  }
  return out;
}

Outcome sphere_oracle() {
  const HandComplex k2{{1, 1, 1, 1, 1}, {{1, {{Rational(2)}}}, {3, {{Rational(1)}}}}};
  const HandComplex k3{{1, 1, 1, 2, 1, 1, 1},
                       {{1, {{Rational(2)}}},
                        {3, {{Rational(2), Rational(1)}}},
                        {5, {{Rational(1)}}}}};
  Outcome o;
  const CohomologyAlgebra s = get_preset("sphere-even:2");
  const std::pair<int, const HandComplex*> cases[] = {{2, &k2}, {3, &k3}};
  const Betti expected[] = {{{0, 1}}, {{0, 1}, {3, 1}}};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto [k, hand] = cases[i];
    const Betti oracle = hand_betti(*hand);
    o.require(oracle == expected[i], "hand oracle k=" + std::to_string(k) + " " + str(oracle));
    const BettiTable full = betti_table(s, k, false);
    std::size_t size = 0;
    for (const auto& [key, dim] : full.slice_dims) size += dim;
    std::size_t hand_size = 0;
    for (std::size_t dim : hand->dims) hand_size += dim;
    o.require(size == hand_size, "k=" + std::to_string(k) + " complex size " + std::to_string(size));
    o.require(full.betti == oracle, "full k=" + std::to_string(k) + " " + str(full.betti));
    const Betti reduced = betti_table(s, k, true).betti;
    o.require(reduced == oracle, "reduced k=" + std::to_string(k) + " " + str(reduced));
  }
  return o;
}

Outcome reduction_equivalence() {
  Outcome o;
  for (const auto& a : presets()) {
    if (!a.closed()) continue;
    for (int k = 2; k <= 6; ++k) {
      const Betti r = betti_table(a, k, true).betti;
      const Betti f = betti_table(a, k, false).betti;
      o.require(r == f, a.name() + " k=" + std::to_string(k) + " " + str(r) + " vs " + str(f));
    }
  }
  return o;
}

bool nilpotent_with_bidegree(const CohomologyAlgebra& a, int k_max, std::string& where) {
  const GeneratorSet gens = build_generators(a);
  std::vector<DifferentialKind> kinds{DifferentialKind::kHomological};
  if (a.closed()) kinds.push_back(DifferentialKind::kCohomological);
  for (DifferentialKind kind : kinds) {
    const Differential diff(a, gens, kind);
    const int shift = kind == DifferentialKind::kCohomological ? 1 : -1;
    for (int k = 0; k <= k_max; ++k) {
      const BigradedBasis basis = enumerate_basis(gens, k, false);
      for (const auto& [key, monos] : basis.slices) {
        for (const auto& m : monos) {
          const ChainVector once = diff.apply(m);
          for (const auto& [t, c] : once.terms()) {
            if (t.degree(gens) != key.first + shift || t.weight(gens) != key.second - shift) {
              where = a.name() + " bidegree at " + m.to_string(gens, a);
              return false;
            }
          }
          if (!diff.apply(once).empty()) {
            where = a.name() + " square nonzero at " + m.to_string(gens, a);
            return false;
          }
        }
      }
    }
  }
  return true;
}

Outcome nilpotency() {
  Outcome o;
  std::string where;
  for (const auto& a : presets()) o.require(nilpotent_with_bidegree(a, 6, where), where);
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 100; ++i) {
    const CohomologyAlgebra a = testing::random_valid_algebra(rng);
    o.require(validate_algebra(a).ok(), "random algebra " + std::to_string(i) + " invalid");
    o.require(nilpotent_with_bidegree(a, 5, where), "random " + std::to_string(i) + ": " + where);
  }
  return o;
}

Outcome duality() {
  Outcome o;
  for (const auto& a : presets()) {
    if (!a.closed()) continue;
    for (int k = 0; k <= 5; ++k) {
      const Betti d = betti_table(a, k, false, {.differential = DifferentialKind::kCohomological}).betti;
      const Betti b = betti_table(a, k, false, {.differential = DifferentialKind::kHomological}).betti;
      o.require(d == b, a.name() + " k=" + std::to_string(k) + " " + str(d) + " vs " + str(b));
    }
  }
  return o;
}

Outcome kallel_sandwich() {
  Outcome o;
  for (const auto& a : presets()) {
    o.require(a.connectivity().has_value(), a.name() + " has no connectivity");
    if (!a.connectivity()) continue;
    for (int k = 2; k <= 6; ++k) {
      const int c = chdim(a, k);
      const auto bound = kallel_upper_bound(a.dimension(), k, *a.connectivity(), !a.closed());
      o.require(bound && c <= *bound, a.name() + " k=" + std::to_string(k));
    }
  }
  const CohomologyAlgebra s = get_preset("sphere-even:2");
  o.require(chdim(s, 3) == 3 && kallel_upper_bound(2, 3, *s.connectivity(), false) == 3,
            "sphere-even:2 k=3 equality");
  return o;
}

Outcome one_point() {
  Outcome o;
  for (const auto& a : presets()) {
    Betti manifold;
    for (int i = 0; i <= a.dimension(); ++i) {
      const std::size_t b = a.dim_in_degree(a.closed() ? i : a.dimension() - i);
      if (b != 0) manifold[i] = b;
    }
    const Betti b = betti_table(a, 1, false).betti;
    o.require(b == manifold, a.name() + " " + str(b) + " vs " + str(manifold));
  }
  return o;
}

Outcome euler_identity() {
  Outcome o;
  for (const auto& a : presets()) {
    long chi = 0;
    for (std::size_t i = 0; i < a.size(); ++i) chi += a.degree(i) % 2 == 0 ? 1 : -1;
    for (int k = 0; k <= 6; ++k) {
      Rational binom(1);
      for (int i = 0; i < k; ++i) binom = binom * Rational(chi - i) / Rational(i + 1);
      for (bool reduced : {false, true}) {
        if (reduced && (!a.closed() || k < 2)) continue;
        const BettiTable t = betti_table(a, k, reduced);
        const std::string tag = a.name() + " k=" + std::to_string(k) + (reduced ? " reduced" : "");
        o.require(t.euler_characteristic() == t.complex_euler_characteristic(), tag);
        o.require(Rational(static_cast<long>(t.euler_characteristic())) == binom, tag + " binomial");
      }
    }
  }
  return o;
}

Outcome determinism() {
  const std::vector<std::string> args{"table", "--preset", "genus:2", "--kmax", "6", "--format", "csv"};
  std::ostringstream out1, out2, err;
  const int c1 = run_cli(args, out1, err);
  const int c2 = run_cli(args, out2, err);
  Outcome o;
  o.require(c1 == kExitOk && c2 == kExitOk, "exit codes " + std::to_string(c1) + "/" + std::to_string(c2));
  o.require(!out1.str().empty() && out1.str() == out2.str(), "outputs differ");
  return o;
}

}  // namespace
}  // namespace confspace

int main() {
  using namespace confspace;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"arithmeticity, closed surfaces", arithmeticity_closed},
      {"arithmeticity, punctured surfaces", arithmeticity_open},
      {"top-rank lower bounds", rank_lower_bounds},
      {"configurations in the plane", arnold_oracle},
      {"sphere hand oracle", sphere_oracle},
      {"reduced equals full", reduction_equivalence},
      {"nilpotency and bidegree", nilpotency},
      {"boundary/coboundary duality", duality},
      {"Kallel sandwich", kallel_sandwich},
      {"one point recovers the manifold", one_point},
      {"Euler characteristic identity", euler_identity},
      {"table determinism", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << name << " (" << secs << " s)";
    if (!o.pass) std::cout << ": " << o.detail;
    std::cout << '\n';
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
