#include "confspace/complex.hpp"

#include <algorithm>
#include <functional>

namespace confspace {

// ---------------------------------------------------------------------------
// Generators

std::string GeneratorSet::label(std::size_t g, const CohomologyAlgebra& algebra) const {
  const Generator& gen = gens_.at(g);
  return std::string(gen.kind == GeneratorKind::kV ? "v" : "w") + std::to_string(gen.degree) +
         "[" + algebra.basis().at(gen.source).name + "]";
}

GeneratorSet build_generators(const CohomologyAlgebra& algebra) {
  const int d = algebra.dimension();
  GeneratorSet out;
  out.dimension_ = d;
  out.closed_ = algebra.closed();

  std::vector<Generator> vs;
  std::vector<Generator> ws;
  for (std::size_t b = 0; b < algebra.size(); ++b) {
    const int p = algebra.degree(b);
    vs.push_back({GeneratorKind::kV, b, d - p});
    ws.push_back({GeneratorKind::kW, b, 2 * d - 1 - p});
  }
  const auto by_degree = [](const Generator& x, const Generator& y) {
    return std::pair(x.degree, x.source) < std::pair(y.degree, y.source);
  };
  std::sort(vs.begin(), vs.end(), by_degree);
  std::sort(ws.begin(), ws.end(), by_degree);

  out.v_count_ = vs.size();
  out.gens_ = std::move(vs);
  out.gens_.insert(out.gens_.end(), ws.begin(), ws.end());
  out.v_of_source_.resize(algebra.size());
  out.w_of_source_.resize(algebra.size());
  for (std::size_t g = 0; g < out.gens_.size(); ++g) {
    auto& table = out.is_v(g) ? out.v_of_source_ : out.w_of_source_;
    table[out.gens_[g].source] = g;
  }

  if (algebra.closed()) {
    const auto units = algebra.classes_of_degree(0);
    const auto tops = algebra.classes_of_degree(d);
    if (units.size() == 1) {
      out.v_top_ = out.v_of_source_[units.front()];
      out.w_top_ = out.w_of_source_[units.front()];
    }
    if (tops.size() == 1) out.v_bottom_ = out.v_of_source_[tops.front()];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomials

int Monomial::length(const GeneratorSet& gens) const {
  int n = 0;
  for (std::size_t g = 0; g < exps_.size(); ++g) n += exps_[g] * (gens.is_v(g) ? 1 : 2);
  return n;
}

int Monomial::weight(const GeneratorSet& gens) const {
  int n = 0;
  for (std::size_t g = gens.v_count(); g < exps_.size(); ++g) n += exps_[g];
  return n;
}

int Monomial::degree(const GeneratorSet& gens) const {
  int n = 0;
  for (std::size_t g = 0; g < exps_.size(); ++g) n += exps_[g] * gens[g].degree;
  return n;
}

std::vector<std::size_t> Monomial::factors() const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < exps_.size(); ++g) out.insert(out.end(), exps_[g], g);
  return out;
}

std::string Monomial::to_string(const GeneratorSet& gens, const CohomologyAlgebra& algebra) const {
  std::string out;
  for (std::size_t g = 0; g < exps_.size(); ++g) {
    if (exps_[g] == 0) continue;
    if (!out.empty()) out += ' ';
    out += gens.label(g, algebra);
    if (exps_[g] > 1) out += '^' + std::to_string(exps_[g]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // FNV-1a over the exponents.
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::pair<Monomial, int>> normalize_product(const GeneratorSet& gens,
                                                          std::span<const std::size_t> factors) {
  Monomial m(gens.size());
  int inversions = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::size_t gi = factors[i];
    if (gens[gi].odd()) {
      if (m[gi] != 0) return std::nullopt;
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        if (gens[factors[j]].odd() && factors[j] < gi) ++inversions;
      }
    }
    ++m[gi];
  }
  return std::pair{std::move(m), inversions % 2 == 0 ? 1 : -1};
}

void ChainVector::add(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ChainVector::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------------------
// Bases

std::size_t BigradedBasis::total_size() const {
  std::size_t n = 0;
  for (const auto& [key, monos] : slices) n += monos.size();
  return n;
}

std::size_t BigradedBasis::dim(SliceKey key) const {
  const auto it = slices.find(key);
  return it == slices.end() ? 0 : it->second.size();
}

namespace {

using ExponentList = std::vector<std::vector<Monomial::Exponent>>;

// All exponent vectors over generators [first, last) summing to `total`,
// odd generators capped at 1 and optional per-generator caps applied.
// Lexicographically descending.
ExponentList multisets(const GeneratorSet& gens, std::size_t first, std::size_t last, int total,
                       const std::vector<int>& cap) {
  ExponentList out;
  std::vector<Monomial::Exponent> current(last - first, 0);
  std::function<void(std::size_t, int)> recurse = [&](std::size_t g, int left) {
    if (g == last) {
      if (left == 0) out.push_back(current);
      return;
    }
    int hi = gens[g].odd() ? std::min(left, 1) : left;
    hi = std::min(hi, cap[g]);
    for (int e = hi; e >= 0; --e) {
      current[g - first] = static_cast<Monomial::Exponent>(e);
      recurse(g + 1, left - e);
    }
    current[g - first] = 0;
  };
  recurse(first, total);
  return out;
}

}  // namespace

bool in_reduced_basis(const GeneratorSet& gens, const Monomial& m) {
  if (gens.v_top() && m[*gens.v_top()] >= 2) return false;
  if (gens.w_top() && m[*gens.w_top()] >= 1) return false;
  return true;
}

BigradedBasis enumerate_basis(const GeneratorSet& gens, int k, bool reduced,
                              std::size_t max_basis) {
  if (k < 0) throw std::invalid_argument("number of points must be nonnegative");
  BigradedBasis basis;
  basis.k = k;
  if (reduced && !gens.closed()) {
    basis.notices.push_back("reduction is the identity for open manifolds");
    reduced = false;
  }
  if (reduced && k < 2) throw std::invalid_argument("the reduced complex requires k >= 2");
  basis.reduced = reduced;

  std::vector<int> cap(gens.size(), k);
  if (reduced) {
    if (gens.v_top()) cap[*gens.v_top()] = 1;
    if (gens.w_top()) cap[*gens.w_top()] = 0;
  }

  std::size_t count = 0;
  for (int w = 0; w <= k / 2; ++w) {
    const ExponentList vparts = multisets(gens, 0, gens.v_count(), k - 2 * w, cap);
    const ExponentList wparts = multisets(gens, gens.v_count(), gens.size(), w, cap);
    for (const auto& vp : vparts) {
      for (const auto& wp : wparts) {
        if (++count > max_basis) {
          throw BasisLimitError("basis for k = " + std::to_string(k) + " exceeds " +
                                std::to_string(max_basis) + " monomials");
        }
        std::vector<Monomial::Exponent> exps(vp);
        exps.insert(exps.end(), wp.begin(), wp.end());
        Monomial m(std::move(exps));
        basis.slices[{m.degree(gens), w}].push_back(std::move(m));
      }
    }
  }
  return basis;
}

BigradedBasis reduce_complex(const GeneratorSet& gens, const BigradedBasis& basis) {
  if (basis.k < 2) throw std::invalid_argument("the reduced complex requires k >= 2");
  BigradedBasis out = basis;
  if (!gens.closed()) {
    out.notices.push_back("reduction is the identity for open manifolds");
    return out;
  }
  out.reduced = true;
  for (auto it = out.slices.begin(); it != out.slices.end();) {
    std::erase_if(it->second, [&](const Monomial& m) { return !in_reduced_basis(gens, m); });
    it = it->second.empty() ? out.slices.erase(it) : std::next(it);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Differentials

DifferentialKind natural_differential(const CohomologyAlgebra& algebra) {
  return algebra.closed() ? DifferentialKind::kCohomological : DifferentialKind::kHomological;
}

Differential::Differential(const CohomologyAlgebra& algebra, const GeneratorSet& gens,
                           DifferentialKind kind)
    : gens_(&gens), kind_(kind) {
  if (kind == DifferentialKind::kCohomological) {
    w_image_.resize(gens.size());
    for (std::size_t g = gens.v_count(); g < gens.size(); ++g) {
      const std::size_t c = gens[g].source;
      for (const auto& t : comultiplication(algebra, algebra.degree(c), c)) {
        w_image_[g].push_back({gens.v_of(t.left), gens.v_of(t.right), t.coeff});
      }
    }
    return;
  }
  for (std::size_t g1 = 0; g1 < gens.v_count(); ++g1) {
    for (std::size_t g2 = g1; g2 < gens.v_count(); ++g2) {
      const auto& terms = algebra.product(gens[g1].source, gens[g2].source);
      if (terms.empty()) continue;
      const int sign = gens[g2].odd() ? -1 : 1;
      auto& image = contraction_[{g1, g2}];
      for (const auto& [c, coeff] : terms) image.push_back({gens.w_of(c), sign * coeff});
    }
  }
}

ChainVector Differential::apply(const Monomial& m) const {
  ChainVector out;
  if (kind_ == DifferentialKind::kCohomological) {
    apply_cohomological(m, Rational(1), out);
  } else {
    apply_homological(m, Rational(1), out);
  }
  return out;
}

ChainVector Differential::apply(const ChainVector& v) const {
  ChainVector out;
  for (const auto& [m, c] : v.terms()) {
    if (kind_ == DifferentialKind::kCohomological) {
      apply_cohomological(m, c, out);
    } else {
      apply_homological(m, c, out);
    }
  }
  return out;
}

void Differential::apply_cohomological(const Monomial& m, const Rational& scale,
                                       ChainVector& out) const {
  const GeneratorSet& gens = *gens_;
  const std::vector<std::size_t> f = m.factors();
  std::vector<std::size_t> seq;
  seq.reserve(f.size() + 1);
  int prefix_degree = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int outer = prefix_degree % 2 == 0 ? 1 : -1;
    for (const Quadratic& q : w_image_[f[i]]) {
      seq.assign(f.begin(), f.begin() + i);
      seq.push_back(q.first);
      seq.push_back(q.second);
      seq.insert(seq.end(), f.begin() + i + 1, f.end());
      if (auto term = normalize_product(gens, seq)) {
        out.add(term->first, scale * q.coeff * (outer * term->second));
      }
    }
    prefix_degree += gens[f[i]].degree;
  }
}

void Differential::apply_homological(const Monomial& m, const Rational& scale,
                                     ChainVector& out) const {
  if (contraction_.empty()) return;
  const GeneratorSet& gens = *gens_;
  const std::vector<std::size_t> f = m.factors();
  std::vector<int> prefix(f.size() + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) prefix[i + 1] = prefix[i] + gens[f[i]].degree;

  std::vector<std::size_t> seq;
  seq.reserve(f.size());
  for (std::size_t i = 0; i < f.size() && gens.is_v(f[i]); ++i) {
    for (std::size_t j = i + 1; j < f.size() && gens.is_v(f[j]); ++j) {
      const auto it = contraction_.find({f[i], f[j]});
      if (it == contraction_.end()) continue;
      const int di = gens[f[i]].degree;
      const int dj = gens[f[j]].degree;
      // Koszul sign of moving x_i, then x_j, to the front.
      const int exponent = di * prefix[i] + dj * (prefix[j] - di);
      const int pull = exponent % 2 == 0 ? 1 : -1;
      for (const Linear& l : it->second) {
        seq.clear();
        seq.push_back(l.target);
        for (std::size_t r = 0; r < f.size(); ++r) {
          if (r != i && r != j) seq.push_back(f[r]);
        }
        if (auto term = normalize_product(gens, seq)) {
          out.add(term->first, scale * l.coeff * (pull * term->second));
        }
      }
    }
  }
}

ChainVector differential_closed(const CohomologyAlgebra& algebra, const GeneratorSet& gens,
                                const Monomial& m) {
  return Differential(algebra, gens, DifferentialKind::kCohomological).apply(m);
}

ChainVector differential_open(const CohomologyAlgebra& algebra, const GeneratorSet& gens,
                              const Monomial& m) {
  return Differential(algebra, gens, DifferentialKind::kHomological).apply(m);
}

// ---------------------------------------------------------------------------
// Matrices

RationalMatrix slice_matrix(const Differential& diff, const GeneratorSet& gens,
                            const BigradedBasis& basis, BigradedBasis::SliceKey source) {
  static const std::vector<Monomial> kEmpty;
  const BigradedBasis::SliceKey target{source.first + diff.degree_shift(),
                                       source.second + diff.weight_shift()};
  const auto src_it = basis.slices.find(source);
  const auto tgt_it = basis.slices.find(target);
  const auto& src = src_it == basis.slices.end() ? kEmpty : src_it->second;
  const auto& tgt = tgt_it == basis.slices.end() ? kEmpty : tgt_it->second;

  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  row_of.reserve(tgt.size());
  for (std::size_t r = 0; r < tgt.size(); ++r) row_of.emplace(tgt[r], r);

  RationalMatrix mat(tgt.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const ChainVector image = diff.apply(src[c]);
    for (const auto& [m, coeff] : image.terms()) {
      const auto it = row_of.find(m);
      if (it != row_of.end()) {
        mat.set(it->second, c, coeff);
      } else if (!basis.reduced || in_reduced_basis(gens, m)) {
        throw std::logic_error("differential left the enumerated basis");
      }
    }
  }
  return mat;
}

std::map<BigradedBasis::SliceKey, RationalMatrix> assemble_matrices(
    const CohomologyAlgebra& algebra, const GeneratorSet& gens, const BigradedBasis& basis,
    DifferentialKind kind) {
  const Differential diff(algebra, gens, kind);
  std::map<BigradedBasis::SliceKey, RationalMatrix> out;
  for (const auto& [key, monos] : basis.slices) out.emplace(key, slice_matrix(diff, gens, basis, key));
  return out;
}

}  // namespace confspace
