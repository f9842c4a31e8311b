#include <algorithm>
#include <numeric>
#include <random>

#include "confspace/exact_linalg.hpp"
#include "gtest/gtest.h"
#include "support/test_support.hpp"

namespace confspace {
namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

RationalMatrix random_sparse(std::size_t rows, std::size_t cols, double density,
                             std::mt19937_64& rng) {
  std::bernoulli_distribution fill(density);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (fill(rng)) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        m.set(r, c, v);
      }
    }
  }
  return m;
}

TEST(RationalMatrix, StoresNoZeros) {
  RationalMatrix m(2, 3);
  m.set(0, 1, 5);
  m.add(0, 1, -5);
  m.set(1, 2, 0);
  EXPECT_EQ(m.nonzeros(), 0u);
  m.add(1, 0, Rational(1, 2));
  EXPECT_EQ(m.at(1, 0), Rational(1, 2));
  EXPECT_THROW(m.set(2, 0, 1), std::out_of_range);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RationalMatrix()), 0u);
  EXPECT_EQ(rank(RationalMatrix(4, 3)), 0u);
  EXPECT_EQ(rank(from_rows({{2}})), 1u);
  EXPECT_EQ(rank(from_rows({{1, 1}, {2, 2}})), 1u);
  EXPECT_EQ(rank(from_rows({{Rational(1, 3), Rational(2, 3)}, {1, 2}, {0, Rational(-1, 7)}})), 2u);
}

TEST(Rank, LargeEntriesStayExact) {
  // Hilbert matrices are notoriously ill-conditioned but nonsingular.
  const std::size_t n = 12;
  RationalMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h.set(i, j, Rational(1, static_cast<unsigned>(i + j + 1)));
  }
  EXPECT_EQ(rank(h), n);
}

TEST(Rank, AgreesWithDenseOracle) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(0, 50);
  std::uniform_real_distribution<double> density(0.02, 0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const RationalMatrix m = random_sparse(dim(rng), dim(rng), density(rng), rng);
    ASSERT_EQ(rank(m), testing::dense_rank(testing::to_dense(m))) << "trial " << trial;
  }
}

TEST(Rank, LowRankProductsAgreeWithOracle) {
  // Products of thin factors have rank well below min(rows, cols).
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix a = random_sparse(30, 6, 0.6, rng);
    const RationalMatrix b = random_sparse(6, 40, 0.6, rng);
    RationalMatrix p(30, 40);
    for (std::size_t i = 0; i < 30; ++i) {
      for (const auto& [k, v] : a.row(i)) {
        for (const auto& [j, w] : b.row(k)) p.add(i, j, v * w);
      }
    }
    const std::size_t r = rank(p);
    EXPECT_LE(r, 6u);
    EXPECT_EQ(r, testing::dense_rank(testing::to_dense(p)));
  }
}

TEST(Rank, InvariantUnderPermutationAndTransposition) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalMatrix m = random_sparse(25, 18, 0.15, rng);
    std::vector<std::size_t> rp(m.rows()), cp(m.cols());
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    RationalMatrix shuffled(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (const auto& [c, v] : m.row(r)) shuffled.set(rp[r], cp[c], v);
    }
    const std::size_t r0 = rank(m);
    EXPECT_EQ(rank(shuffled), r0);
    EXPECT_EQ(rank(m.transposed()), r0);
    EXPECT_LE(r0, std::min(m.rows(), m.cols()));
  }
}

TEST(BettiFromRanks, Examples) {
  EXPECT_EQ(betti_from_ranks(1, 0, 0), 1u);
  EXPECT_EQ(betti_from_ranks(4, 1, 2), 1u);
  EXPECT_EQ(betti_from_ranks(1, 0, 1), 0u);
  EXPECT_THROW(betti_from_ranks(2, 2, 1), std::logic_error);
}

}  // namespace
}  // namespace confspace
