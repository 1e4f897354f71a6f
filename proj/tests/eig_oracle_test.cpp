#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "arspec/eig_oracle.hpp"
#include "arspec/graph_core.hpp"

namespace arspec::oracle {
namespace {

RealMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  RealMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = dist(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

TEST(Jacobi, K2) {
  const auto r = jacobi_eigenvalues(RealMatrix{{0, 1}, {1, 0}});
  ASSERT_EQ(r.eigenvalues.size(), 2U);
  EXPECT_NEAR(r.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(r.eigenvalues[1], 1.0, 1e-14);
}

TEST(Jacobi, StarK12) {
  // lambda^3 - 2 lambda = 0.
  const auto r = jacobi_eigenvalues(adjacency_from_sequence(CreationSequence::parse("001")).cast<double>());
  EXPECT_NEAR(r.eigenvalues[0], -std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(r.eigenvalues[1], 0.0, 1e-10);
  EXPECT_NEAR(r.eigenvalues[2], std::sqrt(2.0), 1e-10);
}

TEST(Jacobi, RejectsAsymmetric) {
  try {
    jacobi_eigenvalues(RealMatrix{{0, 1}, {0.5, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Symmetry);
  }
}

TEST(Jacobi, ConvergedResultInvariants) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1U, 3U, 10U, 40U, 90U}) {
    const auto m = random_symmetric(n, rng);
    const auto r = jacobi_eigenvalues(m, 1e-12);
    ASSERT_EQ(r.order, n);
    ASSERT_EQ(r.eigenvalues.size(), n);
    EXPECT_TRUE(std::is_sorted(r.eigenvalues.begin(), r.eigenvalues.end()));
    double frob = 0.0;
    for (double v : m.entries()) frob += v * v;
    EXPECT_LE(r.off_norm, 1e-12 * std::sqrt(frob));
    EXPECT_LE(r.sweeps, kMaxSweeps);
  }
}

TEST(Jacobi, TracePreserved) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 60; n += 7) {
    const auto m = random_symmetric(n, rng);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += m(i, i);
    const auto ev = jacobi_eigenvalues(m).eigenvalues;
    EXPECT_NEAR(std::accumulate(ev.begin(), ev.end(), 0.0), trace, 1e-9 * static_cast<double>(n));
  }
}

TEST(Jacobi, PermutationInvariance) {
  std::mt19937_64 rng(13);
  for (std::size_t n : {5U, 17U, 33U}) {
    const auto m = random_symmetric(n, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RealMatrix pm(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) pm(perm[i], perm[j]) = m(i, j);
    const auto a = jacobi_eigenvalues(m).eigenvalues;
    const auto b = jacobi_eigenvalues(pm).eigenvalues;
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(a[i], b[i], 1e-11);
  }
}

TEST(Jacobi, DeterminantConsistency) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_symmetric(6, rng);
    const double det = determinant(m);
    if (std::abs(det) <= 1e-6) continue;
    const auto ev = jacobi_eigenvalues(m).eigenvalues;
    const double prod = std::accumulate(ev.begin(), ev.end(), 1.0, std::multiplies<>());
    EXPECT_NEAR(prod, det, 1e-6 * std::abs(det));
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(CharPoly, IdentityAndInverseAdjacency) {
  EXPECT_EQ(char_poly_eval(RealMatrix::identity(3), 1.0), 0.0);
  EXPECT_NEAR(char_poly_eval(inverse_block_adjacency(4).cast<double>(), -1.0), 0.0, 1e-12);
  EXPECT_NEAR(char_poly_eval(RealMatrix{{2, 0}, {0, 3}}, 0.0), 6.0, 1e-15);
}

TEST(CharPoly, AntiregularAdjacencyRootsAreEigenvalues) {
  const auto a = block_adjacency(4).cast<double>();
  for (double lambda : jacobi_eigenvalues(a).eigenvalues) {
    EXPECT_NEAR(char_poly_eval(a, lambda), 0.0, 1e-8);
  }
}

TEST(QuotientEigenvalues, OneByOne) {
  const std::vector<std::size_t> sizes{5};
  const auto r = quotient_eigenvalues(RealMatrix{{2.5}}, sizes);
  ASSERT_EQ(r.eigenvalues.size(), 1U);
  EXPECT_DOUBLE_EQ(r.eigenvalues[0], 2.5);
}

TEST(QuotientEigenvalues, OddAntiregularQuotientN9) {
  // Canonical A_8 with its first column doubled: partition {v1, v2}, {v3}, ..., {v9} of A_9.
  RealMatrix q = adjacency_from_sequence(antiregular_sequence(8)).cast<double>();
  for (std::size_t i = 0; i < 8; ++i) q(i, 0) *= 2.0;
  const std::vector<std::size_t> sizes{2, 1, 1, 1, 1, 1, 1, 1};
  auto quotient = quotient_eigenvalues(q, sizes).eigenvalues;
  quotient.push_back(0.0);
  std::sort(quotient.begin(), quotient.end());
  const auto full = jacobi_eigenvalues(adjacency_from_sequence(antiregular_sequence(9)).cast<double>()).eigenvalues;
  ASSERT_EQ(quotient.size(), full.size());
  for (std::size_t i = 0; i < full.size(); ++i) EXPECT_NEAR(quotient[i], full[i], 1e-8);
}

TEST(QuotientEigenvalues, RejectsNonEquitable) {
  const std::vector<std::size_t> sizes{1, 1};
  try {
    quotient_eigenvalues(RealMatrix{{0, 1}, {3, 0}}, sizes);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEquitable);
  }
  const std::vector<std::size_t> short_sizes{1};
  EXPECT_THROW(quotient_eigenvalues(RealMatrix{{0, 1}, {1, 0}}, short_sizes), Error);
}

}  // namespace
}  // namespace arspec::oracle
