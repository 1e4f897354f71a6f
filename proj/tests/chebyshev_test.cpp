#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "arspec/chebyshev.hpp"
#include "arspec/eig_oracle.hpp"
#include "arspec/error.hpp"

namespace arspec::chebyshev {
namespace {

constexpr double kPi = std::numbers::pi;

RealMatrix path_matrix(std::size_t m) {
  RealMatrix p(m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    p(i, i + 1) = 1.0;
    p(i + 1, i) = 1.0;
  }
  return p;
}

TEST(ChebyshevU, LowDegrees) {
  EXPECT_DOUBLE_EQ(u(2, 1.0), 3.0);
  EXPECT_DOUBLE_EQ(u(0, 0.37), 1.0);
  EXPECT_DOUBLE_EQ(u(0, -5.0), 1.0);
  EXPECT_DOUBLE_EQ(u(3, 0.5), -1.0);
  EXPECT_DOUBLE_EQ(u(1, 0.25), 0.5);
}

TEST(ChebyshevU, DegreeLimits) {
  EXPECT_THROW(u(-1, 0.0), Error);
  EXPECT_THROW(u(kMaxDegree + 1, 0.0), Error);
}

TEST(ChebyshevU, TrigForm) {
  EXPECT_NEAR(u_trig(1, kPi / 2), 0.0, 1e-15);
  EXPECT_NEAR(u_trig(4, kPi / 5), 0.0, 1e-15);
  EXPECT_NEAR(u_trig(7, 0.3), u(7, std::cos(0.3)), 1e-10);
  try {
    u_trig(3, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularArgument);
  }
  EXPECT_THROW(u_trig(3, kPi), Error);
  EXPECT_DOUBLE_EQ(u_limit_at_zero(5), 6.0);
  EXPECT_DOUBLE_EQ(u_limit_at_pi(5), -6.0);
  EXPECT_DOUBLE_EQ(u_limit_at_pi(4), 5.0);
  EXPECT_DOUBLE_EQ(u(5, -1.0), u_limit_at_pi(5));
}

TEST(ChebyshevU, RecurrenceAgreesWithTrigForm) {
  std::mt19937_64 rng(20180711);
  std::uniform_real_distribution<double> dist(0.01, kPi - 0.01);
  std::vector<double> thetas(1000);
  for (auto& t : thetas) t = dist(rng);
  for (std::int64_t m = 0; m <= 200; ++m) {
    for (double t : thetas) {
      ASSERT_NEAR(u(m, std::cos(t)), u_trig(m, t), 1e-8 * static_cast<double>(m + 1)) << "m=" << m;
    }
  }
}

TEST(ChebyshevU, MaxMagnitudeOnUnitInterval) {
  for (std::int64_t m = 0; m <= 50; ++m) {
    double best = 0.0;
    for (int i = 0; i <= 4000; ++i) {
      const double x = -1.0 + 2.0 * i / 4000.0;
      best = std::max(best, std::abs(u(m, x)));
    }
    EXPECT_LE(best, static_cast<double>(m + 1) + 1e-9);
    EXPECT_DOUBLE_EQ(std::abs(u(m, 1.0)), static_cast<double>(m + 1));
    EXPECT_DOUBLE_EQ(std::abs(u(m, -1.0)), static_cast<double>(m + 1));
  }
}

TEST(ChebyshevU, SignChangesEqualDegree) {
  for (std::int64_t m = 1; m <= 50; ++m) {
    int changes = 0;
    constexpr int kGrid = 200000;
    double prev = u(m, -1.0 + 1e-9);
    for (int i = 1; i <= kGrid; ++i) {
      const double x = -1.0 + 1e-9 + (2.0 - 2e-9) * i / kGrid;
      const double cur = u(m, x);
      if ((cur > 0) != (prev > 0)) ++changes;
      prev = cur;
    }
    EXPECT_EQ(changes, m) << "m=" << m;
  }
}

TEST(ChebyshevRoots, Formula) {
  EXPECT_NEAR(u_roots(1)[0], 0.0, 1e-16);
  const auto r2 = u_roots(2);
  ASSERT_EQ(r2.size(), 2U);
  EXPECT_NEAR(r2[0], 0.5, 1e-15);
  EXPECT_NEAR(r2[1], -0.5, 1e-15);
  for (std::int64_t m = 1; m <= 50; ++m) {
    const auto roots = u_roots(m);
    ASSERT_EQ(roots.size(), static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < roots.size(); ++i) EXPECT_LT(roots[i], roots[i - 1]);
    for (double r : roots) EXPECT_LT(std::abs(u(m, r)), 1e-9) << "m=" << m;
  }
  EXPECT_THROW(u_roots(0), Error);
}

TEST(ToeplitzCharPoly, SmallCases) {
  for (double t : {-1.5, 0.0, 0.3, 2.0}) EXPECT_DOUBLE_EQ(toeplitz_char_poly(1, t), t);
  EXPECT_DOUBLE_EQ(toeplitz_char_poly(2, 0.0), -1.0);
}

TEST(ToeplitzCharPoly, VanishesAtPathEigenvalues) {
  // Eigenvalues of the 6x6 path matrix from the Jacobi oracle.
  const auto eig = oracle::jacobi_eigenvalues(path_matrix(6)).eigenvalues;
  for (double t : eig) EXPECT_LT(std::abs(toeplitz_char_poly(6, t)), 1e-9);
  for (int j = 1; j <= 6; ++j) {
    EXPECT_LT(std::abs(toeplitz_char_poly(6, 2.0 * std::cos(j * kPi / 7.0))), 1e-9);
  }
}

TEST(ToeplitzCharPoly, MatchesLuDeterminant) {
  for (std::int64_t m = 1; m <= 50; ++m) {
    const auto p = path_matrix(static_cast<std::size_t>(m));
    for (double t : {-2.5, -1.3, -0.2, 0.45, 1.7, 2.2, 3.0}) {
      const double det = oracle::char_poly_eval(p, t);
      const double cheb = toeplitz_char_poly(m, t);
      ASSERT_NEAR(cheb, det, 1e-9 * std::max(1.0, std::abs(det))) << "m=" << m << " t=" << t;
    }
  }
}

}  // namespace
}  // namespace arspec::chebyshev
