#pragma once

#include <cstdint>
#include <vector>

namespace arspec::chebyshev {

/// Largest degree accepted by the recurrence evaluator.
inline constexpr std::int64_t kMaxDegree = 1'000'000;

/// U_m(x) by forward three-term recurrence from U_0 = 1, U_1 = 2x.
///
/// Stable for |x| <= 1. Outside [-1, 1] the values grow like
/// (|x| + sqrt(x^2 - 1))^m and overflow to infinity for large m.
double u(std::int64_t m, double x);

/// sin((m + 1) theta) / sin(theta). Throws SingularArgument when sin(theta)
/// is exactly zero; use `u_limit_at_zero` / `u_limit_at_pi` there.
double u_trig(std::int64_t m, double theta);

/// lim theta->0 of the trig form, i.e. U_m(1) = m + 1.
double u_limit_at_zero(std::int64_t m);
/// lim theta->pi of the trig form, i.e. U_m(-1) = (-1)^m (m + 1).
double u_limit_at_pi(std::int64_t m);

/// cos(j pi / (m + 1)) for j = 1..m, descending.
std::vector<double> u_roots(std::int64_t m);

/// det(tI - M) for the m x m tridiagonal matrix with zero diagonal and unit
/// off-diagonals, evaluated as U_m(t / 2).
double toeplitz_char_poly(std::int64_t m, double t);

}  // namespace arspec::chebyshev
