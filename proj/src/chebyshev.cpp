#include "arspec/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "arspec/error.hpp"

namespace arspec::chebyshev {

namespace {

void check_degree(std::int64_t m) {
  if (m < 0 || m > kMaxDegree) {
    throw Error(ErrorKind::Domain, "Chebyshev degree out of range: " + std::to_string(m));
  }
}

}  // namespace

double u(std::int64_t m, double x) {
  check_degree(m);
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (std::int64_t i = 2; i <= m; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double u_trig(std::int64_t m, double theta) {
  check_degree(m);
  const double s = std::sin(theta);
  if (s == 0.0 || theta == 0.0 || theta == std::numbers::pi) {
    throw Error(ErrorKind::SingularArgument, "sin(theta) vanishes; use the limit helpers");
  }
  return std::sin(static_cast<double>(m + 1) * theta) / s;
}

double u_limit_at_zero(std::int64_t m) {
  check_degree(m);
  return static_cast<double>(m + 1);
}

double u_limit_at_pi(std::int64_t m) {
  check_degree(m);
  return (m % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(m + 1);
}

std::vector<double> u_roots(std::int64_t m) {
  check_degree(m);
  if (m < 1) throw Error(ErrorKind::Domain, "U_0 has no roots");
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(m));
  for (std::int64_t j = 1; j <= m; ++j) {
    roots.push_back(std::cos(static_cast<double>(j) * std::numbers::pi / static_cast<double>(m + 1)));
  }
  return roots;
}

double toeplitz_char_poly(std::int64_t m, double t) {
  if (m < 1) throw Error(ErrorKind::Domain, "Toeplitz order must be >= 1");
  return u(m, t / 2.0);
}

}  // namespace arspec::chebyshev
