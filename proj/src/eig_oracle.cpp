#include "arspec/eig_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace arspec::oracle {

namespace {

double frobenius(const RealMatrix& a) {
  double s = 0.0;
  for (double v : a.entries()) s += v * v;
  return std::sqrt(s);
}

double off_diagonal_norm(const RealMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Applies the rotation that annihilates a(p, q) to both sides of a.
void rotate(RealMatrix& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t r = 0; r < a.order(); ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    const double new_rp = arp - s * (arq + tau * arp);
    const double new_rq = arq + s * (arp - tau * arq);
    a(r, p) = new_rp;
    a(p, r) = new_rp;
    a(r, q) = new_rq;
    a(q, r) = new_rq;
  }
}

}  // namespace

EigenResult jacobi_eigenvalues(const RealMatrix& m, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::Domain, "Jacobi tolerance must be positive");
  if (!is_symmetric(m, 1e-12)) throw Error(ErrorKind::Symmetry, "Jacobi input is not symmetric");

  RealMatrix a = m;
  const std::size_t n = a.order();
  const double scale = frobenius(a);
  const double target = tol * scale;

  EigenResult result;
  result.order = n;
  double off = off_diagonal_norm(a);
  while (off >= target && off > 0.0) {
    if (result.sweeps == kMaxSweeps) {
      throw Error(ErrorKind::Convergence,
                  "Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    }
    ++result.sweeps;
    // Threshold strategy: the first sweeps skip small entries.
    const double threshold =
        result.sweeps < 4 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double small = 100.0 * std::abs(apq);
        // After a few sweeps, entries negligible against both diagonal
        // terms are flushed instead of rotated.
        if (result.sweeps > 4 && std::abs(a(p, p)) + small == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + small == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= threshold) continue;
        rotate(a, p, q);
      }
    }
    off = off_diagonal_norm(a);
  }

  result.off_norm = off;
  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = a(i, i);
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  return result;
}

EigenResult quotient_eigenvalues(const RealMatrix& quotient, std::span<const std::size_t> cell_sizes,
                                 double tol) {
  const std::size_t n = quotient.order();
  if (cell_sizes.size() != n) {
    throw Error(ErrorKind::InvalidOrder, "one cell size per quotient row is required");
  }
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (cell_sizes[i] == 0) throw Error(ErrorKind::NotEquitable, "cells must be non-empty");
    root[i] = std::sqrt(static_cast<double>(cell_sizes[i]));
  }
  RealMatrix sym(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym(i, j) = root[i] * quotient(i, j) / root[j];
  if (!is_symmetric(sym, 1e-9)) {
    throw Error(ErrorKind::NotEquitable, "quotient is not symmetrizable by its cell sizes");
  }
  // Remove the sub-1e-9 asymmetry left by rounding before handing off.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (sym(i, j) + sym(j, i));
      sym(i, j) = avg;
      sym(j, i) = avg;
    }
  return jacobi_eigenvalues(sym, tol);
}

double determinant(RealMatrix a) {
  const std::size_t n = a.order();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    const double d = a(col, col);
    det *= d;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / d;
      if (factor == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return det;
}

double char_poly_eval(const RealMatrix& m, double t) {
  RealMatrix shifted(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) shifted(i, j) = (i == j ? t : 0.0) - m(i, j);
  return determinant(std::move(shifted));
}

}  // namespace arspec::oracle
