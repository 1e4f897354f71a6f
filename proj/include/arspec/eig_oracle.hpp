#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "arspec/matrix.hpp"

namespace arspec::oracle {

struct EigenResult {
  std::size_t order = 0;
  std::vector<double> eigenvalues;  // ascending
  int sweeps = 0;
  double off_norm = 0.0;
};

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr int kMaxSweeps = 100;

/// Cyclic-by-row Jacobi with a threshold strategy. Iterates until the
/// off-diagonal Frobenius norm drops below tol * ||m||_F.
///
/// Throws Symmetry if m is not symmetric within 1e-12 and Convergence if 100
/// sweeps are not enough.
EigenResult jacobi_eigenvalues(const RealMatrix& m, double tol = kDefaultTolerance);

/// Eigenvalues of the quotient matrix of an equitable partition. The
/// similarity D^{1/2} Q D^{-1/2}, D = diag(cell_sizes), is symmetric for such
/// quotients and is handed to the Jacobi solver.
EigenResult quotient_eigenvalues(const RealMatrix& quotient, std::span<const std::size_t> cell_sizes,
                                 double tol = kDefaultTolerance);

/// det(tI - m) through LU with partial pivoting. Returns 0 for singular tI - m.
double char_poly_eval(const RealMatrix& m, double t);

/// det(m) through LU with partial pivoting.
double determinant(RealMatrix m);

}  // namespace arspec::oracle
