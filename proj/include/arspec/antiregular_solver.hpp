#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "arspec/error.hpp"

namespace arspec::antiregular {

/// Endpoints of the forbidden interval [(-1 - sqrt 2)/2, (-1 + sqrt 2)/2].
inline constexpr double kOmegaLow = (-1.0 - std::numbers::sqrt2) / 2.0;
inline constexpr double kOmegaHigh = (-1.0 + std::numbers::sqrt2) / 2.0;

enum class Parity { Even, Odd };
enum class Branch { Positive, Negative };

const char* to_string(Parity p);
const char* to_string(Branch b);

struct SolverConfig {
  double theta_tolerance = 1e-13;
  int max_bisection_iters = 200;
  double bracket_inset = 1e-9;  // relative to the bracket width
  int scan_points_per_bracket = 32;

  void validate() const;
};

// ---------------------------------------------------------------------------
// Curves of the trigonometric eigenvalue equation.

/// arccos((1 - 2 lambda - 2 lambda^2) / (2 lambda (lambda + 1))), in [0, pi).
/// Throws Domain for lambda strictly inside the forbidden interval.
double theta_of_lambda(double lambda);

/// The two inverses of theta_of_lambda: f1 maps [0, pi) onto
/// [kOmegaHigh, inf), f2 onto (-inf, kOmegaLow]. f1 + f2 = -1.
double f1(double theta);
double f2(double theta);

/// f1'(theta) = sin(theta) / (2 (cos + 1) sqrt((cos + 1)(cos + 3))) on (0, pi).
/// f2' is its negative.
double f1_derivative(double theta);

/// Odd-order curves g(f1(theta)) and g(f2(theta)) with
/// g(lambda) = (2 - lambda^2) / (lambda (lambda + 1)).
double g1(double theta);
double g2(double theta);

/// sin(k theta) / (sin(k theta) + sin((k - 1) theta)) with the continuous
/// extensions F(0) = k / (2k - 1) and F(pi) = k. Throws SingularArgument at
/// an asymptote 2 j pi / (2k - 1).
double big_f_even(double theta, std::int64_t k);

/// sin((k - 1) theta) / sin(k theta) with F(0) = (k - 1) / k and
/// F(pi) = -(k - 1) / k. Throws SingularArgument at an asymptote j pi / k.
double big_f_odd(double theta, std::int64_t k);

/// sin(m theta) with the product m * theta carried in double-double so that
/// the phase keeps full precision for large m.
double sin_multiple(std::int64_t m, double theta);

// ---------------------------------------------------------------------------
// Root isolation.

/// Asymptote points gamma_0 = 0 < gamma_1 < ... < gamma_{k-1} < pi. Bracket j
/// (1-based) is (gamma_{j-1}, gamma_j), with gamma_k read as pi.
struct BracketSet {
  std::int64_t k = 0;
  Parity parity = Parity::Even;
  std::vector<double> gammas;

  /// gamma_j for 0 <= j <= k; gamma_k is pi.
  double gamma(std::int64_t j) const;
  /// Distance between consecutive asymptotes.
  double spacing() const;
};

BracketSet brackets(std::int64_t k, Parity parity);

struct RootRecord {
  Branch branch = Branch::Positive;
  std::int64_t index = 0;  // j, 1-based; also the bracket index
  double theta = 0.0;
  double lambda = 0.0;
  double residual = 0.0;  // |F - curve| / (1 + |curve|) at theta
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Solves the equation for one branch inside bracket j of A_{2k} (even) or
/// A_{2k+1} (odd). Throws SolverFailure carrying j when no sign change is
/// found.
RootRecord solve_bracket(std::int64_t k, Parity parity, Branch branch, std::int64_t j,
                         const SolverConfig& cfg = {});

struct SpectrumResult {
  std::int64_t n = 0;
  std::int64_t k = 0;
  Parity parity = Parity::Even;
  double trivial = -1.0;
  std::vector<RootRecord> positives;  // lambda^+_1 < ... < lambda^+_k
  std::vector<RootRecord> negatives;  // lambda^-_1 > lambda^-_2 > ...

  /// All n eigenvalues, ascending.
  std::vector<double> eigenvalues() const;
  /// Nontrivial eigenvalues in the order positives then negatives.
  std::vector<double> nontrivial() const;
  double lambda_max() const;
  double lambda_min() const;

  std::string to_json() const;
  /// Header plus one row per eigenvalue: index, sign_class, theta, lambda,
  /// residual, bracket_lo, bracket_hi. The trivial eigenvalue has empty
  /// theta/bracket columns.
  std::string to_csv() const;
};

/// Full spectrum of the connected anti-regular graph A_n from the
/// trigonometric equations; trivial eigenvalue inserted analytically.
SpectrumResult solve_spectrum(std::int64_t n, const SolverConfig& cfg = {});

// ---------------------------------------------------------------------------
// Theorem checks and estimates.

/// True iff no nontrivial eigenvalue lies in
/// [kOmegaLow - margin, kOmegaHigh + margin].
bool forbidden_interval_check(const SpectrumResult& spec, double margin = 0.0);
/// Same, for a bare list of nontrivial eigenvalues.
bool forbidden_interval_check(const std::vector<double>& nontrivial, double margin = 0.0);

struct ExtremeBounds {
  double lower_max = 0.0;  // n / 2
  double lower_min = 0.0;  // f2(2 (n/2 - 1) pi / (n - 1))
  bool max_holds = false;
  bool min_holds = false;
};

/// Lower bounds on lambda_max and lambda_min for even n. Throws Parity for
/// odd n.
ExtremeBounds extreme_eigenvalue_bounds(const SpectrumResult& spec);

/// (theta^+_k - gamma_{k-1}) / (pi - gamma_{k-1}) for A_{2k}, k >= 2.
double t_k_ratio(std::int64_t k, const SolverConfig& cfg = {});

/// F evaluated at the midpoint (4k - 3) pi / (2 (2k - 1)) of the last bracket.
double lambda_max_midpoint_estimate(std::int64_t k);

/// |lambda^+_j + lambda^-_j + 1| for 1 <= j <= k - 1.
double symmetry_defect(const SpectrumResult& spec, std::int64_t j);

/// Lipschitz bound on symmetry_defect: 2 * width * f1'(gamma_j), where width
/// is the bracket spacing (2 pi / (2k - 1) even, pi / k odd).
double symmetry_defect_bound(std::int64_t k, std::int64_t j, Parity parity = Parity::Even);

struct EigenvalueEstimate {
  double est_pos = 0.0;    // f1(gamma_j)
  double est_neg = 0.0;    // f2(gamma_j)
  double err_bound = 0.0;  // width * f1'(gamma_j)
};

/// Interval-free estimates of lambda^+_j and lambda^-_j, 1 <= j <= k - 1.
EigenvalueEstimate eigenvalue_estimates(std::int64_t k, std::int64_t j,
                                        Parity parity = Parity::Even);

enum class WitnessParity { Even, Odd, Any };

struct ClosureWitness {
  std::int64_t n = 0;
  double mu = 0.0;
};

/// Finds an eigenvalue mu of some A_n with |mu - y| < epsilon by growing k
/// until the Lipschitz error bound for the bracket holding theta_of_lambda(y)
/// drops below epsilon. Throws Domain for y inside the forbidden interval
/// (other than the trivial values) and UnsupportedSize past n = max_n.
ClosureWitness closure_witness(double y, double epsilon, WitnessParity parity = WitnessParity::Any,
                               const SolverConfig& cfg = {}, std::int64_t max_n = 1'000'000);

}  // namespace arspec::antiregular
