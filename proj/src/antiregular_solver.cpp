#include "arspec/antiregular_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace arspec::antiregular {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// 1 + cos(theta), computed without cancellation near pi.
double one_plus_cos(double theta) {
  const double h = std::cos(theta / 2.0);
  return 2.0 * h * h;
}

// True when theta sits on one of the points x * unit where x is a nonzero
// integer, to within a few ulps of the phase.
bool on_asymptote(double phase) {
  const double nearest = std::round(phase);
  return nearest != 0.0 && std::abs(phase - nearest) <= 4.0 * kEps * std::abs(phase);
}

double f_even_unchecked(double theta, std::int64_t k) {
  if (theta == 0.0) return static_cast<double>(k) / static_cast<double>(2 * k - 1);
  if (theta == kPi) return static_cast<double>(k);
  const double num = sin_multiple(k, theta);
  const double den = 2.0 * sin_multiple(2 * k - 1, theta / 2.0) * std::cos(theta / 2.0);
  return num / den;
}

double f_odd_unchecked(double theta, std::int64_t k) {
  const double ratio = static_cast<double>(k - 1) / static_cast<double>(k);
  if (theta == 0.0) return ratio;
  if (theta == kPi) return -ratio;
  return sin_multiple(k - 1, theta) / sin_multiple(k, theta);
}

// The curve the equation's F is matched against, per parity and branch.
double branch_curve(Parity parity, Branch branch, double theta) {
  if (parity == Parity::Even) return branch == Branch::Positive ? f1(theta) : f2(theta);
  return branch == Branch::Positive ? g1(theta) : g2(theta);
}

std::int64_t bracket_count(std::int64_t k, Parity parity, Branch branch) {
  if (parity == Parity::Even && branch == Branch::Negative) return k - 1;
  return k;
}

void check_k(std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidOrder, "k must be >= 1");
}

}  // namespace

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }
const char* to_string(Branch b) { return b == Branch::Positive ? "positive" : "negative"; }

void SolverConfig::validate() const {
  if (!(theta_tolerance > 0.0) || max_bisection_iters <= 0 || !(bracket_inset > 0.0) ||
      bracket_inset >= 0.5 || scan_points_per_bracket <= 0) {
    throw Error(ErrorKind::Domain, "solver configuration values must be positive");
  }
}

double sin_multiple(std::int64_t m, double theta) {
  const double factor = static_cast<double>(m);
  const double phase = factor * theta;
  const double tail = std::fma(factor, theta, -phase);
  return std::sin(phase) + tail * std::cos(phase);
}

double theta_of_lambda(double lambda) {
  if (!std::isfinite(lambda)) throw Error(ErrorKind::Domain, "theta(lambda) needs a finite lambda");
  if (lambda > kOmegaLow && lambda < kOmegaHigh) {
    throw Error(ErrorKind::Domain, "theta(lambda) is undefined inside the forbidden interval");
  }
  const double q = lambda * (lambda + 1.0);
  const double arg = std::clamp(1.0 / (2.0 * q) - 1.0, -1.0, 1.0);
  return std::acos(arg);
}

double f1(double theta) {
  if (theta < 0.0 || theta > kPi) throw Error(ErrorKind::Domain, "f1 needs theta in [0, pi)");
  if (theta == kPi) throw Error(ErrorKind::SingularArgument, "f1 diverges at pi");
  const double c = one_plus_cos(theta);
  return -0.5 + 0.5 * std::sqrt(1.0 + 2.0 / c);
}

double f2(double theta) {
  if (theta < 0.0 || theta > kPi) throw Error(ErrorKind::Domain, "f2 needs theta in [0, pi)");
  if (theta == kPi) throw Error(ErrorKind::SingularArgument, "f2 diverges at pi");
  const double c = one_plus_cos(theta);
  return -0.5 - 0.5 * std::sqrt(1.0 + 2.0 / c);
}

double f1_derivative(double theta) {
  if (!(theta > 0.0 && theta < kPi)) throw Error(ErrorKind::Domain, "f1' needs theta in (0, pi)");
  const double c = one_plus_cos(theta);
  return std::sin(theta) / (2.0 * c * std::sqrt(c * (c + 2.0)));
}

double g1(double theta) {
  if (theta < 0.0 || theta > kPi) throw Error(ErrorKind::Domain, "g1 needs theta in [0, pi]");
  const double c = one_plus_cos(theta);
  return 3.0 * c - 1.0 + std::sqrt(c * (c + 2.0));
}

double g2(double theta) {
  if (theta < 0.0 || theta > kPi) throw Error(ErrorKind::Domain, "g2 needs theta in [0, pi]");
  const double c = one_plus_cos(theta);
  return 3.0 * c - 1.0 - std::sqrt(c * (c + 2.0));
}

double big_f_even(double theta, std::int64_t k) {
  check_k(k);
  if (theta < 0.0 || theta > kPi) throw Error(ErrorKind::Domain, "F needs theta in [0, pi]");
  if (theta > 0.0 && theta < kPi &&
      on_asymptote(static_cast<double>(2 * k - 1) * theta / (2.0 * kPi))) {
    throw Error(ErrorKind::SingularArgument, "F has an asymptote at this theta");
  }
  const double value = f_even_unchecked(theta, k);
  if (!std::isfinite(value)) throw Error(ErrorKind::SingularArgument, "F has an asymptote at this theta");
  return value;
}

double big_f_odd(double theta, std::int64_t k) {
  check_k(k);
  if (theta < 0.0 || theta > kPi) throw Error(ErrorKind::Domain, "F needs theta in [0, pi]");
  if (theta > 0.0 && theta < kPi && on_asymptote(static_cast<double>(k) * theta / kPi)) {
    throw Error(ErrorKind::SingularArgument, "F has an asymptote at this theta");
  }
  const double value = f_odd_unchecked(theta, k);
  if (!std::isfinite(value)) throw Error(ErrorKind::SingularArgument, "F has an asymptote at this theta");
  return value;
}

double BracketSet::spacing() const {
  return parity == Parity::Even ? 2.0 * kPi / static_cast<double>(2 * k - 1)
                                : kPi / static_cast<double>(k);
}

double BracketSet::gamma(std::int64_t j) const {
  if (j < 0 || j > k) throw Error(ErrorKind::IndexOutOfRange, "asymptote index out of range");
  if (j == k) return kPi;
  return gammas[static_cast<std::size_t>(j)];
}

BracketSet brackets(std::int64_t k, Parity parity) {
  check_k(k);
  BracketSet set;
  set.k = k;
  set.parity = parity;
  const double step = set.spacing();
  set.gammas.reserve(static_cast<std::size_t>(k));
  for (std::int64_t j = 0; j < k; ++j) set.gammas.push_back(static_cast<double>(j) * step);
  return set;
}

RootRecord solve_bracket(std::int64_t k, Parity parity, Branch branch, std::int64_t j,
                         const SolverConfig& cfg) {
  check_k(k);
  cfg.validate();
  if (j < 1 || j > bracket_count(k, parity, branch)) {
    throw Error(ErrorKind::IndexOutOfRange, "bracket index out of range");
  }
  const double step = parity == Parity::Even ? 2.0 * kPi / static_cast<double>(2 * k - 1)
                                             : kPi / static_cast<double>(k);
  const double lo = static_cast<double>(j - 1) * step;
  const double hi = (j == k) ? kPi : static_cast<double>(j) * step;
  const double width = hi - lo;

  const bool left_finite = (j == 1);
  // Odd F stays finite at pi; the even positive curve f1 diverges there.
  const bool right_finite = (j == k) && parity == Parity::Odd;
  const bool right_diverges = (j == k) && parity == Parity::Even;

  auto residual = [&](double theta) {
    const double f = parity == Parity::Even ? f_even_unchecked(theta, k) : f_odd_unchecked(theta, k);
    return f - branch_curve(parity, branch, theta);
  };

  auto bisect = [&](double a, double ra, double b, double rb) {
    for (int iter = 0; iter < cfg.max_bisection_iters && (b - a) > cfg.theta_tolerance; ++iter) {
      const double m = a + 0.5 * (b - a);
      if (m <= a || m >= b) break;
      const double rm = residual(m);
      if (rm == 0.0) return m;
      if ((rm > 0.0) == (ra > 0.0)) {
        a = m;
        ra = rm;
      } else {
        b = m;
        rb = rm;
      }
    }
    // One secant step inside the final bracket; R is close to linear there and
    // F is steep enough that the bracket midpoint alone can miss 1e-9.
    double best = std::abs(ra) <= std::abs(rb) ? a : b;
    double best_r = std::min(std::abs(ra), std::abs(rb));
    if (std::isfinite(ra) && std::isfinite(rb) && rb != ra) {
      const double s = std::clamp(a - ra * (b - a) / (rb - ra), a, b);
      const double rs = std::abs(residual(s));
      if (rs < best_r) best = s;
    }
    return best;
  };

  std::optional<double> root;
  for (int attempt = 0; attempt <= 6 && !root; ++attempt) {
    const double inset = cfg.bracket_inset * width / static_cast<double>(1 << attempt);
    const double a = left_finite ? lo : lo + inset;
    double b = right_finite ? hi : hi - inset;
    if (right_diverges) {
      // Walk toward pi until the residual turns negative.
      const double ra = residual(a);
      b = hi;
      for (int i = 1; i < 1075; ++i) {
        const double candidate = hi - std::ldexp(width, -i);
        if (candidate >= hi) break;
        const double rb = residual(candidate);
        if ((rb > 0.0) != (ra > 0.0)) {
          b = candidate;
          break;
        }
      }
      if (b == hi) continue;
    }

    const int n_pts = cfg.scan_points_per_bracket;
    double prev_t = a;
    double prev_r = residual(a);
    if (prev_r == 0.0) {
      root = a;
      break;
    }
    for (int i = 1; i <= n_pts + 1; ++i) {
      const double t = (i == n_pts + 1) ? b : a + (b - a) * static_cast<double>(i) / (n_pts + 1);
      const double r = residual(t);
      if (std::isnan(r)) continue;
      if (r == 0.0) {
        root = t;
        break;
      }
      if ((r > 0.0) != (prev_r > 0.0)) {
        root = bisect(prev_t, prev_r, t, r);
        break;
      }
      prev_t = t;
      prev_r = r;
    }
  }
  if (!root) {
    throw SolverFailure(static_cast<int>(j), "no sign change found in bracket " + std::to_string(j) +
                                                 " (k=" + std::to_string(k) + ")");
  }

  RootRecord rec;
  rec.branch = branch;
  rec.index = j;
  rec.theta = *root;
  rec.lambda = branch == Branch::Positive ? f1(*root) : f2(*root);
  const double curve = branch_curve(parity, branch, *root);
  rec.residual = std::abs(residual(*root)) / (1.0 + std::abs(curve));
  rec.bracket_lo = lo;
  rec.bracket_hi = hi;
  return rec;
}

SpectrumResult solve_spectrum(std::int64_t n, const SolverConfig& cfg) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "anti-regular graph needs n >= 2");
  cfg.validate();
  SpectrumResult out;
  out.n = n;
  out.parity = (n % 2 == 0) ? Parity::Even : Parity::Odd;
  out.k = n / 2;
  out.trivial = out.parity == Parity::Even ? -1.0 : 0.0;

  for (Branch branch : {Branch::Positive, Branch::Negative}) {
    auto& dest = branch == Branch::Positive ? out.positives : out.negatives;
    const std::int64_t count = bracket_count(out.k, out.parity, branch);
    dest.reserve(static_cast<std::size_t>(count));
    for (std::int64_t j = 1; j <= count; ++j) dest.push_back(solve_bracket(out.k, out.parity, branch, j, cfg));
  }
  return out;
}

std::vector<double> SpectrumResult::nontrivial() const {
  std::vector<double> v;
  v.reserve(positives.size() + negatives.size());
  for (const auto& r : positives) v.push_back(r.lambda);
  for (const auto& r : negatives) v.push_back(r.lambda);
  return v;
}

std::vector<double> SpectrumResult::eigenvalues() const {
  auto v = nontrivial();
  v.push_back(trivial);
  std::sort(v.begin(), v.end());
  return v;
}

double SpectrumResult::lambda_max() const { return eigenvalues().back(); }
double SpectrumResult::lambda_min() const { return eigenvalues().front(); }

std::string SpectrumResult::to_json() const {
  nlohmann::json doc;
  doc["n"] = n;
  doc["trivial"] = trivial;
  std::vector<double> pos, neg, tpos, tneg, res;
  for (const auto& r : positives) {
    pos.push_back(r.lambda);
    tpos.push_back(r.theta);
    res.push_back(r.residual);
  }
  for (const auto& r : negatives) {
    neg.push_back(r.lambda);
    tneg.push_back(r.theta);
    res.push_back(r.residual);
  }
  doc["positives"] = pos;
  doc["negatives"] = neg;
  doc["thetas_pos"] = tpos;
  doc["thetas_neg"] = tneg;
  doc["residuals"] = res;
  return doc.dump();
}

std::string SpectrumResult::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "index,sign_class,theta,lambda,residual,bracket_lo,bracket_hi\n";
  for (const auto& r : positives) {
    out << r.index << ",positive," << r.theta << ',' << r.lambda << ',' << r.residual << ','
        << r.bracket_lo << ',' << r.bracket_hi << '\n';
  }
  for (const auto& r : negatives) {
    out << r.index << ",negative," << r.theta << ',' << r.lambda << ',' << r.residual << ','
        << r.bracket_lo << ',' << r.bracket_hi << '\n';
  }
  out << "0,trivial,," << trivial << ",0,,\n";
  return out.str();
}

bool forbidden_interval_check(const std::vector<double>& nontrivial, double margin) {
  return std::none_of(nontrivial.begin(), nontrivial.end(), [&](double lambda) {
    return lambda >= kOmegaLow - margin && lambda <= kOmegaHigh + margin;
  });
}

bool forbidden_interval_check(const SpectrumResult& spec, double margin) {
  return forbidden_interval_check(spec.nontrivial(), margin);
}

ExtremeBounds extreme_eigenvalue_bounds(const SpectrumResult& spec) {
  if (spec.parity != Parity::Even) {
    throw Error(ErrorKind::Parity, "extreme eigenvalue bounds are stated for even n");
  }
  const double n = static_cast<double>(spec.n);
  ExtremeBounds b;
  b.lower_max = n / 2.0;
  b.lower_min = f2(2.0 * (n / 2.0 - 1.0) * kPi / (n - 1.0));
  b.max_holds = spec.lambda_max() > b.lower_max;
  b.min_holds = spec.lambda_min() > b.lower_min;
  return b;
}

double t_k_ratio(std::int64_t k, const SolverConfig& cfg) {
  if (k < 2) throw Error(ErrorKind::InvalidOrder, "t_k needs k >= 2");
  const RootRecord last = solve_bracket(k, Parity::Even, Branch::Positive, k, cfg);
  return (last.theta - last.bracket_lo) / (kPi - last.bracket_lo);
}

double lambda_max_midpoint_estimate(std::int64_t k) {
  if (k < 2) throw Error(ErrorKind::InvalidOrder, "midpoint estimate needs k >= 2");
  const double kd = static_cast<double>(k);
  return big_f_even((4.0 * kd - 3.0) * kPi / (2.0 * (2.0 * kd - 1.0)), k);
}

double symmetry_defect(const SpectrumResult& spec, std::int64_t j) {
  if (j < 1 || j > spec.k - 1) throw Error(ErrorKind::IndexOutOfRange, "pair index must be in 1..k-1");
  const auto idx = static_cast<std::size_t>(j - 1);
  return std::abs(spec.positives[idx].lambda + spec.negatives[idx].lambda + 1.0);
}

double symmetry_defect_bound(std::int64_t k, std::int64_t j, Parity parity) {
  return 2.0 * eigenvalue_estimates(k, j, parity).err_bound;
}

EigenvalueEstimate eigenvalue_estimates(std::int64_t k, std::int64_t j, Parity parity) {
  check_k(k);
  if (j < 1 || j > k - 1) throw Error(ErrorKind::IndexOutOfRange, "estimate index must be in 1..k-1");
  const BracketSet set = brackets(k, parity);
  const double gamma = set.gamma(j);
  return {f1(gamma), f2(gamma), set.spacing() * f1_derivative(gamma)};
}

ClosureWitness closure_witness(double y, double epsilon, WitnessParity parity, const SolverConfig& cfg,
                               std::int64_t max_n) {
  if (!std::isfinite(y) || !(epsilon > 0.0)) {
    throw Error(ErrorKind::Domain, "closure witness needs finite y and positive epsilon");
  }
  if (y == -1.0) {
    if (parity == WitnessParity::Odd) throw Error(ErrorKind::Domain, "-1 is not a limit of odd spectra");
    return {2, -1.0};
  }
  if (y == 0.0) {
    if (parity == WitnessParity::Even) throw Error(ErrorKind::Domain, "0 is not a limit of even spectra");
    return {3, 0.0};
  }
  if (y > kOmegaLow && y < kOmegaHigh) {
    throw Error(ErrorKind::Domain, "y lies inside the forbidden interval");
  }

  const Parity solve_parity = parity == WitnessParity::Odd ? Parity::Odd : Parity::Even;
  const Branch branch = y > 0.0 ? Branch::Positive : Branch::Negative;
  const double target_theta = theta_of_lambda(y);

  // Smallest k for which the bracket spacing alone could meet epsilon.
  const double slope = target_theta > 0.0 ? f1_derivative(target_theta) : 0.0;
  auto k = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::floor(kPi * slope / epsilon)));

  auto order_of = [&](std::int64_t kk) { return solve_parity == Parity::Even ? 2 * kk : 2 * kk + 1; };
  while (order_of(k) <= max_n) {
    const BracketSet set = brackets(k, solve_parity);
    const auto j = static_cast<std::int64_t>(std::floor(target_theta / set.spacing())) + 1;
    if (j <= k - 1 && eigenvalue_estimates(k, j, solve_parity).err_bound < epsilon) {
      const RootRecord rec = solve_bracket(k, solve_parity, branch, j, cfg);
      if (std::abs(rec.lambda - y) < epsilon) return {order_of(k), rec.lambda};
    }
    k = std::max(k + 1, static_cast<std::int64_t>(std::ceil(static_cast<double>(k) * 1.01)));
  }
  throw Error(ErrorKind::UnsupportedSize, "no witness found within the order limit");
}

}  // namespace arspec::antiregular
