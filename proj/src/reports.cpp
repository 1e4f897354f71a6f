#include "arspec/reports.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "arspec/antiregular_solver.hpp"
#include "arspec/eig_oracle.hpp"
#include "arspec/graph_core.hpp"
#include "arspec/threshold_lab.hpp"

namespace arspec::reports {

namespace ar = antiregular;

namespace {

constexpr double kPi = std::numbers::pi;

CommandResult usage(const std::string& message) { return {kExitUsage, "usage error: " + message + "\n"}; }

std::vector<double> dense_spectrum(std::int64_t n) {
  const auto a = adjacency_from_sequence(antiregular_sequence(static_cast<std::size_t>(n)));
  return oracle::jacobi_eigenvalues(a.cast<double>()).eigenvalues;
}

std::ostringstream csv_stream() {
  std::ostringstream out;
  out.precision(17);
  return out;
}

// Checks accumulate into one line per criterion.
class Checklist {
 public:
  void record(const std::string& name, bool ok, const std::string& detail) {
    all_ok_ = all_ok_ && ok;
    out_ << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
  }
  void skip(const std::string& name, const std::string& why) { out_ << "SKIP " << name << ": " << why << '\n'; }
  bool ok() const { return all_ok_; }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  bool all_ok_ = true;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

}  // namespace

CommandResult spectrum(std::int64_t n, SpectrumMethod method, Format format) {
  if (n < 2) return usage("--n must be >= 2");
  if (method != SpectrumMethod::Cheb && n > kMaxDenseOrder) {
    return usage("dense spectra are limited to n <= " + std::to_string(kMaxDenseOrder));
  }

  if (method == SpectrumMethod::Cheb) {
    const auto spec = ar::solve_spectrum(n);
    return {kExitOk, (format == Format::Json ? spec.to_json() + "\n" : spec.to_csv())};
  }

  const std::vector<double> dense = dense_spectrum(n);
  if (method == SpectrumMethod::Dense) {
    if (format == Format::Json) {
      return {kExitOk, nlohmann::json{{"n", n}, {"eigenvalues", dense}}.dump() + "\n"};
    }
    auto out = csv_stream();
    out << "index,lambda\n";
    for (std::size_t i = 0; i < dense.size(); ++i) out << i << ',' << dense[i] << '\n';
    return {kExitOk, out.str()};
  }

  const std::vector<double> cheb = ar::solve_spectrum(n).eigenvalues();
  double max_delta = 0.0;
  std::vector<double> deltas(cheb.size());
  for (std::size_t i = 0; i < cheb.size(); ++i) {
    deltas[i] = std::abs(cheb[i] - dense[i]);
    max_delta = std::max(max_delta, deltas[i]);
  }
  const int code = max_delta > kOracleTolerance ? kExitCheckFailed : kExitOk;
  if (format == Format::Json) {
    nlohmann::json doc{{"n", n}, {"cheb", cheb}, {"dense", dense}, {"deltas", deltas}, {"max_delta", max_delta}};
    return {code, doc.dump() + "\n"};
  }
  auto out = csv_stream();
  out << "index,cheb,dense,delta\n";
  for (std::size_t i = 0; i < cheb.size(); ++i) {
    out << i << ',' << cheb[i] << ',' << dense[i] << ',' << deltas[i] << '\n';
  }
  return {code, out.str()};
}

CommandResult table1(Format format) {
  int code = kExitOk;
  nlohmann::json rows = nlohmann::json::array();
  auto out = csv_stream();
  out << "n,k,t_k,reference,abs_delta\n";
  for (const auto& row : kTable1) {
    const std::int64_t k = row.n / 2;
    const double t = ar::t_k_ratio(k);
    const double delta = std::abs(t - row.t_k);
    if (delta > kTable1Tolerance) code = kExitCheckFailed;
    out << row.n << ',' << k << ',' << t << ',' << row.t_k << ',' << delta << '\n';
    rows.push_back({{"n", row.n}, {"k", k}, {"t_k", t}, {"reference", row.t_k}, {"abs_delta", delta}});
  }
  if (format == Format::Json) return {code, nlohmann::json{{"rows", rows}}.dump() + "\n"};
  return {code, out.str()};
}

CommandResult verify(const VerifyOptions& opt) {
  if (opt.n_max < 2) return usage("--n-max must be >= 2");
  if (opt.n_max > kMaxVerifyOrder) {
    return usage("--n-max is limited to " + std::to_string(kMaxVerifyOrder) + " for oracle-backed checks");
  }
  Checklist list;

  std::vector<ar::SpectrumResult> spectra;
  for (std::int64_t n = 2; n <= opt.n_max; ++n) spectra.push_back(ar::solve_spectrum(n));

  {
    double worst = 0.0;
    for (const auto& spec : spectra) {
      const auto dense = dense_spectrum(spec.n);
      const auto cheb = spec.eigenvalues();
      for (std::size_t i = 0; i < cheb.size(); ++i) {
        worst = std::max(worst, std::abs(cheb[i] + opt.perturbation - dense[i]));
      }
    }
    list.record("oracle-equivalence", worst <= kOracleTolerance,
                "max |cheb - jacobi| = " + fmt(worst) + " over n = 2.." + std::to_string(opt.n_max));
  }

  {
    bool ok = std::all_of(spectra.begin(), spectra.end(),
                          [](const auto& s) { return ar::forbidden_interval_check(s, 0.0); });
    list.record("forbidden-interval", ok, "no nontrivial eigenvalue in [(-1-sqrt2)/2, (-1+sqrt2)/2]");
  }

  {
    bool ok = true;
    for (const auto& spec : spectra) {
      const auto set = ar::brackets(spec.k, spec.parity);
      auto check = [&](const ar::RootRecord& r, bool positive) {
        const double lo = set.gamma(r.index - 1);
        const double hi = set.gamma(r.index);
        ok = ok && r.theta > lo && r.theta < hi;
        if (hi < kPi) {
          ok = ok && (positive ? (ar::f1(lo) < r.lambda && r.lambda < ar::f1(hi))
                               : (ar::f2(hi) < r.lambda && r.lambda < ar::f2(lo)));
        }
      };
      for (const auto& r : spec.positives) check(r, true);
      for (const auto& r : spec.negatives) check(r, false);
      const auto expected_neg = static_cast<std::size_t>(spec.parity == ar::Parity::Even ? spec.k - 1 : spec.k);
      ok = ok && spec.positives.size() == static_cast<std::size_t>(spec.k) && spec.negatives.size() == expected_neg;
    }
    list.record("bracket-containment", ok, "every root strictly inside its asymptote bracket");
  }

  if (opt.n_max >= 4) {
    bool ok = true;
    for (ar::Parity parity : {ar::Parity::Even, ar::Parity::Odd}) {
      double prev_pos = 0.0, prev_neg = 0.0;
      bool first = true;
      for (const auto& spec : spectra) {
        if (spec.parity != parity) continue;
        const double pos = spec.positives.front().lambda;
        const double neg = spec.negatives.empty() ? std::nan("") : spec.negatives.front().lambda;
        if (!first) {
          ok = ok && pos < prev_pos && pos > ar::kOmegaHigh;
          if (!std::isnan(neg) && !std::isnan(prev_neg)) ok = ok && neg > prev_neg && neg < ar::kOmegaLow;
        }
        prev_pos = pos;
        prev_neg = neg;
        first = false;
      }
    }
    list.record("monotone-limits", ok, "smallest |eigenvalue| pair moves monotonically toward the interval ends");
  } else {
    list.skip("monotone-limits", "needs at least two orders of each parity");
  }

  bool have_pairs = false;
  {
    bool sym_ok = true, est_ok = true;
    double worst_sym = 0.0;
    for (const auto& spec : spectra) {
      for (std::int64_t j = 1; j <= spec.k - 1; ++j) {
        have_pairs = true;
        const double defect = ar::symmetry_defect(spec, j);
        const double bound = ar::symmetry_defect_bound(spec.k, j, spec.parity);
        sym_ok = sym_ok && defect <= bound;
        worst_sym = std::max(worst_sym, defect / bound);
        const auto est = ar::eigenvalue_estimates(spec.k, j, spec.parity);
        const auto idx = static_cast<std::size_t>(j - 1);
        est_ok = est_ok && std::abs(spec.positives[idx].lambda - est.est_pos) <= est.err_bound &&
                 std::abs(spec.negatives[idx].lambda - est.est_neg) <= est.err_bound;
      }
    }
    if (have_pairs) {
      list.record("symmetry-bound", sym_ok, "max defect/bound = " + fmt(worst_sym));
      list.record("estimate-bound", est_ok, "|lambda - f(gamma_j)| within the Lipschitz bound");
    } else {
      list.skip("symmetry-bound", "no eigenvalue pairs below n = 4");
      list.skip("estimate-bound", "no eigenvalue pairs below n = 4");
    }
  }

  if (opt.n_max >= 4) {
    bool ok = true;
    for (const auto& spec : spectra) {
      if (spec.parity != ar::Parity::Even || spec.n < 4) continue;
      const auto b = ar::extreme_eigenvalue_bounds(spec);
      ok = ok && b.max_holds && b.min_holds;
    }
    list.record("extreme-bounds", ok, "lambda_max > n/2 and lambda_min above its lower bound, even n >= 4");
  } else {
    list.skip("extreme-bounds", "needs even n >= 4");
  }

  {
    const std::int64_t top = std::min<std::int64_t>(opt.n_max, 50);
    bool ok = true;
    double worst = 0.0;
    for (std::int64_t n = 2; n <= top; ++n) {
      const auto lap = laplacian(adjacency_from_sequence(antiregular_sequence(static_cast<std::size_t>(n))));
      const auto values = oracle::jacobi_eigenvalues(lap.cast<double>()).eigenvalues;
      std::vector<double> expected;
      for (std::int64_t v = 0; v <= n; ++v)
        if (v != (n + 1) / 2) expected.push_back(static_cast<double>(v));
      for (std::size_t i = 0; i < values.size(); ++i) worst = std::max(worst, std::abs(values[i] - expected[i]));
      ok = ok && worst <= 1e-6;
    }
    list.record("laplacian-integers", ok,
                "Laplacian spectrum is {0..n} minus floor((n+1)/2), max error " + fmt(worst));
  }

  return {list.ok() ? kExitOk : kExitCheckFailed, list.str()};
}

CommandResult scan(std::int64_t n, ScanCheck check, Format format, unsigned threads) {
  if (n < static_cast<std::int64_t>(threshold::kMinEnumerationOrder) ||
      n > static_cast<std::int64_t>(threshold::kMaxEnumerationOrder)) {
    return usage("--n must be in 2..26");
  }
  const auto un = static_cast<std::size_t>(n);
  const threshold::ScanReport report = check == ScanCheck::Omega      ? threshold::omega_scan(un, threads)
                                       : check == ScanCheck::Extremal ? threshold::extremal_scan(un, threads)
                                                                      : threshold::full_scan(un, threads);
  bool failed = false;
  if (check != ScanCheck::Extremal && !report.omega_violations.empty()) failed = true;
  if (check != ScanCheck::Omega && !report.extremes_attained_by_antiregular) failed = true;
  const int code = failed ? kExitCheckFailed : kExitOk;

  if (format == Format::Json) return {code, report.to_json() + "\n"};
  auto out = csv_stream();
  out << "kind,sequence,value\n";
  out << "graphs_scanned,," << report.graphs_scanned << '\n';
  for (const auto& f : report.omega_violations) out << "omega_violation," << f.sequence << ',' << f.value << '\n';
  if (report.min_positive) out << "min_positive," << report.min_positive->sequence << ',' << report.min_positive->value << '\n';
  if (report.max_nontrivial_negative) {
    out << "max_nontrivial_negative," << report.max_nontrivial_negative->sequence << ','
        << report.max_nontrivial_negative->value << '\n';
  }
  const std::string ar_seq = antiregular_sequence(un).str();
  if (report.antiregular_min_positive) out << "antiregular_min_positive," << ar_seq << ',' << *report.antiregular_min_positive << '\n';
  if (report.antiregular_max_negative) out << "antiregular_max_negative," << ar_seq << ',' << *report.antiregular_max_negative << '\n';
  return {code, out.str()};
}

CommandResult figure_data(Figure which, std::int64_t k, std::int64_t points) {
  if (k < 2) return usage("--k must be >= 2");
  if (points < 10) return usage("--points must be >= 10");
  auto out = csv_stream();

  switch (which) {
    case Figure::Theta: {
      // Two segments of the domain, split by the forbidden interval.
      out << "lambda,theta\n";
      const double reach = 6.0;
      const std::int64_t half = points / 2;
      for (std::int64_t i = 0; i < half; ++i) {
        const double lambda = -reach + (ar::kOmegaLow + reach) * static_cast<double>(i) / static_cast<double>(half - 1);
        out << lambda << ',' << ar::theta_of_lambda(std::min(lambda, ar::kOmegaLow)) << '\n';
      }
      out << '\n';
      for (std::int64_t i = 0; i < points - half; ++i) {
        const double lambda =
            ar::kOmegaHigh + (reach - ar::kOmegaHigh) * static_cast<double>(i) / static_cast<double>(points - half - 1);
        out << lambda << ',' << ar::theta_of_lambda(std::max(lambda, ar::kOmegaHigh)) << '\n';
      }
      break;
    }
    case Figure::EvenCurves:
    case Figure::OddCurves: {
      const bool even = which == Figure::EvenCurves;
      const auto set = ar::brackets(k, even ? ar::Parity::Even : ar::Parity::Odd);
      out << (even ? "theta,f1,f2,F\n" : "theta,g1,g2,F\n");
      const std::int64_t per = std::max<std::int64_t>(2, points / k);
      for (std::int64_t j = 1; j <= k; ++j) {
        const double lo = set.gamma(j - 1);
        const double hi = set.gamma(j);
        const double gap = 1e-3 * (hi - lo);
        const double a = (j == 1) ? 0.0 : lo + gap;
        const bool right_open = even || j < k;
        const double b = right_open ? hi - gap : hi;
        if (j > 1) out << '\n';
        for (std::int64_t i = 0; i < per; ++i) {
          const double t = a + (b - a) * static_cast<double>(i) / static_cast<double>(per - 1);
          if (even) {
            out << t << ',' << ar::f1(t) << ',' << ar::f2(t) << ',' << ar::big_f_even(t, k) << '\n';
          } else {
            out << t << ',' << ar::g1(t) << ',' << ar::g2(t) << ',' << ar::big_f_odd(t, k) << '\n';
          }
        }
      }
      break;
    }
    case Figure::Density: {
      const auto values = ar::solve_spectrum(2 * k).eigenvalues();
      out << "index,lambda\n";
      for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << values[i] << '\n';
      break;
    }
  }
  return {kExitOk, out.str()};
}

}  // namespace arspec::reports
