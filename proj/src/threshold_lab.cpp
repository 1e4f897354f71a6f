#include "arspec/threshold_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "arspec/antiregular_solver.hpp"
#include "arspec/eig_oracle.hpp"

namespace arspec::threshold {

std::size_t RunLengthSequence::order() const {
  std::size_t n = 0;
  for (const auto& r : runs) n += r.zeros + r.ones;
  return n;
}

CreationSequence RunLengthSequence::expand() const {
  std::vector<std::uint8_t> bits;
  bits.reserve(order());
  for (const auto& r : runs) {
    bits.insert(bits.end(), r.zeros, 0);
    bits.insert(bits.end(), r.ones, 1);
  }
  return CreationSequence(std::move(bits));
}

RunLengthSequence run_length_encode(const CreationSequence& b) {
  if (!b.connected()) throw Error(ErrorKind::Disconnected, "creation sequence must end in 1");
  RunLengthSequence rl;
  std::size_t i = 0;
  while (i < b.size()) {
    Run run;
    while (i < b.size() && b[i] == 0) {
      ++run.zeros;
      ++i;
    }
    while (i < b.size() && b[i] == 1) {
      ++run.ones;
      ++i;
    }
    rl.runs.push_back(run);
  }
  return rl;
}

RealMatrix QuotientMatrix::equitable() const {
  RealMatrix q = weights;
  for (std::size_t i = 0; i < q.order(); ++i)
    for (std::size_t j = 0; j < q.order(); ++j) q(i, j) *= static_cast<double>(cell_sizes[j]);
  return q;
}

QuotientMatrix quotient_matrix(const RunLengthSequence& rl) {
  if (rl.runs.empty()) throw Error(ErrorKind::InvalidOrder, "empty run-length sequence");
  // Cells alternate isolated/dominating; an empty isolated cell is dropped.
  std::vector<std::size_t> sizes;
  std::vector<bool> dominating;
  for (const auto& r : rl.runs) {
    if (r.ones == 0) throw Error(ErrorKind::InvalidOrder, "every run needs at least one 1");
    if (r.zeros > 0) {
      sizes.push_back(r.zeros);
      dominating.push_back(false);
    }
    sizes.push_back(r.ones);
    dominating.push_back(true);
  }
  const std::size_t m = sizes.size();
  QuotientMatrix q;
  q.weights = RealMatrix(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) {
        q.weights(a, a) = dominating[a] ? 1.0 - 1.0 / static_cast<double>(sizes[a]) : 0.0;
      } else {
        // The later cell decides adjacency between two cells.
        q.weights(a, b) = dominating[std::max(a, b)] ? 1.0 : 0.0;
      }
    }
  }
  q.cell_sizes = std::move(sizes);
  q.dominating = std::move(dominating);
  return q;
}

std::vector<double> threshold_spectrum(const CreationSequence& b, SpectrumMethod method) {
  if (method == SpectrumMethod::Full) {
    return oracle::jacobi_eigenvalues(adjacency_from_sequence(b).cast<double>()).eigenvalues;
  }
  const QuotientMatrix q = quotient_matrix(run_length_encode(b));
  std::vector<double> values = oracle::quotient_eigenvalues(q.equitable(), q.cell_sizes).eigenvalues;
  for (std::size_t c = 0; c < q.cell_sizes.size(); ++c) {
    values.insert(values.end(), q.cell_sizes[c] - 1, q.dominating[c] ? -1.0 : 0.0);
  }
  if (values.size() != b.size()) {
    throw Error(ErrorKind::Consistency, "quotient spectrum plus trivial multiplicities does not give n values");
  }
  std::sort(values.begin(), values.end());
  return values;
}

namespace {

void check_enumeration_order(std::size_t n) {
  if (n < kMinEnumerationOrder || n > kMaxEnumerationOrder) {
    throw Error(ErrorKind::UnsupportedSize, "enumeration supports 2 <= n <= 26");
  }
}

bool is_trivial(double lambda) {
  return std::abs(lambda) <= kTrivialTolerance || std::abs(lambda + 1.0) <= kTrivialTolerance;
}

// Smaller value wins; ties go to the lexicographically smaller sequence.
bool better_min(const Finding& a, const std::optional<Finding>& cur) {
  return !cur || a.value < cur->value || (a.value == cur->value && a.sequence < cur->sequence);
}
bool better_max(const Finding& a, const std::optional<Finding>& cur) {
  return !cur || a.value > cur->value || (a.value == cur->value && a.sequence < cur->sequence);
}

struct ScanOptions {
  bool omega = true;
  bool extremal = true;
};

void scan_one(const CreationSequence& b, const ScanOptions& opt, ScanReport& part) {
  const std::vector<double> values = threshold_spectrum(b, SpectrumMethod::Full);
  const std::string seq = b.str();
  ++part.graphs_scanned;
  for (double lambda : values) {
    if (is_trivial(lambda)) continue;
    if (opt.omega && lambda > antiregular::kOmegaLow + kTrivialTolerance &&
        lambda < antiregular::kOmegaHigh - kTrivialTolerance) {
      part.omega_violations.push_back({seq, lambda});
    }
    if (!opt.extremal) continue;
    if (lambda > 0.0) {
      Finding f{seq, lambda};
      if (better_min(f, part.min_positive)) part.min_positive = f;
    } else {
      Finding f{seq, lambda};
      if (better_max(f, part.max_nontrivial_negative)) part.max_nontrivial_negative = f;
    }
  }
}

void merge_into(ScanReport& total, ScanReport&& part) {
  total.graphs_scanned += part.graphs_scanned;
  total.omega_violations.insert(total.omega_violations.end(), part.omega_violations.begin(),
                                part.omega_violations.end());
  if (part.min_positive && better_min(*part.min_positive, total.min_positive)) {
    total.min_positive = part.min_positive;
  }
  if (part.max_nontrivial_negative && better_max(*part.max_nontrivial_negative, total.max_nontrivial_negative)) {
    total.max_nontrivial_negative = part.max_nontrivial_negative;
  }
}

ScanReport run_scan(std::size_t n, unsigned threads, const ScanOptions& opt) {
  check_enumeration_order(n);
  const std::uint64_t total = connected_threshold_count(n);
  if (threads == 0) threads = scan_threads();
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<ScanReport> parts(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      for (std::uint64_t i = begin; i < end; ++i) scan_one(connected_threshold_at(n, i), opt, parts[w]);
    });
  }
  for (auto& t : pool) t.join();

  ScanReport report;
  report.n = n;
  for (auto& p : parts) merge_into(report, std::move(p));
  std::sort(report.omega_violations.begin(), report.omega_violations.end(),
            [](const Finding& a, const Finding& b) {
              return a.sequence != b.sequence ? a.sequence < b.sequence : a.value < b.value;
            });

  if (opt.extremal) {
    const CreationSequence ar = antiregular_sequence(n);
    ScanReport own;
    scan_one(ar, {false, true}, own);
    if (own.min_positive) report.antiregular_min_positive = own.min_positive->value;
    if (own.max_nontrivial_negative) report.antiregular_max_negative = own.max_nontrivial_negative->value;
    auto attained = [](const std::optional<double>& mine, const std::optional<Finding>& best) {
      if (!best) return !mine.has_value();
      return mine && std::abs(*mine - best->value) <= kTrivialTolerance;
    };
    report.extremes_attained_by_antiregular =
        attained(report.antiregular_min_positive, report.min_positive) &&
        attained(report.antiregular_max_negative, report.max_nontrivial_negative);
  }
  return report;
}

nlohmann::json finding_json(const std::optional<Finding>& f) {
  if (!f) return nullptr;
  return {{"sequence", f->sequence}, {"value", f->value}};
}

}  // namespace

std::uint64_t connected_threshold_count(std::size_t n) {
  check_enumeration_order(n);
  return std::uint64_t{1} << (n - 2);
}

CreationSequence connected_threshold_at(std::size_t n, std::uint64_t index) {
  if (index >= connected_threshold_count(n)) throw Error(ErrorKind::IndexOutOfRange, "enumeration index");
  std::vector<std::uint8_t> bits(n, 0);
  bits[n - 1] = 1;
  // Interior bits b_2 .. b_{n-1}; b_2 is the most significant.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    bits[i] = static_cast<std::uint8_t>((index >> (n - 2 - i)) & 1U);
  }
  return CreationSequence(std::move(bits));
}

void enumerate_connected_threshold(std::size_t n, const std::function<void(const CreationSequence&)>& visit) {
  const std::uint64_t total = connected_threshold_count(n);
  for (std::uint64_t i = 0; i < total; ++i) visit(connected_threshold_at(n, i));
}

unsigned scan_threads() {
  if (const char* env = std::getenv("ARSPEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

ScanReport omega_scan(std::size_t n, unsigned threads) { return run_scan(n, threads, {true, false}); }
ScanReport extremal_scan(std::size_t n, unsigned threads) { return run_scan(n, threads, {false, true}); }
ScanReport full_scan(std::size_t n, unsigned threads) { return run_scan(n, threads, {true, true}); }

std::string ScanReport::to_json() const {
  nlohmann::json doc;
  doc["n"] = n;
  doc["graphs_scanned"] = graphs_scanned;
  nlohmann::json v = nlohmann::json::array();
  for (const auto& f : omega_violations) v.push_back({{"sequence", f.sequence}, {"eigenvalue", f.value}});
  doc["omega_violations"] = v;
  doc["min_positive"] = finding_json(min_positive);
  doc["max_nontrivial_negative"] = finding_json(max_nontrivial_negative);
  doc["antiregular_min_positive"] =
      antiregular_min_positive ? nlohmann::json(*antiregular_min_positive) : nlohmann::json(nullptr);
  doc["antiregular_max_negative"] =
      antiregular_max_negative ? nlohmann::json(*antiregular_max_negative) : nlohmann::json(nullptr);
  doc["extremes_attained_by_antiregular"] = extremes_attained_by_antiregular;
  return doc.dump();
}

std::string ScanReport::violations_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "sequence_string,eigenvalue\n";
  for (const auto& f : omega_violations) out << f.sequence << ',' << f.value << '\n';
  return out.str();
}

}  // namespace arspec::threshold
