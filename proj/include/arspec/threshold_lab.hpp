#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arspec/graph_core.hpp"
#include "arspec/matrix.hpp"

namespace arspec::threshold {

/// One 0^s 1^t block of a creation sequence.
struct Run {
  std::size_t zeros = 0;  // s_i
  std::size_t ones = 0;   // t_i, >= 1

  bool operator==(const Run&) const = default;
};

/// b = (0^{s_1}, 1^{t_1}, ..., 0^{s_k}, 1^{t_k}).
struct RunLengthSequence {
  std::vector<Run> runs;

  std::size_t k() const noexcept { return runs.size(); }
  std::size_t order() const;
  CreationSequence expand() const;

  bool operator==(const RunLengthSequence&) const = default;
};

/// Maximal-run encoding. Throws Disconnected unless b ends in 1.
RunLengthSequence run_length_encode(const CreationSequence& b);

/// Quotient of the degree partition (runs of equal bits).
///
/// `weights` is A_{2k} + diag(0, beta_1, ..., 0, beta_k) with
/// beta_i = 1 - 1/t_i, restricted to non-empty cells. The quotient matrix of
/// the equitable partition (entry (a, b) = neighbours in cell b of a vertex in
/// cell a) is weights * diag(cell_sizes); see `equitable()`.
struct QuotientMatrix {
  RealMatrix weights;
  std::vector<std::size_t> cell_sizes;
  std::vector<bool> dominating;  // cell type: true for a 1-run

  RealMatrix equitable() const;
};

QuotientMatrix quotient_matrix(const RunLengthSequence& rl);

enum class SpectrumMethod { Full, Quotient };

/// All n adjacency eigenvalues, ascending. The quotient method adds c - 1
/// copies of 0 for each isolated cell and of -1 for each dominating cell of
/// size c.
std::vector<double> threshold_spectrum(const CreationSequence& b, SpectrumMethod method);

inline constexpr std::size_t kMinEnumerationOrder = 2;
inline constexpr std::size_t kMaxEnumerationOrder = 26;

/// Calls `visit` for each of the 2^{n-2} connected creation sequences of
/// order n in lexicographic order of the interior bits.
void enumerate_connected_threshold(std::size_t n, const std::function<void(const CreationSequence&)>& visit);

/// The `index`-th sequence (0-based) of the enumeration order.
CreationSequence connected_threshold_at(std::size_t n, std::uint64_t index);

std::uint64_t connected_threshold_count(std::size_t n);

struct Finding {
  std::string sequence;
  double value = 0.0;

  bool operator==(const Finding&) const = default;
};

struct ScanReport {
  std::size_t n = 0;
  std::uint64_t graphs_scanned = 0;
  std::vector<Finding> omega_violations;
  std::optional<Finding> min_positive;
  std::optional<Finding> max_nontrivial_negative;
  std::optional<double> antiregular_min_positive;
  std::optional<double> antiregular_max_negative;
  bool extremes_attained_by_antiregular = false;

  bool operator==(const ScanReport&) const = default;

  std::string to_json() const;
  /// sequence_string,eigenvalue rows with header.
  std::string violations_csv() const;
};

inline constexpr double kTrivialTolerance = 1e-9;

/// Worker count: ARSPEC_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
unsigned scan_threads();

/// Exhaustive check that no connected threshold graph on n vertices has a
/// nontrivial eigenvalue inside the forbidden interval.
ScanReport omega_scan(std::size_t n, unsigned threads = 0);

/// Exhaustive search for the smallest positive and largest nontrivial
/// negative eigenvalue over connected threshold graphs on n vertices.
ScanReport extremal_scan(std::size_t n, unsigned threads = 0);

/// Both scans in one pass over the graphs.
ScanReport full_scan(std::size_t n, unsigned threads = 0);

}  // namespace arspec::threshold
