#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "arspec/eig_oracle.hpp"
#include "arspec/threshold_lab.hpp"

namespace arspec::threshold {
namespace {

CreationSequence seq(const char* s) { return CreationSequence::parse(s); }

TEST(RunLength, Encode) {
  EXPECT_EQ(run_length_encode(seq("010101")).runs, (std::vector<threshold::Run>{{1, 1}, {1, 1}, {1, 1}}));
  const auto rl = run_length_encode(seq("0011"));
  EXPECT_EQ(rl.runs, (std::vector<threshold::Run>{{2, 2}}));
  EXPECT_EQ(rl.k(), 1U);
  EXPECT_EQ(run_length_encode(seq("00101")).runs, (std::vector<threshold::Run>{{2, 1}, {1, 1}}));
  try {
    run_length_encode(seq("0110"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Disconnected);
  }
}

TEST(RunLength, ExpandInvertsEncode) {
  for (std::size_t n = 2; n <= 12; ++n) {
    enumerate_connected_threshold(n, [&](const CreationSequence& b) {
      const auto rl = run_length_encode(b);
      ASSERT_EQ(rl.expand(), b);
      ASSERT_EQ(rl.order(), n);
    });
  }
}

TEST(Quotient, AntiregularEvenIsA2k) {
  for (std::size_t n = 2; n <= 40; n += 2) {
    const auto q = quotient_matrix(run_length_encode(antiregular_sequence(n)));
    EXPECT_EQ(q.weights, adjacency_from_sequence(antiregular_sequence(n)).cast<double>());
    EXPECT_EQ(q.equitable(), q.weights);
  }
}

TEST(Quotient, CompleteSplitGraph0011) {
  const auto q = quotient_matrix(run_length_encode(seq("0011")));
  EXPECT_EQ(q.weights, (RealMatrix{{0.0, 1.0}, {1.0, 0.5}}));
  EXPECT_EQ(q.cell_sizes, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(q.equitable(), (RealMatrix{{0.0, 2.0}, {2.0, 1.0}}));
  // Eigenvalues (1 +- sqrt 17) / 2 from the 2x2 characteristic polynomial.
  const auto ev = oracle::quotient_eigenvalues(q.equitable(), q.cell_sizes).eigenvalues;
  EXPECT_NEAR(ev[0], (1 - std::sqrt(17.0)) / 2, 1e-12);
  EXPECT_NEAR(ev[1], (1 + std::sqrt(17.0)) / 2, 1e-12);
  const auto full = threshold_spectrum(seq("0011"), SpectrumMethod::Full);
  const auto quot = threshold_spectrum(seq("0011"), SpectrumMethod::Quotient);
  const std::vector<double> expected{(1 - std::sqrt(17.0)) / 2, -1.0, 0.0, (1 + std::sqrt(17.0)) / 2};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(full[i], expected[i], 1e-10);
    EXPECT_NEAR(quot[i], expected[i], 1e-10);
  }
}

TEST(Quotient, OddAntiregularMatchesDoubledFirstColumn) {
  const auto q = quotient_matrix(run_length_encode(antiregular_sequence(9)));
  RealMatrix displayed = adjacency_from_sequence(antiregular_sequence(8)).cast<double>();
  for (std::size_t i = 0; i < 8; ++i) displayed(i, 0) *= 2.0;
  EXPECT_EQ(q.equitable(), displayed);
  EXPECT_EQ(q.weights, adjacency_from_sequence(antiregular_sequence(8)).cast<double>());
}

TEST(Quotient, EmptyLeadingCellIsDropped) {
  RunLengthSequence rl{{{0, 2}, {1, 1}}};
  const auto q = quotient_matrix(rl);
  EXPECT_EQ(q.cell_sizes, (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(q.dominating, (std::vector<bool>{true, false, true}));
  EXPECT_EQ(q.weights, (RealMatrix{{0.5, 0.0, 1.0}, {0.0, 0.0, 1.0}, {1.0, 1.0, 0.0}}));
}

TEST(Quotient, EquitableSymmetrizationForAllSmallGraphs) {
  for (std::size_t n = 2; n <= 12; ++n) {
    enumerate_connected_threshold(n, [&](const CreationSequence& b) {
      const auto q = quotient_matrix(run_length_encode(b));
      const auto e = q.equitable();
      RealMatrix sym(e.order());
      for (std::size_t i = 0; i < e.order(); ++i)
        for (std::size_t j = 0; j < e.order(); ++j)
          sym(i, j) = std::sqrt(static_cast<double>(q.cell_sizes[i])) * e(i, j) /
                      std::sqrt(static_cast<double>(q.cell_sizes[j]));
      ASSERT_TRUE(is_symmetric(sym, 1e-10)) << b.str();
      // Row sums of the equitable quotient are vertex degrees.
      const auto a = adjacency_from_sequence(b);
      std::size_t vertex = 0;
      for (std::size_t c = 0; c < e.order(); ++c) {
        double row = 0.0;
        for (std::size_t j = 0; j < e.order(); ++j) row += e(c, j);
        std::int64_t deg = 0;
        for (auto v : a.row(vertex)) deg += v;
        ASSERT_NEAR(row, static_cast<double>(deg), 1e-12) << b.str();
        vertex += q.cell_sizes[c];
      }
    });
  }
}

TEST(ThresholdSpectrum, SmallExamples) {
  const auto k2 = threshold_spectrum(seq("01"), SpectrumMethod::Full);
  EXPECT_NEAR(k2[0], -1.0, 1e-14);
  EXPECT_NEAR(k2[1], 1.0, 1e-14);
  for (auto method : {SpectrumMethod::Full, SpectrumMethod::Quotient}) {
    const auto star = threshold_spectrum(seq("0001"), method);
    const std::vector<double> expected{-std::sqrt(3.0), 0.0, 0.0, std::sqrt(3.0)};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(star[i], expected[i], 1e-8);
  }
}

TEST(ThresholdSpectrum, QuotientAgreesWithFullUpTo12) {
  for (std::size_t n = 2; n <= 12; ++n) {
    enumerate_connected_threshold(n, [&](const CreationSequence& b) {
      const auto full = threshold_spectrum(b, SpectrumMethod::Full);
      const auto quot = threshold_spectrum(b, SpectrumMethod::Quotient);
      ASSERT_EQ(full.size(), quot.size());
      for (std::size_t i = 0; i < full.size(); ++i) ASSERT_NEAR(full[i], quot[i], 1e-8) << b.str();
    });
  }
}

TEST(Enumeration, OrderAndCounts) {
  std::vector<std::string> seen;
  enumerate_connected_threshold(3, [&](const CreationSequence& b) { seen.push_back(b.str()); });
  EXPECT_EQ(seen, (std::vector<std::string>{"001", "011"}));
  seen.clear();
  enumerate_connected_threshold(4, [&](const CreationSequence& b) { seen.push_back(b.str()); });
  EXPECT_EQ(seen, (std::vector<std::string>{"0001", "0011", "0101", "0111"}));
  std::set<std::string> distinct;
  enumerate_connected_threshold(12, [&](const CreationSequence& b) { distinct.insert(b.str()); });
  EXPECT_EQ(distinct.size(), 1024U);
  EXPECT_EQ(connected_threshold_count(26), 1ULL << 24);
  EXPECT_THROW(connected_threshold_count(27), Error);
  EXPECT_THROW(connected_threshold_count(1), Error);
  EXPECT_EQ(connected_threshold_at(4, 2).str(), "0101");
}

TEST(Scan, OmegaSmall) {
  for (std::size_t n : {3U, 4U, 12U}) {
    const auto r = omega_scan(n, 2);
    EXPECT_EQ(r.graphs_scanned, connected_threshold_count(n));
    EXPECT_TRUE(r.omega_violations.empty()) << n;
  }
}

TEST(Scan, ExtremalSmall) {
  const auto k2 = extremal_scan(2, 1);
  EXPECT_EQ(k2.graphs_scanned, 1U);
  EXPECT_TRUE(k2.extremes_attained_by_antiregular);
  EXPECT_FALSE(k2.max_nontrivial_negative.has_value());
  for (std::size_t n : {4U, 12U}) {
    const auto r = extremal_scan(n, 3);
    EXPECT_TRUE(r.extremes_attained_by_antiregular) << n;
    ASSERT_TRUE(r.min_positive && r.antiregular_min_positive);
    EXPECT_NEAR(r.min_positive->value, *r.antiregular_min_positive, 1e-9);
  }
}

TEST(Scan, DeterministicAcrossThreadCounts) {
  const auto a = full_scan(10, 1);
  const auto b = full_scan(10, 5);
  const auto c = full_scan(10, 5);
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(Scan, ReportSerialization) {
  ScanReport r = full_scan(4, 1);
  auto doc = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(doc["graphs_scanned"], 4);
  EXPECT_TRUE(doc["omega_violations"].empty());
  EXPECT_TRUE(doc["extremes_attained_by_antiregular"].get<bool>());
  r.omega_violations.push_back({"0101", 0.1});
  EXPECT_EQ(r.violations_csv(), "sequence_string,eigenvalue\n0101,0.10000000000000001\n");
}

}  // namespace
}  // namespace arspec::threshold
