#pragma once

#include <cstdint>
#include <string>

namespace arspec::reports {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 2;
inline constexpr int kExitUsage = 64;

enum class Format { Json, Csv };

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
};

enum class SpectrumMethod { Cheb, Dense, Both };

inline constexpr std::int64_t kMaxDenseOrder = 2000;
inline constexpr double kOracleTolerance = 1e-8;

CommandResult spectrum(std::int64_t n, SpectrumMethod method, Format format);

/// Reference ratios t_k for n = 250 * 2^i, i = 0..7.
struct Table1Row {
  std::int64_t n;
  double t_k;
};
inline constexpr Table1Row kTable1[] = {
    {250, 0.5020031290},   {500, 0.5010007838},   {1000, 0.5005001962},  {2000, 0.5002500492},
    {4000, 0.5001250123},  {8000, 0.5000625018},  {16000, 0.5000312567}, {32000, 0.5000156204},
};
inline constexpr double kTable1Tolerance = 1e-6;

CommandResult table1(Format format);

struct VerifyOptions {
  std::int64_t n_max = 50;
  // Added to every solver eigenvalue before the oracle comparison. Nonzero
  // values exist to prove that the suite can fail.
  double perturbation = 0.0;
};

inline constexpr std::int64_t kMaxVerifyOrder = 500;

CommandResult verify(const VerifyOptions& opt);

enum class ScanCheck { Omega, Extremal, Both };

CommandResult scan(std::int64_t n, ScanCheck check, Format format, unsigned threads = 0);

enum class Figure { Theta, EvenCurves, OddCurves, Density };

/// CSV samples for plotting. Curve segments separated by an asymptote or a
/// domain gap are separated by a blank line.
CommandResult figure_data(Figure which, std::int64_t k, std::int64_t points);

}  // namespace arspec::reports
