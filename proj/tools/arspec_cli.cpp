// Command-line front end: spectra, verification suite, ratio table,
// threshold-graph scans and plotting data.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "arspec/error.hpp"
#include "arspec/reports.hpp"

namespace rp = arspec::reports;

int main(int argc, char** argv) {
  CLI::App app{"Spectra of anti-regular and threshold graphs"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string out_path;
  rp::Format format = rp::Format::Json;
  const std::map<std::string, rp::Format> formats{{"json", rp::Format::Json}, {"csv", rp::Format::Csv}};
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::int64_t n = 0;
  rp::SpectrumMethod method = rp::SpectrumMethod::Cheb;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the anti-regular graph A_n");
  spectrum->add_option("--n", n, "Number of vertices")->required();
  spectrum->add_option("--method", method, "cheb, dense or both")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, rp::SpectrumMethod>{
              {"cheb", rp::SpectrumMethod::Cheb}, {"dense", rp::SpectrumMethod::Dense}, {"both", rp::SpectrumMethod::Both}},
          CLI::ignore_case));
  spectrum->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* table1 = app.add_subcommand("table1", "Largest-eigenvalue angle ratio t_k against reference values");
  table1->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  rp::VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Run the numerical verification suite");
  verify->add_option("--n-max", verify_opt.n_max, "Largest order checked (<= 500)");
  verify->add_option("--perturb", verify_opt.perturbation, "Test mode: shift solver eigenvalues by this amount")
      ->group("");

  std::int64_t scan_n = 0;
  rp::ScanCheck check = rp::ScanCheck::Both;
  auto* scan = app.add_subcommand("scan", "Exhaustive scan over connected threshold graphs");
  scan->add_option("--n", scan_n, "Number of vertices (2..26)")->required();
  scan->add_option("--check", check, "omega, extremal or both")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, rp::ScanCheck>{
              {"omega", rp::ScanCheck::Omega}, {"extremal", rp::ScanCheck::Extremal}, {"both", rp::ScanCheck::Both}},
          CLI::ignore_case));
  scan->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::int64_t k = 8;
  std::int64_t points = 2000;
  rp::Figure which = rp::Figure::EvenCurves;
  auto* figure = app.add_subcommand("figure-data", "CSV samples of the curves for plotting");
  figure->add_option("--which", which, "theta, even-curves, odd-curves or density")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, rp::Figure>{{"theta", rp::Figure::Theta},
                                            {"even-curves", rp::Figure::EvenCurves},
                                            {"odd-curves", rp::Figure::OddCurves},
                                            {"density", rp::Figure::Density}},
          CLI::ignore_case));
  figure->add_option("--k", k, "Half the number of vertices");
  figure->add_option("--points", points, "Number of samples");

  std::int64_t density_k = 0;
  auto* density = app.add_subcommand("density", "Sorted spectrum of A_{2k} for histogramming");
  density->add_option("--k", density_k, "Half the number of vertices")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rp::kExitUsage;
  }

  rp::CommandResult result;
  try {
    if (*spectrum) {
      result = rp::spectrum(n, method, format);
    } else if (*table1) {
      result = rp::table1(format);
    } else if (*verify) {
      result = rp::verify(verify_opt);
    } else if (*scan) {
      result = rp::scan(scan_n, check, format);
    } else if (*figure) {
      result = rp::figure_data(which, k, points);
    } else if (*density) {
      result = rp::figure_data(rp::Figure::Density, density_k, 10);
    }
  } catch (const arspec::Error& e) {
    std::cerr << "error (" << arspec::to_string(e.kind()) << "): " << e.what() << '\n';
    return 1;
  }

  if (result.exit_code == rp::kExitUsage) {
    std::cerr << result.output << app.help();
    return result.exit_code;
  }
  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << '\n';
      return 1;
    }
    file << result.output;
  }
  return result.exit_code;
}
