// tripick: command-line front end for the inscribed-triangle area distribution.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tripick/cli.hpp"

namespace {

struct CommonFlags {
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string format = "csv";
  std::string out;
};

void add_common_flags(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--seed", flags.seed, "Root RNG seed")->capture_default_str();
  sub->add_option("--workers", flags.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", flags.out, "Output file (default: standard output)");
}

int emit(const tripick::output::Document& doc, const CommonFlags& flags) {
  const auto format = tripick::output::parse_format(flags.format);
  if (flags.out.empty()) {
    tripick::output::write(std::cout, doc, format);
    return std::cout ? 0 : 2;
  }
  std::ofstream file(flags.out, std::ios::binary);
  if (!file) {
    std::cerr << "tripick: cannot open '" << flags.out << "' for writing\n";
    return 2;
  }
  tripick::output::write(file, doc, format);
  return file ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tripick;

  CLI::App app{"Area distribution of a random triangle inscribed in a fixed triangle"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cli::kVersion);
  CommonFlags flags;

  auto* moments = app.add_subcommand("moments", "Exact moments E[Q^n] as rationals");
  std::int64_t max_n = 7;
  moments->add_option("--max-n", max_n, "Highest moment order")->capture_default_str();
  add_common_flags(moments, flags);

  auto* dist = app.add_subcommand("dist", "Closed-form CDF/PDF on a grid of (0, 1]");
  std::size_t grid = 100;
  std::string which = "both";
  std::optional<double> levelset;
  dist->add_option("--grid", grid, "Grid points")->capture_default_str();
  dist->add_option("--which", which, "Columns to emit")
      ->check(CLI::IsMember({"cdf", "pdf", "both"}))
      ->capture_default_str();
  dist->add_option("--levelset", levelset,
                   "Emit (r, s, t) points on the level surface Q = c instead");
  add_common_flags(dist, flags);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo histogram and KS summary");
  std::size_t sample_size = 100000;
  std::size_t bins = 100;
  simulate->add_option("-n,--samples", sample_size, "Sample size")->capture_default_str();
  simulate->add_option("--bins", bins, "Histogram bins")->capture_default_str();
  add_common_flags(simulate, flags);

  auto* table3 = app.add_subcommand("table3", "Mean-error scaling experiment");
  std::vector<std::size_t> sizes = cli::default_table3_sizes();
  std::size_t trials = 50;
  table3->add_option("--sizes", sizes, "Sample sizes")->delimiter(',')->capture_default_str();
  table3->add_option("--trials", trials, "Trials per sample size")->capture_default_str();
  add_common_flags(table3, flags);

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against oracles");
  add_common_flags(verify, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : static_cast<int>(cli::ExitCode::Usage);
  }

  try {
    if (*moments) return emit(cli::cmd_moments(max_n), flags);
    if (*dist) {
      if (levelset) return emit(cli::cmd_levelset(grid, *levelset), flags);
      return emit(cli::cmd_dist(grid, cli::parse_dist_columns(which)), flags);
    }
    if (*simulate) {
      const SimConfig config{flags.seed, sample_size, 1, flags.workers};
      return emit(cli::cmd_simulate(config, bins), flags);
    }
    if (*table3) return emit(cli::cmd_table3(sizes, trials, flags.seed, flags.workers), flags);
    if (*verify) {
      const auto report = run_verification();
      const int status = emit(cli::verification_document(report), flags);
      if (status != 0) return status;
      return static_cast<int>(report.passed() ? cli::ExitCode::Success
                                              : cli::ExitCode::VerificationFailed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "tripick: " << e.what() << '\n';
    return static_cast<int>(cli::ExitCode::Usage);
  } catch (const std::domain_error& e) {
    std::cerr << "tripick: " << e.what() << '\n';
    return static_cast<int>(cli::ExitCode::Usage);
  }
  return static_cast<int>(cli::ExitCode::Usage);
}
