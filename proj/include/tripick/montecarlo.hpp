#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "tripick/analytic.hpp"
#include "tripick/geometry.hpp"
#include "tripick/quadrature.hpp"
#include "tripick/rng.hpp"

namespace tripick {

struct SimConfig {
  std::uint64_t seed = 0;
  std::size_t sample_size = 1;
  std::size_t trials = 1;
  std::size_t workers = 1;

  void validate() const {
    if (sample_size < 1 || trials < 1 || workers < 1) {
      throw std::invalid_argument(
          "SimConfig: sample_size, trials and workers must be positive");
    }
  }
};

/*
 * Samples are generated in fixed-size chunks. Chunk k draws from its own
 * engine seeded by substream_seed(seed, k), so the sample sequence depends
 * only on (seed, sample_size). Workers take chunks round-robin and partial
 * results are merged in chunk order, so the worker count changes scheduling
 * and nothing else.
 */
inline constexpr std::size_t kChunkSize = std::size_t{1} << 16;

inline std::size_t chunk_count(std::size_t sample_size) {
  return (sample_size + kChunkSize - 1) / kChunkSize;
}

inline SampleTriple draw_sample(Engine& engine) {
  const double r = uniform01(engine);
  const double s = uniform01(engine);
  const double t = uniform01(engine);
  return SampleTriple(r, s, t);
}

/// Sequential view of the sample sequence defined by a SimConfig.
class SampleStream {
 public:
  explicit SampleStream(const SimConfig& config)
      : seed_(config.seed), remaining_(config.sample_size), engine_(make_substream(seed_, 0)) {
    config.validate();
  }

  bool done() const { return remaining_ == 0; }

  SampleTriple next() {
    if (done()) {
      throw std::out_of_range("SampleStream: exhausted");
    }
    if (position_in_chunk_ == kChunkSize) {
      ++chunk_;
      position_in_chunk_ = 0;
      engine_ = make_substream(seed_, chunk_);
    }
    ++position_in_chunk_;
    --remaining_;
    return draw_sample(engine_);
  }

 private:
  std::uint64_t seed_;
  std::size_t remaining_;
  std::uint64_t chunk_ = 0;
  std::size_t position_in_chunk_ = 0;
  Engine engine_;
};

/*
 * Runs `fn(engine, count)` once per chunk, spread over config.workers
 * threads, and returns the per-chunk results in chunk order.
 */
template <class ChunkFn>
auto map_chunks(const SimConfig& config, ChunkFn fn) {
  config.validate();
  using Result = decltype(fn(std::declval<Engine&>(), std::size_t{}));
  const std::size_t chunks = chunk_count(config.sample_size);
  std::vector<std::optional<Result>> slots(chunks);

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < chunks; k += stride) {
      const std::size_t begin = k * kChunkSize;
      const std::size_t count = std::min(kChunkSize, config.sample_size - begin);
      Engine engine = make_substream(config.seed, k);
      slots[k].emplace(fn(engine, count));
    }
  };

  const std::size_t workers = std::min(config.workers, chunks);
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(work, w, workers);
    }
  }
  std::vector<Result> results;
  results.reserve(chunks);
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

/// All samples of the configured stream, in stream order.
inline std::vector<SampleTriple> collect_samples(const SimConfig& config) {
  auto chunks = map_chunks(config, [](Engine& engine, std::size_t count) {
    std::vector<SampleTriple> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(draw_sample(engine));
    return out;
  });
  std::vector<SampleTriple> all;
  all.reserve(config.sample_size);
  for (auto& chunk : chunks) all.insert(all.end(), chunk.begin(), chunk.end());
  return all;
}

/// Q of every sample, in stream order.
inline std::vector<double> collect_quotients(const SimConfig& config) {
  auto chunks = map_chunks(config, [](Engine& engine, std::size_t count) {
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(area_quotient(draw_sample(engine)));
    return out;
  });
  std::vector<double> all;
  all.reserve(config.sample_size);
  for (auto& chunk : chunks) all.insert(all.end(), chunk.begin(), chunk.end());
  return all;
}

/// Sample mean of Q, accumulated with compensated summation.
inline double estimate_mean(const SimConfig& config) {
  const auto partial = map_chunks(config, [](Engine& engine, std::size_t count) {
    CompensatedSum sum;
    for (std::size_t i = 0; i < count; ++i) sum += area_quotient(draw_sample(engine));
    return sum.value();
  });
  CompensatedSum total;
  for (double p : partial) total += p;
  return total.value() / static_cast<double>(config.sample_size);
}

/// Bins [i/B, (i+1)/B) over [0, 1], the last bin closed.
class Histogram {
 public:
  explicit Histogram(std::size_t bin_count) : counts_(bin_count, 0) {
    if (bin_count < 2) {
      throw std::invalid_argument("Histogram: at least two bins are required");
    }
  }

  void add(double q) {
    const auto bins = static_cast<double>(counts_.size());
    auto index = static_cast<std::size_t>(q * bins);
    if (index >= counts_.size()) index = counts_.size() - 1;
    ++counts_[index];
    ++total_;
  }

  void merge(const Histogram& other) {
    if (other.counts_.size() != counts_.size()) {
      throw std::invalid_argument("Histogram: bin counts differ");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    total_ += other.total_;
  }

  std::size_t bin_count() const { return counts_.size(); }
  double bin_width() const { return 1.0 / static_cast<double>(counts_.size()); }
  double bin_lo(std::size_t i) const { return static_cast<double>(i) * bin_width(); }
  double bin_hi(std::size_t i) const {
    return i + 1 == counts_.size() ? 1.0 : static_cast<double>(i + 1) * bin_width();
  }
  std::span<const std::uint64_t> counts() const { return counts_; }
  std::uint64_t total() const { return total_; }

  double density(std::size_t i) const {
    if (total_ == 0) return 0.0;
    return static_cast<double>(counts_[i]) / (static_cast<double>(total_) * bin_width());
  }

  /// Mean of the analytic density over bin i, from CDF differences.
  double analytic_density(std::size_t i) const {
    return (cdf(bin_hi(i)) - cdf(bin_lo(i))) / (bin_hi(i) - bin_lo(i));
  }

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

inline Histogram empirical_pdf(const SimConfig& config, std::size_t bins) {
  Histogram merged(bins);
  const auto partial = map_chunks(config, [bins](Engine& engine, std::size_t count) {
    Histogram h(bins);
    for (std::size_t i = 0; i < count; ++i) h.add(area_quotient(draw_sample(engine)));
    return h;
  });
  for (const auto& h : partial) merged.merge(h);
  return merged;
}

/*
 * Two-sided Kolmogorov-Smirnov distance between the empirical CDF of
 * `values` and `model_cdf`:
 *   D = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
 */
template <class Cdf>
double ks_distance(std::vector<double> values, Cdf&& model_cdf) {
  if (values.empty()) {
    throw std::invalid_argument("ks_distance: no samples");
  }
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  double largest = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = model_cdf(values[i]);
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(i + 1) / n;
    largest = std::max({largest, above - f, f - below});
  }
  return largest;
}

/// KS distance of the simulated Q sample against the closed-form CDF.
inline double ks_statistic(const SimConfig& config) {
  if (config.sample_size < 100) {
    throw std::invalid_argument("ks_statistic: at least 100 samples are required");
  }
  return ks_distance(collect_quotients(config), [](double c) { return cdf(c); });
}

struct ExperimentRow {
  std::size_t n = 0;
  double observed_mean_abs_err = 0.0;
  double theoretical = 0.0;

  double ratio() const { return observed_mean_abs_err / theoretical; }
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;
  double sigma = 0.0;
};

/// Standard deviation of Q, sqrt(mu_2 - mu_1^2), with the difference taken exactly.
inline double quotient_sigma() {
  const ExactRational variance = moment(2) - moment(1) * moment(1);
  return std::sqrt(static_cast<double>(variance));
}

/// Expected |mean - 1/4| for a sample of size n under the normal approximation.
inline double expected_mean_abs_error(std::size_t n) {
  return std::sqrt(2.0 / (static_cast<double>(n) * std::numbers::pi)) * quotient_sigma();
}

/// Seed of trial `trial` at sample size `n`.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial) {
  return substream_seed(substream_seed(seed, n), trial);
}

/*
 * For each n, averages |estimate_mean - 1/4| over `trials` independent runs
 * and pairs it with sqrt(2 / (n pi)) sigma.
 */
inline ExperimentReport error_scaling_experiment(std::span<const std::size_t> sizes,
                                                 std::size_t trials, std::uint64_t seed,
                                                 std::size_t workers = 1) {
  if (trials < 1) {
    throw std::invalid_argument("error_scaling_experiment: trials must be positive");
  }
  ExperimentReport report;
  report.sigma = quotient_sigma();
  for (std::size_t n : sizes) {
    CompensatedSum abs_err;
    for (std::size_t j = 0; j < trials; ++j) {
      const SimConfig config{trial_seed(seed, n, j), n, 1, workers};
      abs_err += std::abs(estimate_mean(config) - 0.25);
    }
    report.rows.push_back(
        {n, abs_err.value() / static_cast<double>(trials), expected_mean_abs_error(n)});
  }
  return report;
}

}  // namespace tripick
