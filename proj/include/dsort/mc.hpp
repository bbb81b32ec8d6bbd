#pragma once

// Seeded Monte Carlo estimates of the Disappear-Sort pass counts (plain and
// resampling variants), record probabilities and large-n scaling.
//
// Per-trial randomness comes from Rng(spec, n, trial) and all accumulation is
// in integers, so a summary is bit-identical for any worker count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dsort/permcore.hpp"
#include "dsort/rng.hpp"

namespace dsort {

enum class Variant { ds, rds };

std::string to_string(Variant v);

// Uniform permutations directly, or ranks of i.i.d. real samples. The real
// modes exist only as a distribution-freeness cross-check.
enum class Sampling { permutation, uniform, exponential, normal };

std::string to_string(Sampling s);

struct McOptions {
  // 0 = hardware concurrency.
  unsigned workers = 0;
  Sampling sampling = Sampling::permutation;
};

struct Estimate {
  std::uint64_t trials = 0;
  double mean = 0.0;
  double sample_variance = 0.0;
  // sqrt(sample_variance / trials)
  double std_error = 0.0;
};

struct RunSummary {
  std::size_t n = 0;
  Variant variant = Variant::ds;
  std::uint64_t trials = 0;
  double mean = 0.0;
  double sample_variance = 0.0;
  double std_error = 0.0;
  RngSpec rng;
  double wall_time = 0.0;
};

struct AsymptoticRow {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double two_sqrt_n = 0.0;
  // mean / (2 sqrt n)
  double ratio = 0.0;
  // (mean - 2 sqrt n) / n^(1/6)
  double scaled_fluct = 0.0;
};

// Fisher-Yates on the identity.
Permutation sample_permutation(std::size_t n, Rng& rng);
Permutation sample_permutation(std::size_t n, const RngSpec& spec);

// Throws std::invalid_argument when trials == 0.
RunSummary mc_ds(std::size_t n, std::uint64_t trials, const RngSpec& spec,
                 const McOptions& options = {});
RunSummary mc_rds(std::size_t n, std::uint64_t trials, const RngSpec& spec,
                  const McOptions& options = {});
RunSummary mc_run(Variant variant, std::size_t n, std::uint64_t trials, const RngSpec& spec,
                  const McOptions& options = {});

// Fraction of trials in which position i (1-based) holds a record, for every
// i in 1..n.
std::vector<double> mc_record_frequencies(std::size_t n, std::uint64_t trials,
                                          const RngSpec& spec, const McOptions& options = {});
// Throws IndexOutOfRange unless 1 <= i <= n.
double mc_record_probability(std::size_t n, std::size_t i, std::uint64_t trials,
                             const RngSpec& spec, const McOptions& options = {});

// Number of records per sequence of length n.
Estimate mc_record_count(std::size_t n, std::uint64_t trials, const RngSpec& spec,
                         const McOptions& options = {});

// One DS run per n, rows sorted by n. Each n must be at least 1.
std::vector<AsymptoticRow> asymptotic_scan(std::span<const std::size_t> ns, std::uint64_t trials,
                                           const RngSpec& spec, const McOptions& options = {});

AsymptoticRow make_asymptotic_row(std::size_t n, std::uint64_t trials, double mean,
                                  double std_error);

}  // namespace dsort
