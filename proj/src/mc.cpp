#include "dsort/mc.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dsort/ldsfast.hpp"

namespace dsort {

std::string to_string(Variant v) { return v == Variant::ds ? "ds" : "rds"; }

std::string to_string(Sampling s) {
  switch (s) {
    case Sampling::permutation: return "permutation";
    case Sampling::uniform: return "uniform";
    case Sampling::exponential: return "exponential";
    case Sampling::normal: return "normal";
  }
  return "permutation";
}

namespace {

constexpr std::uint64_t kBlockTrials = 4096;

struct Moments {
  std::uint64_t count = 0;
  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;

  void add(std::uint64_t x) {
    ++count;
    sum += x;
    sum_sq += static_cast<unsigned __int128>(x) * x;
  }
  void merge(const Moments& o) {
    count += o.count;
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
};

Estimate to_estimate(const Moments& m) {
  Estimate e;
  e.trials = m.count;
  if (m.count == 0) return e;
  const auto t = static_cast<long double>(m.count);
  e.mean = static_cast<double>(static_cast<long double>(m.sum) / t);
  if (m.count > 1) {
    // Exact integer numerator: T * sum(x^2) - (sum x)^2 >= 0.
    const unsigned __int128 num = static_cast<unsigned __int128>(m.count) * m.sum_sq -
                                  static_cast<unsigned __int128>(m.sum) * m.sum;
    e.sample_variance = static_cast<double>(static_cast<long double>(num) / (t * (t - 1)));
  }
  e.std_error = std::sqrt(e.sample_variance / static_cast<double>(m.count));
  return e;
}

unsigned resolve_workers(unsigned requested, std::uint64_t trials) {
  unsigned w = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;
  return static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(w, blocks)));
}

// Runs worker(trial) for every trial index; workers pull fixed-size blocks.
// Worker states are returned in creation order for an ordered merge.
template <typename Worker, typename Factory>
std::vector<Worker> for_each_trial(std::uint64_t trials, unsigned requested, Factory make) {
  const unsigned workers = resolve_workers(requested, trials);
  std::vector<Worker> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.push_back(make());
  std::atomic<std::uint64_t> next_block{0};
  auto body = [&](Worker& state) {
    for (;;) {
      const std::uint64_t begin = next_block.fetch_add(1) * kBlockTrials;
      if (begin >= trials) return;
      const std::uint64_t end = std::min(trials, begin + kBlockTrials);
      for (std::uint64_t t = begin; t < end; ++t) state(t);
    }
  };
  if (workers == 1) {
    body(states[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (auto& s : states) threads.emplace_back(body, std::ref(s));
    for (auto& th : threads) th.join();
  }
  return states;
}

void fill_permutation(std::vector<std::uint32_t>& out, std::size_t n, Rng& rng) {
  out.resize(n);
  std::iota(out.begin(), out.end(), std::uint32_t{1});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(out[i - 1], out[j]);
  }
}

void fill_reals(std::vector<double>& out, std::size_t n, Rng& rng, Sampling sampling) {
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (sampling) {
      case Sampling::exponential:
        out[i] = -std::log(rng.uniform_open0());
        break;
      case Sampling::normal: {
        const double r = std::sqrt(-2.0 * std::log(rng.uniform_open0()));
        out[i] = r * std::cos(2.0 * std::numbers::pi * rng.uniform01());
        break;
      }
      default:
        out[i] = rng.uniform01();
        break;
    }
  }
}

template <typename T>
std::uint64_t count_records(const std::vector<T>& v) {
  if (v.empty()) return 0;
  T running = v[0];
  std::uint64_t count = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > running) {
      running = v[i];
      ++count;
    }
  }
  return count;
}

// Scratch and sampling shared by the per-trial workers.
struct Sampler {
  Sampling sampling;
  std::vector<std::uint32_t> perm;
  std::vector<double> reals;

  std::uint64_t passes(std::size_t n, Rng& rng) {
    if (sampling == Sampling::permutation) {
      fill_permutation(perm, n, rng);
      return lds_fast(perm, TiePolicy::allow);
    }
    fill_reals(reals, n, rng, sampling);
    return lds_fast(reals, TiePolicy::allow);
  }

  std::uint64_t records(std::size_t n, Rng& rng) {
    if (sampling == Sampling::permutation) {
      fill_permutation(perm, n, rng);
      return count_records(perm);
    }
    fill_reals(reals, n, rng, sampling);
    return count_records(reals);
  }
};

void require_trials(std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
}

template <typename Trial>
Moments run_moments(std::uint64_t trials, const McOptions& options, Trial trial) {
  struct Worker {
    Trial trial;
    Sampler sampler;
    Moments moments;
    void operator()(std::uint64_t t) { moments.add(trial(sampler, t)); }
  };
  auto states = for_each_trial<Worker>(trials, options.workers, [&] {
    return Worker{trial, Sampler{options.sampling, {}, {}}, {}};
  });
  Moments total;
  for (const auto& s : states) total.merge(s.moments);
  return total;
}

RunSummary summarize(Variant variant, std::size_t n, const RngSpec& spec, const Moments& m,
                     std::chrono::steady_clock::time_point start) {
  const Estimate e = to_estimate(m);
  RunSummary out;
  out.n = n;
  out.variant = variant;
  out.trials = e.trials;
  out.mean = e.mean;
  out.sample_variance = e.sample_variance;
  out.std_error = e.std_error;
  out.rng = spec;
  out.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

Permutation sample_permutation(std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> v;
  fill_permutation(v, n, rng);
  return Permutation(std::move(v));
}

Permutation sample_permutation(std::size_t n, const RngSpec& spec) {
  Rng rng(spec, n, 0);
  return sample_permutation(n, rng);
}

RunSummary mc_ds(std::size_t n, std::uint64_t trials, const RngSpec& spec,
                 const McOptions& options) {
  require_trials(trials);
  const auto start = std::chrono::steady_clock::now();
  const Moments m = run_moments(trials, options, [n, spec](Sampler& s, std::uint64_t t) {
    Rng rng(spec, n, t);
    return s.passes(n, rng);
  });
  return summarize(Variant::ds, n, spec, m, start);
}

RunSummary mc_rds(std::size_t n, std::uint64_t trials, const RngSpec& spec,
                  const McOptions& options) {
  require_trials(trials);
  const auto start = std::chrono::steady_clock::now();
  const Moments m = run_moments(trials, options, [n, spec](Sampler& s, std::uint64_t t) {
    Rng rng(spec, n, t);
    std::uint64_t passes = 0;
    // Each pass sees a fresh sample of the surviving size.
    for (std::size_t size = n; size > 0; ++passes) size -= s.records(size, rng);
    return passes;
  });
  return summarize(Variant::rds, n, spec, m, start);
}

RunSummary mc_run(Variant variant, std::size_t n, std::uint64_t trials, const RngSpec& spec,
                  const McOptions& options) {
  return variant == Variant::ds ? mc_ds(n, trials, spec, options)
                                : mc_rds(n, trials, spec, options);
}

std::vector<double> mc_record_frequencies(std::size_t n, std::uint64_t trials,
                                          const RngSpec& spec, const McOptions& options) {
  require_trials(trials);
  struct Worker {
    std::size_t n;
    RngSpec spec;
    Sampler sampler;
    std::vector<std::uint64_t> hits;
    void operator()(std::uint64_t t) {
      Rng rng(spec, n, t);
      auto mark = [&](const auto& v) {
        auto running = v[0];
        ++hits[0];
        for (std::size_t i = 1; i < v.size(); ++i) {
          if (v[i] > running) {
            running = v[i];
            ++hits[i];
          }
        }
      };
      if (n == 0) return;
      if (sampler.sampling == Sampling::permutation) {
        fill_permutation(sampler.perm, n, rng);
        mark(sampler.perm);
      } else {
        fill_reals(sampler.reals, n, rng, sampler.sampling);
        mark(sampler.reals);
      }
    }
  };
  auto states = for_each_trial<Worker>(trials, options.workers, [&] {
    return Worker{n, spec, Sampler{options.sampling, {}, {}}, std::vector<std::uint64_t>(n, 0)};
  });
  std::vector<std::uint64_t> hits(n, 0);
  for (const auto& s : states) {
    for (std::size_t i = 0; i < n; ++i) hits[i] += s.hits[i];
  }
  std::vector<double> freq(n);
  for (std::size_t i = 0; i < n; ++i) {
    freq[i] = static_cast<double>(hits[i]) / static_cast<double>(trials);
  }
  return freq;
}

double mc_record_probability(std::size_t n, std::size_t i, std::uint64_t trials,
                             const RngSpec& spec, const McOptions& options) {
  if (i < 1 || i > n) {
    throw IndexOutOfRange("record position " + std::to_string(i) + " outside 1.." +
                          std::to_string(n));
  }
  return mc_record_frequencies(n, trials, spec, options)[i - 1];
}

Estimate mc_record_count(std::size_t n, std::uint64_t trials, const RngSpec& spec,
                         const McOptions& options) {
  require_trials(trials);
  const Moments m = run_moments(trials, options, [n, spec](Sampler& s, std::uint64_t t) {
    Rng rng(spec, n, t);
    return s.records(n, rng);
  });
  return to_estimate(m);
}

AsymptoticRow make_asymptotic_row(std::size_t n, std::uint64_t trials, double mean,
                                  double std_error) {
  AsymptoticRow row;
  row.n = n;
  row.trials = trials;
  row.mean = mean;
  row.std_error = std_error;
  const auto nd = static_cast<double>(n);
  row.two_sqrt_n = 2.0 * std::sqrt(nd);
  row.ratio = mean / row.two_sqrt_n;
  row.scaled_fluct = (mean - row.two_sqrt_n) / std::pow(nd, 1.0 / 6.0);
  return row;
}

std::vector<AsymptoticRow> asymptotic_scan(std::span<const std::size_t> ns, std::uint64_t trials,
                                           const RngSpec& spec, const McOptions& options) {
  std::vector<std::size_t> sorted(ns.begin(), ns.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<AsymptoticRow> rows;
  rows.reserve(sorted.size());
  for (std::size_t n : sorted) {
    if (n == 0) throw std::invalid_argument("asymptotic_scan requires n >= 1");
    const RunSummary s = mc_ds(n, trials, spec, options);
    rows.push_back(make_asymptotic_row(n, trials, s.mean, s.std_error));
  }
  return rows;
}

}  // namespace dsort
