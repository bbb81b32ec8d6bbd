#include "dsort/plancherel.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <thread>

#include "dsort/errors.hpp"

namespace dsort {

HookFormula::HookFormula(std::size_t n)
    : n_(n), factors_(n + 1), columns_(n + 1), hook_multiplicity_(n + 1) {
  std::vector<bool> composite(n + 1, false);
  for (std::size_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes_.push_back(p);
    for (std::size_t m = p * p; m <= n; m += p) composite[m] = true;
  }
  factorial_exponents_.assign(primes_.size(), 0);
  for (std::size_t h = 2; h <= n; ++h) {
    std::size_t rest = h;
    for (std::size_t i = 0; i < primes_.size() && rest > 1; ++i) {
      unsigned e = 0;
      while (rest % primes_[i] == 0) {
        rest /= primes_[i];
        ++e;
      }
      if (e) {
        factors_[h].emplace_back(i, e);
        factorial_exponents_[i] += e;
      }
    }
  }
}

BigInt HookFormula::count(std::span<const std::size_t> parts) {
  std::fill(columns_.begin(), columns_.end(), 0);
  std::fill(hook_multiplicity_.begin(), hook_multiplicity_.end(), 0);
  for (std::size_t part : parts) {
    for (std::size_t j = 0; j < part; ++j) ++columns_[j];
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts[i]; ++j) {
      ++hook_multiplicity_[(parts[i] - j - 1) + (columns_[j] - i - 1) + 1];
    }
  }
  exponents_ = factorial_exponents_;
  for (std::size_t h = 2; h <= n_; ++h) {
    const std::size_t m = hook_multiplicity_[h];
    if (m == 0) continue;
    for (auto [pi, e] : factors_[h]) exponents_[pi] -= static_cast<long>(m * e);
  }

  BigInt out = 1;
  unsigned long chunk = 1;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const unsigned long p = primes_[i];
    for (long e = exponents_[i]; e > 0; --e) {
      if (chunk > ULONG_MAX / p) {
        out *= chunk;
        chunk = 1;
      }
      chunk *= p;
    }
  }
  out *= chunk;
  return out;
}

Rational plancherel_pmf(const Partition& lambda) {
  const BigInt f = syt_count(lambda);
  Rational q(f * f, factorial(lambda.size()));
  q.canonicalize();
  return q;
}

namespace {

void check_bound(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw SizeLimitExceeded("Plancherel sum: n=" + std::to_string(n) +
                            " exceeds configured bound " + std::to_string(bound));
  }
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Slice {
  PlancherelSums sums;
  std::vector<std::pair<Partition, Rational>> terms;
};

// Partitions of n whose first part is exactly `first`; reverse lexicographic.
void sum_with_first_part(std::size_t n, std::size_t first, HookFormula& hooks, bool log_terms,
                         const BigInt& n_factorial, Slice& slice) {
  std::vector<std::size_t> parts{first};
  const std::size_t rest = n - first;
  // Start the tail walker at the largest tail with parts <= first.
  std::vector<std::size_t> tail;
  for (std::size_t left = rest; left > 0;) {
    const std::size_t take = std::min(first, left);
    tail.push_back(take);
    left -= take;
  }
  for (;;) {
    parts.resize(1);
    parts.insert(parts.end(), tail.begin(), tail.end());
    const BigInt f = hooks.count(parts);
    const BigInt f2 = f * f;
    slice.sums.squares += f2;
    slice.sums.first_column_weighted += f2 * static_cast<unsigned long>(parts.size());
    slice.sums.first_row_weighted += f2 * static_cast<unsigned long>(first);
    ++slice.sums.partition_count;
    if (log_terms) {
      Rational term(f2 * static_cast<unsigned long>(parts.size()), n_factorial);
      term.canonicalize();
      slice.terms.emplace_back(Partition(parts), std::move(term));
    }
    // Next tail in reverse lexicographic order.
    std::size_t k = tail.size();
    while (k > 0 && tail[k - 1] == 1) --k;
    if (k == 0) break;
    --k;
    std::size_t ones = tail.size() - k - 1 + 1;
    const std::size_t v = --tail[k];
    tail.resize(k + 1);
    while (ones > 0) {
      const std::size_t take = std::min(v, ones);
      tail.push_back(take);
      ones -= take;
    }
  }
}

std::vector<Slice> compute_slices(std::size_t n, const PlancherelOptions& options) {
  check_bound(n, options.bound);
  std::vector<Slice> slices(n + 1);
  if (n == 0) return slices;
  const BigInt n_factorial = factorial(n);
  const unsigned workers = std::min<unsigned>(resolve_workers(options.workers),
                                              static_cast<unsigned>(n));
  auto work = [&](unsigned w) {
    HookFormula hooks(n);
    // Worker w owns first parts n-w, n-w-workers, ...
    for (std::size_t first = n - w;; first -= workers) {
      sum_with_first_part(n, first, hooks, options.log_terms, n_factorial, slices[first]);
      if (first <= workers) break;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  return slices;
}

}  // namespace

PlancherelSums plancherel_sums(std::size_t n, const PlancherelOptions& options) {
  PlancherelOptions quiet = options;
  quiet.log_terms = false;
  auto slices = compute_slices(n, quiet);
  PlancherelSums out;
  out.n = n;
  if (n == 0) {
    out.squares = 1;
    out.partition_count = 1;
    return out;
  }
  for (std::size_t first = n; first >= 1; --first) {
    const auto& s = slices[first].sums;
    out.squares += s.squares;
    out.first_column_weighted += s.first_column_weighted;
    out.first_row_weighted += s.first_row_weighted;
    out.partition_count += s.partition_count;
  }
  return out;
}

PlancherelExpectation exact_ds_expectation(std::size_t n, const PlancherelOptions& options) {
  PlancherelExpectation out;
  out.n = n;
  if (n == 0) {
    check_bound(n, options.bound);
    out.value = 0;
    return out;
  }
  auto slices = compute_slices(n, options);
  BigInt weighted = 0;
  for (std::size_t first = n; first >= 1; --first) {
    weighted += slices[first].sums.first_column_weighted;
    if (options.log_terms) {
      auto& t = slices[first].terms;
      std::move(t.begin(), t.end(), std::back_inserter(out.terms));
    }
  }
  out.value = Rational(weighted, factorial(n));
  out.value.canonicalize();
  return out;
}

bool plancherel_conjugation_check(std::size_t n, const PlancherelOptions& options) {
  const auto sums = plancherel_sums(n, options);
  return sums.first_row_weighted == sums.first_column_weighted;
}

}  // namespace dsort
