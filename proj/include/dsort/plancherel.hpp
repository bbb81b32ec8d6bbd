#pragma once

// Exact expected Disappear-Sort pass count as the expected first-column
// length of a Plancherel-distributed partition:
//   E[D_n] = sum over lambda |- n of lambda'_1 (f^lambda)^2 / n!

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dsort/exact.hpp"
#include "dsort/tableaux.hpp"

namespace dsort {

inline constexpr std::size_t kPlancherelBound = 80;

// f^lambda for every lambda |- n, evaluated through prime exponents of n!
// and of the hook lengths so that only the final product is a big integer.
class HookFormula {
 public:
  explicit HookFormula(std::size_t n);

  std::size_t n() const { return n_; }
  // parts must be a partition of n.
  BigInt count(std::span<const std::size_t> parts);

 private:
  std::size_t n_;
  std::vector<unsigned long> primes_;
  // factors_[h] = (prime index, exponent) pairs of h.
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> factors_;
  std::vector<long> factorial_exponents_;
  // scratch
  std::vector<std::size_t> columns_;
  std::vector<std::size_t> hook_multiplicity_;
  std::vector<long> exponents_;
};

// (f^lambda)^2 / n!
Rational plancherel_pmf(const Partition& lambda);

struct PlancherelOptions {
  std::size_t bound = kPlancherelBound;
  bool log_terms = false;
  // 0 = hardware concurrency.
  unsigned workers = 0;
};

// Integer sums over lambda |- n, all exact.
struct PlancherelSums {
  std::size_t n = 0;
  BigInt squares;               // sum (f^lambda)^2
  BigInt first_column_weighted; // sum lambda'_1 (f^lambda)^2
  BigInt first_row_weighted;    // sum lambda_1 (f^lambda)^2
  std::size_t partition_count = 0;
};

PlancherelSums plancherel_sums(std::size_t n, const PlancherelOptions& options = {});

struct PlancherelExpectation {
  std::size_t n = 0;
  Rational value;
  // Per-partition contribution lambda'_1 * pmf(lambda), reverse lexicographic
  // order; filled only when requested.
  std::vector<std::pair<Partition, Rational>> terms;
};

// Throws SizeLimitExceeded when n > options.bound.
PlancherelExpectation exact_ds_expectation(std::size_t n, const PlancherelOptions& options = {});

// Expected first row equals expected first column under the Plancherel measure.
bool plancherel_conjugation_check(std::size_t n, const PlancherelOptions& options = {});

}  // namespace dsort
