#pragma once

// Unsigned Stirling numbers of the first kind, the exact distribution of the
// number of records in a uniform random permutation, and the exact expected
// pass count of the resampling variant.

#include <cstddef>
#include <vector>

#include "dsort/exact.hpp"

namespace dsort {

// c(n, r) for 0 <= r <= n <= n_max, filled by
// c(n, r) = c(n-1, r-1) + (n-1) c(n-1, r). Storage is triangular, so memory
// grows as n_max^2 big integers; intended for n_max up to a few hundred.
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t n_max);

  std::size_t n_max() const { return n_max_; }
  // Throws OutOfTableRange when n > n_max or r > n.
  const BigInt& operator()(std::size_t n, std::size_t r) const;
  // n! as the row sum of c(n, .).
  const BigInt& factorial(std::size_t n) const;

 private:
  std::size_t n_max_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<BigInt> factorials_;
};

StirlingTable stirling_table(std::size_t n_max);

// Entry r (0 <= r <= n) is P(N_n = r) = c(n, r) / n!.
std::vector<Rational> record_count_pmf(std::size_t n, const StirlingTable& table);

// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
Rational harmonic(std::size_t n);

struct RdsExpectationTable {
  // d[k] = expected passes of the resampling procedure on k elements.
  std::vector<Rational> d;

  const Rational& operator[](std::size_t k) const { return d.at(k); }
  std::size_t size() const { return d.size(); }
};

// d_0 = 0 and d_k = 1 + sum_{r=1..k} d_{k-r} c(k, r) / k! for k = 1..n.
RdsExpectationTable rds_expectation(std::size_t n, const StirlingTable& table);

}  // namespace dsort
