#include "dsort/stirling.hpp"

#include <string>

#include "dsort/errors.hpp"

namespace dsort {

StirlingTable::StirlingTable(std::size_t n_max) : n_max_(n_max) {
  rows_.reserve(n_max + 1);
  rows_.emplace_back(1, BigInt(1));
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(n + 1);
    row[0] = 0;
    for (std::size_t r = 1; r <= n; ++r) {
      row[r] = prev[r - 1];
      if (r < n) row[r] += static_cast<unsigned long>(n - 1) * prev[r];
    }
    rows_.push_back(std::move(row));
  }
  factorials_.reserve(n_max + 1);
  for (const auto& row : rows_) {
    BigInt sum = 0;
    for (const auto& c : row) sum += c;
    factorials_.push_back(std::move(sum));
  }
}

const BigInt& StirlingTable::operator()(std::size_t n, std::size_t r) const {
  if (n > n_max_ || r > n) {
    throw OutOfTableRange("c(" + std::to_string(n) + "," + std::to_string(r) +
                          ") outside table with n_max=" + std::to_string(n_max_));
  }
  return rows_[n][r];
}

const BigInt& StirlingTable::factorial(std::size_t n) const {
  if (n > n_max_) {
    throw OutOfTableRange(std::to_string(n) + "! outside table with n_max=" +
                          std::to_string(n_max_));
  }
  return factorials_[n];
}

StirlingTable stirling_table(std::size_t n_max) { return StirlingTable(n_max); }

std::vector<Rational> record_count_pmf(std::size_t n, const StirlingTable& table) {
  const BigInt& total = table.factorial(n);
  std::vector<Rational> pmf;
  pmf.reserve(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    Rational q(table(n, r), total);
    q.canonicalize();
    pmf.push_back(std::move(q));
  }
  return pmf;
}

Rational harmonic(std::size_t n) {
  Rational h = 0;
  for (std::size_t k = 1; k <= n; ++k) h += Rational(1, static_cast<unsigned long>(k));
  return h;
}

RdsExpectationTable rds_expectation(std::size_t n, const StirlingTable& table) {
  if (n > table.n_max()) {
    throw OutOfTableRange("rds_expectation: n=" + std::to_string(n) +
                          " exceeds table n_max=" + std::to_string(table.n_max()));
  }
  RdsExpectationTable out;
  out.d.reserve(n + 1);
  out.d.emplace_back(0);
  for (std::size_t k = 1; k <= n; ++k) {
    // Accumulate sum_r d_{k-r} c(k, r) before the single division by k!.
    Rational acc = 0;
    for (std::size_t r = 1; r < k; ++r) acc += out.d[k - r] * Rational(table(k, r));
    Rational dk = acc / Rational(table.factorial(k)) + 1;
    out.d.push_back(std::move(dk));
  }
  return out;
}

}  // namespace dsort
