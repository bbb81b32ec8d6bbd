#include <doctest.h>

#include "dsort/errors.hpp"
#include "dsort/plancherel.hpp"
#include "oracles.hpp"

using namespace dsort;

namespace {

Rational q(const char* s) {
  Rational out(s);
  out.canonicalize();
  return out;
}

Partition P(std::vector<std::size_t> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("plancherel_pmf") {
  CHECK(plancherel_pmf(P({2, 1})) == q("2/3"));
  CHECK(plancherel_pmf(P({1})) == 1);
  CHECK(plancherel_pmf(P({1, 1, 1})) == q("1/6"));
  CHECK(plancherel_pmf(P({3, 2, 1})) == q("256/720"));
}

TEST_CASE("prime-exponent hook formula agrees with syt_count") {
  for (std::size_t n = 1; n <= 25; ++n) {
    HookFormula hooks(n);
    for (const auto& l : partitions(n)) REQUIRE(hooks.count(l.parts()) == syt_count(l));
  }
}

TEST_CASE("exact_ds_expectation small n") {
  CHECK(exact_ds_expectation(0).value == 0);
  CHECK(exact_ds_expectation(1).value == 1);
  CHECK(exact_ds_expectation(2).value == q("3/2"));
  CHECK(exact_ds_expectation(3).value == 2);
  CHECK(exact_ds_expectation(6).value == q("2261/720"));
  CHECK(exact_ds_expectation(10).value == q("3146141/725760"));
  CHECK(exact_ds_expectation(12).value == q("232429801/47900160"));
  CHECK(exact_ds_expectation(20).value == q("383174447010300497/57926238289920000"));
}

TEST_CASE("exact_ds_expectation equals the S_n average for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    unsigned long total = 0;
    unsigned long count = 0;
    oracle::each_permutation(n, [&](const std::vector<int>& p) {
      total += oracle::lds_by_subsets(p);
      ++count;
    });
    Rational brute(total, count);
    brute.canonicalize();
    CHECK(exact_ds_expectation(static_cast<std::size_t>(n)).value == brute);
  }
}

TEST_CASE("expectation is increasing and within [1, n]") {
  Rational prev = 0;
  for (std::size_t n = 1; n <= 40; ++n) {
    const Rational v = exact_ds_expectation(n).value;
    REQUIRE(v > prev);
    REQUIRE(v >= 1);
    REQUIRE(v <= static_cast<unsigned long>(n));
    prev = v;
  }
}

TEST_CASE("Plancherel measure sums to one for n <= 60") {
  for (std::size_t n = 0; n <= 60; ++n) {
    const auto sums = plancherel_sums(n);
    REQUIRE(sums.squares == factorial(n));
    REQUIRE(sums.partition_count == partition_count(n));
  }
}

TEST_CASE("conjugation symmetry") {
  CHECK(plancherel_conjugation_check(1));
  CHECK(plancherel_conjugation_check(3));
  CHECK(plancherel_conjugation_check(10));
  for (std::size_t n = 0; n <= 40; ++n) REQUIRE(plancherel_conjugation_check(n));
}

TEST_CASE("worker count does not change the result") {
  PlancherelOptions one;
  one.workers = 1;
  PlancherelOptions four;
  four.workers = 4;
  for (std::size_t n : {1u, 7u, 33u}) {
    CHECK(exact_ds_expectation(n, one).value == exact_ds_expectation(n, four).value);
  }
}

TEST_CASE("term log") {
  PlancherelOptions opts;
  opts.log_terms = true;
  opts.workers = 3;
  const auto e = exact_ds_expectation(9, opts);
  const auto parts = partitions(9);
  REQUIRE(e.terms.size() == parts.size());
  Rational sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    CHECK(e.terms[i].first == parts[i]);
    CHECK(e.terms[i].second ==
          plancherel_pmf(parts[i]) * static_cast<unsigned long>(parts[i].first_column()));
    sum += e.terms[i].second;
  }
  CHECK(sum == e.value);
  CHECK(exact_ds_expectation(9).terms.empty());
}

TEST_CASE("size bound") {
  PlancherelOptions opts;
  opts.bound = 10;
  CHECK_NOTHROW(exact_ds_expectation(10, opts));
  CHECK_THROWS_AS(exact_ds_expectation(11, opts), SizeLimitExceeded);
  CHECK_THROWS_AS(plancherel_conjugation_check(11, opts), SizeLimitExceeded);
  CHECK_THROWS_AS(exact_ds_expectation(kPlancherelBound + 1), SizeLimitExceeded);
}
