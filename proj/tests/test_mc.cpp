#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "dsort/mc.hpp"
#include "dsort/plancherel.hpp"
#include "dsort/stirling.hpp"

using namespace dsort;

namespace {

// |mean - exact| within three standard errors.
bool within_3se(const RunSummary& s, double exact) {
  return std::abs(s.mean - exact) <= 3.0 * s.std_error;
}

bool within_3se_binomial(double freq, double p, std::uint64_t trials) {
  return std::abs(freq - p) <= 3.0 * std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

}  // namespace

TEST_CASE("rng is keyed and deterministic") {
  Rng a(RngSpec{1, 2}, 3, 4);
  Rng b(RngSpec{1, 2}, 3, 4);
  Rng c(RngSpec{1, 2}, 3, 5);
  Rng d(RngSpec{1, 3}, 3, 4);
  bool all_equal = true;
  bool c_differs = false;
  bool d_differs = false;
  for (int i = 0; i < 16; ++i) {
    const auto x = a.next();
    all_equal = all_equal && x == b.next();
    c_differs = c_differs || x != c.next();
    d_differs = d_differs || x != d.next();
  }
  CHECK(all_equal);
  CHECK(c_differs);
  CHECK(d_differs);

  Rng r(RngSpec{9, 0}, 0, 0);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(7) < 7);
    const double u = r.uniform01();
    CHECK((u >= 0.0 && u < 1.0));
    const double v = r.uniform_open0();
    CHECK((v > 0.0 && v <= 1.0));
  }
}

TEST_CASE("sample_permutation") {
  CHECK(sample_permutation(0, RngSpec{1, 0}).empty());
  CHECK(sample_permutation(1, RngSpec{1, 0}) == Permutation({1}));
  CHECK(sample_permutation(100, RngSpec{5, 0}) == sample_permutation(100, RngSpec{5, 0}));
  CHECK_FALSE(sample_permutation(100, RngSpec{5, 0}) == sample_permutation(100, RngSpec{6, 0}));
}

TEST_CASE("sample_permutation is uniform on S_4 (chi-square, alpha = 1e-3)") {
  constexpr int kDraws = 100000;
  std::map<std::vector<std::uint32_t>, int> counts;
  for (int t = 0; t < kDraws; ++t) {
    Rng rng(RngSpec{2718, 0}, 4, static_cast<std::uint64_t>(t));
    ++counts[sample_permutation(4, rng).values()];
  }
  REQUIRE(counts.size() == 24);
  const double expected = kDraws / 24.0;
  double chi2 = 0;
  for (const auto& [perm, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  MESSAGE("chi2 = " << chi2);
  // 99.9% quantile of chi-square with 23 degrees of freedom.
  CHECK(chi2 < 49.7282324664315);
}

TEST_CASE("mc_ds") {
  const auto one = mc_ds(1, 1000, RngSpec{3, 0});
  CHECK(one.mean == 1.0);
  CHECK(one.sample_variance == 0.0);
  CHECK(one.std_error == 0.0);
  CHECK(one.trials == 1000);
  CHECK(one.variant == Variant::ds);

  const auto three = mc_ds(3, 1000000, RngSpec{42, 0});
  CHECK(within_3se(three, 2.0));
  const auto six = mc_ds(6, 1000000, RngSpec{42, 0});
  CHECK(within_3se(six, to_double(exact_ds_expectation(6).value)));
  CHECK(six.std_error == doctest::Approx(std::sqrt(six.sample_variance / 1e6)));

  CHECK_THROWS_AS(mc_ds(3, 0, RngSpec{}), std::invalid_argument);
}

TEST_CASE("mc_rds") {
  const auto one = mc_rds(1, 500, RngSpec{3, 0});
  CHECK(one.mean == 1.0);
  CHECK(one.sample_variance == 0.0);

  const auto d = rds_expectation(20, StirlingTable(20));
  const auto two = mc_rds(2, 1000000, RngSpec{42, 0});
  CHECK(within_3se(two, 1.5));
  const auto twenty = mc_rds(20, 1000000, RngSpec{42, 0});
  CHECK(within_3se(twenty, to_double(d[20])));
  CHECK(twenty.variant == Variant::rds);
}

TEST_CASE("means match the exact engines at 1e5 trials") {
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 40}) {
    const auto s = mc_ds(n, 100000, RngSpec{20261016, 1});
    INFO("ds n=" << n << " mean=" << s.mean << " se=" << s.std_error);
    CHECK(within_3se(s, to_double(exact_ds_expectation(n).value)));
  }
  const auto d = rds_expectation(50, StirlingTable(50));
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 50}) {
    const auto s = mc_rds(n, 100000, RngSpec{20261016, 2});
    INFO("rds n=" << n << " mean=" << s.mean << " se=" << s.std_error);
    CHECK(within_3se(s, to_double(d[n])));
  }
}

TEST_CASE("record probabilities") {
  CHECK(mc_record_probability(10, 1, 1000, RngSpec{1, 0}) == 1.0);
  CHECK(within_3se_binomial(mc_record_probability(10, 4, 1000000, RngSpec{8, 0}), 0.25, 1000000));
  CHECK(within_3se_binomial(mc_record_probability(5, 5, 1000000, RngSpec{8, 0}), 0.2, 1000000));
  CHECK_THROWS_AS(mc_record_probability(5, 0, 10, RngSpec{}), IndexOutOfRange);
  CHECK_THROWS_AS(mc_record_probability(5, 6, 10, RngSpec{}), IndexOutOfRange);
}

TEST_CASE("record count mean is H_n") {
  const Estimate e = mc_record_count(30, 200000, RngSpec{12, 0});
  CHECK(std::abs(e.mean - to_double(harmonic(30))) <= 3 * e.std_error);
}

TEST_CASE("worker count does not change summaries") {
  McOptions one;
  one.workers = 1;
  McOptions many;
  many.workers = 5;
  for (Variant v : {Variant::ds, Variant::rds}) {
    const auto a = mc_run(v, 40, 30000, RngSpec{77, 1}, one);
    const auto b = mc_run(v, 40, 30000, RngSpec{77, 1}, many);
    CHECK(a.mean == b.mean);
    CHECK(a.sample_variance == b.sample_variance);
    CHECK(a.std_error == b.std_error);
  }
  CHECK(mc_record_frequencies(12, 30000, RngSpec{4, 0}, one) ==
        mc_record_frequencies(12, 30000, RngSpec{4, 0}, many));
}

TEST_CASE("real-valued sampling agrees with permutation sampling") {
  const double exact = to_double(exact_ds_expectation(6).value);
  for (Sampling s : {Sampling::uniform, Sampling::exponential, Sampling::normal}) {
    McOptions opts;
    opts.sampling = s;
    CAPTURE(to_string(s));
    CHECK(within_3se(mc_ds(6, 200000, RngSpec{21, 0}, opts), exact));
    CHECK(within_3se_binomial(mc_record_probability(8, 3, 200000, RngSpec{21, 0}, opts),
                              1.0 / 3.0, 200000));
  }
  McOptions opts;
  opts.sampling = Sampling::exponential;
  const double d5 = to_double(rds_expectation(5, StirlingTable(5))[5]);
  CHECK(within_3se(mc_rds(5, 200000, RngSpec{21, 0}, opts), d5));
}

TEST_CASE("asymptotic_scan") {
  const std::vector<std::size_t> ns{400, 1, 100};
  const auto rows = asymptotic_scan(ns, 2000, RngSpec{6, 0});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n == 1);
  CHECK(rows[1].n == 100);
  CHECK(rows[2].n == 400);
  CHECK(rows[0].mean == 1.0);
  CHECK(rows[0].two_sqrt_n == 2.0);
  CHECK(rows[0].ratio == 0.5);
  CHECK(rows[2].two_sqrt_n == 2.0 * std::sqrt(400.0));
  CHECK(rows[1].ratio < rows[2].ratio);
  const std::vector<std::size_t> bad{0};
  CHECK_THROWS_AS(asymptotic_scan(bad, 10, RngSpec{}), std::invalid_argument);
}
