#include <doctest.h>

#include <chrono>

#include "dsort/ldsfast.hpp"
#include "dsort/mc.hpp"
#include "oracles.hpp"

using namespace dsort;

TEST_CASE("lds_fast examples") {
  CHECK(lds_fast(std::vector<int>{2, 5, 3, 9, 6, 4}) == 3);
  CHECK(lds_fast(Permutation::identity(1000)) == 1);
  CHECK(lds_fast(Permutation({1, 4, 2, 6, 5, 3})) == 3);
  CHECK(lds_fast(Permutation()) == 0);
  CHECK(lds_fast(std::vector<double>{0.5, -2.0, 0.25, -3.5}) == 3);
}

TEST_CASE("lis_fast examples") {
  CHECK(lis_fast(Permutation({1, 4, 2, 6, 5, 3})) == 3);
  CHECK(lis_fast(Permutation({5, 4, 3, 2, 1})) == 1);
  CHECK(lis_fast(Permutation({1, 2, 3})) == 3);
  CHECK(lis_fast(std::vector<long long>{-3, 10, -1, 4}) == 3);
}

TEST_CASE("ties") {
  CHECK_THROWS_AS(lds_fast(std::vector<int>{3, 3, 1}), DuplicateValues);
  CHECK_THROWS_AS(lis_fast(std::vector<int>{1, 1}), DuplicateValues);
  // Allowed ties count strictly decreasing runs only.
  CHECK(lds_fast(std::vector<int>{3, 3, 1}, TiePolicy::allow) == 2);
  CHECK(lis_fast(std::vector<int>{1, 1, 1}, TiePolicy::allow) == 1);
}

TEST_CASE("tails stay strictly increasing") {
  TailsState<int> state;
  const std::vector<int> seq{5, 1, 4, 2, 8, 3, 9, 7, 6, 10};
  std::size_t prev_len = 0;
  for (int x : seq) {
    state.insert(x);
    const auto& t = state.tails();
    CHECK(std::adjacent_find(t.begin(), t.end(), std::greater_equal<>()) == t.end());
    CHECK(state.length() >= prev_len);
    prev_len = state.length();
  }
  CHECK(state.length() == oracle::lis_by_subsets(seq));
}

TEST_CASE("exhaustive agreement with subset brute force, n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    oracle::each_permutation(n, [](const std::vector<int>& v) {
      const Permutation p = Permutation::ranks_of(v);
      REQUIRE(lds_fast(p) == oracle::lds_by_subsets(v));
      REQUIRE(lis_fast(p) == oracle::lis_by_subsets(v));
      REQUIRE(lds_fast(v) == oracle::lds_by_subsets(v));
    });
  }
}

TEST_CASE("random permutations up to n = 512") {
  const RngSpec spec{314159, 2};
  for (std::uint64_t t = 0; t < 10000; ++t) {
    Rng rng(spec, 0, t);
    const std::size_t n = 1 + rng.below(512);
    const Permutation p = sample_permutation(n, rng);
    const std::size_t fast = lds_fast(p);
    REQUIRE(fast == ds_passes_naive(p));
    REQUIRE(fast == longest_chain_bruteforce(DsPoset(p)));
    REQUIRE(fast == lis_fast(p.complement()));
    REQUIRE(fast == lis_fast(p.reversed()));
    // Reversing and complementing together preserves both lengths.
    REQUIRE(lis_fast(p) == lis_fast(p.reversed().complement()));
  }
}

namespace {

double best_seconds(std::size_t n, int reps) {
  const Permutation p = sample_permutation(n, RngSpec{n, 77});
  double best = 1e30;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    volatile std::size_t d = lds_fast(p);
    (void)d;
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

TEST_CASE("doubling n from 2^18 to 2^19 costs less than 2.5x") {
  const double small = best_seconds(1u << 18, 7);
  const double large = best_seconds(1u << 19, 7);
  MESSAGE("2^18: " << small << " s, 2^19: " << large << " s, ratio " << large / small);
  CHECK(large / small < 2.5);
}
