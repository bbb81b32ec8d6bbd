#include "dsort/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

#include "dsort/ldsfast.hpp"
#include "dsort/mc.hpp"
#include "dsort/permcore.hpp"
#include "dsort/plancherel.hpp"
#include "dsort/stirling.hpp"
#include "dsort/tableaux.hpp"

namespace dsort {

namespace {

// Empty string = pass; otherwise the first failure found.
using Check = std::function<std::string()>;

struct Suite {
  std::string name;
  std::string description;
  Check run;
};

template <typename Fn>
std::string for_all_permutations(std::size_t max_n, Fn&& fn) {
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 1u);
    do {
      const Permutation p(v);
      if (std::string err = fn(p); !err.empty()) return err + " for " + to_string(p);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return {};
}

std::string check_records() {
  return for_all_permutations(8, [](const Permutation& p) -> std::string {
    const auto pass = ds_pass(p);
    if (!std::is_sorted(pass.records.begin(), pass.records.end()) ||
        std::adjacent_find(pass.records.begin(), pass.records.end()) != pass.records.end()) {
      return "records not strictly increasing";
    }
    if (!p.empty() && pass.records.empty()) return "no record in nonempty input";
    // Merge back by original position.
    const auto idx = record_indices(p);
    std::vector<std::uint32_t> merged;
    std::size_t r = 0, d = 0, k = 0;
    for (std::size_t i = 1; i <= p.size(); ++i) {
      if (k < idx.size() && idx[k] == i) {
        merged.push_back(pass.records[r++]);
        ++k;
      } else {
        merged.push_back(pass.discards[d++]);
      }
    }
    if (merged != p.values()) return "split does not reconstitute input";
    return {};
  });
}

std::string check_layers() {
  return for_all_permutations(8, [](const Permutation& p) -> std::string {
    const DsPoset poset(p);
    const auto dec = ds_layers(p);
    std::vector<Index> all;
    std::vector<Index> remaining(p.size());
    std::iota(remaining.begin(), remaining.end(), Index{1});
    for (const auto& layer : dec.layers) {
      if (!is_antichain(poset, layer)) return "layer is not an antichain";
      if (minimal_elements(poset, remaining) != layer) return "layer is not the minimal set";
      std::vector<Index> rest;
      std::set_difference(remaining.begin(), remaining.end(), layer.begin(), layer.end(),
                          std::back_inserter(rest));
      remaining.swap(rest);
      all.insert(all.end(), layer.begin(), layer.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<Index> expect(p.size());
    std::iota(expect.begin(), expect.end(), Index{1});
    if (all != expect) return "layers do not partition the positions";
    if (dec.depth() != ds_passes_naive(p)) return "depth differs from naive pass count";
    return {};
  });
}

std::string check_theorem() {
  return for_all_permutations(8, [](const Permutation& p) -> std::string {
    const std::size_t naive = ds_passes_naive(p);
    if (lds_fast(p) != naive) return "lds_fast differs from naive passes";
    if (longest_chain_bruteforce(DsPoset(p)) != naive) return "longest chain differs";
    if (rsk_shape(p).shape.first_column() != naive) return "RSK first column differs";
    return {};
  });
}

std::string check_mirsky() {
  return for_all_permutations(kMirskySearchBound, [](const Permutation& p) -> std::string {
    const DsPoset poset(p);
    const std::size_t depth = ds_layers(p).depth();
    if (depth > 0 && antichain_partition_exists(poset, depth - 1)) {
      return "antichain partition smaller than the DS depth exists";
    }
    if (!antichain_partition_exists(poset, depth)) return "no partition of size depth";
    return {};
  });
}

std::string check_rsk() {
  std::string err = for_all_permutations(7, [](const Permutation& p) -> std::string {
    const auto rs = rsk_shape(p);
    if (!rs.insertion.is_standard() || !rs.recording.is_standard()) return "tableau not standard";
    if (rs.insertion.shape() != rs.recording.shape()) return "P and Q shapes differ";
    if (rs.shape.first_column() != lds_fast(p)) return "first column differs from LDS";
    if (rs.shape.first_row() != lis_fast(p)) return "first row differs from LIS";
    return {};
  });
  if (!err.empty()) return err;
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<std::pair<StandardTableau, StandardTableau>> seen;
    std::size_t count = 0;
    err = for_all_permutations(n, [&](const Permutation& p) -> std::string {
      if (p.size() != n) return {};
      auto rs = rsk_shape(p);
      ++count;
      seen.emplace(std::move(rs.insertion), std::move(rs.recording));
      return {};
    });
    if (!err.empty()) return err;
    if (seen.size() != count) return "RSK not injective at n=" + std::to_string(n);
  }
  return {};
}

std::string check_hooks() {
  for (std::size_t n = 0; n <= kSytEnumerationBound; ++n) {
    for (const auto& lambda : partitions(n)) {
      if (syt_count(lambda) != syt_enumerate(lambda).size()) {
        return "hook-length count differs from enumeration for " + to_string(lambda);
      }
    }
  }
  return {};
}

std::string check_plancherel() {
  for (std::size_t n = 0; n <= 60; ++n) {
    const auto sums = plancherel_sums(n);
    if (sums.squares != factorial(n)) return "sum of (f^lambda)^2 != n! at n=" + std::to_string(n);
    if (sums.partition_count != partition_count(n)) {
      return "partition count mismatch at n=" + std::to_string(n);
    }
  }
  return {};
}

std::string check_exact() {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::uint64_t total = 0;
    std::uint64_t perms = 0;
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 1u);
    do {
      total += ds_passes_naive(v);
      ++perms;
    } while (std::next_permutation(v.begin(), v.end()));
    Rational brute(BigInt(static_cast<unsigned long>(total)),
                   BigInt(static_cast<unsigned long>(perms)));
    brute.canonicalize();
    if (exact_ds_expectation(n).value != brute) {
      return "Plancherel expectation differs from enumeration at n=" + std::to_string(n);
    }
  }
  Rational prev = 0;
  for (std::size_t n = 1; n <= 40; ++n) {
    const Rational cur = exact_ds_expectation(n).value;
    if (cur <= prev) return "expectation not increasing at n=" + std::to_string(n);
    prev = cur;
  }
  return {};
}

std::string check_conjugation() {
  for (std::size_t n = 0; n <= 40; ++n) {
    if (!plancherel_conjugation_check(n)) return "conjugation symmetry fails at n=" + std::to_string(n);
    for (const auto& lambda : partitions(n)) {
      if (conjugate(conjugate(lambda)) != lambda) return "conjugate not an involution";
    }
  }
  return {};
}

std::string check_stirling() {
  const StirlingTable table(200);
  for (std::size_t n = 0; n <= 200; ++n) {
    BigInt sum = 0;
    for (std::size_t r = 0; r <= n; ++r) sum += table(n, r);
    if (sum != factorial(n)) return "row sum != n! at n=" + std::to_string(n);
    const auto pmf = record_count_pmf(n, table);
    Rational mean = 0;
    for (std::size_t r = 0; r <= n; ++r) mean += pmf[r] * static_cast<unsigned long>(r);
    if (mean != harmonic(n)) return "record-count mean != H_n at n=" + std::to_string(n);
  }
  const auto d = rds_expectation(200, table);
  if (d[0] != 0 || d[1] != 1) return "wrong initial conditions";
  for (std::size_t n = 2; n <= 200; ++n) {
    if (d[n] <= d[n - 1]) return "d_n not increasing at n=" + std::to_string(n);
    if (d[n] > static_cast<unsigned long>(n)) return "d_n > n at n=" + std::to_string(n);
  }
  return {};
}

std::string check_random_lds() {
  const RngSpec spec{20240611, 0};
  for (std::uint64_t t = 0; t < 10000; ++t) {
    Rng rng(spec, 0, t);
    const std::size_t n = 1 + rng.below(512);
    const Permutation p = sample_permutation(n, rng);
    const std::size_t fast = lds_fast(p);
    if (fast != ds_passes_naive(p)) return "lds_fast differs from naive for " + to_string(p);
    if (fast != longest_chain_bruteforce(DsPoset(p))) return "lds_fast differs from chain DP";
    if (fast != lis_fast(p.complement())) return "complement identity fails";
  }
  return {};
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"records", "record split is increasing and reconstitutes the input, n<=8", check_records},
      {"layers", "DS layers are minimal-element antichains partitioning positions, n<=8",
       check_layers},
      {"theorem", "naive passes = lds_fast = longest chain = RSK first column, n<=8",
       check_theorem},
      {"mirsky", "no antichain partition smaller than the DS depth, n<=8", check_mirsky},
      {"rsk", "RSK first column/row = LDS/LIS for n<=7, injective for n<=6", check_rsk},
      {"hooks", "hook-length count = SYT enumeration, n<=12", check_hooks},
      {"plancherel", "sum (f^lambda)^2 = n! and p(n) partitions, n<=60", check_plancherel},
      {"exact", "Plancherel expectation = S_n average for n<=8, increasing to n=40", check_exact},
      {"conjugation", "first-row and first-column Plancherel means agree, n<=40",
       check_conjugation},
      {"stirling", "Stirling rows, record-count mean = H_n, RDS table shape, n<=200",
       check_stirling},
      {"random-lds", "10^4 random permutations n<=512: fast = naive = chain", check_random_lds},
  };
  return all;
}

}  // namespace

std::vector<std::string> selftest_suite_names() {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  return names;
}

std::vector<SuiteResult> run_selftest(std::span<const std::string> only) {
  for (const auto& name : only) {
    const auto& all = suites();
    if (std::none_of(all.begin(), all.end(), [&](const Suite& s) { return s.name == name; })) {
      throw std::invalid_argument("unknown selftest suite '" + name + "'");
    }
  }
  std::vector<SuiteResult> results;
  for (const auto& suite : suites()) {
    if (!only.empty() && std::find(only.begin(), only.end(), suite.name) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r{suite.name, suite.description, false, {}, 0.0};
    try {
      r.detail = suite.run();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace dsort
