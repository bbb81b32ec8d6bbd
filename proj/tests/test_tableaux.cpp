#include <doctest.h>

#include <map>
#include <set>

#include "dsort/ldsfast.hpp"
#include "dsort/tableaux.hpp"
#include "oracles.hpp"

using namespace dsort;

namespace {
Partition P(std::vector<std::size_t> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("partition validation") {
  CHECK_NOTHROW(P({3, 3, 1}));
  CHECK_THROWS_AS(P({1, 2}), InvalidPartition);
  CHECK_THROWS_AS(P({2, 0}), InvalidPartition);
  CHECK(P({3, 2, 1}).size() == 6);
  CHECK(P({3, 2, 1}).first_column() == 3);
  CHECK(Partition().size() == 0);
}

TEST_CASE("partitions in reverse lexicographic order") {
  const auto four = partitions(4);
  const std::vector<Partition> expect{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                                      P({1, 1, 1, 1})};
  CHECK(four == expect);
  CHECK(partitions(1) == std::vector<Partition>{P({1})});
  CHECK(partitions(0) == std::vector<Partition>{Partition()});

  const auto six = partitions(6);
  CHECK(std::find(six.begin(), six.end(), P({3, 2, 1})) != six.end());

  for (std::size_t n = 0; n <= 30; ++n) {
    const auto all = partitions(n);
    REQUIRE(all.size() == partition_count(n));
    REQUIRE(std::is_sorted(all.begin(), all.end(), std::greater<>()));
    REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& l : all) REQUIRE(l.size() == n);
  }
  CHECK(partition_count(10) == 42);
  CHECK(partition_count(20) == 627);
  CHECK(partition_count(60) == 966467);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P({3, 2, 1})) == P({3, 2, 1}));
  CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
  CHECK(conjugate(P({5})) == P({1, 1, 1, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
}

TEST_CASE("conjugate is an involution for n <= 60") {
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 60; ++n) {
    for (PartitionWalker w(n); !w.done(); w.advance()) {
      const Partition l(std::vector<std::size_t>(w.parts().begin(), w.parts().end()));
      const Partition c = conjugate(l);
      REQUIRE(c.first_row() == l.first_column());
      REQUIRE(conjugate(c) == l);
      ++checked;
    }
  }
  MESSAGE(checked << " partitions checked");
}

TEST_CASE("hook_length") {
  const Partition stair = P({3, 2, 1});
  CHECK(hook_length(stair, 1, 1) == 5);
  CHECK(hook_length(stair, 1, 3) == 1);
  CHECK(hook_length(stair, 2, 1) == 3);
  CHECK(hook_length(P({1}), 1, 1) == 1);
  CHECK_THROWS_AS(hook_length(stair, 2, 3), BoxOutsideShape);
  CHECK_THROWS_AS(hook_length(stair, 0, 1), BoxOutsideShape);
  CHECK_THROWS_AS(hook_length(stair, 4, 1), BoxOutsideShape);
}

TEST_CASE("syt_count") {
  CHECK(syt_count(P({3, 2, 1})) == 16);
  CHECK(syt_count(P({7})) == 1);
  CHECK(syt_count(P({2, 1})) == 2);
  CHECK(syt_count(Partition()) == 1);
}

TEST_CASE("syt_enumerate") {
  CHECK(syt_enumerate(P({2, 1})).size() == 2);
  const auto column = syt_enumerate(P({1, 1, 1}));
  REQUIRE(column.size() == 1);
  CHECK(column[0].rows == std::vector<std::vector<std::size_t>>{{1}, {2}, {3}});

  const auto stair = syt_enumerate(P({3, 2, 1}));
  CHECK(stair.size() == 16);
  const StandardTableau figure{{{1, 2, 5}, {3, 4}, {6}}};
  CHECK(std::find(stair.begin(), stair.end(), figure) != stair.end());
  for (const auto& t : stair) {
    CHECK(t.is_standard());
    CHECK(t.shape() == P({3, 2, 1}));
  }
  CHECK(std::set<StandardTableau>(stair.begin(), stair.end()).size() == 16);
  CHECK_THROWS_AS(syt_enumerate(P({13})), SizeLimitExceeded);
}

TEST_CASE("hook-length count equals enumeration for n <= 12") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& l : partitions(n)) REQUIRE(syt_count(l) == syt_enumerate(l).size());
  }
}

TEST_CASE("is_standard") {
  CHECK(StandardTableau{{{1, 3}, {2, 4}, {5}}}.is_standard());
  CHECK_FALSE(StandardTableau{{{2, 1}}}.is_standard());
  CHECK_FALSE(StandardTableau{{{1, 3}, {2}, {4, 5}}}.is_standard());
  CHECK_FALSE(StandardTableau{{{1, 2}, {2}}}.is_standard());
  CHECK_FALSE(StandardTableau{{{1, 4}, {3, 2}}}.is_standard());
}

TEST_CASE("rsk_shape examples") {
  CHECK(rsk_shape(Permutation::identity(3)).shape == P({3}));
  CHECK(rsk_shape(Permutation({3, 2, 1})).shape == P({1, 1, 1}));

  const auto r = rsk_shape(Permutation({1, 4, 2, 6, 5, 3}));
  CHECK(r.shape == P({3, 2, 1}));
  CHECK(r.shape.first_column() == 3);
  CHECK(r.insertion.rows == std::vector<std::vector<std::size_t>>{{1, 2, 3}, {4, 5}, {6}});
  CHECK(r.recording.rows == std::vector<std::vector<std::size_t>>{{1, 2, 4}, {3, 5}, {6}});
  CHECK(rsk_shape(Permutation()).shape == Partition());
}

TEST_CASE("Schensted: first column is LDS and first row is LIS, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    oracle::each_permutation(n, [](const std::vector<int>& v) {
      const auto r = rsk_shape(Permutation::ranks_of(v));
      REQUIRE(r.insertion.is_standard());
      REQUIRE(r.recording.is_standard());
      REQUIRE(r.insertion.shape() == r.recording.shape());
      REQUIRE(r.shape.first_column() == oracle::lds_by_subsets(v));
      REQUIRE(r.shape.first_row() == oracle::lis_by_subsets(v));
    });
  }
}

TEST_CASE("RSK is a bijection onto same-shape pairs for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<StandardTableau, StandardTableau>> images;
    std::map<Partition, std::size_t> per_shape;
    std::size_t total = 0;
    oracle::each_permutation(n, [&](const std::vector<int>& v) {
      auto r = rsk_shape(Permutation::ranks_of(v));
      ++per_shape[r.shape];
      images.emplace(std::move(r.insertion), std::move(r.recording));
      ++total;
    });
    CHECK(images.size() == total);
    for (const auto& [shape, count] : per_shape) {
      const BigInt f = syt_count(shape);
      CHECK(BigInt(f * f) == count);
    }
    CHECK(per_shape.size() == partition_count(static_cast<std::size_t>(n)));
  }
}
