#pragma once

// Sequences, record detection, single Disappear-Sort passes, the recursive
// layer decomposition and the induced "DS poset" on positions.
//
// Index sets reported to callers are 1-based. Values may be any totally
// ordered type; ds_pass tolerates ties (a value equal to the running maximum
// is discarded), everything that decomposes into layers requires distinct
// values and throws DuplicateValues otherwise.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "dsort/errors.hpp"

namespace dsort {

using Index = std::size_t;
using IndexSet = std::vector<Index>;

template <typename R>
concept Sequence = std::ranges::contiguous_range<R> && std::ranges::sized_range<R> &&
                   std::totally_ordered<std::ranges::range_value_t<R>>;

template <typename R>
auto as_span(const R& seq) {
  using T = std::ranges::range_value_t<R>;
  return std::span<const T>(std::ranges::data(seq), std::ranges::size(seq));
}

// A permutation of 1..n. Construction validates the value set.
class Permutation {
 public:
  using value_type = std::uint32_t;

  Permutation() = default;
  explicit Permutation(std::vector<value_type> values);

  static Permutation identity(std::size_t n);
  // Relabels distinct values by rank; throws DuplicateValues on ties.
  template <Sequence R>
  static Permutation ranks_of(const R& seq);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  value_type operator[](std::size_t i) const { return values_[i]; }
  const value_type* data() const { return values_.data(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  const std::vector<value_type>& values() const { return values_; }

  // v -> n+1-v
  Permutation complement() const;
  Permutation reversed() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<value_type> values, Trusted) : values_(std::move(values)) {}

  std::vector<value_type> values_;
};

std::string to_string(const Permutation& p);

template <typename T>
struct PassResult {
  std::vector<T> records;
  std::vector<T> discards;
};

struct LayerDecomposition {
  std::vector<IndexSet> layers;

  std::size_t depth() const { return layers.size(); }
};

template <Sequence R>
void require_distinct(const R& seq) {
  auto s = as_span(seq);
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  for (std::size_t r = 1; r < order.size(); ++r) {
    if (!(s[order[r - 1]] < s[order[r]])) {
      throw DuplicateValues("repeated value at positions " + std::to_string(order[r - 1] + 1) +
                            " and " + std::to_string(order[r] + 1));
    }
  }
}

template <Sequence R>
IndexSet record_indices(const R& seq) {
  auto s = as_span(seq);
  IndexSet out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (out.empty() || s[i] > s[out.back() - 1]) out.push_back(i + 1);
  }
  return out;
}

template <Sequence R>
auto ds_pass(const R& seq) {
  using T = std::ranges::range_value_t<R>;
  auto s = as_span(seq);
  PassResult<T> out;
  for (const T& v : s) {
    if (out.records.empty() || v > out.records.back()) {
      out.records.push_back(v);
    } else {
      out.discards.push_back(v);
    }
  }
  return out;
}

// Repeated passes over the discard list, tracking original positions.
template <Sequence R>
LayerDecomposition ds_layers(const R& seq) {
  require_distinct(seq);
  auto s = as_span(seq);
  LayerDecomposition out;
  std::vector<Index> remaining(s.size());
  std::iota(remaining.begin(), remaining.end(), Index{0});
  std::vector<Index> next;
  while (!remaining.empty()) {
    IndexSet layer;
    next.clear();
    for (Index pos : remaining) {
      if (layer.empty() || s[pos] > s[layer.back() - 1]) {
        layer.push_back(pos + 1);
      } else {
        next.push_back(pos);
      }
    }
    out.layers.push_back(std::move(layer));
    remaining.swap(next);
  }
  return out;
}

// Pass count by direct simulation. Quadratic in the worst case.
template <Sequence R>
std::size_t ds_passes_naive(const R& seq) {
  require_distinct(seq);
  using T = std::ranges::range_value_t<R>;
  std::vector<T> current(std::ranges::begin(seq), std::ranges::end(seq));
  std::vector<T> next;
  std::size_t passes = 0;
  while (!current.empty()) {
    next.clear();
    const T* running_max = nullptr;
    for (const T& v : current) {
      if (running_max == nullptr || v > *running_max) {
        running_max = &v;
      } else {
        next.push_back(v);
      }
    }
    current.swap(next);
    ++passes;
  }
  return passes;
}

template <Sequence R>
Permutation Permutation::ranks_of(const R& seq) {
  auto s = as_span(seq);
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  std::vector<value_type> ranks(s.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && !(s[order[r - 1]] < s[order[r]])) {
      const auto [a, b] = std::minmax(order[r - 1], order[r]);
      throw DuplicateValues("repeated value at positions " + std::to_string(a + 1) + " and " +
                            std::to_string(b + 1));
    }
    ranks[order[r]] = static_cast<value_type>(r + 1);
  }
  return Permutation(std::move(ranks), Trusted{});
}

inline constexpr std::size_t kChainOracleBound = 2000;
inline constexpr std::size_t kMirskySearchBound = 8;

// Positions ordered by i < j and p_i > p_j. Only the rank permutation is
// stored; comparability is evaluated on demand.
class DsPoset {
 public:
  explicit DsPoset(Permutation p) : perm_(std::move(p)) {}
  template <Sequence R>
    requires(!std::same_as<std::remove_cvref_t<R>, Permutation>)
  explicit DsPoset(const R& seq) : perm_(Permutation::ranks_of(seq)) {}

  std::size_t size() const { return perm_.size(); }
  const Permutation& permutation() const { return perm_; }

  // i ≺ j, 1-based.
  bool precedes(Index i, Index j) const;
  bool comparable(Index i, Index j) const { return precedes(i, j) || precedes(j, i); }

 private:
  void check(Index i) const;

  Permutation perm_;
};

bool is_antichain(const DsPoset& poset, std::span<const Index> indices);

// Minimal elements of the subposet induced on `subset`, ascending.
IndexSet minimal_elements(const DsPoset& poset, std::span<const Index> subset);

// Height of the poset by O(n^2) dynamic programming over all pairs.
std::size_t longest_chain_bruteforce(const DsPoset& poset, std::size_t bound = kChainOracleBound);

// Fewest antichains covering the poset, by exhaustive backtracking over
// assignments. Independent of the DS layering; exponential, so bounded.
std::size_t min_antichain_partition_exhaustive(const DsPoset& poset,
                                               std::size_t bound = kMirskySearchBound);

// True when some partition of the poset into `parts` antichains exists.
bool antichain_partition_exists(const DsPoset& poset, std::size_t parts,
                                std::size_t bound = kMirskySearchBound);

}  // namespace dsort
