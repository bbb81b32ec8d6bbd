#pragma once

// Pass count in O(n log n): the number of Disappear-Sort passes equals the
// longest strictly decreasing subsequence, computed as the longest increasing
// subsequence of the order-reversed sequence with a tails array.

#include <algorithm>
#include <cassert>
#include <functional>
#include <vector>

#include "dsort/permcore.hpp"

namespace dsort {

enum class TiePolicy { reject, allow };

// tails()[k] is the smallest terminal value (under Less) of any increasing
// subsequence of length k+1 seen so far.
template <typename T, typename Less = std::less<>>
class TailsState {
 public:
  explicit TailsState(Less less = {}) : less_(less) {}

  void reserve(std::size_t n) { tails_.reserve(n); }

  void insert(const T& x) {
    // First slot with tail >= x.
    auto it = std::lower_bound(tails_.begin(), tails_.end(), x, less_);
    if (it == tails_.end()) {
      tails_.push_back(x);
    } else {
      *it = x;
    }
    assert(std::adjacent_find(tails_.begin(), tails_.end(),
                              [this](const T& a, const T& b) { return !less_(a, b); }) ==
           tails_.end());
  }

  std::size_t length() const { return tails_.size(); }
  const std::vector<T>& tails() const { return tails_; }

 private:
  Less less_;
  std::vector<T> tails_;
};

std::size_t lds_fast(const Permutation& p);
std::size_t lis_fast(const Permutation& p);

template <Sequence R>
std::size_t lis_fast(const R& seq, TiePolicy ties = TiePolicy::reject) {
  if (ties == TiePolicy::reject) require_distinct(seq);
  using T = std::ranges::range_value_t<R>;
  TailsState<T> state;
  for (const T& x : as_span(seq)) state.insert(x);
  return state.length();
}

// Negation realised as a reversed comparator, so unsigned and floating
// values need no sign handling.
template <Sequence R>
std::size_t lds_fast(const R& seq, TiePolicy ties = TiePolicy::reject) {
  if (ties == TiePolicy::reject) require_distinct(seq);
  using T = std::ranges::range_value_t<R>;
  TailsState<T, std::greater<>> state;
  for (const T& x : as_span(seq)) state.insert(x);
  return state.length();
}

}  // namespace dsort
