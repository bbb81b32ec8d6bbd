#include "dsort/permcore.hpp"

#include <algorithm>
#include <functional>

namespace dsort {

Permutation::Permutation(std::vector<value_type> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const value_type v = values_[i];
    if (v < 1 || v > n) {
      throw NotAPermutation("value " + std::to_string(v) + " at position " +
                            std::to_string(i + 1) + " is outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw NotAPermutation("value " + std::to_string(v) + " repeated at position " +
                            std::to_string(i + 1));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<value_type> v(n);
  std::iota(v.begin(), v.end(), value_type{1});
  return Permutation(std::move(v), Trusted{});
}

Permutation Permutation::complement() const {
  const auto top = static_cast<value_type>(values_.size() + 1);
  std::vector<value_type> v(values_.size());
  std::transform(values_.begin(), values_.end(), v.begin(), [top](value_type x) { return top - x; });
  return Permutation(std::move(v), Trusted{});
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<value_type>(values_.rbegin(), values_.rend()), Trusted{});
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + "]";
}

void DsPoset::check(Index i) const {
  if (i < 1 || i > perm_.size()) {
    throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." + std::to_string(perm_.size()));
  }
}

bool DsPoset::precedes(Index i, Index j) const {
  check(i);
  check(j);
  return i < j && perm_[i - 1] > perm_[j - 1];
}

bool is_antichain(const DsPoset& poset, std::span<const Index> indices) {
  IndexSet sorted(indices.begin(), indices.end());
  for (Index i : sorted) {
    if (i < 1 || i > poset.size()) {
      throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." +
                            std::to_string(poset.size()));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Incomparable in position order means increasing in value.
  const auto& p = poset.permutation();
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (p[sorted[k - 1] - 1] > p[sorted[k] - 1]) return false;
  }
  return true;
}

IndexSet minimal_elements(const DsPoset& poset, std::span<const Index> subset) {
  IndexSet out;
  for (Index j : subset) {
    const bool dominated = std::any_of(subset.begin(), subset.end(),
                                       [&](Index i) { return poset.precedes(i, j); });
    if (!dominated) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t longest_chain_bruteforce(const DsPoset& poset, std::size_t bound) {
  const std::size_t n = poset.size();
  if (n > bound) {
    throw SizeLimitExceeded("longest_chain_bruteforce: n=" + std::to_string(n) +
                            " exceeds oracle bound " + std::to_string(bound));
  }
  // ending[j] = longest chain whose maximal element is j.
  std::vector<std::size_t> ending(n + 1, 1);
  std::size_t best = 0;
  for (Index j = 1; j <= n; ++j) {
    for (Index i = 1; i < j; ++i) {
      if (poset.precedes(i, j)) ending[j] = std::max(ending[j], ending[i] + 1);
    }
    best = std::max(best, ending[j]);
  }
  return best;
}

bool antichain_partition_exists(const DsPoset& poset, std::size_t parts, std::size_t bound) {
  const std::size_t n = poset.size();
  if (n > bound) {
    throw SizeLimitExceeded("antichain partition search: n=" + std::to_string(n) +
                            " exceeds bound " + std::to_string(bound));
  }
  if (n == 0) return true;
  if (parts == 0) return false;

  std::vector<std::size_t> part_of(n + 1, 0);
  // Assign positions in order; a position may open at most one new part,
  // which removes relabelling symmetry from the search.
  std::function<bool(Index, std::size_t)> assign = [&](Index v, std::size_t used) -> bool {
    if (v > n) return true;
    const std::size_t limit = std::min(parts, used + 1);
    for (std::size_t c = 1; c <= limit; ++c) {
      bool ok = true;
      for (Index u = 1; u < v && ok; ++u) {
        if (part_of[u] == c && poset.comparable(u, v)) ok = false;
      }
      if (!ok) continue;
      part_of[v] = c;
      if (assign(v + 1, std::max(used, c))) return true;
    }
    part_of[v] = 0;
    return false;
  };
  return assign(1, 0);
}

std::size_t min_antichain_partition_exhaustive(const DsPoset& poset, std::size_t bound) {
  if (poset.size() > bound) {
    throw SizeLimitExceeded("antichain partition search: n=" + std::to_string(poset.size()) +
                            " exceeds bound " + std::to_string(bound));
  }
  std::size_t k = 0;
  while (!antichain_partition_exists(poset, k, bound)) ++k;
  return k;
}

}  // namespace dsort
