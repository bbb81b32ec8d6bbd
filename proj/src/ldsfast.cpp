#include "dsort/ldsfast.hpp"

namespace dsort {

namespace {

std::size_t lis_length(const Permutation::value_type* first, const Permutation::value_type* last,
                       Permutation::value_type complement_top) {
  TailsState<Permutation::value_type> state;
  for (; first != last; ++first) {
    state.insert(complement_top == 0 ? *first : complement_top - *first);
  }
  return state.length();
}

}  // namespace

std::size_t lds_fast(const Permutation& p) {
  // LIS of the complement n+1-v, which reverses the value order.
  return lis_length(p.data(), p.data() + p.size(),
                    static_cast<Permutation::value_type>(p.size() + 1));
}

std::size_t lis_fast(const Permutation& p) {
  return lis_length(p.data(), p.data() + p.size(), 0);
}

}  // namespace dsort
