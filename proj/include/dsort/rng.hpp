#pragma once

// Counter-based seeding of a xoshiro256** generator. Every trial gets its own
// generator keyed by (seed, stream, n, trial), so results do not depend on how
// trials are scheduled across threads. Integer draws are platform independent;
// nothing here goes through std distributions.

#include <cstdint>
#include <limits>

namespace dsort {

struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const RngSpec&, const RngSpec&) = default;
};

inline constexpr const char* kRngAlgorithm = "xoshiro256** keyed by splitmix64(seed,stream,n,trial)";

class Rng {
 public:
  using result_type = std::uint64_t;

  Rng(const RngSpec& spec, std::uint64_t n, std::uint64_t trial);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next(); }

  std::uint64_t next();
  // Uniform on [0, bound), unbiased (Lemire). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  // Uniform on (0, 1].
  double uniform_open0();

 private:
  std::uint64_t s_[4];
};

}  // namespace dsort
