#include "dsort/rng.hpp"

namespace dsort {

namespace {

constexpr std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(const RngSpec& spec, std::uint64_t n, std::uint64_t trial) {
  std::uint64_t key = mix(spec.seed + 0x9e3779b97f4a7c15ULL);
  key = mix(key ^ (spec.stream + 0x632be59bd9b4e019ULL));
  key = mix(key ^ (n + 0x8cb92ba72f3d8dd7ULL));
  key = mix(key ^ (trial + 0xd1b54a32d192ed03ULL));
  // splitmix64 expansion of the key into the four state words.
  for (auto& word : s_) {
    key += 0x9e3779b97f4a7c15ULL;
    word = mix(key);
  }
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform_open0() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

}  // namespace dsort
