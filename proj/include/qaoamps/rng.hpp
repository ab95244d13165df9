#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

namespace qaoamps {

// Seed plumbing. All randomness in the project flows from explicit 64-bit
// seeds through these helpers, so every output is reproducible bit-for-bit
// across runs and thread counts.

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Deterministic seed derivation: mixes the root seed with a list of tokens.
inline uint64_t derive_seed(uint64_t root, std::initializer_list<uint64_t> parts) {
  uint64_t state = root ^ 0x6a09e667f3bcc908ull;
  splitmix64(state);
  for (uint64_t p : parts) {
    state ^= p;
    splitmix64(state);
  }
  return splitmix64(state);
}

inline uint64_t derive_seed(uint64_t root, std::string_view tag) {
  return derive_seed(root, {fnv1a64(tag)});
}

inline uint64_t derive_seed(uint64_t root, std::string_view tag, uint64_t a) {
  return derive_seed(root, {fnv1a64(tag), a});
}

inline uint64_t derive_seed(uint64_t root, std::string_view tag, uint64_t a, uint64_t b) {
  return derive_seed(root, {fnv1a64(tag), a, b});
}

// mt19937_64 with hand-rolled uniform draws (std distributions are not
// portable across standard-library implementations).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  uint64_t uniform_index(uint64_t n) {
    // rejection sampling to avoid modulo bias
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_index(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qaoamps
