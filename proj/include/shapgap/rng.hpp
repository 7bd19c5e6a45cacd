#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace shapgap {

// SplitMix64 finalizer. Used as the 64-bit mixing function for deriving
// per-run generator states from key tuples; the derivation is order-only
// dependent, so parallel sweeps reproduce the serial results.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_str(std::string_view s) {
  // FNV-1a, folded through mix64 so short strings spread over all bits.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return mix64(h);
}

namespace detail {
inline void fold_seed(std::uint64_t& h, std::uint64_t part) {
  h = mix64(h ^ mix64(part));
}
inline void fold_seed(std::uint64_t& h, std::string_view part) {
  h = mix64(h ^ hash_str(part));
}
}  // namespace detail

// derive_seed(master, parts...) = chained mix64 over the key tuple.
template <typename... Parts>
std::uint64_t derive_seed(std::uint64_t master, Parts&&... parts) {
  std::uint64_t h = mix64(master);
  (detail::fold_seed(h, parts), ...);
  return h;
}

// Deterministic generator. mt19937_64 is fully specified by the standard;
// floating-point draws avoid std::uniform_real_distribution on purpose,
// since its output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace shapgap
