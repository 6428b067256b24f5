#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ccl {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for a named stream; chunk lets parallel workers draw disjoint streams
// whose union does not depend on the number of workers.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t chunk = 0) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the stream name
  for (unsigned char c : stream) h = (h ^ c) * 0x100000001b3ULL;
  std::uint64_t s = seed ^ h;
  splitmix64(s);
  s ^= chunk * 0xd1b54a32d192ed03ULL;
  return splitmix64(s);
}

// Small PRNG with an explicit, platform-independent bounded draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // uniform in [0, n), rejection sampling so results do not depend on the
  // standard library's distribution implementation
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do { v = engine_(); } while (v >= limit);
    return v % n;
  }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ccl
