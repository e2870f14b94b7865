#pragma once

#include <cstdint>
#include <random>

namespace lipatrol {

// splitmix64, used to derive per-trial seeds from a base seed and a trial index.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random stream. mt19937_64 output is pinned by the standard;
// the value mappings below avoid std:: distributions, whose outputs differ
// between standard library implementations. Every method consumes exactly one
// engine draw, so callers can reason about draw counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() {
    ++draws_;
    return engine_();
  }

  // Uniform in [0,1) with 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0,n) via multiply-shift. n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  std::uint64_t draws() const { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace lipatrol
