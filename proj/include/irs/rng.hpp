#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace irs {

/// Seeded random source owned by exactly one query execution.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard, so equal seeds give bit-identical draws on every conforming
/// toolchain. Bounded integers use Lemire's multiply-shift reduction (with
/// its rare rejection step, so the result is exactly uniform) and reals use
/// the top 53 bits of one engine output.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64+lemire64+u53";

  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  Rng(const Rng&) = delete;
  Rng& operator=(const Rng&) = delete;
  Rng(Rng&&) = default;
  Rng& operator=(Rng&&) = default;

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = next();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next();
        m = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform integer in the closed range [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == UINT64_MAX) return static_cast<std::int64_t>(next());
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span + 1));
  }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, hi).
  double real(double hi) { return unit() * hi; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace irs
