#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "irs/rng.hpp"

namespace irs {

/// Prefix sums a[j] = w_1 + ... + w_j with 1-based positions; a[0] is 0.
///
/// Inputs longer than kCompensatedThreshold are accumulated with Kahan
/// summation so long runs of small weights keep their prefix differences.
class CumulativeSumArray {
 public:
  static constexpr std::size_t kCompensatedThreshold = 1'000'000;

  CumulativeSumArray() = default;

  /// Throws kEmptyWeights for an empty input and kInvalidWeight for w <= 0.
  explicit CumulativeSumArray(std::span<const double> weights);

  std::size_t size() const { return prefix_.size(); }
  double operator[](std::size_t j) const { return j == 0 ? 0.0 : prefix_[j - 1]; }
  double total() const { return prefix_.empty() ? 0.0 : prefix_.back(); }
  const std::vector<double>& values() const { return prefix_; }

  /// Total weight of positions lo..hi; O(1).
  double range_weight(std::size_t lo, std::size_t hi) const { return (*this)[hi] - (*this)[lo - 1]; }

  /// The unique k in [lo, hi] with a[k-1] < w <= a[k], for w in (a[lo-1], a[hi]].
  std::size_t locate(std::size_t lo, std::size_t hi, double w) const;

  /// Draws k in [lo, hi] with probability w_k / (a[hi] - a[lo-1]).
  /// Throws kIndexError unless 1 <= lo <= hi <= size().
  std::size_t sample_range(std::size_t lo, std::size_t hi, Rng& rng) const;

  std::size_t sample(Rng& rng) const { return sample_range(1, size(), rng); }

 private:
  std::vector<double> prefix_;
};

}  // namespace irs
