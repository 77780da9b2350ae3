#include "irs/cumulative_sum.hpp"

#include <algorithm>
#include <string>

#include "irs/error.hpp"

namespace irs {

CumulativeSumArray::CumulativeSumArray(std::span<const double> weights) {
  if (weights.empty()) throw Error(ErrorCode::kEmptyWeights, "cumulative array needs at least one weight");
  prefix_.reserve(weights.size());
  const bool compensated = weights.size() > kCompensatedThreshold;
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w > 0.0)) {
      throw Error(ErrorCode::kInvalidWeight, "weight " + std::to_string(i) + " is not positive");
    }
    if (compensated) {
      const double y = w - carry;
      const double t = sum + y;
      carry = (t - sum) - y;
      sum = t;
    } else {
      sum += w;
    }
    prefix_.push_back(sum);
  }
}

std::size_t CumulativeSumArray::locate(std::size_t lo, std::size_t hi, double w) const {
  // prefix_ is 0-based: a[k] lives at prefix_[k - 1].
  const auto first = prefix_.begin() + static_cast<std::ptrdiff_t>(lo - 1);
  const auto last = prefix_.begin() + static_cast<std::ptrdiff_t>(hi);
  const auto it = std::lower_bound(first, last, w);
  if (it == last) return hi;
  return static_cast<std::size_t>(it - prefix_.begin()) + 1;
}

std::size_t CumulativeSumArray::sample_range(std::size_t lo, std::size_t hi, Rng& rng) const {
  if (lo < 1 || lo > hi || hi > prefix_.size()) {
    throw Error(ErrorCode::kIndexError, "cumulative range [" + std::to_string(lo) + ", " +
                                            std::to_string(hi) + "] is invalid for size " +
                                            std::to_string(prefix_.size()));
  }
  if (lo == hi) return lo;
  const double top = (*this)[hi];
  // top - [0, span) lands in (a[lo-1], a[hi]].
  const double w = top - rng.real(top - (*this)[lo - 1]);
  return locate(lo, hi, w);
}

}  // namespace irs
