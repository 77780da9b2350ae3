#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "irs/error.hpp"

namespace irs {

using IntervalId = std::uint32_t;

template <typename T>
concept Coordinate = std::same_as<T, std::int64_t> || std::same_as<T, double>;

/// Closed interval [l, r]. Pseudo intervals only exist as bucket padding.
template <Coordinate Coord>
struct Interval {
  Coord l{};
  Coord r{};
  IntervalId id{};
  double weight = 1.0;
  bool pseudo = false;

  friend bool operator==(const Interval&, const Interval&) = default;
};

template <Coordinate Coord>
struct QueryInterval {
  Coord l{};
  Coord r{};

  bool is_stabbing() const { return l == r; }
};

/// Closed-endpoint overlap: touching endpoints count.
template <typename A, typename B>
constexpr bool overlaps(const A& a, const B& b) {
  return a.l <= b.r && b.l <= a.r;
}

/// (l, r, id) order used by pair sort and by every list sorted on l.
struct LeftOrder {
  template <typename I>
  bool operator()(const I& a, const I& b) const {
    return std::tie(a.l, a.r, a.id) < std::tie(b.l, b.r, b.id);
  }
};

/// (r, l, id) order for lists sorted on r.
struct RightOrder {
  template <typename I>
  bool operator()(const I& a, const I& b) const {
    return std::tie(a.r, a.l, a.id) < std::tie(b.r, b.l, b.id);
  }
};

template <Coordinate Coord>
std::vector<Interval<Coord>> pair_sort(std::vector<Interval<Coord>> intervals) {
  std::sort(intervals.begin(), intervals.end(), LeftOrder{});
  return intervals;
}

template <Coordinate Coord>
void validate(const Interval<Coord>& x) {
  if constexpr (std::same_as<Coord, double>) {
    if (x.l != x.l || x.r != x.r) {
      throw Error(ErrorCode::kInvalidInterval, "interval endpoint is NaN");
    }
  }
  if (x.l > x.r) {
    throw Error(ErrorCode::kInvalidInterval,
                "interval " + std::to_string(x.id) + " has l > r");
  }
  if (!(x.weight > 0.0)) {
    throw Error(ErrorCode::kInvalidWeight,
                "interval " + std::to_string(x.id) + " has non-positive weight");
  }
}

template <Coordinate Coord>
void validate(const QueryInterval<Coord>& q) {
  if (q.l > q.r) throw Error(ErrorCode::kInvalidInterval, "query has l > r");
}

/// A homogeneous interval set with ids 0..n-1.
template <Coordinate Coord>
struct Dataset {
  std::vector<Interval<Coord>> intervals;
  Coord domain_min{};
  Coord domain_max{};
  bool weighted = false;

  std::size_t size() const { return intervals.size(); }
  bool empty() const { return intervals.empty(); }

  /// Assigns dense ids in input order and derives the domain from the data.
  static Dataset from_intervals(std::vector<Interval<Coord>> xs, bool weighted = false) {
    Dataset d;
    d.weighted = weighted;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      xs[i].id = static_cast<IntervalId>(i);
      xs[i].pseudo = false;
      validate(xs[i]);
    }
    if (!xs.empty()) {
      d.domain_min = std::numeric_limits<Coord>::max();
      d.domain_max = std::numeric_limits<Coord>::lowest();
      for (const auto& x : xs) {
        d.domain_min = std::min(d.domain_min, x.l);
        d.domain_max = std::max(d.domain_max, x.r);
      }
    }
    d.intervals = std::move(xs);
    return d;
  }

  /// Same as from_intervals, but keeps an explicit domain (must cover the data).
  static Dataset from_intervals(std::vector<Interval<Coord>> xs, Coord domain_min,
                                Coord domain_max, bool weighted = false) {
    Dataset d = from_intervals(std::move(xs), weighted);
    if (domain_min > domain_max) {
      throw Error(ErrorCode::kInvalidArgument, "domain_min > domain_max");
    }
    if (!d.empty() && (d.domain_min < domain_min || d.domain_max > domain_max)) {
      throw Error(ErrorCode::kInvalidArgument, "interval endpoint outside the declared domain");
    }
    d.domain_min = domain_min;
    d.domain_max = domain_max;
    return d;
  }
};

}  // namespace irs
