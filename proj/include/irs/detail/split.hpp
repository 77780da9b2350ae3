#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "irs/interval.hpp"

namespace irs::detail {

/// Result of routing one partition around its central point. Every output
/// list keeps the relative order of its input, so sortedness carries over.
template <Coordinate Coord>
struct Split {
  Coord center{};
  std::vector<IntervalId> center_by_l, center_by_r;
  std::vector<IntervalId> left_by_l, left_by_r;
  std::vector<IntervalId> right_by_l, right_by_r;
};

/// Lower median of the 2m endpoints: the m-th smallest, found by merging the
/// l-values of by_l with the r-values of by_r.
template <Coordinate Coord, typename Lookup>
Coord lower_median(std::span<const IntervalId> by_l, std::span<const IntervalId> by_r,
                   const Lookup& at) {
  const std::size_t m = by_l.size();
  std::size_t i = 0;
  std::size_t j = 0;
  Coord value{};
  for (std::size_t taken = 0; taken < m; ++taken) {
    if (j >= by_r.size() || (i < by_l.size() && at(by_l[i]).l <= at(by_r[j]).r)) {
      value = at(by_l[i++]).l;
    } else {
      value = at(by_r[j++]).r;
    }
  }
  return value;
}

template <Coordinate Coord, typename Lookup>
Split<Coord> split(std::span<const IntervalId> by_l, std::span<const IntervalId> by_r,
                   const Lookup& at) {
  Split<Coord> out;
  out.center = lower_median<Coord>(by_l, by_r, at);
  const Coord c = out.center;

  std::size_t n_left = 0;
  std::size_t n_right = 0;
  for (IntervalId id : by_l) {
    const auto& x = at(id);
    if (x.r < c) {
      ++n_left;
    } else if (x.l > c) {
      ++n_right;
    }
  }
  const std::size_t n_center = by_l.size() - n_left - n_right;
  out.center_by_l.reserve(n_center);
  out.center_by_r.reserve(n_center);
  out.left_by_l.reserve(n_left);
  out.left_by_r.reserve(n_left);
  out.right_by_l.reserve(n_right);
  out.right_by_r.reserve(n_right);

  auto route = [&](std::span<const IntervalId> in, std::vector<IntervalId>& centre,
                   std::vector<IntervalId>& left, std::vector<IntervalId>& right) {
    for (IntervalId id : in) {
      const auto& x = at(id);
      if (x.r < c) {
        left.push_back(id);
      } else if (x.l > c) {
        right.push_back(id);
      } else {
        centre.push_back(id);
      }
    }
  };
  route(by_l, out.center_by_l, out.left_by_l, out.right_by_l);
  route(by_r, out.center_by_r, out.left_by_r, out.right_by_r);
  return out;
}

/// Ceil(log2(x)) for x >= 1.
inline std::size_t ceil_log2(std::size_t x) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < x) ++bits;
  return bits;
}

}  // namespace irs::detail
