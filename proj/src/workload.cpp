#include "irs/workload.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "irs/cumulative_sum.hpp"
#include "irs/error.hpp"
#include "irs/rng.hpp"

namespace irs {
namespace {

constexpr std::size_t kZipfRanks = 1000;
constexpr std::size_t kClusters = 16;
constexpr double kClusterSpread = 0.01;

/// Uniform coordinate in [lo, hi].
template <Coordinate Coord>
Coord uniform_coord(Rng& rng, Coord lo, Coord hi) {
  if constexpr (std::same_as<Coord, std::int64_t>) {
    return rng.between(lo, hi);
  } else {
    return std::min(hi, lo + rng.unit() * (hi - lo));
  }
}

template <Coordinate Coord>
Coord length_from(double value) {
  if constexpr (std::same_as<Coord, std::int64_t>) {
    return static_cast<std::int64_t>(std::llround(value));
  } else {
    return value;
  }
}

double standard_normal(Rng& rng) {
  // Box-Muller on (0, 1] x [0, 1).
  const double u1 = 1.0 - rng.unit();
  const double u2 = rng.unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

std::string_view to_string(LengthDistribution d) {
  switch (d) {
    case LengthDistribution::kUniform: return "uniform-length";
    case LengthDistribution::kZipf: return "zipf-length";
    case LengthDistribution::kClustered: return "clustered";
  }
  return "unknown";
}

LengthDistribution parse_length_distribution(std::string_view name) {
  if (name == "uniform-length" || name == "uniform") return LengthDistribution::kUniform;
  if (name == "zipf-length" || name == "zipf") return LengthDistribution::kZipf;
  if (name == "clustered") return LengthDistribution::kClustered;
  throw Error(ErrorCode::kInvalidArgument, "unknown length distribution '" + std::string(name) + "'");
}

template <Coordinate Coord>
Dataset<Coord> generate_dataset(const DatasetSpec<Coord>& spec) {
  if (spec.domain_min > spec.domain_max) throw Error(ErrorCode::kInvalidArgument, "domain_min > domain_max");
  if (!(spec.mean_length >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "mean length must be >= 0");
  Rng rng(spec.seed);
  const double domain = static_cast<double>(spec.domain_max) - static_cast<double>(spec.domain_min);
  const double mean = spec.mean_length * domain;

  CumulativeSumArray zipf;
  if (spec.distribution == LengthDistribution::kZipf) {
    std::vector<double> w(kZipfRanks);
    for (std::size_t k = 0; k < kZipfRanks; ++k) w[k] = 1.0 / static_cast<double>(k + 1);
    zipf = CumulativeSumArray(w);
  }
  std::vector<double> centers;
  if (spec.distribution == LengthDistribution::kClustered) {
    for (std::size_t c = 0; c < kClusters; ++c) centers.push_back(static_cast<double>(spec.domain_min) + rng.unit() * domain);
  }

  std::vector<Interval<Coord>> xs;
  xs.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    Coord len{};
    if (spec.distribution == LengthDistribution::kZipf) {
      len = length_from<Coord>(std::min(100.0 * mean / static_cast<double>(zipf.sample(rng)), domain));
    } else if constexpr (std::same_as<Coord, std::int64_t>) {
      len = std::min<Coord>(rng.between(0, length_from<Coord>(2.0 * mean)), spec.domain_max - spec.domain_min);
    } else {
      len = std::min(rng.unit() * 2.0 * mean, domain);
    }
    const Coord last_start = spec.domain_max - len;
    Coord l{};
    if (spec.distribution == LengthDistribution::kClustered) {
      const double c = centers[rng.below(centers.size())];
      const double pos = c + standard_normal(rng) * kClusterSpread * domain;
      const double clamped = std::clamp(pos, static_cast<double>(spec.domain_min), static_cast<double>(last_start));
      l = length_from<Coord>(clamped);
      l = std::clamp(l, spec.domain_min, last_start);
    } else {
      l = uniform_coord<Coord>(rng, spec.domain_min, last_start);
    }
    Interval<Coord> x{l, l + len, 0, 1.0, false};
    if (spec.weighted) x.weight = static_cast<double>(rng.between(1, 100));
    xs.push_back(x);
  }
  return Dataset<Coord>::from_intervals(std::move(xs), spec.domain_min, spec.domain_max, spec.weighted);
}

template <Coordinate Coord>
DatasetStats dataset_stats(const Dataset<Coord>& data) {
  DatasetStats st;
  st.cardinality = data.size();
  st.domain_size = static_cast<double>(data.domain_max) - static_cast<double>(data.domain_min);
  if (data.empty()) return st;
  std::vector<double> lengths;
  lengths.reserve(data.size());
  for (const auto& x : data.intervals) lengths.push_back(static_cast<double>(x.r) - static_cast<double>(x.l));
  const auto mid = lengths.begin() + static_cast<std::ptrdiff_t>((lengths.size() - 1) / 2);
  std::nth_element(lengths.begin(), mid, lengths.end());
  st.median_length = *mid;
  const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
  st.min_length = *lo;
  st.max_length = *hi;
  return st;
}

template <Coordinate Coord>
std::vector<QueryInterval<Coord>> generate_queries(std::size_t count, double extent, Coord domain_min,
                                                   Coord domain_max, std::uint64_t seed) {
  if (!(extent > 0.0 && extent <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "extent must lie in (0, 1]");
  if (domain_min > domain_max) throw Error(ErrorCode::kInvalidArgument, "domain_min > domain_max");
  Rng rng(seed);
  const double domain = static_cast<double>(domain_max) - static_cast<double>(domain_min);
  const Coord length = length_from<Coord>(extent * domain);
  std::vector<QueryInterval<Coord>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Coord l = uniform_coord<Coord>(rng, domain_min, domain_max);
    const Coord r = (domain_max - l < length) ? domain_max : l + length;
    out.push_back({l, r});
  }
  return out;
}

template Dataset<std::int64_t> generate_dataset(const DatasetSpec<std::int64_t>&);
template Dataset<double> generate_dataset(const DatasetSpec<double>&);
template DatasetStats dataset_stats(const Dataset<std::int64_t>&);
template DatasetStats dataset_stats(const Dataset<double>&);
template std::vector<QueryInterval<std::int64_t>> generate_queries(std::size_t, double, std::int64_t, std::int64_t,
                                                                   std::uint64_t);
template std::vector<QueryInterval<double>> generate_queries(std::size_t, double, double, double, std::uint64_t);

}  // namespace irs
