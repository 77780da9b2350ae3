#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "irs/interval.hpp"

namespace irs {

enum class LengthDistribution { kUniform, kZipf, kClustered };

std::string_view to_string(LengthDistribution d);
/// Accepts "uniform-length", "zipf-length" and "clustered".
LengthDistribution parse_length_distribution(std::string_view name);

/// Synthetic interval workload.
///
/// uniform-length: length uniform on [0, 2m] with m = mean_length * domain
///   size, left endpoint uniform over the positions that keep r in domain.
/// zipf-length: length = 100m / k with k ~ Zipf(1) on 1..1000 (heavy tail).
/// clustered: uniform lengths, left endpoints normal around 16 uniformly
///   placed centers with standard deviation 1% of the domain.
/// Weighted datasets draw integer weights uniformly from [1, 100].
template <Coordinate Coord>
struct DatasetSpec {
  std::size_t n = 0;
  LengthDistribution distribution = LengthDistribution::kUniform;
  Coord domain_min = 0;
  Coord domain_max = 100'000'000;
  double mean_length = 0.001;  // fraction of the domain size
  bool weighted = false;
  std::uint64_t seed = 0;
};

template <Coordinate Coord>
Dataset<Coord> generate_dataset(const DatasetSpec<Coord>& spec);

/// The cardinality / domain / length summary used to characterize datasets.
struct DatasetStats {
  std::size_t cardinality = 0;
  double domain_size = 0;
  double min_length = 0;
  double median_length = 0;  // lower median
  double max_length = 0;
};

template <Coordinate Coord>
DatasetStats dataset_stats(const Dataset<Coord>& data);

/// Left endpoints uniform on [domain_min, domain_max]; the right endpoint is
/// l + extent * (domain size), clamped to domain_max.
template <Coordinate Coord>
std::vector<QueryInterval<Coord>> generate_queries(std::size_t count, double extent, Coord domain_min,
                                                   Coord domain_max, std::uint64_t seed);

}  // namespace irs
