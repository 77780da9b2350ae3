#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "irs/interval.hpp"
#include "irs/rng.hpp"

namespace irs {

enum class IndexKind { kIntervalTree, kAit, kAitv, kAwit };

std::string_view to_string(IndexKind kind);
/// Accepts "itree", "ait", "aitv" and "awit".
IndexKind parse_index_kind(std::string_view name);

struct BenchConfig {
  IndexKind index = IndexKind::kAit;
  double extent_fraction = 0.08;  // recorded; the queries are supplied by the caller
  std::int64_t sample_size = 1000;
  std::uint64_t seed = 0;
  std::size_t repetitions = 1;
};

/// Per-query measurements. Times are medians over repetitions.
struct QueryRecord {
  std::size_t query = 0;
  double l = 0;
  double r = 0;
  double candidate_us = 0;
  double sampling_us = 0;
  double total_us = 0;
  std::uint64_t candidates = 0;  // |q ∩ X|, or covered virtual intervals for aitv
  std::uint64_t records = 0;
  std::uint32_t visited_nodes = 0;
  std::uint64_t attempts = 0;
  std::uint64_t samples = 0;
};

struct TimingSummary {
  double median = 0;
  double min = 0;
  double max = 0;
  double mean = 0;
};

struct BenchSummary {
  std::string index;
  std::size_t n = 0;
  std::int64_t s = 0;
  double extent = 0;
  std::uint64_t seed = 0;
  std::string rng{Rng::kAlgorithm};
  std::size_t repetitions = 0;
  std::size_t queries = 0;
  double build_seconds = 0;
  std::size_t entries = 0;
  std::size_t height = 0;
  TimingSummary candidate_us;
  TimingSummary sampling_us;
  TimingSummary total_us;
  std::uint64_t attempts = 0;
  std::uint64_t samples = 0;
  std::string query_clamp = "right endpoint clamped to domain_max";
};

struct BenchResult {
  std::vector<QueryRecord> queries;
  BenchSummary summary;
};

/// A built index of any kind, timed at construction.
template <Coordinate Coord>
class BenchIndex {
 public:
  /// Throws kMissingWeights when awit is requested on an unweighted dataset.
  BenchIndex(IndexKind kind, const Dataset<Coord>& data);
  ~BenchIndex();
  BenchIndex(BenchIndex&&) noexcept;
  BenchIndex& operator=(BenchIndex&&) noexcept;

  IndexKind kind() const;
  std::size_t size() const;
  double build_seconds() const;
  std::size_t entry_count() const;
  std::size_t height() const;

  /// One timed query: candidate computation, then s draws.
  QueryRecord run_query(const QueryInterval<Coord>& q, std::int64_t s, Rng& rng) const;

  /// Exact |q ∩ X|; throws kInvalidArgument for aitv, which only bounds it.
  std::uint64_t count(const QueryInterval<Coord>& q) const;

  /// Draws s samples and returns their ids.
  std::vector<IntervalId> sample_ids(const QueryInterval<Coord>& q, std::int64_t s, Rng& rng) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

template <Coordinate Coord>
BenchResult run_bench(const BenchConfig& config, const BenchIndex<Coord>& index,
                      std::span<const QueryInterval<Coord>> queries);

template <Coordinate Coord>
BenchResult run_bench(const BenchConfig& config, const Dataset<Coord>& data,
                      std::span<const QueryInterval<Coord>> queries);

template <Coordinate Coord>
std::vector<std::uint64_t> run_count(IndexKind kind, const Dataset<Coord>& data,
                                     std::span<const QueryInterval<Coord>> queries);

enum class UpdateMode { kOneByOne, kBatch, kDelete };

std::string_view to_string(UpdateMode mode);
/// Accepts "one-by-one", "batch" and "delete".
UpdateMode parse_update_mode(std::string_view name);

struct UpdateBenchConfig {
  UpdateMode mode = UpdateMode::kOneByOne;
  std::size_t operations = 5000;
  std::uint64_t seed = 0;
  std::size_t verify_queries = 200;
  double verify_extent = 0.08;
};

struct UpdateBenchResult {
  std::string mode;
  std::size_t n = 0;
  std::size_t operations = 0;
  double build_seconds = 0;
  double total_ms = 0;
  double amortized_ms = 0;
  std::size_t final_size = 0;
  std::size_t pending_pool = 0;
  std::size_t rebuilds = 0;
  std::size_t verify_queries = 0;
  std::size_t mismatches = 0;
  bool verified = false;
  std::uint64_t seed = 0;
};

/// Insert modes build on all but `operations` randomly chosen intervals and
/// then add those; delete mode builds on everything and removes them. The
/// result is checked against a fresh build on the final interval set.
template <Coordinate Coord>
UpdateBenchResult run_update_bench(const Dataset<Coord>& data, const UpdateBenchConfig& config);

// JSON-lines encoding. Every line carries a "type" field.
std::string to_json_line(const QueryRecord& record);
std::string to_json_line(const BenchSummary& summary);
std::string to_json_line(const UpdateBenchResult& result);
std::variant<QueryRecord, BenchSummary, UpdateBenchResult> parse_json_line(std::string_view line);

/// CSV header and row for a summary, one row per run.
std::string summary_csv_header();
std::string summary_csv_row(const BenchSummary& summary);

}  // namespace irs
