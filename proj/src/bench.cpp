#include "irs/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "irs/ait.hpp"
#include "irs/aitv.hpp"
#include "irs/awit.hpp"
#include "irs/error.hpp"
#include "irs/interval_tree.hpp"
#include "irs/workload.hpp"

namespace irs {
namespace {

using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  const double hi = *mid;
  const double lo = *std::max_element(v.begin(), mid);
  return (lo + hi) / 2.0;
}

TimingSummary summarize(const std::vector<double>& v) {
  TimingSummary t;
  if (v.empty()) return t;
  t.median = median_of(v);
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  t.min = *lo;
  t.max = *hi;
  t.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  return t;
}

void check_sample_size(std::int64_t s) {
  if (s < 0) throw Error(ErrorCode::kInvalidSampleSize, "sample size must be non-negative");
}

}  // namespace

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::kIntervalTree: return "itree";
    case IndexKind::kAit: return "ait";
    case IndexKind::kAitv: return "aitv";
    case IndexKind::kAwit: return "awit";
  }
  return "unknown";
}

IndexKind parse_index_kind(std::string_view name) {
  if (name == "itree") return IndexKind::kIntervalTree;
  if (name == "ait") return IndexKind::kAit;
  if (name == "aitv") return IndexKind::kAitv;
  if (name == "awit") return IndexKind::kAwit;
  throw Error(ErrorCode::kInvalidArgument, "unknown index '" + std::string(name) + "'");
}

std::string_view to_string(UpdateMode mode) {
  switch (mode) {
    case UpdateMode::kOneByOne: return "one-by-one";
    case UpdateMode::kBatch: return "batch";
    case UpdateMode::kDelete: return "delete";
  }
  return "unknown";
}

UpdateMode parse_update_mode(std::string_view name) {
  if (name == "one-by-one") return UpdateMode::kOneByOne;
  if (name == "batch") return UpdateMode::kBatch;
  if (name == "delete") return UpdateMode::kDelete;
  throw Error(ErrorCode::kInvalidArgument, "unknown update mode '" + std::string(name) + "'");
}

// ---- BenchIndex ------------------------------------------------------------

template <Coordinate Coord>
struct BenchIndex<Coord>::Impl {
  IndexKind kind;
  double build_seconds = 0;
  std::optional<IntervalTree<Coord>> itree;
  std::optional<AugmentedIntervalTree<Coord>> ait;
  std::optional<AitV<Coord>> aitv;
  std::optional<AugmentedWeightedIntervalTree<Coord>> awit;
};

template <Coordinate Coord>
BenchIndex<Coord>::BenchIndex(IndexKind kind, const Dataset<Coord>& data) : impl_(std::make_unique<Impl>()) {
  impl_->kind = kind;
  if (kind == IndexKind::kAwit && !data.weighted) {
    throw Error(ErrorCode::kMissingWeights, "awit needs a weighted dataset");
  }
  const auto t0 = Clock::now();
  switch (kind) {
    case IndexKind::kIntervalTree: impl_->itree.emplace(data); break;
    case IndexKind::kAit: impl_->ait.emplace(data); break;
    case IndexKind::kAitv: impl_->aitv.emplace(data); break;
    case IndexKind::kAwit: impl_->awit.emplace(data); break;
  }
  impl_->build_seconds = micros_since(t0) / 1e6;
}

template <Coordinate Coord>
BenchIndex<Coord>::~BenchIndex() = default;
template <Coordinate Coord>
BenchIndex<Coord>::BenchIndex(BenchIndex&&) noexcept = default;
template <Coordinate Coord>
BenchIndex<Coord>& BenchIndex<Coord>::operator=(BenchIndex&&) noexcept = default;

template <Coordinate Coord>
IndexKind BenchIndex<Coord>::kind() const {
  return impl_->kind;
}

template <Coordinate Coord>
double BenchIndex<Coord>::build_seconds() const {
  return impl_->build_seconds;
}

template <Coordinate Coord>
std::size_t BenchIndex<Coord>::size() const {
  switch (impl_->kind) {
    case IndexKind::kIntervalTree: return impl_->itree->size();
    case IndexKind::kAit: return impl_->ait->size();
    case IndexKind::kAitv: return impl_->aitv->size();
    case IndexKind::kAwit: return impl_->awit->size();
  }
  return 0;
}

template <Coordinate Coord>
std::size_t BenchIndex<Coord>::entry_count() const {
  switch (impl_->kind) {
    case IndexKind::kIntervalTree: return impl_->itree->entry_count();
    case IndexKind::kAit: return impl_->ait->entry_count();
    case IndexKind::kAitv: return impl_->aitv->entry_count();
    case IndexKind::kAwit: return impl_->awit->entry_count();
  }
  return 0;
}

template <Coordinate Coord>
std::size_t BenchIndex<Coord>::height() const {
  switch (impl_->kind) {
    case IndexKind::kIntervalTree: return impl_->itree->height();
    case IndexKind::kAit: return impl_->ait->height();
    case IndexKind::kAitv: return impl_->aitv->virtual_tree().height();
    case IndexKind::kAwit: return impl_->awit->tree().height();
  }
  return 0;
}

template <Coordinate Coord>
QueryRecord BenchIndex<Coord>::run_query(const QueryInterval<Coord>& q, std::int64_t s, Rng& rng) const {
  check_sample_size(s);
  validate(q);
  QueryRecord rec;
  rec.l = static_cast<double>(q.l);
  rec.r = static_cast<double>(q.r);
  const auto t0 = Clock::now();
  switch (impl_->kind) {
    case IndexKind::kIntervalTree: {
      const auto& tree = *impl_->itree;
      std::vector<IntervalId> hits;
      tree.for_each_overlap(q, [&](IntervalId pos) { hits.push_back(pos); });
      rec.candidate_us = micros_since(t0);
      const auto t1 = Clock::now();
      rec.samples = tree.sample_from(hits, s, rng).size();
      rec.sampling_us = micros_since(t1);
      rec.candidates = hits.size();
      rec.records = hits.size();
      break;
    }
    case IndexKind::kAit: {
      const auto& tree = *impl_->ait;
      RecordSet rs = tree.query_records(q);
      rec.candidate_us = micros_since(t0);
      rec.candidates = rs.total;
      rec.records = rs.records.size() + (rs.pool_hits.empty() ? 0 : 1);
      rec.visited_nodes = rs.stats.visited_nodes;
      const auto t1 = Clock::now();
      if (s > 0 && !rs.empty()) {
        const auto smp = tree.sampler(std::move(rs));
        for (std::int64_t i = 0; i < s; ++i) static_cast<void>(smp.draw(rng));
        rec.samples = static_cast<std::uint64_t>(s);
      }
      rec.sampling_us = micros_since(t1);
      break;
    }
    case IndexKind::kAitv: {
      const auto& index = *impl_->aitv;
      RecordSet rs = index.candidates(q);
      rec.candidate_us = micros_since(t0);
      rec.candidates = rs.total;
      rec.records = rs.records.size();
      rec.visited_nodes = rs.stats.visited_nodes;
      typename AitV<Coord>::SampleStats stats;
      const auto t1 = Clock::now();
      rec.samples = index.sample_from(q, std::move(rs), s, rng, &stats).size();
      rec.sampling_us = micros_since(t1);
      rec.attempts = stats.attempts;
      break;
    }
    case IndexKind::kAwit: {
      const auto& index = *impl_->awit;
      RecordSet rs = index.query_records(q);
      rec.candidate_us = micros_since(t0);
      rec.candidates = rs.total;
      rec.records = rs.records.size();
      rec.visited_nodes = rs.stats.visited_nodes;
      const auto t1 = Clock::now();
      if (s > 0 && !rs.empty()) {
        const auto smp = index.sampler(std::move(rs));
        for (std::int64_t i = 0; i < s; ++i) static_cast<void>(smp.draw(rng));
        rec.samples = static_cast<std::uint64_t>(s);
      }
      rec.sampling_us = micros_since(t1);
      break;
    }
  }
  rec.total_us = rec.candidate_us + rec.sampling_us;
  return rec;
}

template <Coordinate Coord>
std::uint64_t BenchIndex<Coord>::count(const QueryInterval<Coord>& q) const {
  validate(q);
  switch (impl_->kind) {
    case IndexKind::kIntervalTree: return impl_->itree->range_count(q);
    case IndexKind::kAit: return impl_->ait->range_count(q);
    case IndexKind::kAwit: return impl_->awit->tree().range_count(q);
    case IndexKind::kAitv: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "aitv does not answer exact range counts");
}

template <Coordinate Coord>
std::vector<IntervalId> BenchIndex<Coord>::sample_ids(const QueryInterval<Coord>& q, std::int64_t s,
                                                      Rng& rng) const {
  check_sample_size(s);
  validate(q);
  std::vector<IntervalId> ids;
  auto take = [&](const auto& xs) {
    ids.reserve(xs.size());
    for (const auto& x : xs) ids.push_back(x.id);
  };
  switch (impl_->kind) {
    case IndexKind::kIntervalTree: take(impl_->itree->search_then_sample(q, s, rng)); break;
    case IndexKind::kAit: take(impl_->ait->irs_sample(q, s, rng)); break;
    case IndexKind::kAitv: take(impl_->aitv->sample(q, s, rng)); break;
    case IndexKind::kAwit: take(impl_->awit->weighted_irs_sample(q, s, rng)); break;
  }
  return ids;
}

// ---- runners ---------------------------------------------------------------

template <Coordinate Coord>
BenchResult run_bench(const BenchConfig& config, const BenchIndex<Coord>& index,
                      std::span<const QueryInterval<Coord>> queries) {
  check_sample_size(config.sample_size);
  if (config.repetitions == 0) throw Error(ErrorCode::kInvalidArgument, "repetitions must be >= 1");
  BenchResult out;
  out.queries.resize(queries.size());
  std::vector<std::vector<double>> cand(queries.size()), samp(queries.size()), total(queries.size());
  for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
    Rng rng(config.seed);
    for (std::size_t i = 0; i < queries.size(); ++i) {
      QueryRecord rec = index.run_query(queries[i], config.sample_size, rng);
      rec.query = i;
      cand[i].push_back(rec.candidate_us);
      samp[i].push_back(rec.sampling_us);
      total[i].push_back(rec.total_us);
      out.queries[i] = rec;
    }
  }
  std::vector<double> cand_med, samp_med, total_med;
  auto& sum = out.summary;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    auto& rec = out.queries[i];
    rec.candidate_us = median_of(cand[i]);
    rec.sampling_us = median_of(samp[i]);
    rec.total_us = median_of(total[i]);
    cand_med.push_back(rec.candidate_us);
    samp_med.push_back(rec.sampling_us);
    total_med.push_back(rec.total_us);
    sum.attempts += rec.attempts;
    sum.samples += rec.samples;
  }
  sum.index = std::string(to_string(index.kind()));
  sum.n = index.size();
  sum.s = config.sample_size;
  sum.extent = config.extent_fraction;
  sum.seed = config.seed;
  sum.repetitions = config.repetitions;
  sum.queries = queries.size();
  sum.build_seconds = index.build_seconds();
  sum.entries = index.entry_count();
  sum.height = index.height();
  sum.candidate_us = summarize(cand_med);
  sum.sampling_us = summarize(samp_med);
  sum.total_us = summarize(total_med);
  return out;
}

template <Coordinate Coord>
BenchResult run_bench(const BenchConfig& config, const Dataset<Coord>& data,
                      std::span<const QueryInterval<Coord>> queries) {
  const BenchIndex<Coord> index(config.index, data);
  return run_bench(config, index, queries);
}

template <Coordinate Coord>
std::vector<std::uint64_t> run_count(IndexKind kind, const Dataset<Coord>& data,
                                     std::span<const QueryInterval<Coord>> queries) {
  if (kind == IndexKind::kAitv) throw Error(ErrorCode::kInvalidArgument, "aitv does not answer exact range counts");
  const BenchIndex<Coord> index(kind, data);
  std::vector<std::uint64_t> out;
  out.reserve(queries.size());
  for (const auto& q : queries) out.push_back(index.count(q));
  return out;
}

template <Coordinate Coord>
UpdateBenchResult run_update_bench(const Dataset<Coord>& data, const UpdateBenchConfig& config) {
  UpdateBenchResult res;
  res.mode = std::string(to_string(config.mode));
  res.n = data.size();
  res.seed = config.seed;
  const std::size_t ops = std::min(config.operations, data.size());
  res.operations = ops;

  // The last `ops` positions after a Fisher-Yates shuffle are the updated set.
  Rng rng(config.seed);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  const std::span<const std::size_t> kept(order.data(), data.size() - ops);
  const std::span<const std::size_t> changed(order.data() + kept.size(), ops);

  std::vector<Interval<Coord>> initial;
  if (config.mode == UpdateMode::kDelete) {
    initial = data.intervals;
  } else {
    initial.reserve(kept.size());
    for (std::size_t i : kept) initial.push_back(data.intervals[i]);
  }
  auto t0 = Clock::now();
  AugmentedIntervalTree<Coord> tree{std::span<const Interval<Coord>>(initial)};
  res.build_seconds = micros_since(t0) / 1e6;
  initial.clear();
  initial.shrink_to_fit();

  t0 = Clock::now();
  for (std::size_t i : changed) {
    const auto& x = data.intervals[i];
    switch (config.mode) {
      case UpdateMode::kOneByOne: tree.insert(x); break;
      case UpdateMode::kBatch: tree.enqueue(x); break;
      case UpdateMode::kDelete: tree.erase(x.id); break;
    }
  }
  res.total_ms = micros_since(t0) / 1e3;
  res.amortized_ms = ops == 0 ? 0.0 : res.total_ms / static_cast<double>(ops);
  res.final_size = tree.size() + tree.pool_size();
  res.pending_pool = tree.pool_size();
  res.rebuilds = tree.rebuild_count();

  const auto live = tree.intervals();
  const AugmentedIntervalTree<Coord> fresh{std::span<const Interval<Coord>>(live)};
  const auto queries = generate_queries<Coord>(config.verify_queries, config.verify_extent, data.domain_min,
                                              data.domain_max, config.seed + 1);
  res.verify_queries = queries.size();
  for (const auto& q : queries) {
    const auto a = tree.query_records(q);
    const auto b = fresh.query_records(q);
    auto ids_a = tree.expand(a);
    auto ids_b = fresh.expand(b);
    std::sort(ids_a.begin(), ids_a.end());
    std::sort(ids_b.begin(), ids_b.end());
    if (a.total != b.total || ids_a != ids_b) ++res.mismatches;
  }
  res.verified = res.mismatches == 0;
  return res;
}

// ---- JSON ------------------------------------------------------------------

namespace {

using nlohmann::json;

json timing_json(const TimingSummary& t) {
  return {{"median", t.median}, {"min", t.min}, {"max", t.max}, {"mean", t.mean}};
}

TimingSummary timing_from(const json& j) {
  return {j.at("median").get<double>(), j.at("min").get<double>(), j.at("max").get<double>(),
          j.at("mean").get<double>()};
}

}  // namespace

std::string to_json_line(const QueryRecord& r) {
  const json j{{"type", "query"},          {"query", r.query},
               {"l", r.l},                 {"r", r.r},
               {"candidate_us", r.candidate_us}, {"sampling_us", r.sampling_us},
               {"total_us", r.total_us},   {"candidates", r.candidates},
               {"records", r.records},     {"visited_nodes", r.visited_nodes},
               {"attempts", r.attempts},   {"samples", r.samples}};
  return j.dump();
}

std::string to_json_line(const BenchSummary& s) {
  const json j{{"type", "summary"},
               {"index", s.index},
               {"n", s.n},
               {"s", s.s},
               {"extent", s.extent},
               {"seed", s.seed},
               {"rng", s.rng},
               {"repetitions", s.repetitions},
               {"queries", s.queries},
               {"build_seconds", s.build_seconds},
               {"entries", s.entries},
               {"height", s.height},
               {"candidate_us", timing_json(s.candidate_us)},
               {"sampling_us", timing_json(s.sampling_us)},
               {"total_us", timing_json(s.total_us)},
               {"attempts", s.attempts},
               {"samples", s.samples},
               {"query_clamp", s.query_clamp}};
  return j.dump();
}

std::string to_json_line(const UpdateBenchResult& r) {
  const json j{{"type", "update"},
               {"mode", r.mode},
               {"n", r.n},
               {"operations", r.operations},
               {"build_seconds", r.build_seconds},
               {"total_ms", r.total_ms},
               {"amortized_ms", r.amortized_ms},
               {"final_size", r.final_size},
               {"pending_pool", r.pending_pool},
               {"rebuilds", r.rebuilds},
               {"verify_queries", r.verify_queries},
               {"mismatches", r.mismatches},
               {"verified", r.verified},
               {"seed", r.seed}};
  return j.dump();
}

std::variant<QueryRecord, BenchSummary, UpdateBenchResult> parse_json_line(std::string_view line) {
  try {
    const json j = json::parse(line);
    const auto type = j.at("type").get<std::string>();
    if (type == "query") {
      QueryRecord r;
      j.at("query").get_to(r.query);
      j.at("l").get_to(r.l);
      j.at("r").get_to(r.r);
      j.at("candidate_us").get_to(r.candidate_us);
      j.at("sampling_us").get_to(r.sampling_us);
      j.at("total_us").get_to(r.total_us);
      j.at("candidates").get_to(r.candidates);
      j.at("records").get_to(r.records);
      j.at("visited_nodes").get_to(r.visited_nodes);
      j.at("attempts").get_to(r.attempts);
      j.at("samples").get_to(r.samples);
      return r;
    }
    if (type == "summary") {
      BenchSummary s;
      j.at("index").get_to(s.index);
      j.at("n").get_to(s.n);
      j.at("s").get_to(s.s);
      j.at("extent").get_to(s.extent);
      j.at("seed").get_to(s.seed);
      j.at("rng").get_to(s.rng);
      j.at("repetitions").get_to(s.repetitions);
      j.at("queries").get_to(s.queries);
      j.at("build_seconds").get_to(s.build_seconds);
      j.at("entries").get_to(s.entries);
      j.at("height").get_to(s.height);
      s.candidate_us = timing_from(j.at("candidate_us"));
      s.sampling_us = timing_from(j.at("sampling_us"));
      s.total_us = timing_from(j.at("total_us"));
      j.at("attempts").get_to(s.attempts);
      j.at("samples").get_to(s.samples);
      j.at("query_clamp").get_to(s.query_clamp);
      return s;
    }
    if (type == "update") {
      UpdateBenchResult r;
      j.at("mode").get_to(r.mode);
      j.at("n").get_to(r.n);
      j.at("operations").get_to(r.operations);
      j.at("build_seconds").get_to(r.build_seconds);
      j.at("total_ms").get_to(r.total_ms);
      j.at("amortized_ms").get_to(r.amortized_ms);
      j.at("final_size").get_to(r.final_size);
      j.at("pending_pool").get_to(r.pending_pool);
      j.at("rebuilds").get_to(r.rebuilds);
      j.at("verify_queries").get_to(r.verify_queries);
      j.at("mismatches").get_to(r.mismatches);
      j.at("verified").get_to(r.verified);
      j.at("seed").get_to(r.seed);
      return r;
    }
    throw Error(ErrorCode::kParse, "unknown record type '" + type + "'");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad bench record: ") + e.what());
  }
}

std::string summary_csv_header() {
  return "index,n,s,extent,seed,rng,repetitions,queries,build_seconds,entries,height,"
         "candidate_us_median,sampling_us_median,total_us_median,total_us_min,total_us_max,total_us_mean,"
         "attempts,samples";
}

std::string summary_csv_row(const BenchSummary& s) {
  std::ostringstream os;
  os.precision(17);
  os << s.index << ',' << s.n << ',' << s.s << ',' << s.extent << ',' << s.seed << ',' << s.rng << ','
     << s.repetitions << ',' << s.queries << ',' << s.build_seconds << ',' << s.entries << ',' << s.height << ','
     << s.candidate_us.median << ',' << s.sampling_us.median << ',' << s.total_us.median << ',' << s.total_us.min
     << ',' << s.total_us.max << ',' << s.total_us.mean << ',' << s.attempts << ',' << s.samples;
  return os.str();
}

#define IRS_INSTANTIATE_BENCH(Coord)                                                                          \
  template class BenchIndex<Coord>;                                                                           \
  template BenchResult run_bench(const BenchConfig&, const BenchIndex<Coord>&,                                \
                                 std::span<const QueryInterval<Coord>>);                                      \
  template BenchResult run_bench(const BenchConfig&, const Dataset<Coord>&, std::span<const QueryInterval<Coord>>); \
  template std::vector<std::uint64_t> run_count(IndexKind, const Dataset<Coord>&,                             \
                                                std::span<const QueryInterval<Coord>>);                       \
  template UpdateBenchResult run_update_bench(const Dataset<Coord>&, const UpdateBenchConfig&);

IRS_INSTANTIATE_BENCH(std::int64_t)
IRS_INSTANTIATE_BENCH(double)

#undef IRS_INSTANTIATE_BENCH

}  // namespace irs
