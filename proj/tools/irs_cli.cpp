// irs: dataset/query generation, index build, sampling, counting and benchmarks.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "irs/bench.hpp"
#include "irs/csv_io.hpp"
#include "irs/error.hpp"
#include "irs/interval_tree.hpp"
#include "irs/oracle.hpp"
#include "irs/rng.hpp"
#include "irs/workload.hpp"

namespace {

using nlohmann::json;

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct Common {
  std::string coord = "int";
  std::string index = "ait";
  std::uint64_t seed = 0;
  std::int64_t s = 1000;
  double extent = 0.08;
  std::string out;
  std::string format = "json";
};

/// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw irs::Error(irs::ErrorCode::kIo, "cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool to_file() const { return file_ != nullptr; }
  void close(const std::string& path) {
    if (!file_) {
      std::cout.flush();
      return;
    }
    file_->close();
    if (!*file_) throw irs::Error(irs::ErrorCode::kIo, "failed writing '" + path + "'");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw irs::Error(irs::ErrorCode::kInvalidArgument, "bad list element '" + item + "'");
    }
  }
  return out;
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") {
    throw irs::Error(irs::ErrorCode::kInvalidArgument, "format must be json or csv");
  }
}

template <irs::Coordinate Coord>
std::vector<irs::QueryInterval<Coord>> queries_only(const std::vector<irs::QueryLine<Coord>>& lines) {
  std::vector<irs::QueryInterval<Coord>> out;
  out.reserve(lines.size());
  for (const auto& line : lines) out.push_back(line.query);
  return out;
}

// ---- subcommands -------------------------------------------------------------

struct GenData {
  std::size_t n = 0;
  std::string dist = "uniform-length";
  double domain_min = 0;
  double domain_max = 1e8;
  double mean_length = 0.001;
  bool weighted = false;
};

template <irs::Coordinate Coord>
int gen_data(const Common& c, const GenData& g) {
  irs::DatasetSpec<Coord> spec;
  spec.n = g.n;
  spec.distribution = irs::parse_length_distribution(g.dist);
  spec.domain_min = static_cast<Coord>(g.domain_min);
  spec.domain_max = static_cast<Coord>(g.domain_max);
  spec.mean_length = g.mean_length;
  spec.weighted = g.weighted;
  spec.seed = c.seed;
  const auto data = irs::generate_dataset(spec);

  Output out(c.out);
  irs::write_dataset(data, out.stream());
  out.close(c.out);

  const auto st = irs::dataset_stats(data);
  const json stats{{"type", "dataset_stats"},
                   {"distribution", std::string(irs::to_string(spec.distribution))},
                   {"cardinality", st.cardinality},
                   {"domain_size", st.domain_size},
                   {"min_length", st.min_length},
                   {"median_length", st.median_length},
                   {"max_length", st.max_length},
                   {"weighted", g.weighted},
                   {"seed", c.seed}};
  (out.to_file() ? std::cout : std::cerr) << stats.dump() << '\n';
  return 0;
}

struct GenQueries {
  std::size_t count = 1000;
  double domain_min = 0;
  double domain_max = 1e8;
  std::string data;
};

template <irs::Coordinate Coord>
int gen_queries(const Common& c, const GenQueries& g) {
  Coord lo = static_cast<Coord>(g.domain_min);
  Coord hi = static_cast<Coord>(g.domain_max);
  if (!g.data.empty()) {
    const auto data = irs::load_dataset<Coord>(g.data);
    lo = data.domain_min;
    hi = data.domain_max;
  }
  const auto qs = irs::generate_queries<Coord>(g.count, c.extent, lo, hi, c.seed);
  Output out(c.out);
  irs::write_queries<Coord>(qs, out.stream());
  out.close(c.out);
  return 0;
}

struct Inputs {
  std::string data;
  std::string queries;
};

template <irs::Coordinate Coord>
int build(const Common& c, const Inputs& in) {
  const auto data = irs::load_dataset<Coord>(in.data);
  const irs::BenchIndex<Coord> index(irs::parse_index_kind(c.index), data);
  const json j{{"type", "build"},
               {"index", c.index},
               {"n", index.size()},
               {"build_seconds", index.build_seconds()},
               {"entries", index.entry_count()},
               {"height", index.height()}};
  Output out(c.out);
  out.stream() << j.dump() << '\n';
  out.close(c.out);
  return 0;
}

template <irs::Coordinate Coord>
int query(const Common& c, const Inputs& in) {
  check_format(c.format);
  const auto data = irs::load_dataset<Coord>(in.data);
  const auto lines = irs::load_queries<Coord>(in.queries);
  const irs::BenchIndex<Coord> index(irs::parse_index_kind(c.index), data);
  irs::Rng rng(c.seed);
  Output out(c.out);
  auto& os = out.stream();
  if (c.format == "csv") os << "query,rank,id,l,r\n";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& q = lines[i].query;
    const std::int64_t s = lines[i].sample_size.value_or(c.s);
    const auto ids = index.sample_ids(q, s, rng);
    if (c.format == "csv") {
      for (std::size_t k = 0; k < ids.size(); ++k) {
        const auto& x = data.intervals[ids[k]];
        os << i << ',' << k << ',' << ids[k] << ',' << irs::format_coord(x.l) << ',' << irs::format_coord(x.r)
           << '\n';
      }
    } else {
      const json j{{"type", "samples"}, {"query", i},         {"l", q.l},           {"r", q.r},
                   {"s", s},            {"index", c.index},   {"seed", c.seed},     {"rng", irs::Rng::kAlgorithm},
                   {"ids", ids}};
      os << j.dump() << '\n';
    }
  }
  out.close(c.out);
  return 0;
}

template <irs::Coordinate Coord>
int count(const Common& c, const Inputs& in, bool verify) {
  check_format(c.format);
  const auto data = irs::load_dataset<Coord>(in.data);
  const auto qs = queries_only(irs::load_queries<Coord>(in.queries));
  const auto kind = irs::parse_index_kind(c.index);
  const auto counts = irs::run_count<Coord>(kind, data, qs);

  std::size_t mismatches = 0;
  if (verify) {
    const irs::IntervalTree<Coord> baseline(data);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const auto expected = irs::oracle::count<Coord>(data.intervals, qs[i]);
      if (counts[i] != expected || baseline.range_count(qs[i]) != expected) ++mismatches;
    }
  }

  Output out(c.out);
  auto& os = out.stream();
  if (c.format == "csv") os << "query,count\n";
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (c.format == "csv") {
      os << i << ',' << counts[i] << '\n';
    } else {
      os << json{{"type", "count"}, {"query", i}, {"count", counts[i]}}.dump() << '\n';
    }
  }
  out.close(c.out);
  if (verify) {
    std::cerr << json{{"type", "verify"}, {"queries", qs.size()}, {"mismatches", mismatches}}.dump() << '\n';
    if (mismatches != 0) return 1;
  }
  return 0;
}

struct BenchArgs {
  std::size_t repetitions = 1;
  std::size_t query_count = 1000;
  std::string sweep_extent;
  std::string sweep_s;
  bool summary_only = false;
};

template <irs::Coordinate Coord>
int bench(const Common& c, const Inputs& in, const BenchArgs& b) {
  check_format(c.format);
  const auto data = irs::load_dataset<Coord>(in.data);
  const auto kind = irs::parse_index_kind(c.index);
  const auto extents = b.sweep_extent.empty() ? std::vector<double>{c.extent} : parse_list(b.sweep_extent);
  const auto sizes = b.sweep_s.empty() ? std::vector<double>{static_cast<double>(c.s)} : parse_list(b.sweep_s);
  const bool generated = in.queries.empty() || !b.sweep_extent.empty();
  std::vector<irs::QueryInterval<Coord>> file_queries;
  if (!generated) file_queries = queries_only(irs::load_queries<Coord>(in.queries));

  const irs::BenchIndex<Coord> index(kind, data);
  Output out(c.out);
  auto& os = out.stream();
  if (c.format == "csv") os << irs::summary_csv_header() << '\n';
  for (double extent : extents) {
    const auto qs = generated
                        ? irs::generate_queries<Coord>(b.query_count, extent, data.domain_min, data.domain_max, c.seed)
                        : file_queries;
    for (double s : sizes) {
      irs::BenchConfig config;
      config.index = kind;
      config.extent_fraction = extent;
      config.sample_size = static_cast<std::int64_t>(s);
      config.seed = c.seed;
      config.repetitions = b.repetitions;
      const auto result = irs::run_bench<Coord>(config, index, qs);
      if (c.format == "csv") {
        os << irs::summary_csv_row(result.summary) << '\n';
        continue;
      }
      if (!b.summary_only) {
        for (const auto& rec : result.queries) os << irs::to_json_line(rec) << '\n';
      }
      os << irs::to_json_line(result.summary) << '\n';
    }
  }
  out.close(c.out);
  return 0;
}

template <irs::Coordinate Coord>
int update_bench(const Common& c, const Inputs& in, const std::string& mode, std::size_t ops,
                 std::size_t verify_queries) {
  const auto data = irs::load_dataset<Coord>(in.data);
  irs::UpdateBenchConfig config;
  config.mode = irs::parse_update_mode(mode);
  config.operations = ops;
  config.seed = c.seed;
  config.verify_queries = verify_queries;
  config.verify_extent = c.extent;
  const auto result = irs::run_update_bench(data, config);
  Output out(c.out);
  out.stream() << irs::to_json_line(result) << '\n';
  out.close(c.out);
  return result.verified ? 0 : 1;
}

template <typename Fn>
int dispatch(const Common& c, Fn&& fn) {
  if (c.coord == "int") return fn(std::int64_t{});
  if (c.coord == "float") return fn(double{});
  throw irs::Error(irs::ErrorCode::kInvalidArgument, "coord must be int or float");
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--coord", c.coord, "Coordinate type: int or float")->capture_default_str();
  app->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  app->add_option("--out", c.out, "Output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independent range sampling over interval data"};
  app.require_subcommand(1);
  Common c;
  Inputs in;

  auto* gd = app.add_subcommand("gen-data", "Generate a synthetic interval dataset (CSV)");
  GenData g;
  add_common(gd, c);
  gd->add_option("--n", g.n, "Number of intervals")->required();
  gd->add_option("--dist", g.dist, "uniform-length, zipf-length or clustered")->capture_default_str();
  gd->add_option("--domain-min", g.domain_min)->capture_default_str();
  gd->add_option("--domain-max", g.domain_max)->capture_default_str();
  gd->add_option("--mean-length", g.mean_length, "Mean length as a fraction of the domain")->capture_default_str();
  gd->add_flag("--weighted", g.weighted, "Attach integer weights in [1, 100]");

  auto* gq = app.add_subcommand("gen-queries", "Generate a query workload (CSV)");
  GenQueries gqa;
  add_common(gq, c);
  gq->add_option("--count", gqa.count)->capture_default_str();
  gq->add_option("--extent", c.extent, "Query length as a fraction of the domain")->capture_default_str();
  gq->add_option("--domain-min", gqa.domain_min)->capture_default_str();
  gq->add_option("--domain-max", gqa.domain_max)->capture_default_str();
  gq->add_option("--data", gqa.data, "Take the domain from this dataset");

  auto add_index = [&](CLI::App* sub) {
    add_common(sub, c);
    sub->add_option("--data", in.data, "Dataset CSV")->required();
    sub->add_option("--index", c.index, "itree, ait, aitv or awit")->capture_default_str();
  };

  auto* bd = app.add_subcommand("build", "Build an index and report its size");
  add_index(bd);

  auto* qy = app.add_subcommand("query", "Draw samples for each query");
  add_index(qy);
  qy->add_option("--queries", in.queries, "Query CSV")->required();
  qy->add_option("--s", c.s, "Samples per query (a query row may override)")->capture_default_str();
  qy->add_option("--format", c.format, "json or csv")->capture_default_str();

  auto* ct = app.add_subcommand("count", "Exact range counts");
  bool verify = false;
  add_index(ct);
  ct->add_option("--queries", in.queries, "Query CSV")->required();
  ct->add_option("--format", c.format, "json or csv")->capture_default_str();
  ct->add_flag("--verify", verify, "Check against a linear scan and the baseline tree");

  auto* bn = app.add_subcommand("bench", "Time queries; one record per query plus a summary");
  BenchArgs ba;
  add_index(bn);
  bn->add_option("--queries", in.queries, "Query CSV (otherwise generated)");
  bn->add_option("--s", c.s)->capture_default_str();
  bn->add_option("--extent", c.extent, "Extent for generated queries")->capture_default_str();
  bn->add_option("--query-count", ba.query_count, "Generated queries per run")->capture_default_str();
  bn->add_option("--repetitions", ba.repetitions)->capture_default_str();
  bn->add_option("--sweep-extent", ba.sweep_extent, "Comma-separated extents (generates queries)");
  bn->add_option("--sweep-s", ba.sweep_s, "Comma-separated sample sizes");
  bn->add_option("--format", c.format, "json (per-query + summary) or csv (summary rows)")->capture_default_str();
  bn->add_flag("--summary-only", ba.summary_only, "Omit per-query records");

  auto* ub = app.add_subcommand("update-bench", "Time inserts or deletes and verify against a rebuild");
  std::string mode = "one-by-one";
  std::size_t ops = 5000;
  std::size_t verify_queries = 200;
  add_common(ub, c);
  ub->add_option("--data", in.data, "Dataset CSV")->required();
  ub->add_option("--mode", mode, "one-by-one, batch or delete")->capture_default_str();
  ub->add_option("--ops", ops, "Intervals to insert or delete")->capture_default_str();
  ub->add_option("--verify-queries", verify_queries)->capture_default_str();
  ub->add_option("--extent", c.extent, "Extent of the verification queries")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (*gd) return dispatch(c, [&](auto t) { return gen_data<decltype(t)>(c, g); });
    if (*gq) return dispatch(c, [&](auto t) { return gen_queries<decltype(t)>(c, gqa); });
    if (*bd) return dispatch(c, [&](auto t) { return build<decltype(t)>(c, in); });
    if (*qy) return dispatch(c, [&](auto t) { return query<decltype(t)>(c, in); });
    if (*ct) return dispatch(c, [&](auto t) { return count<decltype(t)>(c, in, verify); });
    if (*bn) return dispatch(c, [&](auto t) { return bench<decltype(t)>(c, in, ba); });
    if (*ub) return dispatch(c, [&](auto t) { return update_bench<decltype(t)>(c, in, mode, ops, verify_queries); });
  } catch (const irs::Error& e) {
    std::cerr << "irs: " << irs::to_string(e.code()) << ": " << e.what() << '\n';
    return e.is_validation() ? kExitValidation : kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "irs: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
