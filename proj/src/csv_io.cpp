#include "irs/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <type_traits>

#include "irs/error.hpp"

namespace irs {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) return false;
  if constexpr (std::is_floating_point_v<T>) return std::isfinite(value);
  return true;
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& message) {
  throw Error(ErrorCode::kParse, std::string(source) + ":" + std::to_string(line) + ": " + message);
}

/// Walks data rows, skipping blanks, comments and a leading header line.
template <typename Fn>
void for_each_row(std::istream& in, std::string_view source, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  bool seen_row = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = split_fields(text);
    if (!seen_row) {
      double probe = 0;
      seen_row = true;
      if (!parse_number(fields.front(), probe)) continue;  // header
    }
    fn(fields, line_no);
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error on " + std::string(source));
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

}  // namespace

template <Coordinate Coord>
std::string format_coord(Coord v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

template <Coordinate Coord>
Dataset<Coord> parse_dataset(std::istream& in, std::string_view source) {
  std::vector<Interval<Coord>> xs;
  bool weighted = false;
  for_each_row(in, source, [&](const std::vector<std::string_view>& f, std::size_t line) {
    if (f.size() < 2 || f.size() > 3) fail(source, line, "expected l,r[,weight]");
    Interval<Coord> x;
    if (!parse_number(f[0], x.l)) fail(source, line, "bad left endpoint '" + std::string(f[0]) + "'");
    if (!parse_number(f[1], x.r)) fail(source, line, "bad right endpoint '" + std::string(f[1]) + "'");
    if (x.l > x.r) fail(source, line, "l > r");
    if (f.size() == 3) {
      if (!parse_number(f[2], x.weight)) fail(source, line, "bad weight '" + std::string(f[2]) + "'");
      if (!(x.weight > 0.0)) fail(source, line, "weight must be positive");
      weighted = true;
    }
    xs.push_back(x);
  });
  return Dataset<Coord>::from_intervals(std::move(xs), weighted);
}

template <Coordinate Coord>
Dataset<Coord> load_dataset(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_dataset<Coord>(in, path.string());
}

template <Coordinate Coord>
void write_dataset(const Dataset<Coord>& data, std::ostream& out) {
  out << (data.weighted ? "l,r,weight\n" : "l,r\n");
  for (const auto& x : data.intervals) {
    out << format_coord(x.l) << ',' << format_coord(x.r);
    if (data.weighted) out << ',' << format_coord(x.weight);
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "write failed");
}

template <Coordinate Coord>
std::vector<QueryLine<Coord>> parse_queries(std::istream& in, std::string_view source) {
  std::vector<QueryLine<Coord>> out;
  for_each_row(in, source, [&](const std::vector<std::string_view>& f, std::size_t line) {
    if (f.size() < 2 || f.size() > 3) fail(source, line, "expected l,r[,s]");
    QueryLine<Coord> q;
    if (!parse_number(f[0], q.query.l)) fail(source, line, "bad left endpoint '" + std::string(f[0]) + "'");
    if (!parse_number(f[1], q.query.r)) fail(source, line, "bad right endpoint '" + std::string(f[1]) + "'");
    if (q.query.l > q.query.r) fail(source, line, "l > r");
    if (f.size() == 3) {
      std::int64_t s = 0;
      if (!parse_number(f[2], s) || s < 0) fail(source, line, "bad sample size '" + std::string(f[2]) + "'");
      q.sample_size = s;
    }
    out.push_back(q);
  });
  return out;
}

template <Coordinate Coord>
std::vector<QueryLine<Coord>> load_queries(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_queries<Coord>(in, path.string());
}

template <Coordinate Coord>
void write_queries(std::span<const QueryInterval<Coord>> queries, std::ostream& out) {
  out << "l,r\n";
  for (const auto& q : queries) out << format_coord(q.l) << ',' << format_coord(q.r) << '\n';
  if (!out) throw Error(ErrorCode::kIo, "write failed");
}

#define IRS_INSTANTIATE(Coord)                                                                      \
  template std::string format_coord<Coord>(Coord);                                                  \
  template Dataset<Coord> parse_dataset<Coord>(std::istream&, std::string_view);                    \
  template Dataset<Coord> load_dataset<Coord>(const std::filesystem::path&);                        \
  template void write_dataset<Coord>(const Dataset<Coord>&, std::ostream&);                         \
  template std::vector<QueryLine<Coord>> parse_queries<Coord>(std::istream&, std::string_view);     \
  template std::vector<QueryLine<Coord>> load_queries<Coord>(const std::filesystem::path&);         \
  template void write_queries<Coord>(std::span<const QueryInterval<Coord>>, std::ostream&);

IRS_INSTANTIATE(std::int64_t)
IRS_INSTANTIATE(double)
#undef IRS_INSTANTIATE

}  // namespace irs
