#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irs/interval.hpp"

namespace irs {

/// One line of a query file: `l,r[,s]`.
template <Coordinate Coord>
struct QueryLine {
  QueryInterval<Coord> query;
  std::optional<std::int64_t> sample_size;
};

// Dataset files are `l,r[,weight]` per line with an optional header; blank
// lines and `#` comments are skipped. Errors carry the 1-based line number.
// A file counts as weighted if any row has a weight column.

template <Coordinate Coord>
Dataset<Coord> parse_dataset(std::istream& in, std::string_view source = "<input>");

template <Coordinate Coord>
Dataset<Coord> load_dataset(const std::filesystem::path& path);

template <Coordinate Coord>
void write_dataset(const Dataset<Coord>& data, std::ostream& out);

template <Coordinate Coord>
std::vector<QueryLine<Coord>> parse_queries(std::istream& in, std::string_view source = "<input>");

template <Coordinate Coord>
std::vector<QueryLine<Coord>> load_queries(const std::filesystem::path& path);

template <Coordinate Coord>
void write_queries(std::span<const QueryInterval<Coord>> queries, std::ostream& out);

/// Shortest round-trip text for a coordinate.
template <Coordinate Coord>
std::string format_coord(Coord v);

}  // namespace irs
