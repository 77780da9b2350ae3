#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "irs/rng.hpp"

namespace irs {

/// Walker's alias structure: n cells, each holding at most two objects.
///
/// Entry weights are stored multiplied by n, which makes every cell's
/// capacity equal to the input total. Integer inputs therefore stay exact
/// integers through construction, and tau() = total / n is the capacity in
/// the caller's units.
class AliasTable {
 public:
  struct Entry {
    std::size_t index;
    double weight;  // scaled by size()
  };
  struct Cell {
    Entry first;
    std::optional<Entry> second;
  };

  AliasTable() = default;

  /// Throws kEmptyWeights for an empty input and kInvalidWeight for w <= 0.
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  double total() const { return total_; }
  double tau() const { return total_ / static_cast<double>(cells_.size()); }
  const std::vector<Cell>& cells() const { return cells_; }

  /// Converts a stored entry weight back to the caller's units.
  double unscaled(const Entry& e) const { return e.weight / static_cast<double>(cells_.size()); }

  /// Returns a 0-based object index with probability w_i / total.
  std::size_t sample(Rng& rng) const {
    const Cell& cell = cells_[rng.below(cells_.size())];
    if (!cell.second) return cell.first.index;
    return rng.real(total_) < cell.first.weight ? cell.first.index : cell.second->index;
  }

 private:
  std::vector<Cell> cells_;
  double total_ = 0.0;
};

}  // namespace irs
