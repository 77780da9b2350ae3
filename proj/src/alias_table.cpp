#include "irs/alias_table.hpp"

#include <deque>
#include <string>

#include "irs/error.hpp"

namespace irs {

AliasTable::AliasTable(std::span<const double> weights) {
  if (weights.empty()) throw Error(ErrorCode::kEmptyWeights, "alias table needs at least one weight");
  const auto n = static_cast<double>(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) {
      throw Error(ErrorCode::kInvalidWeight, "weight " + std::to_string(i) + " is not positive");
    }
    total_ += weights[i];
  }

  // Two FIFO worklists in input order. A cell is seated with one small
  // object and topped up from the front large object; a large object whose
  // remainder drops to the capacity joins the small list.
  std::vector<double> rest(weights.size());
  std::deque<std::size_t> small;
  std::deque<std::size_t> large;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    rest[i] = weights[i] * n;
    (rest[i] <= total_ ? small : large).push_back(i);
  }

  cells_.reserve(weights.size());
  while (!small.empty()) {
    const std::size_t s = small.front();
    small.pop_front();
    Cell cell{{s, rest[s]}, std::nullopt};
    const double room = total_ - rest[s];
    if (room > 0.0 && !large.empty()) {
      const std::size_t g = large.front();
      cell.second = Entry{g, room};
      rest[g] -= room;
      if (rest[g] <= total_) {
        large.pop_front();
        small.push_back(g);
      }
    } else if (room > 0.0) {
      // Rounding residue; the object owns the whole cell.
      cell.first.weight = total_;
    }
    cells_.push_back(cell);
  }
  // Only reachable through float drift: leftovers take a full cell each.
  for (std::size_t g : large) cells_.push_back(Cell{{g, total_}, std::nullopt});
}

}  // namespace irs
