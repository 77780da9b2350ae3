#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "irs/detail/split.hpp"
#include "irs/error.hpp"
#include "irs/interval.hpp"
#include "irs/rng.hpp"

namespace irs {

/// Edelsbrunner's interval tree. Serves as the search-then-sample baseline
/// and fixes the node shape that the augmented trees reuse.
template <Coordinate Coord>
class IntervalTree {
 public:
  using IntervalT = Interval<Coord>;
  using Query = QueryInterval<Coord>;

  struct Node {
    Coord center{};
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::vector<IntervalId> by_l;  // positions, ascending l
    std::vector<IntervalId> by_r;  // positions, ascending r
  };

  IntervalTree() = default;
  explicit IntervalTree(const Dataset<Coord>& data) : IntervalTree(std::span<const IntervalT>(data.intervals)) {}
  explicit IntervalTree(std::span<const IntervalT> intervals) : store_(intervals.begin(), intervals.end()) {
    if (store_.empty()) return;
    std::vector<IntervalId> by_l(store_.size());
    std::iota(by_l.begin(), by_l.end(), IntervalId{0});
    std::vector<IntervalId> by_r = by_l;
    std::sort(by_l.begin(), by_l.end(), [&](IntervalId a, IntervalId b) { return LeftOrder{}(store_[a], store_[b]); });
    std::sort(by_r.begin(), by_r.end(), [&](IntervalId a, IntervalId b) { return RightOrder{}(store_[a], store_[b]); });
    root_ = build(std::move(by_l), std::move(by_r));
  }

  std::size_t size() const { return store_.size(); }
  bool empty() const { return root_ < 0; }
  std::int32_t root() const { return root_; }
  const Node& node(std::int32_t i) const { return nodes_[static_cast<std::size_t>(i)]; }
  std::size_t node_count() const { return nodes_.size(); }
  const IntervalT& at(IntervalId pos) const { return store_[pos]; }

  /// Number of levels; 0 for an empty tree.
  std::size_t height() const { return depth_below(root_); }

  std::vector<IntervalT> stabbing_query(Coord p) const {
    std::vector<IntervalT> out;
    for (std::int32_t u = root_; u >= 0;) {
      const Node& n = node(u);
      if (p < n.center) {
        for (IntervalId pos : n.by_l) {
          if (store_[pos].l > p) break;
          out.push_back(store_[pos]);
        }
        u = n.left;
      } else if (n.center < p) {
        for (auto it = n.by_r.rbegin(); it != n.by_r.rend() && store_[*it].r >= p; ++it) {
          out.push_back(store_[*it]);
        }
        u = n.right;
      } else {
        for (IntervalId pos : n.by_l) out.push_back(store_[pos]);
        break;
      }
    }
    return out;
  }

  /// Calls fn(position) for every stored interval overlapping q. Spanning
  /// nodes send the traversal into both subtrees, so this is Omega(|q ∩ X|).
  template <typename Fn>
  void for_each_overlap(const Query& q, Fn&& fn) const {
    if (root_ < 0) return;
    std::vector<std::int32_t> stack{root_};
    while (!stack.empty()) {
      const Node& n = node(stack.back());
      stack.pop_back();
      if (q.r < n.center) {
        for (IntervalId pos : n.by_l) {
          if (store_[pos].l > q.r) break;
          fn(pos);
        }
        if (n.left >= 0) stack.push_back(n.left);
      } else if (n.center < q.l) {
        for (auto it = n.by_r.rbegin(); it != n.by_r.rend() && store_[*it].r >= q.l; ++it) fn(*it);
        if (n.right >= 0) stack.push_back(n.right);
      } else {
        for (IntervalId pos : n.by_l) fn(pos);
        if (n.left >= 0) stack.push_back(n.left);
        if (n.right >= 0) stack.push_back(n.right);
      }
    }
  }

  std::vector<IntervalT> range_search(const Query& q) const {
    std::vector<IntervalT> out;
    for_each_overlap(q, [&](IntervalId pos) { out.push_back(store_[pos]); });
    return out;
  }

  std::uint64_t range_count(const Query& q) const {
    std::uint64_t count = 0;
    for_each_overlap(q, [&](IntervalId) { ++count; });
    return count;
  }

  /// Materializes q ∩ X, then draws s uniform samples with replacement.
  std::vector<IntervalT> search_then_sample(const Query& q, std::int64_t s, Rng& rng) const {
    if (s < 0) throw Error(ErrorCode::kInvalidSampleSize, "sample size must be non-negative");
    std::vector<IntervalId> hits;
    for_each_overlap(q, [&](IntervalId pos) { hits.push_back(pos); });
    return sample_from(hits, s, rng);
  }

  /// Second half of search_then_sample, split out so benchmarks can time it.
  std::vector<IntervalT> sample_from(std::span<const IntervalId> hits, std::int64_t s, Rng& rng) const {
    std::vector<IntervalT> out;
    if (hits.empty()) return out;
    out.reserve(static_cast<std::size_t>(s));
    for (std::int64_t i = 0; i < s; ++i) out.push_back(store_[hits[rng.below(hits.size())]]);
    return out;
  }

  /// Entries held by the structure: the interval store plus both node lists.
  std::size_t entry_count() const {
    std::size_t total = store_.size();
    for (const Node& n : nodes_) total += n.by_l.size() + n.by_r.size();
    return total;
  }

 private:
  std::int32_t build(std::vector<IntervalId> by_l, std::vector<IntervalId> by_r) {
    auto lookup = [this](IntervalId pos) -> const IntervalT& { return store_[pos]; };
    auto parts = detail::split<Coord>(by_l, by_r, lookup);
    by_l = {};
    by_r = {};
    const auto self = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(Node{parts.center, -1, -1, std::move(parts.center_by_l), std::move(parts.center_by_r)});
    if (!parts.left_by_l.empty()) {
      const std::int32_t child = build(std::move(parts.left_by_l), std::move(parts.left_by_r));
      nodes_[static_cast<std::size_t>(self)].left = child;
    }
    if (!parts.right_by_l.empty()) {
      const std::int32_t child = build(std::move(parts.right_by_l), std::move(parts.right_by_r));
      nodes_[static_cast<std::size_t>(self)].right = child;
    }
    return self;
  }

  std::size_t depth_below(std::int32_t u) const {
    if (u < 0) return 0;
    const Node& n = node(u);
    return 1 + std::max(depth_below(n.left), depth_below(n.right));
  }

  std::vector<IntervalT> store_;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
};

}  // namespace irs
