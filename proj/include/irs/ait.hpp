#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "irs/alias_table.hpp"
#include "irs/detail/split.hpp"
#include "irs/error.hpp"
#include "irs/interval.hpp"
#include "irs/rng.hpp"

namespace irs {

/// Which node list a record indexes. The numeric values are part of the
/// external contract: 0 and 1 are the node's own lists, 2 and 3 the
/// subtree-wide lists of a child reached from a spanning node.
enum class ListTag : std::uint8_t { kLl = 0, kLr = 1, kALr = 2, kALl = 3 };

/// A contiguous run idx_l..idx_r (1-based, inclusive) of one node list in
/// which every interval overlaps the query.
struct NodeRecord {
  ListTag tag;
  std::int32_t node;
  std::uint32_t idx_l;
  std::uint32_t idx_r;

  std::uint64_t length() const { return std::uint64_t{idx_r} - idx_l + 1; }
  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

struct QueryStats {
  std::uint32_t visited_nodes = 0;
  std::uint32_t binary_searches = 0;
  std::uint32_t spanning_nodes = 0;  // nodes where q.l <= c <= q.r
};

/// The sample space of one query as disjoint runs, plus pending pool hits.
struct RecordSet {
  std::vector<NodeRecord> records;
  std::vector<IntervalId> pool_hits;
  std::uint64_t total = 0;
  QueryStats stats;

  bool empty() const { return total == 0; }
};

/// Interval tree whose nodes also keep their whole subtree sorted on l and
/// on r. Any query meets at most one spanning node, so its overlap set is
/// described by O(log n) runs found with one binary search per node.
///
/// Intervals are addressed by id; ids need not be dense but the store is
/// sized to the largest id seen.
template <Coordinate Coord>
class AugmentedIntervalTree {
 public:
  using IntervalT = Interval<Coord>;
  using Query = QueryInterval<Coord>;

  struct Node {
    Coord center{};
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::vector<IntervalId> by_l;      // Ll: intervals containing center, ascending l
    std::vector<IntervalId> by_r;      // Lr: same set, ascending r
    std::vector<IntervalId> sub_by_l;  // ALl: whole subtree, ascending l
    std::vector<IntervalId> sub_by_r;  // ALr: whole subtree, ascending r
  };

  /// Draws uniformly from one query's overlap set; holds the per-query alias.
  class Sampler {
   public:
    bool empty() const { return records_.empty(); }
    std::uint64_t population() const { return records_.total; }
    const RecordSet& records() const { return records_; }
    const AliasTable& alias() const { return alias_; }

    IntervalId draw(Rng& rng) const {
      const std::size_t k = alias_.sample(rng);
      if (k < records_.records.size()) {
        const NodeRecord& rec = records_.records[k];
        const std::uint64_t idx = rec.idx_l + rng.below(rec.length());
        return tree_->list(rec)[idx - 1];
      }
      return records_.pool_hits[rng.below(records_.pool_hits.size())];
    }

   private:
    friend class AugmentedIntervalTree;
    Sampler(const AugmentedIntervalTree* tree, RecordSet records) : tree_(tree), records_(std::move(records)) {
      if (records_.empty()) return;
      std::vector<double> weights;
      weights.reserve(records_.records.size() + 1);
      for (const auto& rec : records_.records) weights.push_back(static_cast<double>(rec.length()));
      if (!records_.pool_hits.empty()) weights.push_back(static_cast<double>(records_.pool_hits.size()));
      alias_ = AliasTable(weights);
    }

    const AugmentedIntervalTree* tree_;
    RecordSet records_;
    AliasTable alias_;
  };

  AugmentedIntervalTree() = default;
  explicit AugmentedIntervalTree(const Dataset<Coord>& data)
      : AugmentedIntervalTree(std::span<const IntervalT>(data.intervals)) {}
  explicit AugmentedIntervalTree(std::span<const IntervalT> intervals) {
    for (const auto& x : intervals) {
      validate(x);
      claim(x);
      state_[x.id] = kInTree;
    }
    size_ = intervals.size();
    std::vector<IntervalId> ids;
    ids.reserve(intervals.size());
    for (const auto& x : intervals) ids.push_back(x.id);
    build_from(std::move(ids));
  }

  // ---- inspection ----------------------------------------------------------

  /// Intervals in the tree proper (excludes the insertion pool).
  std::size_t size() const { return size_; }
  std::size_t pool_size() const { return pool_.size(); }
  bool empty() const { return root_ < 0 && pool_.empty(); }
  std::int32_t root() const { return root_; }
  const Node& node(std::int32_t i) const { return nodes_[static_cast<std::size_t>(i)]; }
  /// Slots in the node arena, including ones orphaned by deletions.
  std::size_t arena_size() const { return nodes_.size(); }
  const IntervalT& interval(IntervalId id) const { return store_[id]; }
  bool contains(IntervalId id) const { return id < state_.size() && state_[id] != kAbsent; }
  std::size_t rebuild_count() const { return rebuilds_; }

  const std::vector<IntervalId>& list(std::int32_t u, ListTag tag) const {
    const Node& n = node(u);
    switch (tag) {
      case ListTag::kLl: return n.by_l;
      case ListTag::kLr: return n.by_r;
      case ListTag::kALr: return n.sub_by_r;
      case ListTag::kALl: return n.sub_by_l;
    }
    return n.by_l;
  }
  const std::vector<IntervalId>& list(const NodeRecord& rec) const { return list(rec.node, rec.tag); }

  /// Number of levels; 0 when the tree proper is empty.
  std::size_t height() const { return depth_below(root_); }

  template <typename Fn>
  void for_each_node(Fn&& fn) const {
    if (root_ < 0) return;
    std::vector<std::int32_t> stack{root_};
    while (!stack.empty()) {
      const std::int32_t u = stack.back();
      stack.pop_back();
      fn(u, node(u));
      if (node(u).left >= 0) stack.push_back(node(u).left);
      if (node(u).right >= 0) stack.push_back(node(u).right);
    }
  }

  std::size_t node_count() const {
    std::size_t count = 0;
    for_each_node([&](std::int32_t, const Node&) { ++count; });
    return count;
  }

  /// Sum of |ALl| over all nodes, i.e. sum over intervals of (depth + 1).
  std::size_t subtree_list_entries() const {
    std::size_t total = 0;
    for_each_node([&](std::int32_t, const Node& n) { total += n.sub_by_l.size(); });
    return total;
  }

  /// Stored entries: live intervals plus every id held in a node list.
  std::size_t entry_count() const {
    std::size_t total = size_ + pool_.size();
    for_each_node([&](std::int32_t, const Node& n) {
      total += n.by_l.size() + n.by_r.size() + n.sub_by_l.size() + n.sub_by_r.size();
    });
    return total;
  }

  /// All live intervals, tree and pool, in id order.
  std::vector<IntervalT> intervals() const {
    std::vector<IntervalT> out;
    out.reserve(size_ + pool_.size());
    for (std::size_t id = 0; id < state_.size(); ++id) {
      if (state_[id] != kAbsent) out.push_back(store_[id]);
    }
    return out;
  }

  // ---- queries -------------------------------------------------------------

  /// Descends from the root emitting one run per non-pruned node and stops
  /// after the first node whose center lies inside q.
  RecordSet query_records(const Query& q) const {
    RecordSet out;
    auto& st = out.stats;
    for (std::int32_t u = root_; u >= 0;) {
      const Node& n = node(u);
      ++st.visited_nodes;
      if (q.r < n.center) {
        ++st.binary_searches;
        const auto j = count_left_at_most(n.by_l, q.r);
        if (j >= 1) out.records.push_back({ListTag::kLl, u, 1, j});
        u = n.left;
      } else if (n.center < q.l) {
        ++st.binary_searches;
        const auto j = first_right_at_least(n.by_r, q.l);
        const auto len = static_cast<std::uint32_t>(n.by_r.size());
        if (j <= len) out.records.push_back({ListTag::kLr, u, j, len});
        u = n.right;
      } else {
        ++st.spanning_nodes;
        if (!n.by_l.empty()) {
          out.records.push_back({ListTag::kLl, u, 1, static_cast<std::uint32_t>(n.by_l.size())});
        }
        if (n.left >= 0) {
          const Node& k = node(n.left);
          ++st.visited_nodes;
          ++st.binary_searches;
          const auto j = first_right_at_least(k.sub_by_r, q.l);
          const auto len = static_cast<std::uint32_t>(k.sub_by_r.size());
          if (j <= len) out.records.push_back({ListTag::kALr, n.left, j, len});
        }
        if (n.right >= 0) {
          const Node& k = node(n.right);
          ++st.visited_nodes;
          ++st.binary_searches;
          const auto j = count_left_at_most(k.sub_by_l, q.r);
          if (j >= 1) out.records.push_back({ListTag::kALl, n.right, 1, j});
        }
        break;
      }
    }
    for (IntervalId id : pool_) {
      if (overlaps(q, store_[id])) out.pool_hits.push_back(id);
    }
    for (const auto& rec : out.records) out.total += rec.length();
    out.total += out.pool_hits.size();
    return out;
  }

  std::uint64_t range_count(const Query& q) const { return query_records(q).total; }

  Sampler sampler(const Query& q) const { return Sampler(this, query_records(q)); }
  /// Builds the per-query alias over records already computed for a query.
  Sampler sampler(RecordSet records) const { return Sampler(this, std::move(records)); }

  /// s independent uniform draws (with replacement) from q ∩ X.
  std::vector<IntervalT> irs_sample(const Query& q, std::int64_t s, Rng& rng) const {
    if (s < 0) throw Error(ErrorCode::kInvalidSampleSize, "sample size must be non-negative");
    std::vector<IntervalT> out;
    if (s == 0) return out;
    const Sampler smp = sampler(q);
    if (smp.empty()) return out;
    out.reserve(static_cast<std::size_t>(s));
    for (std::int64_t i = 0; i < s; ++i) out.push_back(store_[smp.draw(rng)]);
    return out;
  }

  /// Ids covered by a record set, records first, then pool hits.
  std::vector<IntervalId> expand(const RecordSet& rs) const {
    std::vector<IntervalId> ids;
    ids.reserve(rs.total);
    for (const auto& rec : rs.records) {
      const auto& l = list(rec);
      ids.insert(ids.end(), l.begin() + (rec.idx_l - 1), l.begin() + rec.idx_r);
    }
    ids.insert(ids.end(), rs.pool_hits.begin(), rs.pool_hits.end());
    return ids;
  }

  // ---- updates -------------------------------------------------------------

  /// Maximum pool length before it is flushed: ceil(log2(n + 2))^2.
  std::size_t pool_capacity() const {
    const std::size_t b = detail::ceil_log2(size_ + pool_.size() + 2);
    return std::max<std::size_t>(1, b * b);
  }

  /// Depth limit after which an insertion triggers a full rebuild.
  std::size_t depth_limit() const { return 2 * std::max<std::size_t>(1, detail::ceil_log2(size_ + 1)); }

  /// One-by-one insertion: sorted positions are found by binary search.
  void insert(const IntervalT& x) {
    validate(x);
    claim(x);
    state_[x.id] = kInTree;
    ++size_;
    const std::size_t depth = place(x.id, nullptr);
    if (depth > depth_limit()) rebuild();
  }

  /// Adds x to the insertion pool; the pool is folded into the tree once it
  /// reaches pool_capacity(). Queries see pooled intervals immediately.
  void enqueue(const IntervalT& x) {
    validate(x);
    claim(x);
    state_[x.id] = kPooled;
    pool_.push_back(x.id);
    if (pool_.size() >= pool_capacity()) flush();
  }

  /// Batch insertion of the whole pool: append every interval to its target
  /// lists, then restore order once per touched list.
  void flush() {
    if (pool_.empty()) return;
    std::unordered_map<std::int32_t, std::array<std::size_t, 4>> sorted_prefix;
    std::size_t deepest = 0;
    for (IntervalId id : pool_) {
      state_[id] = kInTree;
      ++size_;
      deepest = std::max(deepest, place(id, &sorted_prefix));
    }
    pool_.clear();
    for (auto& [u, prefix] : sorted_prefix) {
      Node& n = nodes_[static_cast<std::size_t>(u)];
      restore_order(n.by_l, prefix[0], LeftOrder{});
      restore_order(n.by_r, prefix[1], RightOrder{});
      restore_order(n.sub_by_l, prefix[2], LeftOrder{});
      restore_order(n.sub_by_r, prefix[3], RightOrder{});
    }
    if (deepest > depth_limit()) rebuild();
  }

  /// Removes an interval from its owning node and every ancestor's subtree
  /// lists, pruning nodes whose subtree becomes empty.
  void erase(IntervalId id) {
    if (!contains(id)) throw Error(ErrorCode::kNotFound, "interval " + std::to_string(id) + " is not indexed");
    if (state_[id] == kPooled) {
      pool_.erase(std::find(pool_.begin(), pool_.end(), id));
      state_[id] = kAbsent;
      return;
    }
    const IntervalT& x = store_[id];
    std::vector<std::int32_t> path;
    for (std::int32_t u = root_; u >= 0;) {
      path.push_back(u);
      Node& n = nodes_[static_cast<std::size_t>(u)];
      remove_sorted(n.sub_by_l, x, LeftOrder{});
      remove_sorted(n.sub_by_r, x, RightOrder{});
      if (x.r < n.center) {
        u = n.left;
      } else if (n.center < x.l) {
        u = n.right;
      } else {
        remove_sorted(n.by_l, x, LeftOrder{});
        remove_sorted(n.by_r, x, RightOrder{});
        break;
      }
    }
    for (std::size_t i = path.size(); i-- > 0;) {
      Node& n = nodes_[static_cast<std::size_t>(path[i])];
      if (!n.sub_by_l.empty()) break;
      n = Node{};
      if (i == 0) {
        root_ = -1;
      } else {
        Node& parent = nodes_[static_cast<std::size_t>(path[i - 1])];
        (parent.left == path[i] ? parent.left : parent.right) = -1;
      }
    }
    state_[id] = kAbsent;
    --size_;
  }

  /// Rebuilds the tree proper from its current intervals; the pool is kept.
  void rebuild() {
    std::vector<IntervalId> ids;
    ids.reserve(size_);
    for (std::size_t id = 0; id < state_.size(); ++id) {
      if (state_[id] == kInTree) ids.push_back(static_cast<IntervalId>(id));
    }
    nodes_ = {};
    root_ = -1;
    build_from(std::move(ids));
    ++rebuilds_;
  }

 private:
  static constexpr std::uint8_t kAbsent = 0;
  static constexpr std::uint8_t kInTree = 1;
  static constexpr std::uint8_t kPooled = 2;

  void claim(const IntervalT& x) {
    if (contains(x.id)) throw Error(ErrorCode::kDuplicateId, "interval id " + std::to_string(x.id) + " already indexed");
    if (x.id >= store_.size()) {
      store_.resize(std::size_t{x.id} + 1);
      state_.resize(std::size_t{x.id} + 1, kAbsent);
    }
    store_[x.id] = x;
  }

  void build_from(std::vector<IntervalId> by_l) {
    if (by_l.empty()) return;
    std::vector<IntervalId> by_r = by_l;
    std::sort(by_l.begin(), by_l.end(), [&](IntervalId a, IntervalId b) { return LeftOrder{}(store_[a], store_[b]); });
    std::sort(by_r.begin(), by_r.end(), [&](IntervalId a, IntervalId b) { return RightOrder{}(store_[a], store_[b]); });
    root_ = build(std::move(by_l), std::move(by_r));
  }

  std::int32_t build(std::vector<IntervalId> by_l, std::vector<IntervalId> by_r) {
    auto lookup = [this](IntervalId id) -> const IntervalT& { return store_[id]; };
    auto parts = detail::split<Coord>(by_l, by_r, lookup);
    const auto self = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(Node{parts.center, -1, -1, std::move(parts.center_by_l), std::move(parts.center_by_r),
                          std::move(by_l), std::move(by_r)});
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

  /// Routes id down the tree as a query would, adding it to the subtree lists
  /// of every node on the way and to the node lists where it spans the
  /// center. A missing child becomes a new leaf centered on x.l. When
  /// `appended` is given the lists are appended to (caller restores order);
  /// otherwise sorted insertion is used. Returns the depth reached.
  std::size_t place(IntervalId id, std::unordered_map<std::int32_t, std::array<std::size_t, 4>>* appended) {
    const IntervalT x = store_[id];
    auto add = [&](std::vector<IntervalId>& list, auto order) {
      if (appended != nullptr) {
        list.push_back(id);
        return;
      }
      auto pos = std::upper_bound(list.begin(), list.end(), id,
                                  [&](IntervalId a, IntervalId b) { return order(store_[a], store_[b]); });
      list.insert(pos, id);
    };
    auto touch = [&](std::int32_t u) {
      if (appended == nullptr) return;
      const Node& n = nodes_[static_cast<std::size_t>(u)];
      appended->try_emplace(u, std::array<std::size_t, 4>{n.by_l.size(), n.by_r.size(), n.sub_by_l.size(),
                                                          n.sub_by_r.size()});
    };
    auto new_leaf = [&]() {
      nodes_.push_back(Node{x.l, -1, -1, {}, {}, {}, {}});
      return static_cast<std::int32_t>(nodes_.size() - 1);
    };

    if (root_ < 0) root_ = new_leaf();
    std::size_t depth = 1;
    for (std::int32_t u = root_;; ++depth) {
      touch(u);
      Node* n = &nodes_[static_cast<std::size_t>(u)];
      add(n->sub_by_l, LeftOrder{});
      add(n->sub_by_r, RightOrder{});
      if (x.r < n->center || n->center < x.l) {
        const bool go_left = x.r < n->center;
        std::int32_t child = go_left ? n->left : n->right;
        if (child < 0) {
          child = new_leaf();
          n = &nodes_[static_cast<std::size_t>(u)];
          (go_left ? n->left : n->right) = child;
        }
        u = child;
      } else {
        add(n->by_l, LeftOrder{});
        add(n->by_r, RightOrder{});
        return depth;
      }
    }
  }

  template <typename Order>
  void restore_order(std::vector<IntervalId>& list, std::size_t sorted_prefix, Order order) {
    auto cmp = [&](IntervalId a, IntervalId b) { return order(store_[a], store_[b]); };
    const auto mid = list.begin() + static_cast<std::ptrdiff_t>(sorted_prefix);
    std::sort(mid, list.end(), cmp);
    // Merge from the back: each appended id is placed by binary search and
    // the old entries above it shift once, as a block.
    const std::vector<IntervalId> added(mid, list.end());
    auto old_end = mid;
    auto out = list.end();
    for (auto it = added.rbegin(); it != added.rend(); ++it) {
      const auto pos = std::upper_bound(list.begin(), old_end, *it, cmp);
      out = std::move_backward(pos, old_end, out);
      *--out = *it;
      old_end = pos;
    }
  }

  template <typename Order>
  void remove_sorted(std::vector<IntervalId>& list, const IntervalT& x, Order order) {
    auto it = std::lower_bound(list.begin(), list.end(), x,
                               [&](IntervalId a, const IntervalT& key) { return order(store_[a], key); });
    if (it == list.end() || *it != x.id) {
      throw Error(ErrorCode::kNotFound, "interval " + std::to_string(x.id) + " missing from a node list");
    }
    list.erase(it);
  }

  /// Largest j with list[j].l <= bound (1-based), 0 if none.
  std::uint32_t count_left_at_most(const std::vector<IntervalId>& list, Coord bound) const {
    auto it = std::upper_bound(list.begin(), list.end(), bound,
                               [&](Coord b, IntervalId id) { return b < store_[id].l; });
    return static_cast<std::uint32_t>(it - list.begin());
  }

  /// Smallest j with bound <= list[j].r (1-based), |list| + 1 if none.
  std::uint32_t first_right_at_least(const std::vector<IntervalId>& list, Coord bound) const {
    auto it = std::lower_bound(list.begin(), list.end(), bound,
                               [&](IntervalId id, Coord b) { return store_[id].r < b; });
    return static_cast<std::uint32_t>(it - list.begin()) + 1;
  }

  std::size_t depth_below(std::int32_t u) const {
    if (u < 0) return 0;
    const Node& n = node(u);
    return 1 + std::max(depth_below(n.left), depth_below(n.right));
  }

  std::vector<IntervalT> store_;
  std::vector<std::uint8_t> state_;
  std::vector<IntervalId> pool_;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
  std::size_t size_ = 0;
  std::size_t rebuilds_ = 0;
};

}  // namespace irs
