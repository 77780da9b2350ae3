#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "irs/ait.hpp"
#include "irs/alias_table.hpp"
#include "irs/cumulative_sum.hpp"
#include "irs/error.hpp"
#include "irs/interval.hpp"
#include "irs/rng.hpp"

namespace irs {

/// AIT whose four node lists each carry a prefix-sum array of weights, so a
/// record's total weight is one subtraction and a draw inside a record is
/// one binary search. Static: there is no update path.
template <Coordinate Coord>
class AugmentedWeightedIntervalTree {
 public:
  using IntervalT = Interval<Coord>;
  using Query = QueryInterval<Coord>;
  using Tree = AugmentedIntervalTree<Coord>;

  class Sampler {
   public:
    bool empty() const { return records_.empty(); }
    const RecordSet& records() const { return records_; }
    const AliasTable& alias() const { return alias_; }
    double total_weight() const { return alias_.empty() ? 0.0 : alias_.total(); }

    IntervalId draw(Rng& rng) const {
      const NodeRecord& rec = records_.records[alias_.sample(rng)];
      const std::size_t idx = owner_->cumulative(rec).sample_range(rec.idx_l, rec.idx_r, rng);
      return owner_->tree().list(rec)[idx - 1];
    }

   private:
    friend class AugmentedWeightedIntervalTree;
    Sampler(const AugmentedWeightedIntervalTree* owner, RecordSet records)
        : owner_(owner), records_(std::move(records)) {
      if (records_.empty()) return;
      std::vector<double> weights;
      weights.reserve(records_.records.size());
      for (const auto& rec : records_.records) weights.push_back(owner_->record_weight(rec));
      alias_ = AliasTable(weights);
    }

    const AugmentedWeightedIntervalTree* owner_;
    RecordSet records_;
    AliasTable alias_;
  };

  AugmentedWeightedIntervalTree() = default;
  explicit AugmentedWeightedIntervalTree(const Dataset<Coord>& data)
      : AugmentedWeightedIntervalTree(std::span<const IntervalT>(data.intervals)) {}
  explicit AugmentedWeightedIntervalTree(std::span<const IntervalT> intervals) : tree_(intervals) {
    sums_.resize(tree_.arena_size());
    std::vector<double> weights;
    auto prefix = [&](const std::vector<IntervalId>& list) {
      if (list.empty()) return CumulativeSumArray{};
      weights.clear();
      for (IntervalId id : list) weights.push_back(tree_.interval(id).weight);
      return CumulativeSumArray(weights);
    };
    tree_.for_each_node([&](std::int32_t u, const typename Tree::Node& n) {
      auto& s = sums_[static_cast<std::size_t>(u)];
      s[static_cast<std::size_t>(ListTag::kLl)] = prefix(n.by_l);
      s[static_cast<std::size_t>(ListTag::kLr)] = prefix(n.by_r);
      s[static_cast<std::size_t>(ListTag::kALr)] = prefix(n.sub_by_r);
      s[static_cast<std::size_t>(ListTag::kALl)] = prefix(n.sub_by_l);
    });
  }

  const Tree& tree() const { return tree_; }
  std::size_t size() const { return tree_.size(); }

  const CumulativeSumArray& cumulative(std::int32_t u, ListTag tag) const {
    return sums_[static_cast<std::size_t>(u)][static_cast<std::size_t>(tag)];
  }
  const CumulativeSumArray& cumulative(const NodeRecord& rec) const { return cumulative(rec.node, rec.tag); }

  /// Sum of the weights in the record's run, as a prefix difference.
  double record_weight(const NodeRecord& rec) const { return cumulative(rec).range_weight(rec.idx_l, rec.idx_r); }

  RecordSet query_records(const Query& q) const { return tree_.query_records(q); }

  Sampler sampler(const Query& q) const { return Sampler(this, tree_.query_records(q)); }
  Sampler sampler(RecordSet records) const { return Sampler(this, std::move(records)); }

  /// s independent draws from q ∩ X, each x with probability w(x) / w(q ∩ X).
  std::vector<IntervalT> weighted_irs_sample(const Query& q, std::int64_t s, Rng& rng) const {
    if (s < 0) throw Error(ErrorCode::kInvalidSampleSize, "sample size must be non-negative");
    std::vector<IntervalT> out;
    if (s == 0) return out;
    const Sampler smp = sampler(q);
    if (smp.empty()) return out;
    out.reserve(static_cast<std::size_t>(s));
    for (std::int64_t i = 0; i < s; ++i) out.push_back(tree_.interval(smp.draw(rng)));
    return out;
  }

  /// Tree entries plus one prefix value per list entry.
  std::size_t entry_count() const {
    std::size_t total = tree_.entry_count();
    for (const auto& s : sums_) {
      for (const auto& a : s) total += a.size();
    }
    return total;
  }

 private:
  Tree tree_;
  std::vector<std::array<CumulativeSumArray, 4>> sums_;
};

}  // namespace irs
