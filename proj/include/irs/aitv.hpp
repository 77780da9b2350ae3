#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "irs/ait.hpp"
#include "irs/detail/split.hpp"
#include "irs/error.hpp"
#include "irs/interval.hpp"
#include "irs/rng.hpp"

namespace irs {

/// Linear-space variant: pair-sorted intervals are cut into buckets of B
/// slots, each bucket is represented by the interval covering its members,
/// and an AIT over those covering intervals drives rejection sampling.
template <Coordinate Coord>
class AitV {
 public:
  using IntervalT = Interval<Coord>;
  using Query = QueryInterval<Coord>;

  struct SampleStats {
    std::uint64_t attempts = 0;
    std::uint64_t accepted = 0;
  };

  AitV() = default;
  explicit AitV(const Dataset<Coord>& data) : AitV(std::span<const IntervalT>(data.intervals)) {}
  explicit AitV(std::span<const IntervalT> intervals) {
    for (const auto& x : intervals) validate(x);
    const std::size_t n = intervals.size();
    bucket_size_ = std::max<std::size_t>(1, detail::ceil_log2(n + 2));
    if (n == 0) return;

    slots_.assign(intervals.begin(), intervals.end());
    std::sort(slots_.begin(), slots_.end(), LeftOrder{});
    const std::size_t buckets = (n + bucket_size_ - 1) / bucket_size_;
    IntervalT filler = slots_.back();
    filler.pseudo = true;
    slots_.resize(buckets * bucket_size_, filler);

    std::vector<IntervalT> covers;
    covers.reserve(buckets);
    for (std::size_t b = 0; b < buckets; ++b) {
      const auto members = bucket(b);
      IntervalT v{members.front().l, members.front().r, static_cast<IntervalId>(b), 1.0, false};
      for (const auto& x : members) {
        if (x.pseudo) continue;
        v.l = std::min(v.l, x.l);
        v.r = std::max(v.r, x.r);
      }
      covers.push_back(v);
    }
    virtual_ = AugmentedIntervalTree<Coord>(std::span<const IntervalT>(covers));
  }

  std::size_t size() const { return slots_.empty() ? 0 : real_count(); }
  std::size_t bucket_size() const { return bucket_size_; }
  std::size_t bucket_count() const { return slots_.size() / bucket_size_; }
  std::span<const IntervalT> bucket(std::size_t b) const {
    return std::span<const IntervalT>(slots_).subspan(b * bucket_size_, bucket_size_);
  }
  const IntervalT& virtual_interval(std::size_t b) const { return virtual_.interval(static_cast<IntervalId>(b)); }
  const AugmentedIntervalTree<Coord>& virtual_tree() const { return virtual_; }

  /// Bucket slots plus everything held by the tree over covering intervals.
  std::size_t entry_count() const { return slots_.size() + virtual_.entry_count(); }

  /// s uniform draws from q ∩ X. A covering interval is drawn through the
  /// AIT sampler, then one of its B slots; the draw is kept only if that slot
  /// is a real interval overlapping q.
  std::vector<IntervalT> sample(const Query& q, std::int64_t s, Rng& rng, SampleStats* stats = nullptr) const {
    return sample_from(q, candidates(q), s, rng, stats);
  }

  /// Records over the covering intervals that overlap q.
  RecordSet candidates(const Query& q) const { return virtual_.query_records(q); }

  /// Rejection phase of sample(), given candidates(q).
  std::vector<IntervalT> sample_from(const Query& q, RecordSet covering_records, std::int64_t s, Rng& rng,
                                     SampleStats* stats = nullptr) const {
    if (s < 0) throw Error(ErrorCode::kInvalidSampleSize, "sample size must be non-negative");
    std::vector<IntervalT> out;
    if (s == 0) return out;
    const auto covering = virtual_.sampler(std::move(covering_records));
    if (covering.empty()) return out;

    out.reserve(static_cast<std::size_t>(s));
    const std::uint64_t cap = 4 * static_cast<std::uint64_t>(s) * bucket_size_;
    std::uint64_t misses = 0;
    std::uint64_t attempts = 0;
    while (out.size() < static_cast<std::size_t>(s)) {
      ++attempts;
      const IntervalId b = covering.draw(rng);
      const IntervalT& x = slots_[std::size_t{b} * bucket_size_ + rng.below(bucket_size_)];
      if (!x.pseudo && overlaps(q, x)) {
        out.push_back(x);
        misses = 0;
      } else if (++misses >= cap) {
        if (!any_member_overlaps(covering.records(), q)) {
          throw Error(ErrorCode::kDegenerateSelectivity,
                      "covering intervals overlap the query but none of their members do");
        }
        misses = 0;
      }
    }
    if (stats != nullptr) {
      stats->attempts += attempts;
      stats->accepted += out.size();
    }
    return out;
  }

 private:
  std::size_t real_count() const {
    std::size_t count = slots_.size();
    for (auto it = slots_.rbegin(); it != slots_.rend() && it->pseudo; ++it) --count;
    return count;
  }

  bool any_member_overlaps(const RecordSet& rs, const Query& q) const {
    for (IntervalId b : virtual_.expand(rs)) {
      for (const auto& x : bucket(b)) {
        if (!x.pseudo && overlaps(q, x)) return true;
      }
    }
    return false;
  }

  std::vector<IntervalT> slots_;
  std::size_t bucket_size_ = 1;
  AugmentedIntervalTree<Coord> virtual_;
};

}  // namespace irs
