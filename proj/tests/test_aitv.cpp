#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "irs/aitv.hpp"
#include "irs/detail/split.hpp"
#include "irs/oracle.hpp"
#include "test_support.hpp"

namespace irs {
namespace {

using V = AitV<std::int64_t>;
using Q = QueryInterval<std::int64_t>;
using testing::ids_of;
using testing::small_dataset;

TEST(AitV, SingleFullBucket) {
  const auto d = Dataset<std::int64_t>::from_intervals({{4, 9}, {1, 3}, {2, 12}});
  const V v(d);
  ASSERT_EQ(v.bucket_size(), 3u);
  ASSERT_EQ(v.bucket_count(), 1u);
  for (const auto& x : v.bucket(0)) EXPECT_FALSE(x.pseudo);
  EXPECT_EQ(v.virtual_interval(0).l, 1);
  EXPECT_EQ(v.virtual_interval(0).r, 12);
}

TEST(AitV, VirtualIntervalOfTwo) {
  const auto d = Dataset<std::int64_t>::from_intervals({{1, 3}, {2, 5}});
  const V v(d);
  ASSERT_EQ(v.bucket_count(), 1u);
  EXPECT_EQ(v.virtual_interval(0).l, 1);
  EXPECT_EQ(v.virtual_interval(0).r, 5);
}

TEST(AitV, PaddingArithmetic) {
  const auto d = small_dataset(100'000, 3, false, 100'000'000);
  const V v(d);
  const std::size_t b = v.bucket_size();
  EXPECT_EQ(b, detail::ceil_log2(100'002));
  EXPECT_EQ(v.bucket_count(), (d.size() + b - 1) / b);
  EXPECT_LE(v.bucket_count() * b, d.size() + b);
  EXPECT_EQ(v.size(), d.size());
}

TEST(AitV, PartitionAndPadding) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto d = small_dataset(50 + 37 * seed, seed);
    const V v(d);
    std::vector<IntervalId> real;
    std::vector<Interval<std::int64_t>> slots;
    for (std::size_t b = 0; b < v.bucket_count(); ++b) {
      for (const auto& x : v.bucket(b)) {
        slots.push_back(x);
        if (!x.pseudo) real.push_back(x.id);
      }
    }
    std::sort(real.begin(), real.end());
    EXPECT_EQ(real, ids_of(d.intervals));
    // Real slots are pair-sorted; pseudo slots only pad the final bucket.
    const auto first_pseudo = std::find_if(slots.begin(), slots.end(), [](const auto& x) { return x.pseudo; });
    EXPECT_TRUE(std::is_sorted(slots.begin(), first_pseudo, LeftOrder{}));
    EXPECT_GE(first_pseudo - slots.begin(), static_cast<std::ptrdiff_t>(slots.size() - v.bucket_size()));
    EXPECT_TRUE(std::all_of(first_pseudo, slots.end(), [](const auto& x) { return x.pseudo; }));
  }
}

TEST(AitV, CoveringHasNoFalseNegatives) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto d = small_dataset(120, seed, false, 200);
    const V v(d);
    for (std::int64_t l = -1; l <= 201; l += 3) {
      for (std::int64_t r = l; r <= 201; r += 5) {
        const Q q{l, r};
        for (std::size_t b = 0; b < v.bucket_count(); ++b) {
          for (const auto& x : v.bucket(b)) {
            if (!x.pseudo && overlaps(q, x)) {
              ASSERT_TRUE(overlaps(q, v.virtual_interval(b)));
            }
          }
        }
      }
    }
  }
}

TEST(AitV, ExactConditionalUniformity) {
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto d = small_dataset(1 + rng.below(200), seed);
    const V v(d);
    for (int i = 0; i < 20; ++i) {
      const auto q = testing::random_query<std::int64_t>(rng, 0, 1000);
      const auto mass = oracle::exact_aitv_acceptance(v, q);
      const auto expect = ids_of(oracle::range<std::int64_t>(d.intervals, q));
      std::vector<IntervalId> got;
      for (const auto& [id, p] : mass.accepted) got.push_back(id);
      ASSERT_EQ(got, expect);
      if (expect.empty()) continue;
      const auto first = mass.accepted.begin()->second;
      for (const auto& [id, p] : mass.accepted) ASSERT_EQ(p, first);
      oracle::Rational total = mass.rejected;
      for (const auto& [id, p] : mass.accepted) total += p;
      ASSERT_EQ(total, 1);
    }
  }
}

TEST(AitV, AllMembersOverlapMeansNoRejection) {
  const auto d = Dataset<std::int64_t>::from_intervals({{4, 9}, {1, 3}, {2, 12}});
  const V v(d);
  V::SampleStats stats;
  Rng rng(1);
  const auto xs = v.sample(Q{0, 20}, 500, rng, &stats);
  EXPECT_EQ(xs.size(), 500u);
  EXPECT_EQ(stats.attempts, 500u);
}

TEST(AitV, EmptyResult) {
  const V v(small_dataset(300, 2));
  Rng rng(1);
  EXPECT_TRUE(v.sample(Q{5000, 6000}, 10, rng).empty());
  EXPECT_TRUE(v.sample(Q{0, 1000}, 0, rng).empty());
  EXPECT_THROW(v.sample(Q{0, 1000}, -1, rng), Error);
  const V empty(std::span<const Interval<std::int64_t>>{});
  EXPECT_TRUE(empty.sample(Q{0, 1}, 3, rng).empty());
}

TEST(AitV, DegenerateSelectivity) {
  const auto d = Dataset<std::int64_t>::from_intervals({{1, 2}, {9, 10}});
  const V v(d);
  ASSERT_EQ(v.bucket_count(), 1u);
  Rng rng(1);
  try {
    v.sample(Q{5, 5}, 3, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateSelectivity);
  }
}

TEST(AitV, LowAcceptanceStillCompletes) {
  // One overlapping member among many covered slots: the miss cap is hit
  // regularly but the query is not degenerate.
  std::vector<Interval<std::int64_t>> xs;
  for (int i = 0; i < 64; ++i) xs.push_back({i * 10, i * 10 + 1});
  xs.push_back({0, 1000});
  const auto d = Dataset<std::int64_t>::from_intervals(std::move(xs));
  const V v(d);
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto got = v.sample(Q{5, 5}, 1, rng);
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0].id, 64u);
  }
}

TEST(AitV, ChiSquareOnSmallInstances) {
  Rng rng(9);
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 5 && seed < 50; ++seed) {
    const auto d = small_dataset(300, seed);
    const V v(d);
    const auto q = testing::random_query<std::int64_t>(rng, 0, 1000);
    const auto hits = oracle::range<std::int64_t>(d.intervals, q);
    if (hits.size() < 10 || hits.size() > 200) continue;
    ++checked;
    std::vector<IntervalId> draws;
    for (const auto& x : v.sample(q, 100'000, rng)) draws.push_back(x.id);
    std::map<IntervalId, double> expected;
    for (const auto& x : hits) expected[x.id] = 1.0 / static_cast<double>(hits.size());
    const auto result = oracle::chi_square_test(oracle::make_report(expected, draws));
    EXPECT_TRUE(result.pass) << "seed " << seed << " p=" << result.p_value;
  }
  EXPECT_EQ(checked, 5);
}

TEST(AitV, LinearSpace) {
  const auto d = small_dataset(10'000, 1, false, 100'000'000);
  const V v(d);
  EXPECT_LE(v.entry_count(), 4 * d.size());
}

}  // namespace
}  // namespace irs
