#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "irs/detail/split.hpp"
#include "irs/interval_tree.hpp"
#include "irs/oracle.hpp"
#include "test_support.hpp"

namespace irs {
namespace {

using Tree = IntervalTree<std::int64_t>;
using Q = QueryInterval<std::int64_t>;
using testing::ids_of;
using testing::small_dataset;

TEST(IntervalTree, Empty) {
  const Tree t(std::span<const Interval<std::int64_t>>{});
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t.height(), 0u);
  EXPECT_TRUE(t.range_search(Q{0, 100}).empty());
  EXPECT_TRUE(t.stabbing_query(5).empty());
}

TEST(IntervalTree, SingleInterval) {
  const auto d = Dataset<std::int64_t>::from_intervals({{1, 10}});
  const Tree t(d);
  ASSERT_EQ(t.node_count(), 1u);
  const auto& root = t.node(t.root());
  EXPECT_EQ(root.center, 1);
  EXPECT_EQ(root.by_l.size(), 1u);
  EXPECT_EQ(root.by_r.size(), 1u);
}

TEST(IntervalTree, HeightIsLogarithmic) {
  const auto d = small_dataset(1000, 4, false, 1'000'000);
  const Tree t(d);
  EXPECT_LE(t.height(), 2 * detail::ceil_log2(1001));
}

TEST(IntervalTree, NodeInvariants) {
  const auto d = small_dataset(800, 5);
  const Tree t(d);
  // Every interval sits in exactly one node, containing that node's center,
  // and lies strictly on the correct side of every ancestor's center.
  std::vector<int> seen(d.size(), 0);
  struct Frame {
    std::int32_t u;
    std::int64_t lo, hi;  // open bounds from ancestors
  };
  std::vector<Frame> stack{{t.root(), std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::max()}};
  while (!stack.empty()) {
    const auto [u, lo, hi] = stack.back();
    stack.pop_back();
    const auto& n = t.node(u);
    ASSERT_EQ(n.by_l.size(), n.by_r.size());
    for (IntervalId pos : n.by_l) {
      const auto& x = t.at(pos);
      ++seen[x.id];
      EXPECT_LE(x.l, n.center);
      EXPECT_GE(x.r, n.center);
      EXPECT_GT(x.l, lo);
      EXPECT_LT(x.r, hi);
    }
    if (n.left >= 0) stack.push_back({n.left, lo, n.center});
    if (n.right >= 0) stack.push_back({n.right, n.center, hi});
  }
  for (int c : seen) EXPECT_EQ(c, 1);
}

TEST(IntervalTree, Stabbing) {
  const auto d = small_dataset(500, 6);
  const Tree t(d);
  EXPECT_TRUE(t.stabbing_query(-5).empty());
  const auto& root = t.node(t.root());
  EXPECT_EQ(t.stabbing_query(root.center).size(), root.by_l.size());
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto p = rng.between(-10, 1010);
    EXPECT_EQ(ids_of(t.stabbing_query(p)), ids_of(oracle::range<std::int64_t>(d.intervals, Q{p, p})));
  }
}

TEST(IntervalTree, RangeSearch) {
  const auto d = small_dataset(500, 7);
  const Tree t(d);
  EXPECT_EQ(t.range_search(Q{d.domain_min, d.domain_max}).size(), d.size());
  EXPECT_TRUE(t.range_search(Q{5000, 6000}).empty());
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const auto q = testing::random_query<std::int64_t>(rng, -10, 1010);
    EXPECT_EQ(ids_of(t.range_search(q)), ids_of(oracle::range<std::int64_t>(d.intervals, q)));
    EXPECT_EQ(t.range_count(q), oracle::count<std::int64_t>(d.intervals, q));
  }
}

TEST(IntervalTree, SearchThenSampleEdges) {
  const auto d = Dataset<std::int64_t>::from_intervals({{1, 2}, {5, 6}, {9, 9}});
  const Tree t(d);
  Rng rng(3);
  EXPECT_TRUE(t.search_then_sample(Q{0, 100}, 0, rng).empty());
  const auto one = t.search_then_sample(Q{5, 5}, 3, rng);
  ASSERT_EQ(one.size(), 3u);
  for (const auto& x : one) EXPECT_EQ(x.id, 1u);
  EXPECT_THROW(t.search_then_sample(Q{0, 1}, -1, rng), Error);
}

TEST(IntervalTree, SearchThenSampleUniform) {
  std::vector<Interval<std::int64_t>> xs;
  for (int i = 0; i < 50; ++i) xs.push_back({i, i + 3});
  for (int i = 0; i < 50; ++i) xs.push_back({1000 + i, 1000 + i});
  const auto d = Dataset<std::int64_t>::from_intervals(std::move(xs));
  const Tree t(d);
  const Q q{0, 60};
  Rng rng(4);
  const auto samples = t.search_then_sample(q, 100'000, rng);
  std::vector<IntervalId> draws;
  for (const auto& x : samples) draws.push_back(x.id);
  std::map<IntervalId, double> expected;
  for (IntervalId i = 0; i < 50; ++i) expected[i] = 1.0 / 50;
  const auto result = oracle::chi_square_test(oracle::make_report(expected, draws));
  EXPECT_TRUE(result.pass) << result.p_value;
}

}  // namespace
}  // namespace irs
