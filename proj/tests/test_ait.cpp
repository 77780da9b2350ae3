#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "irs/ait.hpp"
#include "irs/oracle.hpp"
#include "test_support.hpp"

namespace irs {
namespace {

using Tree = AugmentedIntervalTree<std::int64_t>;
using Q = QueryInterval<std::int64_t>;
using testing::covered_ids;
using testing::ids_of;
using testing::small_dataset;

std::vector<IntervalId> sorted(std::vector<IntervalId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<IntervalId> subtree_members(const Tree& t, std::int32_t u) {
  std::vector<IntervalId> out;
  std::vector<std::int32_t> stack{u};
  while (!stack.empty()) {
    const auto& n = t.node(stack.back());
    stack.pop_back();
    out.insert(out.end(), n.by_l.begin(), n.by_l.end());
    if (n.left >= 0) stack.push_back(n.left);
    if (n.right >= 0) stack.push_back(n.right);
  }
  return sorted(out);
}

template <typename Order>
bool is_sorted_by(const Tree& t, const std::vector<IntervalId>& ids, Order cmp) {
  return std::is_sorted(ids.begin(), ids.end(),
                        [&](IntervalId a, IntervalId b) { return cmp(t.interval(a), t.interval(b)); });
}

// Augmented lists hold exactly the subtree, in the right orders.
void expect_structure(const Tree& t) {
  t.for_each_node([&](std::int32_t u, const Tree::Node& n) {
    EXPECT_EQ(sorted(n.by_l), sorted(n.by_r));
    EXPECT_TRUE(is_sorted_by(t, n.by_l, LeftOrder{}));
    EXPECT_TRUE(is_sorted_by(t, n.by_r, RightOrder{}));
    EXPECT_TRUE(is_sorted_by(t, n.sub_by_l, LeftOrder{}));
    EXPECT_TRUE(is_sorted_by(t, n.sub_by_r, RightOrder{}));
    const auto members = subtree_members(t, u);
    EXPECT_EQ(sorted(n.sub_by_l), members);
    EXPECT_EQ(sorted(n.sub_by_r), members);
    for (IntervalId id : n.by_l) {
      EXPECT_LE(t.interval(id).l, n.center);
      EXPECT_GE(t.interval(id).r, n.center);
    }
    if (n.left >= 0) {
      for (IntervalId id : subtree_members(t, n.left)) EXPECT_LT(t.interval(id).r, n.center);
    }
    if (n.right >= 0) {
      for (IntervalId id : subtree_members(t, n.right)) EXPECT_GT(t.interval(id).l, n.center);
    }
  });
}

TEST(Ait, SingleInterval) {
  const auto d = Dataset<std::int64_t>::from_intervals({{1, 10}});
  const Tree t(d);
  ASSERT_EQ(t.node_count(), 1u);
  const auto& root = t.node(t.root());
  EXPECT_EQ(root.center, 1);
  for (auto tag : {ListTag::kLl, ListTag::kLr, ListTag::kALl, ListTag::kALr}) {
    EXPECT_EQ(t.list(t.root(), tag), std::vector<IntervalId>{0});
  }
}

TEST(Ait, Empty) {
  const Tree t(std::span<const Interval<std::int64_t>>{});
  EXPECT_TRUE(t.empty());
  EXPECT_TRUE(t.query_records(Q{0, 10}).empty());
  EXPECT_EQ(t.range_count(Q{0, 10}), 0u);
  Rng rng(1);
  EXPECT_TRUE(t.irs_sample(Q{0, 10}, 5, rng).empty());
}

TEST(Ait, RootSubtreeListIsPairSortedDataset) {
  const auto d = small_dataset(300, 1);
  const Tree t(d);
  auto xs = d.intervals;
  xs = pair_sort(std::move(xs));
  const auto& all = t.node(t.root()).sub_by_l;
  ASSERT_EQ(all.size(), xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(all[i], xs[i].id);
}

TEST(Ait, ElevenIntervalStructure) {
  const auto d = Dataset<std::int64_t>::from_intervals(
      {{1, 3}, {2, 8}, {4, 5}, {6, 14}, {7, 9}, {10, 12}, {11, 20}, {13, 15}, {16, 17}, {18, 22}, {19, 21}});
  const Tree t(d);
  EXPECT_GT(t.node_count(), 2u);
  expect_structure(t);
}

TEST(Ait, StructureOnRandomData) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) expect_structure(Tree(small_dataset(400, seed)));
}

TEST(Ait, FullDomainQueryFiresCaseThreeAtRoot) {
  const auto d = small_dataset(500, 2);
  const Tree t(d);
  const auto rs = t.query_records(Q{d.domain_min, d.domain_max});
  EXPECT_EQ(rs.total, d.size());
  EXPECT_EQ(rs.stats.spanning_nodes, 1u);
  for (const auto& rec : rs.records) {
    const bool at_root = rec.node == t.root();
    const bool child = rec.node == t.node(t.root()).left || rec.node == t.node(t.root()).right;
    EXPECT_TRUE(at_root || child);
  }
}

TEST(Ait, DisjointQuery) {
  const auto d = small_dataset(200, 3);
  const Tree t(d);
  EXPECT_TRUE(t.query_records(Q{5000, 6000}).empty());
  EXPECT_TRUE(t.query_records(Q{-100, -1}).empty());
}

TEST(Ait, LeftRunOfSixIntervalNode) {
  // Six intervals all containing the center 6; q.r falls between the 4th
  // and 5th left endpoints.
  const auto d = Dataset<std::int64_t>::from_intervals({{1, 100}, {2, 100}, {3, 100}, {4, 100}, {5, 100}, {6, 100}});
  const Tree t(d);
  ASSERT_EQ(t.node_count(), 1u);
  ASSERT_EQ(t.node(t.root()).center, 6);
  const auto rs = t.query_records(Q{0, 4});
  ASSERT_EQ(rs.records.size(), 1u);
  EXPECT_EQ(rs.records[0].tag, ListTag::kLl);
  EXPECT_EQ(rs.records[0].idx_l, 1u);
  EXPECT_EQ(rs.records[0].idx_r, 4u);
}

TEST(Ait, RecordsMatchOracleWithoutDuplicates) {
  Rng rng(17);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + rng.below(2000);
    const auto d = small_dataset(n, seed);
    const Tree t(d);
    for (int i = 0; i < 100; ++i) {
      const auto q = testing::random_query<std::int64_t>(rng, -20, 1020);
      const auto got = covered_ids(t, q);
      EXPECT_TRUE(std::adjacent_find(got.begin(), got.end()) == got.end());
      ASSERT_EQ(got, ids_of(oracle::range<std::int64_t>(d.intervals, q))) << "seed " << seed;
      ASSERT_LE(t.query_records(q).stats.visited_nodes, t.height() + 3);
    }
  }
}

TEST(Ait, StabbingQueries) {
  const auto d = small_dataset(700, 8);
  const Tree t(d);
  for (std::int64_t p = -2; p <= 1002; p += 7) {
    EXPECT_EQ(covered_ids(t, Q{p, p}), ids_of(oracle::range<std::int64_t>(d.intervals, Q{p, p})));
  }
}

TEST(Ait, FloatCoordinates) {
  DatasetSpec<double> spec;
  spec.n = 500;
  spec.domain_max = 1.0;
  spec.mean_length = 0.05;
  spec.seed = 12;
  const auto d = generate_dataset(spec);
  const AugmentedIntervalTree<double> t(d);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto q = testing::random_query<double>(rng, -0.1, 1.1);
    EXPECT_EQ(covered_ids(t, q), ids_of(oracle::range<double>(d.intervals, q)));
  }
}

TEST(Ait, RangeCount) {
  const auto d = small_dataset(900, 9);
  const Tree t(d);
  EXPECT_EQ(t.range_count(Q{d.domain_min, d.domain_max}), d.size());
  Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    const auto q = testing::random_query<std::int64_t>(rng, -10, 1010);
    EXPECT_EQ(t.range_count(q), oracle::count<std::int64_t>(d.intervals, q));
  }
}

TEST(Ait, InvalidQueryAndSampleSize) {
  const Tree t(small_dataset(10, 1));
  Rng rng(1);
  EXPECT_THROW(t.irs_sample(Q{0, 100}, -1, rng), Error);
}

TEST(Ait, SampleEdges) {
  const auto d = Dataset<std::int64_t>::from_intervals({{1, 2}, {5, 6}, {9, 9}});
  const Tree t(d);
  Rng rng(2);
  EXPECT_TRUE(t.irs_sample(Q{0, 100}, 0, rng).empty());
  const auto xs = t.irs_sample(Q{9, 9}, 5, rng);
  ASSERT_EQ(xs.size(), 5u);
  for (const auto& x : xs) EXPECT_EQ(x.id, 2u);
}

TEST(Ait, ExactUniformity) {
  Rng rng(21);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto d = small_dataset(1 + rng.below(300), seed);
    const Tree t(d);
    for (int i = 0; i < 20; ++i) {
      const auto q = testing::random_query<std::int64_t>(rng, 0, 1000);
      const auto pmf = oracle::exact_uniform_pmf(t, q);
      const auto expect = ids_of(oracle::range<std::int64_t>(d.intervals, q));
      ASSERT_EQ(pmf.size(), expect.size());
      for (const auto& [id, p] : pmf) {
        ASSERT_EQ(p, oracle::Rational(1, static_cast<long long>(expect.size())));
      }
    }
  }
}

TEST(Ait, EmpiricalFrequencyWithinThreeSigma) {
  std::vector<Interval<std::int64_t>> xs;
  for (int i = 0; i < 40; ++i) xs.push_back({3 * i, 3 * i + 10});
  for (int i = 0; i < 60; ++i) xs.push_back({500 + i, 500 + i});
  const auto d = Dataset<std::int64_t>::from_intervals(std::move(xs));
  const Tree t(d);
  const Q q{0, 200};
  ASSERT_EQ(t.range_count(q), 40u);
  Rng rng(31);
  const int draws = 1'000'000;
  std::map<IntervalId, int> hits;
  for (const auto& x : t.irs_sample(q, draws, rng)) ++hits[x.id];
  const double p = 1.0 / 40;
  const double sigma = std::sqrt(p * (1 - p) / draws);
  ASSERT_EQ(hits.size(), 40u);
  for (const auto& [id, c] : hits) EXPECT_NEAR(static_cast<double>(c) / draws, p, 3 * sigma) << id;
}

TEST(Ait, SpaceBound) {
  const auto d = small_dataset(5000, 10, false, 1'000'000);
  const Tree t(d);
  EXPECT_LE(t.subtree_list_entries(), d.size() * (t.height() + 1));
}

}  // namespace
}  // namespace irs
