#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "irs/error.hpp"
#include "irs/interval.hpp"

namespace irs {
namespace {

using I = Interval<std::int64_t>;

TEST(Overlaps, SharedEndpointCounts) { EXPECT_TRUE(overlaps(I{1, 5}, I{5, 9})); }
TEST(Overlaps, Disjoint) { EXPECT_FALSE(overlaps(I{1, 2}, I{3, 4})); }
TEST(Overlaps, PointInside) { EXPECT_TRUE(overlaps(I{3, 3}, I{1, 5})); }

TEST(Overlaps, Symmetric) {
  for (std::int64_t a = 0; a < 5; ++a)
    for (std::int64_t b = a; b < 5; ++b)
      for (std::int64_t c = 0; c < 5; ++c)
        for (std::int64_t d = c; d < 5; ++d) {
          const I x{a, b}, y{c, d};
          EXPECT_EQ(overlaps(x, y), overlaps(y, x));
          bool shared = false;
          for (std::int64_t p = 0; p < 5; ++p) shared |= (a <= p && p <= b && c <= p && p <= d);
          EXPECT_EQ(overlaps(x, y), shared);
        }
}

TEST(PairSort, OrdersByLeftThenRight) {
  std::vector<I> xs{{2, 9, 0}, {1, 4, 1}, {1, 3, 2}};
  xs = pair_sort(std::move(xs));
  ASSERT_EQ(xs.size(), 3u);
  EXPECT_EQ(xs[0].r, 3);
  EXPECT_EQ(xs[1].r, 4);
  EXPECT_EQ(xs[2].l, 2);
}

TEST(PairSort, Empty) {
  std::vector<I> xs;
  xs = pair_sort(std::move(xs));
  EXPECT_TRUE(xs.empty());
}

TEST(PairSort, IdBreaksTies) {
  std::vector<I> xs{{1, 3, 7}, {1, 3, 2}};
  xs = pair_sort(std::move(xs));
  EXPECT_EQ(xs[0].id, 2u);
  EXPECT_EQ(xs[1].id, 7u);
}

TEST(Validate, RejectsReversedEndpoints) {
  try {
    validate(I{5, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInterval);
  }
}

TEST(Validate, RejectsNaN) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(validate(Interval<double>{nan, 1.0}), Error);
  EXPECT_THROW(validate(Interval<double>{0.0, nan}), Error);
}

TEST(Validate, RejectsNonPositiveWeight) {
  try {
    validate(I{1, 2, 0, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidWeight);
  }
  EXPECT_THROW(validate(I{1, 2, 0, -1.0}), Error);
}

TEST(Validate, Query) {
  EXPECT_THROW(validate(QueryInterval<std::int64_t>{3, 2}), Error);
  EXPECT_NO_THROW(validate(QueryInterval<std::int64_t>{2, 2}));
  EXPECT_TRUE((QueryInterval<std::int64_t>{2, 2}.is_stabbing()));
}

TEST(Dataset, AssignsDenseIdsAndDomain) {
  auto d = Dataset<std::int64_t>::from_intervals({{5, 9, 40}, {-3, 2, 41}, {0, 0, 42}});
  ASSERT_EQ(d.size(), 3u);
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d.intervals[i].id, i);
  EXPECT_EQ(d.domain_min, -3);
  EXPECT_EQ(d.domain_max, 9);
}

TEST(Dataset, ExplicitDomainMustCoverData) {
  EXPECT_NO_THROW(Dataset<std::int64_t>::from_intervals({{1, 2}}, 0, 10));
  EXPECT_THROW(Dataset<std::int64_t>::from_intervals({{1, 20}}, 0, 10), Error);
  EXPECT_THROW(Dataset<std::int64_t>::from_intervals({}, 10, 0), Error);
}

TEST(Error, ValidationVersusIo) {
  EXPECT_TRUE(Error(ErrorCode::kParse, "x").is_validation());
  EXPECT_FALSE(Error(ErrorCode::kIo, "x").is_validation());
  EXPECT_EQ(to_string(ErrorCode::kDegenerateSelectivity), "DegenerateSelectivity");
}

}  // namespace
}  // namespace irs
