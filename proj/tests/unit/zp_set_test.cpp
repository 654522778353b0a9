#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "sumprod/error.hpp"
#include "sumprod/zp_set.hpp"

namespace sumprod {
namespace {

using V = std::vector<std::uint32_t>;

TEST(ZpSetTest, ConstructionReducesAndDeduplicates) {
  const auto m = make_modulus(101);
  const ZpSet s(m, {103, 2, -1, 100});
  EXPECT_EQ(s.elements(), (V{2, 100}));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(100));
  EXPECT_FALSE(s.contains(101));
}

TEST(ZpSetTest, IntervalWrapsAndSaturates) {
  const auto m = make_modulus(7);
  EXPECT_EQ(ZpSet::interval(m, 5, 8).elements(), (V{0, 1, 5, 6}));
  EXPECT_TRUE(ZpSet::interval(m, 0, 100).is_full());
  EXPECT_TRUE(ZpSet::interval(m, 3, 2).empty());
}

TEST(ZpSetTest, TailBitsStayClear) {
  const auto m = make_modulus(67);
  const auto s = ZpSet::from_words(m, {~0ull, ~0ull});
  EXPECT_EQ(s.size(), 67u);
  EXPECT_TRUE(s.is_full());
  EXPECT_EQ(s, ZpSet::full(m));
}

TEST(ZpSetTest, FromMask) {
  const auto m = make_modulus(5);
  EXPECT_EQ(ZpSet::from_mask(m, 0b10101).elements(), (V{0, 2, 4}));
  EXPECT_THROW(ZpSet::from_mask(make_modulus(67), 1), Error);
}

TEST(ZpSetTest, EqualityIsMembershipEquality) {
  const auto m = make_modulus(11);
  EXPECT_EQ(ZpSet(m, {1, 2, 3}), ZpSet::interval(m, 1, 3));
  EXPECT_FALSE(ZpSet(m, {1}) == ZpSet(make_modulus(13), {1}));
}

TEST(ZpSetTest, HasNonzero) {
  const auto m = make_modulus(5);
  EXPECT_FALSE(ZpSet(m).has_nonzero());
  EXPECT_FALSE(ZpSet(m, {0}).has_nonzero());
  EXPECT_TRUE(ZpSet(m, {0, 3}).has_nonzero());
}

TEST(ZpSetTest, CardinalityMatchesMembershipOnRandomSets) {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {3u, 61u, 67u, 127u, 1009u}) {
    const auto m = make_modulus(p);
    for (int t = 0; t < 50; ++t) {
      const auto ref = oracle::random_set(p, rng);
      const auto s = oracle::from_set(m, ref);
      ASSERT_EQ(s.size(), ref.size());
      ASSERT_EQ(oracle::to_set(s), ref);
      std::uint32_t counted = 0;
      for (std::uint32_t x = 0; x < p; ++x) counted += s.contains(x);
      ASSERT_EQ(counted, s.size());
    }
  }
}

}  // namespace
}  // namespace sumprod
