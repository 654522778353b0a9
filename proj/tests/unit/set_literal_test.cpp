#include <gtest/gtest.h>

#include "cli/set_literal.hpp"
#include "sumprod/error.hpp"

namespace sumprod::cli {
namespace {

using V = std::vector<std::uint32_t>;

Errc code_of(std::string_view text, std::uint64_t p = 101) {
  try {
    parse_set_literal(text, make_modulus(p));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted " << text;
  return Errc::InvalidArgument;
}

TEST(SetLiteralTest, Examples) {
  const auto p = make_modulus(101);
  EXPECT_EQ(parse_set_literal("{1,2,5..9}", p).elements(), (V{1, 2, 5, 6, 7, 8, 9}));
  EXPECT_EQ(parse_set_literal("{1..11}", p), ZpSet::interval(p, 1, 11));
  EXPECT_EQ(parse_set_literal("{103}", p).elements(), (V{2}));
}

TEST(SetLiteralTest, WhitespaceNegativesAndDuplicates) {
  const auto p = make_modulus(7);
  EXPECT_EQ(parse_set_literal(" { 1 , -1 ,8, 1 .. 2 } ", p).elements(), (V{1, 2, 6}));
  EXPECT_EQ(parse_set_literal("{-2..2}", p).elements(), (V{0, 1, 2, 5, 6}));
  EXPECT_TRUE(parse_set_literal("{0..1000000000000}", p).is_full());
}

TEST(SetLiteralTest, Rejections) {
  EXPECT_EQ(code_of("{}"), Errc::EmptySet);
  EXPECT_EQ(code_of("{ }"), Errc::EmptySet);
  EXPECT_EQ(code_of(""), Errc::SyntaxError);
  EXPECT_EQ(code_of("1,2"), Errc::SyntaxError);
  EXPECT_EQ(code_of("{1,2"), Errc::SyntaxError);
  EXPECT_EQ(code_of("{1,,2}"), Errc::SyntaxError);
  EXPECT_EQ(code_of("{1,}"), Errc::SyntaxError);
  EXPECT_EQ(code_of("{a}"), Errc::SyntaxError);
  EXPECT_EQ(code_of("{5..3}"), Errc::SyntaxError);
  EXPECT_EQ(code_of("{1...3}"), Errc::SyntaxError);
  EXPECT_EQ(code_of("{1} x"), Errc::SyntaxError);
  EXPECT_EQ(code_of("{99999999999999999999999}"), Errc::SyntaxError);
}

}  // namespace
}  // namespace sumprod::cli
