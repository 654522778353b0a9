#include <gtest/gtest.h>

#include "sumprod/error.hpp"
#include "sumprod/zp.hpp"

namespace sumprod {
namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::InvalidArgument;
}

TEST(ZpTest, MakeModulusAcceptsOddPrimes) {
  EXPECT_EQ(make_modulus(7).value(), 7u);
  EXPECT_EQ(make_modulus(65537).value(), 65537u);
  EXPECT_EQ(make_modulus(2147483647).value(), 2147483647u);
}

TEST(ZpTest, MakeModulusRejects) {
  EXPECT_EQ(code_of([] { make_modulus(9); }), Errc::NotPrime);
  EXPECT_EQ(code_of([] { make_modulus(1); }), Errc::NotPrime);
  EXPECT_EQ(code_of([] { make_modulus(0); }), Errc::NotPrime);
  EXPECT_EQ(code_of([] { make_modulus(2); }), Errc::EvenPrime);
  EXPECT_EQ(code_of([] { make_modulus(4294967311ull); }), Errc::ModulusOutOfRange);
}

TEST(ZpTest, IsPrimeMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    ASSERT_EQ(is_prime(n), trial) << n;
  }
  // Strong pseudoprimes to several small bases.
  EXPECT_FALSE(is_prime(3215031751ull));
  EXPECT_FALSE(is_prime(3825123056546413051ull));
  EXPECT_TRUE(is_prime(18446744073709551557ull));
}

TEST(ZpTest, InverseExamples) {
  const auto p7 = make_modulus(7);
  EXPECT_EQ(inverse(ZpElement(p7, 3)).value(), 5u);
  EXPECT_EQ(inverse(ZpElement(p7, 1)).value(), 1u);
  EXPECT_EQ(code_of([&] { inverse(ZpElement(p7, 0)); }), Errc::ZeroInverse);
}

TEST(ZpTest, InverseIsInvolutionExhaustively) {
  for (std::uint64_t p : {3u, 5u, 101u, 1009u, 9973u}) {
    const auto m = make_modulus(p);
    for (std::uint32_t x = 1; x < p; ++x) {
      const ZpElement e(m, x);
      const auto y = inverse(e);
      ASSERT_EQ((e * y).value(), 1u);
      ASSERT_EQ(inverse(y), e);
    }
  }
}

TEST(ZpTest, ElementArithmeticReducesIntoCanonicalRange) {
  const auto m = make_modulus(7);
  EXPECT_EQ(ZpElement(m, -1).value(), 6u);
  EXPECT_EQ(ZpElement(m, 15).value(), 1u);
  EXPECT_EQ((ZpElement(m, 5) + ZpElement(m, 4)).value(), 2u);
  EXPECT_EQ((ZpElement(m, 2) - ZpElement(m, 5)).value(), 4u);
  EXPECT_EQ((-ZpElement(m, 0)).value(), 0u);
  EXPECT_EQ(m.pow(3, 6), 1u);
}

TEST(ZpTest, MixedModuliAreRejected) {
  const ZpElement a(make_modulus(5), 1), b(make_modulus(7), 1);
  EXPECT_EQ(code_of([&] { (void)(a + b); }), Errc::ModulusMismatch);
}

TEST(ZpTest, LargeModulusMultiplicationDoesNotOverflow) {
  const auto m = make_modulus(2147483647);
  const std::uint32_t x = 2147483646;  // -1
  EXPECT_EQ(m.mul(x, x), 1u);
  EXPECT_EQ(m.add(x, x), 2147483645u);
  EXPECT_EQ(m.mul(x, m.inv(x)), 1u);
}

}  // namespace
}  // namespace sumprod
