#include "sumprod/zp.hpp"

#include <array>
#include <string>

#include "sumprod/error.hpp"

namespace sumprod {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

void check_same(PrimeModulus a, PrimeModulus b) {
  if (a != b) {
    throw Error(Errc::ModulusMismatch,
                std::to_string(a.value()) + " vs " + std::to_string(b.value()));
  }
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a complete witness set below 2^64.
  for (auto a : kBases) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus make_modulus(std::uint64_t n) {
  if (n == 2) throw Error(Errc::EvenPrime, "p = 2 is excluded; need an odd prime");
  if (n >= kMaxModulus) {
    throw Error(Errc::ModulusOutOfRange, std::to_string(n) + " is not below 2^31");
  }
  if (!is_prime(n)) throw Error(Errc::NotPrime, std::to_string(n) + " is not an odd prime");
  return PrimeModulus(static_cast<std::uint32_t>(n));
}

std::uint32_t PrimeModulus::pow(std::uint32_t base, std::uint64_t exp) const noexcept {
  return static_cast<std::uint32_t>(powmod64(base, exp, p_));
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(Errc::ZeroInverse, "0 has no inverse mod " + std::to_string(p_));
  std::int64_t r0 = p_, r1 = a % p_;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return reduce(t0);
}

ZpElement ZpElement::operator+(ZpElement o) const {
  check_same(m_, o.m_);
  return from_canonical(m_, m_.add(v_, o.v_));
}

ZpElement ZpElement::operator-(ZpElement o) const {
  check_same(m_, o.m_);
  return from_canonical(m_, m_.sub(v_, o.v_));
}

ZpElement ZpElement::operator*(ZpElement o) const {
  check_same(m_, o.m_);
  return from_canonical(m_, m_.mul(v_, o.v_));
}

ZpElement inverse(ZpElement x) {
  return ZpElement::from_canonical(x.m_, x.m_.inv(x.v_));
}

}  // namespace sumprod
