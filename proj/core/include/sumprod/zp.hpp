#pragma once

/**
 * @file zp.hpp
 * @brief Arithmetic in Z_p for an odd prime p below 2^31.
 *
 * Residues are always kept in the canonical range [0, p-1], so two
 * representations of the same residue compare equal bitwise.
 */

#include <compare>
#include <cstdint>

namespace sumprod {

/// Largest modulus accepted (exclusive).  Products of two residues fit in
/// 62 bits, and deterministic Miller-Rabin bases are known for this range.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

/// Deterministic primality test, exact for every n < 2^64.
bool is_prime(std::uint64_t n) noexcept;

class PrimeModulus {
 public:
  std::uint32_t value() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;  // a, b < 2^31
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const noexcept;
  /// Inverse of a nonzero residue via the extended Euclidean algorithm.
  /// Throws Error(ZeroInverse) for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  friend PrimeModulus make_modulus(std::uint64_t n);
  explicit PrimeModulus(std::uint32_t p) noexcept : p_(p) {}

  std::uint32_t p_;
};

/// Validates n as an odd prime.  Throws Error with NotPrime, EvenPrime or
/// ModulusOutOfRange.
PrimeModulus make_modulus(std::uint64_t n);

class ZpElement {
 public:
  ZpElement(PrimeModulus m, std::int64_t v) noexcept : m_(m), v_(m.reduce(v)) {}

  std::uint32_t value() const noexcept { return v_; }
  PrimeModulus modulus() const noexcept { return m_; }
  bool is_zero() const noexcept { return v_ == 0; }

  ZpElement operator+(ZpElement o) const;
  ZpElement operator-(ZpElement o) const;
  ZpElement operator*(ZpElement o) const;
  ZpElement operator-() const noexcept { return from_canonical(m_, m_.neg(v_)); }

  friend bool operator==(const ZpElement&, const ZpElement&) = default;

 private:
  static ZpElement from_canonical(PrimeModulus m, std::uint32_t v) noexcept {
    ZpElement e(m, 0);
    e.v_ = v;
    return e;
  }
  friend ZpElement inverse(ZpElement x);

  PrimeModulus m_;
  std::uint32_t v_;
};

/// Throws Error(ZeroInverse) for x == 0.
ZpElement inverse(ZpElement x);

}  // namespace sumprod
