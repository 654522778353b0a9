#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sumprod/zp.hpp"

namespace sumprod {

/// Distinct prime factors of n in increasing order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Smallest primitive root of Z_p^*, found by trial from 2 with order checks
/// against the prime factors of p-1.  Results are memoized per modulus; the
/// cache is safe for concurrent callers.
std::uint32_t primitive_root(PrimeModulus m);

/// Exponent/log tables for Z_p^* relative to primitive_root(m).
/// exp(i) = g^i for i in [0, p-2]; log(x) for x in [1, p-1].
class DiscreteLogTable {
 public:
  explicit DiscreteLogTable(PrimeModulus m);

  /// Shared cached table.  Tables are only built for p <= kMaxTabulated.
  static std::shared_ptr<const DiscreteLogTable> get(PrimeModulus m);
  static constexpr std::uint32_t kMaxTabulated = std::uint32_t{1} << 24;

  PrimeModulus modulus() const noexcept { return m_; }
  std::uint32_t generator() const noexcept { return g_; }
  std::uint32_t exp(std::uint32_t i) const noexcept { return exp_[i]; }
  std::uint32_t log(std::uint32_t x) const noexcept { return log_[x]; }

 private:
  PrimeModulus m_;
  std::uint32_t g_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace sumprod
