#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sumprod/zp.hpp"

namespace sumprod {

/// Immutable subset of Z_p stored as a length-p bit vector with a cached
/// cardinality.  Bits at positions >= p in the last word are always zero, so
/// equality is a plain word comparison.
class ZpSet {
 public:
  using Word = std::uint64_t;
  static constexpr unsigned kWordBits = 64;

  explicit ZpSet(PrimeModulus m);
  ZpSet(PrimeModulus m, std::initializer_list<std::int64_t> elems);
  ZpSet(PrimeModulus m, std::span<const std::int64_t> elems);

  static ZpSet full(PrimeModulus m);
  static ZpSet singleton(PrimeModulus m, std::int64_t x) { return ZpSet(m, {x}); }
  /// {lo, lo+1, ..., hi} reduced mod p; empty when hi < lo.
  static ZpSet interval(PrimeModulus m, std::int64_t lo, std::int64_t hi);
  /// Adopts a raw bit vector; trailing bits beyond p are cleared.
  static ZpSet from_words(PrimeModulus m, std::vector<Word> words);
  /// Bit i of `mask` selects residue i; requires p <= 64.
  static ZpSet from_mask(PrimeModulus m, std::uint64_t mask);

  PrimeModulus modulus() const noexcept { return m_; }
  std::uint32_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool is_full() const noexcept { return size_ == m_.value(); }
  bool contains(std::uint32_t x) const noexcept {
    return x < m_.value() && ((words_[x / kWordBits] >> (x % kWordBits)) & 1u);
  }
  /// True when the set holds at least one nonzero residue.
  bool has_nonzero() const noexcept { return size_ > (contains(0) ? 1u : 0u); }

  std::span<const Word> words() const noexcept { return words_; }
  std::vector<std::uint32_t> elements() const;

  /// Calls f(x) for every member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        unsigned b = static_cast<unsigned>(std::countr_zero(bits));
        f(static_cast<std::uint32_t>(w * kWordBits + b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const ZpSet& a, const ZpSet& b) noexcept {
    return a.m_ == b.m_ && a.size_ == b.size_ && a.words_ == b.words_;
  }

  static std::size_t word_count(std::uint32_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits;
  }

 private:
  ZpSet(PrimeModulus m, std::vector<Word> words, bool);
  void recount() noexcept;

  PrimeModulus m_;
  std::vector<Word> words_;
  std::uint32_t size_ = 0;
};

/// Throws Error(ModulusMismatch) unless both sets live in the same Z_p.
void require_same_modulus(const ZpSet& a, const ZpSet& b);
void require_same_modulus(const ZpSet& a, PrimeModulus m);

}  // namespace sumprod
