#include "sumprod/zp_set.hpp"

#include <string>

#include "sumprod/error.hpp"

namespace sumprod {

namespace {

void clear_tail(std::vector<ZpSet::Word>& words, std::uint32_t bits) {
  if (auto r = bits % ZpSet::kWordBits; r != 0 && !words.empty()) {
    words.back() &= (ZpSet::Word{1} << r) - 1;
  }
}

}  // namespace

ZpSet::ZpSet(PrimeModulus m) : m_(m), words_(word_count(m.value()), 0) {}

ZpSet::ZpSet(PrimeModulus m, std::vector<Word> words, bool) : m_(m), words_(std::move(words)) {
  words_.resize(word_count(m.value()), 0);
  clear_tail(words_, m.value());
  recount();
}

ZpSet::ZpSet(PrimeModulus m, std::initializer_list<std::int64_t> elems)
    : ZpSet(m, std::span<const std::int64_t>(elems.begin(), elems.size())) {}

ZpSet::ZpSet(PrimeModulus m, std::span<const std::int64_t> elems) : ZpSet(m) {
  for (auto e : elems) {
    auto x = m.reduce(e);
    words_[x / kWordBits] |= Word{1} << (x % kWordBits);
  }
  recount();
}

ZpSet ZpSet::full(PrimeModulus m) {
  return ZpSet(m, std::vector<Word>(word_count(m.value()), ~Word{0}), true);
}

ZpSet ZpSet::interval(PrimeModulus m, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) return ZpSet(m);
  if (hi - lo + 1 >= static_cast<std::int64_t>(m.value())) return full(m);
  std::vector<Word> words(word_count(m.value()), 0);
  std::uint32_t x = m.reduce(lo);
  for (std::int64_t i = lo; i <= hi; ++i) {
    words[x / kWordBits] |= Word{1} << (x % kWordBits);
    if (++x == m.value()) x = 0;
  }
  return ZpSet(m, std::move(words), true);
}

ZpSet ZpSet::from_words(PrimeModulus m, std::vector<Word> words) {
  return ZpSet(m, std::move(words), true);
}

ZpSet ZpSet::from_mask(PrimeModulus m, std::uint64_t mask) {
  if (m.value() > kWordBits) {
    throw Error(Errc::InvalidArgument, "from_mask needs p <= 64");
  }
  return ZpSet(m, std::vector<Word>{mask}, true);
}

std::vector<std::uint32_t> ZpSet::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(size_);
  for_each([&](std::uint32_t x) { out.push_back(x); });
  return out;
}

void ZpSet::recount() noexcept {
  std::uint32_t n = 0;
  for (auto w : words_) n += static_cast<std::uint32_t>(std::popcount(w));
  size_ = n;
}

void require_same_modulus(const ZpSet& a, PrimeModulus m) {
  if (a.modulus() != m) {
    throw Error(Errc::ModulusMismatch, "sets over Z_" + std::to_string(a.modulus().value()) +
                                           " and Z_" + std::to_string(m.value()));
  }
}

void require_same_modulus(const ZpSet& a, const ZpSet& b) { require_same_modulus(a, b.modulus()); }

}  // namespace sumprod
