#include "sumprod/set_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "sumprod/discrete_log.hpp"
#include "sumprod/error.hpp"
#include "sumprod/ntt.hpp"

namespace sumprod {

namespace {

using Word = ZpSet::Word;
constexpr unsigned kBits = ZpSet::kWordBits;

void set_bit(std::span<Word> w, std::size_t i) { w[i / kBits] |= Word{1} << (i % kBits); }

template <typename F>
void for_each_bit(std::span<const Word> w, std::size_t n, F&& f) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word bits = w[i];
    while (bits) {
      std::size_t b = i * kBits + static_cast<std::size_t>(std::countr_zero(bits));
      if (b >= n) return;
      f(b);
      bits &= bits - 1;
    }
  }
}

// Cyclic sumset of two bit vectors of length n over Z_n.  For each member s
// of `shifts`, ORs in `base` rotated by s.  The rotation reads a length-n
// window out of base concatenated with itself.
std::vector<Word> cyclic_sumset(std::span<const Word> shifts, std::span<const Word> base,
                                std::size_t n) {
  const std::size_t words = (n + kBits - 1) / kBits;
  std::vector<Word> out(words, 0);
  std::vector<Word> doubled((2 * n + kBits - 1) / kBits + 2, 0);
  for_each_bit(base, n, [&](std::size_t i) {
    set_bit(doubled, i);
    set_bit(doubled, i + n);
  });

  const Word tail_mask = (n % kBits) ? (Word{1} << (n % kBits)) - 1 : ~Word{0};
  auto saturated = [&] {
    for (std::size_t w = 0; w + 1 < words; ++w) {
      if (out[w] != ~Word{0}) return false;
    }
    return (out[words - 1] & tail_mask) == tail_mask;
  };

  std::size_t done = 0;
  bool full = false;
  for_each_bit(shifts, n, [&](std::size_t s) {
    if (full) return;
    // rotated[j] = base[(j - s) mod n] = doubled[j + n - s]
    const std::size_t start = n - s;
    const std::size_t q = start / kBits;
    const unsigned r = static_cast<unsigned>(start % kBits);
    if (r == 0) {
      for (std::size_t w = 0; w < words; ++w) out[w] |= doubled[q + w];
    } else {
      for (std::size_t w = 0; w < words; ++w) {
        out[w] |= (doubled[q + w] >> r) | (doubled[q + w + 1] << (kBits - r));
      }
    }
    if (++done % 32 == 0) full = saturated();
  });
  if (n % kBits) out[words - 1] &= tail_mask;
  return out;
}

std::vector<Word> cyclic_sumset_dense(std::span<const Word> a, std::size_t a_size,
                                      std::span<const Word> b, std::size_t b_size,
                                      std::size_t n) {
  // Shift by the members of the smaller operand.
  return a_size <= b_size ? cyclic_sumset(a, b, n) : cyclic_sumset(b, a, n);
}

// Support of the cyclic convolution of two indicator vectors over Z_n.  Counts
// never exceed n, so the 32-bit field is exact whenever 2n - 1 fits its
// longest transform.
template <typename C, typename Conv>
std::vector<Word> ntt_support(std::span<const Word> a, std::span<const Word> b, std::size_t n,
                              Conv conv) {
  std::vector<C> fa(n, 0);
  for_each_bit(a, n, [&](std::size_t i) { fa[i] = 1; });
  std::vector<C> counts;
  if (std::equal(a.begin(), a.end(), b.begin(), b.end())) {
    counts = conv(fa, fa);
  } else {
    std::vector<C> fb(n, 0);
    for_each_bit(b, n, [&](std::size_t i) { fb[i] = 1; });
    counts = conv(fa, fb);
  }
  std::vector<Word> out((n + kBits - 1) / kBits, 0);
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] != 0) set_bit(out, j % n);
  }
  return out;
}

std::vector<Word> cyclic_sumset_ntt(std::span<const Word> a, std::span<const Word> b,
                                    std::size_t n) {
  if (2 * n - 1 <= (std::size_t{1} << ntt::kMaxLogLength31)) {
    return ntt_support<std::uint32_t>(a, b, n, [](const auto& x, const auto& y) {
      return ntt::convolve31(x, y);
    });
  }
  return ntt_support<std::uint64_t>(a, b, n, [](const auto& x, const auto& y) {
    return ntt::convolve(x, y);
  });
}

// Nonzero members of a set mapped to their discrete logs, as a bit vector over
// Z_{p-1}.
std::vector<Word> to_log_domain(const ZpSet& s, const DiscreteLogTable& t) {
  const std::size_t n = s.modulus().value() - 1;
  std::vector<Word> out((n + kBits - 1) / kBits, 0);
  s.for_each([&](std::uint32_t x) {
    if (x != 0) set_bit(out, t.log(x));
  });
  return out;
}

}  // namespace

std::string_view to_string(SumsetBackend b) noexcept {
  switch (b) {
    case SumsetBackend::DenseShift: return "dense";
    case SumsetBackend::NttConvolution: return "ntt";
  }
  return "unknown";
}

ZpSet sumset(const ZpSet& x, const ZpSet& y, SumsetBackend backend) {
  require_same_modulus(x, y);
  const auto m = x.modulus();
  if (x.empty() || y.empty()) return ZpSet(m);
  const std::size_t n = m.value();
  if (backend == SumsetBackend::NttConvolution) {
    return ZpSet::from_words(m, cyclic_sumset_ntt(x.words(), y.words(), n));
  }
  return ZpSet::from_words(m, cyclic_sumset_dense(x.words(), x.size(), y.words(), y.size(), n));
}

ZpSet negate(const ZpSet& x) {
  const auto m = x.modulus();
  std::vector<Word> out(ZpSet::word_count(m.value()), 0);
  x.for_each([&](std::uint32_t v) { set_bit(out, m.neg(v)); });
  return ZpSet::from_words(m, std::move(out));
}

ZpSet difference(const ZpSet& x, const ZpSet& y, SumsetBackend backend) {
  require_same_modulus(x, y);
  return sumset(x, negate(y), backend);
}

ZpSet dilate(ZpElement lambda, const ZpSet& a) {
  require_same_modulus(a, lambda.modulus());
  const auto m = a.modulus();
  std::vector<Word> out(ZpSet::word_count(m.value()), 0);
  const auto l = lambda.value();
  a.for_each([&](std::uint32_t v) { set_bit(out, m.mul(l, v)); });
  return ZpSet::from_words(m, std::move(out));
}

ZpSet productset(const ZpSet& x, const ZpSet& y) {
  require_same_modulus(x, y);
  const auto m = x.modulus();
  if (x.empty() || y.empty()) return ZpSet(m);
  const std::uint32_t p = m.value();

  std::vector<Word> out(ZpSet::word_count(p), 0);
  if (x.contains(0) || y.contains(0)) set_bit(out, 0);

  const std::uint64_t nx = x.size() - (x.contains(0) ? 1 : 0);
  const std::uint64_t ny = y.size() - (y.contains(0) ? 1 : 0);
  if (nx == 0 || ny == 0) return ZpSet::from_words(m, std::move(out));

  // Multiplication in Z_p^* is addition of discrete logs in Z_{p-1}; that
  // turns the product set into a cyclic sumset when the sets are large.
  const std::uint64_t direct_cost = nx * ny;
  const std::uint64_t log_cost = std::min(nx, ny) * (p / kBits + 1) + 2ull * p;
  if (p <= DiscreteLogTable::kMaxTabulated && log_cost < direct_cost) {
    auto table = DiscreteLogTable::get(m);
    auto lx = to_log_domain(x, *table);
    auto ly = to_log_domain(y, *table);
    auto sum = cyclic_sumset_dense(lx, nx, ly, ny, p - 1);
    for_each_bit(sum, p - 1, [&](std::size_t i) {
      set_bit(out, table->exp(static_cast<std::uint32_t>(i)));
    });
  } else {
    x.for_each([&](std::uint32_t a) {
      if (a == 0) return;
      y.for_each([&](std::uint32_t b) {
        if (b != 0) set_bit(out, m.mul(a, b));
      });
    });
  }
  return ZpSet::from_words(m, std::move(out));
}

ZpSet quotientset(const ZpSet& x, const ZpSet& y) {
  require_same_modulus(x, y);
  const auto m = x.modulus();
  if (x.empty() || y.empty()) return ZpSet(m);
  if (!y.has_nonzero()) throw Error(Errc::EmptyDenominator, "denominator set is {0}");
  std::vector<Word> inv(ZpSet::word_count(m.value()), 0);
  if (m.value() <= DiscreteLogTable::kMaxTabulated && y.size() > 64) {
    auto table = DiscreteLogTable::get(m);
    const std::uint32_t order = m.value() - 1;
    y.for_each([&](std::uint32_t v) {
      if (v == 0) return;
      std::uint32_t l = table->log(v);
      set_bit(inv, table->exp(l == 0 ? 0 : order - l));
    });
  } else {
    y.for_each([&](std::uint32_t v) {
      if (v != 0) set_bit(inv, m.inv(v));
    });
  }
  return productset(x, ZpSet::from_words(m, std::move(inv)));
}

ZpSet iterated_sum(std::uint64_t k, const ZpSet& x, SumsetBackend backend) {
  if (k == 0) throw Error(Errc::InvalidArgument, "iterated_sum needs k >= 1");
  if (x.empty()) return x;
  // (a+b)X = aX + bX: accumulate the binary digits of k.
  std::optional<ZpSet> acc;
  ZpSet power = x;  // 2^j X
  while (true) {
    if (k & 1) {
      acc = acc ? sumset(*acc, power, backend) : power;
      if (acc->is_full()) return *acc;
    }
    k >>= 1;
    if (k == 0) break;
    // Some later digit adds a multiple of a full set.
    if (power.is_full()) return power;
    power = sumset(power, power, backend);
  }
  return *acc;
}

ZpSet product_power(const ZpSet& x, std::uint64_t k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "product_power needs k >= 1");
  if (x.empty()) return x;
  std::optional<ZpSet> acc;
  ZpSet power = x;
  while (true) {
    if (k & 1) acc = acc ? productset(*acc, power) : power;
    k >>= 1;
    if (k == 0) break;
    power = productset(power, power);
  }
  return *acc;
}

ZpSet q_set(const ZpSet& x, const ZpSet& y) {
  require_same_modulus(x, y);
  if (y.size() <= 1) {
    throw Error(Errc::DegenerateY, "Q[X,Y] needs |Y| > 1, got " + std::to_string(y.size()));
  }
  return quotientset(difference(x, x), difference(y, y));
}

double exp_sum_magnitude(const ZpSet& x, const ZpSet& y, ZpElement a) {
  require_same_modulus(x, y);
  require_same_modulus(x, a.modulus());
  if (a.is_zero()) throw Error(Errc::ZeroCoefficient, "exponential sum needs a != 0");
  const auto m = x.modulus();
  if (x.empty() || y.empty()) return 0.0;

  const std::uint32_t p = m.value();
  std::vector<double> cos_t(p), sin_t(p);
  for (std::uint32_t j = 0; j < p; ++j) {
    double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p);
    cos_t[j] = std::cos(theta);
    sin_t[j] = std::sin(theta);
  }
  const auto ys = y.elements();
  double re = 0.0, im = 0.0;
  x.for_each([&](std::uint32_t xv) {
    const std::uint32_t t = m.mul(a.value(), xv);
    for (auto yv : ys) {
      const std::uint32_t j = m.mul(t, yv);
      re += cos_t[j];
      im += sin_t[j];
    }
  });
  return std::hypot(re, im);
}

}  // namespace sumprod
