#include "sumprod/ntt.hpp"

#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <utility>

#include "sumprod/error.hpp"

namespace sumprod::ntt {

namespace {

// Goldilocks field, elements stored as plain residues.
struct Goldilocks {
  using T = std::uint64_t;
  static constexpr unsigned kMaxLog = kMaxLogLength;
  static constexpr T kEpsilon = 0xFFFFFFFFull;  // 2^64 mod q

  static T reduce128(unsigned __int128 x) noexcept {
    auto lo = static_cast<std::uint64_t>(x);
    auto hi = static_cast<std::uint64_t>(x >> 64);
    std::uint64_t hi_hi = hi >> 32;
    std::uint64_t hi_lo = hi & kEpsilon;
    // x = lo + hi_lo * 2^64 + hi_hi * 2^96, with 2^64 = eps and 2^96 = -1.
    std::uint64_t t0 = lo - hi_hi;
    t0 -= kEpsilon & (0 - static_cast<std::uint64_t>(lo < hi_hi));
    std::uint64_t t1 = hi_lo * kEpsilon;
    std::uint64_t t2 = t0 + t1;
    t2 += kEpsilon & (0 - static_cast<std::uint64_t>(t2 < t1));
    return t2 - (kModulus & (0 - static_cast<std::uint64_t>(t2 >= kModulus)));
  }
  static T add(T a, T b) noexcept {
    T s = a + b;
    s += kEpsilon & (0 - static_cast<T>(s < a));  // wrapped past 2^64
    return s - (kModulus & (0 - static_cast<T>(s >= kModulus)));
  }
  static T sub(T a, T b) noexcept { return (a - b) + (kModulus & (0 - static_cast<T>(a < b))); }
  static T mul(T a, T b) noexcept { return reduce128(static_cast<unsigned __int128>(a) * b); }
  static T pow(T b, std::uint64_t e) noexcept {
    T r = 1;
    for (; e; e >>= 1, b = mul(b, b))
      if (e & 1) r = mul(r, b);
    return r;
  }
  static T one() noexcept { return 1; }
  static T from_int(std::uint64_t x) noexcept { return x % kModulus; }
  static T to_int(T x) noexcept { return x; }
  static T root(unsigned log_len) noexcept { return pow(kGenerator, (kModulus - 1) >> log_len); }
  static T inverse(T x) noexcept { return pow(x, kModulus - 2); }
};

// q31 = 15 * 2^27 + 1 in Montgomery form with R = 2^32.
struct BabyBear {
  using T = std::uint32_t;
  static constexpr unsigned kMaxLog = kMaxLogLength31;
  static constexpr std::uint32_t kQ = kModulus31;
  static constexpr std::uint32_t kNegQInv = 2013265919u;  // -q^{-1} mod 2^32
  static constexpr std::uint32_t kR2 = 1172168163u;       // 2^64 mod q

  static T redc(std::uint64_t t) noexcept {
    const std::uint32_t m = static_cast<std::uint32_t>(t) * kNegQInv;
    const auto u = static_cast<std::uint32_t>((t + std::uint64_t{m} * kQ) >> 32);
    return u - (kQ & (0 - static_cast<std::uint32_t>(u >= kQ)));
  }
  static T add(T a, T b) noexcept {
    const T s = a + b;  // < 2^32 since q < 2^31
    return s - (kQ & (0 - static_cast<T>(s >= kQ)));
  }
  static T sub(T a, T b) noexcept { return (a - b) + (kQ & (0 - static_cast<T>(a < b))); }
  static T mul(T a, T b) noexcept { return redc(std::uint64_t{a} * b); }
  static T pow(T b, std::uint64_t e) noexcept {
    T r = one();
    for (; e; e >>= 1, b = mul(b, b))
      if (e & 1) r = mul(r, b);
    return r;
  }
  static T from_int(std::uint64_t x) noexcept { return mul(static_cast<T>(x % kQ), kR2); }
  static T to_int(T x) noexcept { return redc(x); }
  static T one() noexcept { return from_int(1); }
  static T root(unsigned log_len) noexcept { return pow(from_int(kGenerator31), (kQ - 1) >> log_len); }
  static T inverse(T x) noexcept { return pow(x, kQ - 2); }
};

// Powers w^0 .. w^{len/2 - 1} of the principal len-th root of unity and of
// its inverse, one table per log length, built on first use.
template <typename F>
struct Twiddles {
  std::vector<typename F::T> forward;
  std::vector<typename F::T> inverse;
};

template <typename F>
const Twiddles<F>& twiddles(unsigned log_len) {
  static std::mutex mu;
  static std::array<std::unique_ptr<const Twiddles<F>>, F::kMaxLog + 1> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[log_len];
  if (!slot) {
    const std::size_t half = std::size_t{1} << (log_len - 1);
    const auto w = F::root(log_len);
    const auto w_inv = F::inverse(w);
    auto t = std::make_unique<Twiddles<F>>();
    t->forward.resize(half);
    t->inverse.resize(half);
    auto f = F::one(), i = F::one();
    for (std::size_t k = 0; k < half; ++k) {
      t->forward[k] = f;
      t->inverse[k] = i;
      f = F::mul(f, w);
      i = F::mul(i, w_inv);
    }
    slot = std::move(t);
  }
  return *slot;
}

// Decimation in frequency: natural order in, bit-reversed order out.
template <typename F>
void forward_dif(std::span<typename F::T> a) {
  const std::size_t n = a.size();
  for (std::size_t len = n; len >= 2; len >>= 1) {
    const std::size_t half = len / 2;
    const auto& tw = twiddles<F>(static_cast<unsigned>(std::countr_zero(len))).forward;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const auto u = a[i + k], v = a[i + k + half];
        a[i + k] = F::add(u, v);
        a[i + k + half] = F::mul(F::sub(u, v), tw[k]);
      }
    }
  }
}

// Decimation in time without scaling: bit-reversed order in, natural out.
template <typename F>
void inverse_dit(std::span<typename F::T> a) {
  const std::size_t n = a.size();
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const auto& tw = twiddles<F>(static_cast<unsigned>(std::countr_zero(len))).inverse;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const auto u = a[i + k], v = F::mul(a[i + k + half], tw[k]);
        a[i + k] = F::add(u, v);
        a[i + k + half] = F::sub(u, v);
      }
    }
  }
}

template <typename T>
void bit_reverse(std::span<T> a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

template <typename F>
void scale_by_inverse_length(std::span<typename F::T> a) {
  const auto n_inv = F::inverse(F::from_int(a.size()));
  for (auto& x : a) x = F::mul(x, n_inv);
}

template <typename F>
std::vector<typename F::T> convolve_in(std::span<const typename F::T> a,
                                       std::span<const typename F::T> b) {
  using T = typename F::T;
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = std::bit_ceil(out_len);
  if (std::countr_zero(n) > static_cast<int>(F::kMaxLog)) {
    throw Error(Errc::InvalidArgument, "convolution too long for the transform field");
  }
  // The pointwise product is order-agnostic, so no bit reversal is needed.
  std::vector<T> fa(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = F::from_int(a[i]);
  forward_dif<F>(fa);
  if (a.data() == b.data() && a.size() == b.size()) {
    for (auto& x : fa) x = F::mul(x, x);
  } else {
    std::vector<T> fb(n, 0);
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = F::from_int(b[i]);
    forward_dif<F>(fb);
    for (std::size_t i = 0; i < n; ++i) fa[i] = F::mul(fa[i], fb[i]);
  }
  inverse_dit<F>(fa);
  scale_by_inverse_length<F>(fa);
  fa.resize(out_len);
  for (auto& x : fa) x = F::to_int(x);
  return fa;
}

}  // namespace

std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept { return Goldilocks::add(a, b); }
std::uint64_t sub(std::uint64_t a, std::uint64_t b) noexcept { return Goldilocks::sub(a, b); }
std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept { return Goldilocks::mul(a, b); }
std::uint64_t pow(std::uint64_t base, std::uint64_t exp) noexcept { return Goldilocks::pow(base, exp); }

void transform(std::span<std::uint64_t> data, bool inverse) {
  const std::size_t n = data.size();
  if (n <= 1) return;
  if (!std::has_single_bit(n) || std::countr_zero(n) > static_cast<int>(kMaxLogLength)) {
    throw Error(Errc::InvalidArgument, "transform length must be a power of two <= 2^32");
  }
  if (inverse) {
    bit_reverse(data);
    inverse_dit<Goldilocks>(data);
    scale_by_inverse_length<Goldilocks>(data);
  } else {
    forward_dif<Goldilocks>(data);
    bit_reverse(data);
  }
}

std::vector<std::uint64_t> convolve(std::span<const std::uint64_t> a,
                                    std::span<const std::uint64_t> b) {
  return convolve_in<Goldilocks>(a, b);
}

std::vector<std::uint32_t> convolve31(std::span<const std::uint32_t> a,
                                      std::span<const std::uint32_t> b) {
  return convolve_in<BabyBear>(a, b);
}

}  // namespace sumprod::ntt
