#include "exhaustive_space.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "sumprod/constructions.hpp"
#include "sumprod/error.hpp"
#include "sumprod/harness.hpp"

namespace sumprod::harness {

namespace {

// ---------------------------------------------------------------------------
// Exhaustive enumeration

using detail::ScalarSlot;
using detail::SetSlot;
using detail::Shape;

std::vector<Shape> exhaustive_shapes(LemmaId id, PrimeModulus pm, const Caps& caps) {
  const std::int64_t p = pm.value();
  const std::int64_t kmax = caps.max_power;
  auto s = [](std::initializer_list<SetSlot> sets, std::initializer_list<ScalarSlot> scalars = {}) {
    return Shape{sets, scalars};
  };
  switch (id) {
    case LemmaId::CD: {
      std::vector<Shape> out;
      for (int n = 1; n <= caps.max_summands; ++n) {
        Shape sh;
        for (int i = 1; i <= n; ++i) sh.sets.push_back({"X" + std::to_string(i)});
        out.push_back(std::move(sh));
      }
      return out;
    }
    case LemmaId::P1:
    case LemmaId::L4:
    case LemmaId::C3: return {s({{"X"}, {"Y"}}, {{"a", 0, p - 1}})};
    case LemmaId::L1:
    case LemmaId::L2: return {s({{"A"}, {"B"}})};
    case LemmaId::L3:
    case LemmaId::L6: return {s({{"X"}, {"Y"}}, {{"xi", 0, p - 1}})};
    case LemmaId::L5: return {s({{"X"}, {"Y"}, {"G", true}})};
    case LemmaId::L7: return {s({{"X"}, {"Y"}, {"Z"}})};
    case LemmaId::C4: return {s({{"Y"}})};
    case LemmaId::C5: return {s({{"Y"}}, {{"K", 1, caps.max_multiplier}, {"k", 1, kmax}})};
    case LemmaId::C6: return {s({{"X"}, {"Y"}})};
    case LemmaId::C7:
    case LemmaId::L8:
    case LemmaId::L9: return {s({{id == LemmaId::C7 ? "X" : "A"}}, {{"k", 1, kmax}})};
    case LemmaId::L10: return {s({{"A"}}, {{"k", 2, kmax}})};
    case LemmaId::T1:
      return {s({{"A"}}, {{"n", 2, kmax}, {"eps_num", 1, 4 * kmax - 1}, {"eps_den", 4, 4}})};
  }
  return {};
}

std::uint32_t size_cap(PrimeModulus p, const Caps& caps) {
  return caps.max_set_size == 0 ? p.value() : std::min(caps.max_set_size, p.value());
}

// Nonempty subsets (as bit masks) of Z_p, or of Z_p^*, of size <= cap,
// ordered by size and then by mask.  Empty when the list would exceed limit.
std::vector<std::uint64_t> subset_masks(std::uint32_t p, std::uint32_t cap, bool nonzero_only,
                                        std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  const std::uint32_t universe = nonzero_only ? p - 1 : p;
  for (std::uint32_t size = 1; size <= std::min(cap, universe); ++size) {
    std::uint64_t m = (size == 64) ? ~0ull : ((1ull << size) - 1);
    while (true) {
      out.push_back(nonzero_only ? (m << 1) : m);
      if (out.size() > limit) return {};
      // Gosper's hack: next mask with the same popcount.
      std::uint64_t c = m & (~m + 1);
      std::uint64_t r = m + c;
      if (r == 0 || r >= (universe == 64 ? 0 : (1ull << universe))) break;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return out;
}

std::uint64_t binomial_sum(std::uint32_t n, std::uint32_t cap) {
  // sum_{s=1}^{cap} C(n, s), saturating
  long double total = 0, term = 1;
  for (std::uint32_t s = 1; s <= std::min(cap, n); ++s) {
    term = term * (n - s + 1) / s;
    total += term;
  }
  return total > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(total + 0.5L);
}

struct Enumeration {
  std::vector<Shape> shapes;
  std::vector<std::vector<std::uint64_t>> masks_all;  // [0] all, [1] nonzero-only
  std::vector<std::uint64_t> shape_sizes;
};

std::optional<std::uint64_t> shape_size(const Shape& sh, std::uint64_t n_all, std::uint64_t n_nz) {
  unsigned __int128 total = 1;
  for (const auto& s : sh.sets) {
    total *= s.nonzero_only ? n_nz : n_all;
    if (total > UINT64_MAX) return std::nullopt;
  }
  for (const auto& s : sh.scalars) {
    total *= static_cast<std::uint64_t>(std::max<std::int64_t>(0, s.hi - s.lo + 1));
    if (total > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total);
}

std::optional<std::uint64_t> space_size(const std::vector<Shape>& shapes, std::uint32_t p,
                                        std::uint32_t cap) {
  const std::uint64_t n_all = binomial_sum(p, cap);
  const std::uint64_t n_nz = binomial_sum(p - 1, cap);
  unsigned __int128 total = 0;
  for (const auto& sh : shapes) {
    auto sz = shape_size(sh, n_all, n_nz);
    if (!sz) return std::nullopt;
    total += *sz;
    if (total > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total);
}

BoundInstance decode(const Shape& sh, PrimeModulus p, const std::vector<std::uint64_t>& all,
                     const std::vector<std::uint64_t>& nz, std::uint64_t index) {
  BoundInstance inst(p);
  // Mixed radix, last slot varies fastest.
  std::vector<std::uint64_t> digits(sh.sets.size() + sh.scalars.size());
  for (std::size_t i = digits.size(); i-- > 0;) {
    std::uint64_t radix = i < sh.sets.size()
                              ? (sh.sets[i].nonzero_only ? nz.size() : all.size())
                              : static_cast<std::uint64_t>(sh.scalars[i - sh.sets.size()].hi -
                                                           sh.scalars[i - sh.sets.size()].lo + 1);
    digits[i] = index % radix;
    index /= radix;
  }
  for (std::size_t i = 0; i < sh.sets.size(); ++i) {
    const auto& masks = sh.sets[i].nonzero_only ? nz : all;
    inst.with(sh.sets[i].name, ZpSet::from_mask(p, masks[digits[i]]));
  }
  for (std::size_t i = 0; i < sh.scalars.size(); ++i) {
    const auto& s = sh.scalars[i];
    inst.with(s.name, s.lo + static_cast<std::int64_t>(digits[sh.sets.size() + i]));
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Random instances

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// mt19937_64 output is fully specified by the standard; the bounded draws
// below avoid std::uniform_int_distribution, whose algorithm is not.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t index)
      : engine_(splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ull))) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == UINT64_MAX) return engine_();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + r % range;
  }

 private:
  std::mt19937_64 engine_;
};

// Uniform `size`-subset of [lo, p-1] (Floyd's algorithm).
ZpSet random_subset(PrimeModulus pm, std::uint32_t size, Rng& rng, bool nonzero_only = false) {
  const std::uint32_t lo = nonzero_only ? 1 : 0;
  const std::uint32_t n = pm.value() - lo;
  size = std::min(size, n);
  std::vector<ZpSet::Word> words(ZpSet::word_count(pm.value()), 0);
  auto test = [&](std::uint32_t x) { return (words[x / 64] >> (x % 64)) & 1u; };
  auto set = [&](std::uint32_t x) { words[x / 64] |= ZpSet::Word{1} << (x % 64); };
  for (std::uint32_t j = n - size; j < n; ++j) {
    auto t = static_cast<std::uint32_t>(rng.uniform(0, j));
    set(lo + (test(lo + t) ? j : t));
  }
  return ZpSet::from_words(pm, std::move(words));
}

ZpSet random_sized(PrimeModulus pm, std::uint32_t min_size, std::uint32_t max_size, Rng& rng,
                   bool nonzero_only = false) {
  max_size = std::max(min_size, max_size);
  auto size = static_cast<std::uint32_t>(rng.uniform(min_size, max_size));
  return random_subset(pm, size, rng, nonzero_only);
}

std::uint32_t isqrt_ceil(std::uint32_t v) {
  auto r = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(v)));
  while (std::uint64_t{r} * r < v) ++r;
  return r;
}

std::uint32_t icbrt_ceil(std::uint32_t v) {
  auto r = static_cast<std::uint32_t>(std::cbrt(static_cast<double>(v)));
  while (std::uint64_t{r} * r * r < v) ++r;
  return r;
}

// Largest s with s^e <= bound (e >= 1).
std::uint32_t iroot_floor(std::uint64_t bound, int e) {
  std::uint32_t lo = 0, hi = 1u << 31;
  while (lo < hi) {
    std::uint32_t mid = lo + (hi - lo + 1) / 2;
    unsigned __int128 acc = 1;
    bool over = false;
    for (int i = 0; i < e && !over; ++i) {
      acc *= mid;
      over = acc > bound;
    }
    if (over) hi = mid - 1; else lo = mid;
  }
  return lo;
}

BoundInstance make_random(LemmaId id, PrimeModulus pm, const Caps& caps, Rng& rng) {
  const std::uint32_t p = pm.value();
  // Caller-supplied cap wins; otherwise the lemma's default.
  auto cap = [&](std::uint32_t dflt) {
    return std::min(caps.max_set_size == 0 ? dflt : caps.max_set_size, p);
  };
  auto scalar = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng.uniform(0, static_cast<std::uint64_t>(hi - lo)));
  };
  const int kmax = std::max(1, caps.max_power);
  BoundInstance in(pm);
  switch (id) {
    case LemmaId::CD: {
      const int n = static_cast<int>(scalar(1, std::max(1, caps.max_summands)));
      for (int i = 1; i <= n; ++i) in.with("X" + std::to_string(i), random_sized(pm, 1, cap(p), rng));
      break;
    }
    case LemmaId::P1:
      in.with("X", random_sized(pm, 1, cap(p), rng)).with("Y", random_sized(pm, 1, cap(p), rng));
      in.with("a", scalar(1, p - 1));
      break;
    case LemmaId::L1:
    case LemmaId::L2:
      in.with("A", random_sized(pm, 1, cap(p), rng)).with("B", random_sized(pm, 1, cap(p), rng));
      break;
    case LemmaId::L3: {
      const auto c = cap(isqrt_ceil(p) + 1);
      in.with("X", random_sized(pm, 1, c, rng)).with("Y", random_sized(pm, 2, c, rng));
      in.with("xi", scalar(0, p - 1));
      break;
    }
    case LemmaId::L4: {
      // Q[X,Y] = Z_p whenever |X||Y| > p, so keep the sets small.
      const auto c = cap(icbrt_ceil(p) + 1);
      in.with("X", random_sized(pm, 1, c, rng)).with("Y", random_sized(pm, 2, c, rng));
      in.with("a", scalar(1, p - 1));
      break;
    }
    case LemmaId::L5:
      in.with("X", random_sized(pm, 1, cap(p), rng)).with("Y", random_sized(pm, 1, cap(p), rng));
      in.with("G", random_sized(pm, 1, cap(p - 1), rng, true));
      break;
    case LemmaId::L6: {
      auto x = random_sized(pm, 1, cap(p), rng);
      auto y = random_sized(pm, 2, cap(p), rng);
      // Draw xi from Q[X,Y] itself so the hypothesis holds.
      const auto q = q_set(x, y).elements();
      in.with("xi", static_cast<std::int64_t>(q[rng.uniform(0, q.size() - 1)]));
      in.with("X", std::move(x)).with("Y", std::move(y));
      break;
    }
    case LemmaId::L7:
      in.with("X", random_sized(pm, 1, cap(p), rng))
          .with("Y", random_sized(pm, 1, cap(p), rng))
          .with("Z", random_sized(pm, 1, cap(p), rng));
      break;
    case LemmaId::C3:
      in.with("X", random_sized(pm, 1, cap(p), rng)).with("Y", random_sized(pm, 2, cap(p), rng));
      in.with("a", scalar(1, p - 1));
      break;
    case LemmaId::C4:
      in.with("Y", random_sized(pm, 2, cap(p), rng));
      break;
    case LemmaId::C5:
      in.with("Y", random_sized(pm, 2, cap(p), rng));
      in.with("K", scalar(1, std::max(1, caps.max_multiplier))).with("k", scalar(1, kmax));
      break;
    case LemmaId::C6:
      in.with("X", random_sized(pm, 1, cap(p), rng)).with("Y", random_sized(pm, 1, cap(p), rng));
      break;
    case LemmaId::C7:
      in.with("X", random_sized(pm, 1, cap(p), rng)).with("k", scalar(1, kmax));
      break;
    case LemmaId::L8:
    case LemmaId::L9:
      in.with("A", random_sized(pm, 5, cap(p), rng)).with("k", scalar(1, kmax));
      break;
    case LemmaId::L10: {
      const auto k = scalar(2, std::max(2, kmax));
      // Largest |A| with 2|A|^{k-1} <= p - 1.
      const auto top = iroot_floor((p - 1) / 2, static_cast<int>(k - 1));
      in.with("A", random_sized(pm, 5, cap(std::max<std::uint32_t>(5, top)), rng)).with("k", k);
      break;
    }
    case LemmaId::T1: {
      const auto n = scalar(2, std::max(2, kmax));
      static constexpr std::int64_t kEpsQuarters[] = {1, 2, 4};
      const auto eps_num = kEpsQuarters[rng.uniform(0, 2)];
      const double eps = static_cast<double>(eps_num) / 4.0;
      std::uint32_t min_size = 2;
      while (min_size < p && !growth_hypothesis_holds(min_size, p, static_cast<int>(n), eps)) ++min_size;
      const auto max_size = cap(std::min<std::uint32_t>(p, 4 * min_size + 8));
      const auto size = static_cast<std::uint32_t>(rng.uniform(min_size, std::max(min_size, max_size)));
      if (rng.uniform(0, 1) == 0) {
        in.with("A", random_subset(pm, size, rng));
      } else {
        // Dilated intervals keep 4A small and reach the later cases.
        const auto start = static_cast<std::int64_t>(rng.uniform(0, p - 1));
        ZpElement lambda(pm, static_cast<std::int64_t>(rng.uniform(1, p - 1)));
        in.with("A", dilate(lambda, ZpSet::interval(pm, start, start + size - 1)));
      }
      in.with("n", n).with("eps_num", eps_num).with("eps_den", 4);
      break;
    }
  }
  return in;
}

}  // namespace

std::optional<std::uint64_t> exhaustive_space_size(LemmaId id, PrimeModulus p, const Caps& caps) {
  return space_size(exhaustive_shapes(id, p, caps), p.value(), size_cap(p, caps));
}

detail::ExhaustiveSpace::ExhaustiveSpace(LemmaId id, PrimeModulus p, const Caps& caps) : p_(p) {
  shapes_ = exhaustive_shapes(id, p, caps);
  auto total = space_size(shapes_, p.value(), size_cap(p, caps));
  if (!total || *total > caps.budget) {
    throw Error(Errc::BudgetExceeded, "exhaustive space for p = " + std::to_string(p.value()) +
                                          " exceeds budget " + std::to_string(caps.budget));
  }
  if (p.value() > 64) throw Error(Errc::BudgetExceeded, "exhaustive mode needs p <= 64");
  total_ = *total;
  all_ = subset_masks(p.value(), size_cap(p, caps), false, caps.budget);
  nonzero_ = subset_masks(p.value(), size_cap(p, caps), true, caps.budget);
  for (const auto& sh : shapes_) sizes_.push_back(*shape_size(sh, all_.size(), nonzero_.size()));
}

BoundInstance detail::ExhaustiveSpace::at(std::uint64_t index) const {
  for (std::size_t s = 0; s < shapes_.size(); ++s) {
    if (index < sizes_[s]) return decode(shapes_[s], p_, all_, nonzero_, index);
    index -= sizes_[s];
  }
  throw Error(Errc::InvalidArgument, "instance index out of range");
}

BoundInstance exhaustive_instance(LemmaId id, PrimeModulus p, const Caps& caps, std::uint64_t index) {
  return detail::ExhaustiveSpace(id, p, caps).at(index);
}

BoundInstance random_instance(LemmaId id, PrimeModulus p, const Caps& caps, std::uint64_t seed,
                              std::uint64_t index) {
  Rng rng(seed, index);
  return make_random(id, p, caps, rng);
}

}  // namespace sumprod::harness
