#include <string>

#include "sumprod/constructions.hpp"
#include "sumprod/discrete_log.hpp"
#include "sumprod/error.hpp"

namespace sumprod {

SubgroupSpec make_subgroup(PrimeModulus p, std::uint64_t d) {
  const std::uint32_t order = p.value() - 1;
  if (d == 0 || order % d != 0) {
    throw Error(Errc::NotADivisor,
                std::to_string(d) + " does not divide p - 1 = " + std::to_string(order));
  }
  const std::uint32_t h = p.pow(primitive_root(p), order / d);
  std::vector<std::int64_t> elems;
  elems.reserve(d);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < d; ++i) {
    elems.push_back(x);
    x = p.mul(x, h);
  }
  return {p, static_cast<std::uint32_t>(d), ZpSet(p, elems)};
}

std::optional<int> corollary1_exponent(std::uint64_t subgroup_order, std::uint32_t p) {
  if (subgroup_order <= 1) return std::nullopt;
  const unsigned __int128 target = static_cast<unsigned __int128>(p) * p;
  // |G|^{2n-1} > p^2; |G|^3 is the first candidate (n = 2).
  unsigned __int128 acc = static_cast<unsigned __int128>(subgroup_order) * subgroup_order * subgroup_order;
  int n = 2;
  while (acc <= target) {
    acc *= static_cast<unsigned __int128>(subgroup_order) * subgroup_order;
    ++n;
  }
  return n;
}

CoverCheck corollary1_check(const SubgroupSpec& g, const WitnessOptions& opts) {
  auto n = corollary1_exponent(g.elements.size(), g.p.value());
  if (!n) {
    throw Error(Errc::HypothesisViolated,
                "the trivial subgroup never satisfies |G| > p^{1/(n-1/2)}");
  }
  auto w = theorem1_construct(g.elements, *n, 0.5, opts);
  return {w.cover_order, w.cover_verified, std::move(w)};
}

}  // namespace sumprod
