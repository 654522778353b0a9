#include "sumprod/constructions.hpp"

#include <cmath>
#include <string>

#include "sumprod/error.hpp"

namespace sumprod {

namespace {

using u128 = unsigned __int128;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  u128 r = static_cast<u128>(a) * b;
  return r > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(r);
}

}  // namespace

NkCoefficient nk(int k) {
  if (k < 1 || k > kMaxNkIndex) {
    throw Error(Errc::InvalidArgument, "N_k defined here for 1 <= k <= 31, got " + std::to_string(k));
  }
  if (k == 1) return {1, 1};
  std::uint64_t v = 3;
  for (int i = 2; i < k; ++i) v = 4 * v + 1;
  return {k, v};
}

ZpSet a_k_chain(const ZpSet& a, int k, SumsetBackend backend) {
  if (a.size() < 5) {
    throw Error(Errc::RestrictionViolated, "chain needs |A| >= 5, got " + std::to_string(a.size()));
  }
  if (k < 2) throw Error(Errc::InvalidArgument, "chain index must be >= 2");
  auto s = iterated_sum(nk(k).value, product_power(a, static_cast<std::uint64_t>(k)), backend);
  return difference(s, s, backend);
}

ZpElement find_xi_lemma4(const ZpSet& x, const ZpSet& y, ZpElement a) {
  require_same_modulus(x, y);
  require_same_modulus(x, a.modulus());
  if (a.is_zero()) throw Error(Errc::ZeroCoefficient, "shift a must be nonzero");
  const auto q = q_set(x, y);
  if (q.empty()) throw Error(Errc::QIsEmpty, "Q[X,Y] is empty");
  if (q.is_full()) throw Error(Errc::QIsFull, "Q[X,Y] = Z_p");
  const auto m = x.modulus();
  std::optional<std::uint32_t> found;
  q.for_each([&](std::uint32_t xi) {
    if (!found && !q.contains(m.add(xi, a.value()))) found = xi;
  });
  // Q is a proper nonempty subset, so some member steps outside under +a.
  return ZpElement(m, *found);
}

bool growth_hypothesis_holds(std::uint64_t set_size, std::uint32_t p, int n, double eps) {
  if (set_size <= 1) return false;
  const long double lhs = (static_cast<long double>(n) - eps) * std::log(static_cast<long double>(set_size));
  return lhs > std::log(static_cast<long double>(p));
}

int floor_log(std::uint64_t base, std::uint64_t bound) {
  if (base < 2) throw Error(Errc::InvalidArgument, "floor_log needs base >= 2");
  int m = 0;
  u128 acc = 1;
  while (acc * base <= bound) {
    acc *= base;
    ++m;
  }
  return m;
}

int case3_multiplier(double eps) {
  return static_cast<int>(std::floor(std::log2(1.0 / eps))) + 3;
}

std::uint64_t case_cover_order(ProofCase c, int n, std::optional<int> k) {
  switch (c) {
    case ProofCase::Case1: {
      std::uint64_t v = 1;
      for (int i = 0; i < n; ++i) v = saturating_mul(v, 4);
      return v;
    }
    case ProofCase::Case2:
      return 4;
    case ProofCase::Case3:
      if (!k || *k < 1) throw Error(Errc::InvalidArgument, "Case 3 needs k >= 1");
      return saturating_mul(64ull * static_cast<std::uint64_t>(*k), nk(n - 1).value);
    case ProofCase::Case4:
      return saturating_mul(192, nk(n - 1).value);
  }
  return 0;
}

Witness theorem1_construct(const ZpSet& a, int n, double eps, const WitnessOptions& opts) {
  if (n < 2) throw Error(Errc::InvalidArgument, "n must exceed 1, got " + std::to_string(n));
  if (!(eps > 0.0) || !(eps < static_cast<double>(n))) {
    throw Error(Errc::EpsOutOfRange, "eps must lie in (0, n)");
  }
  const auto m = a.modulus();
  const std::uint32_t p = m.value();
  if (!growth_hypothesis_holds(a.size(), p, n, eps)) {
    throw Error(Errc::HypothesisViolated,
                "|A| = " + std::to_string(a.size()) + " does not exceed p^{1/(n-eps)}");
  }

  Witness w{m, a, n, eps, ProofCase::Case1, std::nullopt, std::nullopt, 0, false, {}};
  w.intermediate_sizes.push_back({"|A|", a.size()});
  const auto& backend = opts.backend;

  auto check_budget = [&] {
    if (w.cover_order > opts.max_cover_order) {
      throw Error(Errc::ComputeBudgetExceeded,
                  "cover order " + std::to_string(w.cover_order) + " exceeds budget " +
                      std::to_string(opts.max_cover_order));
    }
  };

  if (a.size() <= 4) {
    w.case_id = ProofCase::Case1;
    w.cover_order = case_cover_order(w.case_id, n, std::nullopt);
    check_budget();
  } else {
    const auto four_a = iterated_sum(4, a, backend);
    w.intermediate_sizes.push_back({"|4A|", four_a.size()});
    if (four_a.is_full()) {
      w.case_id = ProofCase::Case2;
      w.cover_order = 4;
    } else {
      const int n0 = floor_log(a.size(), (p - 1) / 2);
      if (n0 < 1 || n0 > n - 1) {
        throw Error(Errc::InvalidArgument, "n0 = " + std::to_string(n0) + " outside [1, n-1]");
      }
      if (n - 1 > kMaxNkIndex) {
        throw Error(Errc::ComputeBudgetExceeded, "N_{n-1} overflows for n = " + std::to_string(n));
      }
      w.n0 = n0;
      if (n0 == n - 1) {
        w.case_id = ProofCase::Case3;
        w.k = case3_multiplier(eps);
      } else {
        w.case_id = ProofCase::Case4;
      }
      w.cover_order = case_cover_order(w.case_id, n, w.k);
      check_budget();

      const std::uint64_t chain_coeff = nk(n - 1).value;
      const auto base = product_power(a, static_cast<std::uint64_t>(n - 1));
      const auto chain = iterated_sum(chain_coeff, base, backend);
      w.intermediate_sizes.push_back({"|A^{n-1}|", base.size()});
      w.intermediate_sizes.push_back({"|N_{n-1}A^{n-1}|", chain.size()});
      w.intermediate_sizes.push_back(
          {"|N_{n-1}A^{n-1}-N_{n-1}A^{n-1}|", difference(chain, chain, backend).size()});
      if (w.case_id == ProofCase::Case3) {
        w.intermediate_sizes.push_back(
            {"|kN_{n-1}A^{n-1}|", iterated_sum(static_cast<std::uint64_t>(*w.k), chain, backend).size()});
      } else {
        w.intermediate_sizes.push_back({"|3N_{n-1}A^{n-1}|", iterated_sum(3, chain, backend).size()});
      }
    }
  }

  const auto a_n = product_power(a, static_cast<std::uint64_t>(n));
  const auto cover = iterated_sum(w.cover_order, a_n, backend);
  w.intermediate_sizes.push_back({"|A^n|", a_n.size()});
  w.intermediate_sizes.push_back({"|NA^n|", cover.size()});
  w.cover_verified = cover.is_full();
  return w;
}

nlohmann::ordered_json to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["p"] = w.p.value();
  j["set"] = w.a.elements();
  j["n"] = w.n;
  j["eps"] = w.eps;
  j["case"] = static_cast<int>(w.case_id);
  j["n0"] = w.n0 ? nlohmann::ordered_json(*w.n0) : nlohmann::ordered_json(nullptr);
  j["k"] = w.k ? nlohmann::ordered_json(*w.k) : nlohmann::ordered_json(nullptr);
  j["N"] = w.cover_order;
  j["cover_verified"] = w.cover_verified;
  auto sizes = nlohmann::ordered_json::array();
  for (const auto& s : w.intermediate_sizes) {
    sizes.push_back({{"label", s.label}, {"size", s.size}});
  }
  j["intermediate_sizes"] = std::move(sizes);
  return j;
}

}  // namespace sumprod
