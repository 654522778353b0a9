#include "sumprod/discrete_log.hpp"

#include <map>
#include <mutex>
#include <string>

#include "sumprod/error.hpp"

namespace sumprod {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

std::uint32_t search_primitive_root(PrimeModulus m) {
  const std::uint32_t p = m.value();
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (m.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(Errc::InvalidArgument, "no primitive root mod " + std::to_string(p));
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

std::uint32_t primitive_root(PrimeModulus m) {
  static std::map<std::uint32_t, std::uint32_t> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(m.value()); it != cache.end()) return it->second;
  }
  std::uint32_t g = search_primitive_root(m);
  std::lock_guard lock(cache_mutex());
  return cache.emplace(m.value(), g).first->second;
}

DiscreteLogTable::DiscreteLogTable(PrimeModulus m)
    : m_(m), g_(primitive_root(m)), exp_(m.value() - 1), log_(m.value(), 0) {
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < m.value(); ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = m.mul(x, g_);
  }
}

std::shared_ptr<const DiscreteLogTable> DiscreteLogTable::get(PrimeModulus m) {
  if (m.value() > kMaxTabulated) {
    throw Error(Errc::InvalidArgument, "discrete log table too large for p = " +
                                           std::to_string(m.value()));
  }
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const DiscreteLogTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m.value()];
  if (!slot) slot = std::make_shared<const DiscreteLogTable>(m);
  return slot;
}

}  // namespace sumprod
