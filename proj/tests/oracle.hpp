#pragma once

// Brute-force reference implementations over std::set.  Deliberately naive:
// every operation enumerates pairs with plain % arithmetic and shares no code
// with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "sumprod/zp_set.hpp"

namespace oracle {

using Set = std::set<std::uint64_t>;

inline Set to_set(const sumprod::ZpSet& s) {
  Set out;
  for (auto x : s.elements()) out.insert(x);
  return out;
}

inline sumprod::ZpSet from_set(sumprod::PrimeModulus m, const Set& s) {
  std::vector<std::int64_t> v(s.begin(), s.end());
  return sumprod::ZpSet(m, v);
}

inline Set sum(std::uint64_t p, const Set& x, const Set& y) {
  Set out;
  for (auto a : x)
    for (auto b : y) out.insert((a + b) % p);
  return out;
}

inline Set diff(std::uint64_t p, const Set& x, const Set& y) {
  Set out;
  for (auto a : x)
    for (auto b : y) out.insert((a + p - b) % p);
  return out;
}

inline Set prod(std::uint64_t p, const Set& x, const Set& y) {
  Set out;
  for (auto a : x)
    for (auto b : y) out.insert(a * b % p);
  return out;
}

inline std::uint64_t inv(std::uint64_t p, std::uint64_t a) {
  for (std::uint64_t b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  return 0;
}

inline Set quot(std::uint64_t p, const Set& x, const Set& y) {
  std::vector<std::uint64_t> inverses;
  for (auto b : y)
    if (b != 0) inverses.push_back(inv(p, b));
  Set out;
  for (auto a : x)
    for (auto b : inverses) out.insert(a * b % p);
  return out;
}

inline Set ksum(std::uint64_t p, std::uint64_t k, const Set& x) {
  Set out = x;
  for (std::uint64_t i = 1; i < k; ++i) out = sum(p, out, x);
  return out;
}

inline Set kprod(std::uint64_t p, std::uint64_t k, const Set& x) {
  Set out = x;
  for (std::uint64_t i = 1; i < k; ++i) out = prod(p, out, x);
  return out;
}

inline Set dilate(std::uint64_t p, std::uint64_t l, const Set& x) {
  Set out;
  for (auto a : x) out.insert(a * l % p);
  return out;
}

// Q[X,Y] = (X-X)/(Y-Y) over nonzero denominators.
inline Set q(std::uint64_t p, const Set& x, const Set& y) {
  return quot(p, diff(p, x, x), diff(p, y, y));
}

inline double exp_sum(std::uint64_t p, const Set& x, const Set& y, std::uint64_t a) {
  const long double two_pi = 6.283185307179586476925286766559L;
  std::complex<long double> s = 0;
  for (auto u : x)
    for (auto v : y) {
      long double t = two_pi * static_cast<long double>(a * u % p * v % p) / p;
      s += std::complex<long double>(std::cos(t), std::sin(t));
    }
  return static_cast<double>(std::abs(s));
}

inline Set random_set(std::uint64_t p, std::mt19937_64& rng, std::uint64_t max_size = 0) {
  if (max_size == 0 || max_size > p) max_size = p;
  std::uniform_int_distribution<std::uint64_t> size(1, max_size), elem(0, p - 1);
  Set out;
  const auto n = size(rng);
  while (out.size() < n) out.insert(elem(rng));
  return out;
}

}  // namespace oracle
