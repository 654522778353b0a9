#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumprod/constructions.hpp"
#include "sumprod/error.hpp"
#include "sumprod/harness.hpp"

namespace sumprod::harness {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::pow;

CheckResult verdict(bool ok) { return ok ? CheckResult::Holds : CheckResult::Fails; }

cpp_int big(std::uint64_t v) { return cpp_int(v); }

// 2XY - 2XY
ZpSet double_product_difference(const ZpSet& x, const ZpSet& y, SumsetBackend b) {
  auto xy = productset(x, y);
  auto two = sumset(xy, xy, b);
  return difference(two, two, b);
}

// 2XY - 2XY + a*Y^2 - a*Y^2
ZpSet lemma4_set(const ZpSet& x, const ZpSet& y, ZpElement a, SumsetBackend b) {
  auto ay2 = dilate(a, productset(y, y));
  return sumset(double_product_difference(x, y, b), difference(ay2, ay2, b), b);
}

// |S| (|X||Y| + p - 1) >= |X||Y| (p - 1)
bool corollary3_bound(std::uint64_t s, std::uint64_t xy, std::uint64_t p) {
  return big(s) * (big(xy) + (p - 1)) >= big(xy) * (p - 1);
}

ZpSet chain_set(const ZpSet& a, int k, SumsetBackend b) {
  return k == 1 ? a : a_k_chain(a, k, b);
}

CheckResult check_cd(const BoundInstance& in, SumsetBackend b) {
  std::vector<const ZpSet*> parts;
  for (int i = 1; in.has_set("X" + std::to_string(i)); ++i) parts.push_back(&in.set("X" + std::to_string(i)));
  if (parts.empty()) throw Error(Errc::MissingBinding, "CD needs sets X1..XN");
  std::int64_t total = 0;
  for (const auto* s : parts) {
    if (s->empty()) return CheckResult::VacuouslyTrue;
    total += s->size();
  }
  ZpSet acc = *parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = sumset(acc, *parts[i], b);
  const std::int64_t n = static_cast<std::int64_t>(parts.size());
  const std::int64_t bound = std::min<std::int64_t>(total - n + 1, in.p.value());
  return verdict(static_cast<std::int64_t>(acc.size()) >= bound);
}

CheckResult check_p1(const BoundInstance& in) {
  const auto& x = in.set("X");
  const auto& y = in.set("Y");
  ZpElement a(in.p, in.scalar("a"));
  if (a.is_zero()) return CheckResult::VacuouslyTrue;
  const double mag = exp_sum_magnitude(x, y, a);
  const double bound = std::sqrt(static_cast<double>(in.p.value()) * x.size() * y.size());
  return verdict(mag <= bound + 1e-6);
}

CheckResult check_l1(const BoundInstance& in, SumsetBackend b) {
  const auto& a = in.set("A");
  const auto& bb = in.set("B");
  const std::uint64_t half = (bb.size() + 1) / 2;
  if (std::uint64_t{a.size()} * half <= in.p.value()) return CheckResult::VacuouslyTrue;
  return verdict(iterated_sum(8, productset(a, bb), b).is_full());
}

CheckResult check_l2(const BoundInstance& in, SumsetBackend b) {
  const auto& a = in.set("A");
  const auto& bb = in.set("B");
  if (std::uint64_t{a.size()} * bb.size() <= in.p.value()) return CheckResult::VacuouslyTrue;
  return verdict(iterated_sum(16, productset(a, bb), b).is_full());
}

CheckResult check_l3(const BoundInstance& in, SumsetBackend b) {
  const auto& x = in.set("X");
  const auto& y = in.set("Y");
  ZpElement xi(in.p, in.scalar("xi"));
  if (y.size() <= 1) return CheckResult::VacuouslyTrue;
  const bool in_q = q_set(x, y).contains(xi.value());
  const bool collides = std::uint64_t{sumset(x, dilate(xi, y), b).size()} <
                        std::uint64_t{x.size()} * y.size();
  return verdict(in_q == collides);
}

CheckResult check_l4(const BoundInstance& in, SumsetBackend b) {
  const auto& x = in.set("X");
  const auto& y = in.set("Y");
  ZpElement a(in.p, in.scalar("a"));
  if (a.is_zero() || y.size() <= 1) return CheckResult::VacuouslyTrue;
  const auto q = q_set(x, y);
  if (q.is_full()) return CheckResult::VacuouslyTrue;
  const std::uint64_t xy = std::uint64_t{x.size()} * y.size();
  if (!q.empty()) {
    // The witness xi must make x + (xi + a) y injective on X x Y.
    auto xi = find_xi_lemma4(x, y, a);
    if (!q.contains(xi.value()) || q.contains((xi + a).value())) return CheckResult::Fails;
    if (sumset(x, dilate(xi + a, y), b).size() != xy) return CheckResult::Fails;
  }
  return verdict(lemma4_set(x, y, a, b).size() >= xy);
}

CheckResult check_l5(const BoundInstance& in, SumsetBackend b) {
  const auto& x = in.set("X");
  const auto& y = in.set("Y");
  const auto& g = in.set("G");
  if (g.empty() || g.contains(0)) return CheckResult::VacuouslyTrue;
  const std::uint64_t xy = std::uint64_t{x.size()} * y.size();
  const std::uint64_t gs = g.size();
  bool found = false;
  g.for_each([&](std::uint32_t xi) {
    if (found) return;
    const std::uint64_t s = sumset(x, dilate(ZpElement(in.p, xi), y), b).size();
    found = big(s) * (big(xy) + gs) >= big(xy) * gs;
  });
  return verdict(found);
}

CheckResult check_l6(const BoundInstance& in, SumsetBackend b) {
  const auto& x = in.set("X");
  const auto& y = in.set("Y");
  ZpElement xi(in.p, in.scalar("xi"));
  if (y.size() <= 1 || !q_set(x, y).contains(xi.value())) return CheckResult::VacuouslyTrue;
  return verdict(double_product_difference(x, y, b).size() >= sumset(x, dilate(xi, y), b).size());
}

CheckResult check_l7(const BoundInstance& in, SumsetBackend b) {
  const auto& x = in.set("X");
  const auto& y = in.set("Y");
  const auto& z = in.set("Z");
  const std::uint64_t lhs = std::uint64_t{x.size()} * difference(y, z, b).size();
  const std::uint64_t rhs = std::uint64_t{difference(x, y, b).size()} * difference(x, z, b).size();
  return verdict(lhs <= rhs);
}

CheckResult check_c3(const BoundInstance& in, SumsetBackend b) {
  const auto& x = in.set("X");
  const auto& y = in.set("Y");
  ZpElement a(in.p, in.scalar("a"));
  if (a.is_zero() || y.size() <= 1) return CheckResult::VacuouslyTrue;
  return verdict(corollary3_bound(lemma4_set(x, y, a, b).size(), std::uint64_t{x.size()} * y.size(),
                                  in.p.value()));
}

CheckResult check_c4(const BoundInstance& in, SumsetBackend b) {
  const auto& y = in.set("Y");
  if (y.size() <= 1) return CheckResult::VacuouslyTrue;
  auto three = iterated_sum(3, productset(y, y), b);
  return verdict(corollary3_bound(difference(three, three, b).size(),
                                  std::uint64_t{y.size()} * y.size(), in.p.value()));
}

CheckResult check_c5(const BoundInstance& in, SumsetBackend b) {
  const auto& y = in.set("Y");
  const auto big_k = in.scalar("K");
  const auto k = in.scalar("k");
  if (y.size() <= 1 || !y.has_nonzero() || big_k < 1 || k < 1) return CheckResult::VacuouslyTrue;
  auto yk = product_power(y, static_cast<std::uint64_t>(k));
  auto ky = iterated_sum(static_cast<std::uint64_t>(big_k), yk, b);
  const std::uint64_t xs = difference(ky, ky, b).size();
  auto big_side = iterated_sum(static_cast<std::uint64_t>(4 * big_k + 1), productset(yk, y), b);
  return verdict(corollary3_bound(difference(big_side, big_side, b).size(), xs * y.size(),
                                  in.p.value()));
}

CheckResult check_c6(const BoundInstance& in, SumsetBackend b) {
  const auto& x = in.set("X");
  const auto& y = in.set("Y");
  const std::uint64_t s = sumset(x, y, b).size();
  return verdict(s * s >= std::uint64_t{x.size()} * difference(y, y, b).size());
}

CheckResult check_c7(const BoundInstance& in, SumsetBackend b) {
  const auto& x = in.set("X");
  const auto k = in.scalar("k");
  if (k < 1) return CheckResult::VacuouslyTrue;
  if (k > 16) throw Error(Errc::InvalidArgument, "C7 checks k <= 16");
  if (x.empty()) return CheckResult::Holds;
  // |kX| >= |X|^{2^{1-k}} |X-X|^{1-2^{1-k}}, raised to the power 2^{k-1}.
  const unsigned e = 1u << (k - 1);
  const std::uint64_t kx = iterated_sum(static_cast<std::uint64_t>(k), x, b).size();
  const std::uint64_t dx = difference(x, x, b).size();
  return verdict(pow(big(kx), e) >= big(x.size()) * pow(big(dx), e - 1));
}

// (p-1)|A_k| scaled: 4 den^2 (p-1) |A_k| >= 4 den (p-1) num - 5 num^2 for U = num/den.
bool lemma8_at(std::uint64_t ak, std::uint64_t p, const cpp_int& num, const cpp_int& den) {
  const cpp_int pm1 = p - 1;
  return 4 * den * den * pm1 * ak >= 4 * den * pm1 * num - 5 * num * num;
}

CheckResult check_l8(const BoundInstance& in, SumsetBackend b) {
  const auto& a = in.set("A");
  const auto k = in.scalar("k");
  if (a.size() < 5 || k < 1 || k > kMaxNkIndex) return CheckResult::VacuouslyTrue;
  const std::uint64_t p = in.p.value();
  const std::uint64_t ak = chain_set(a, static_cast<int>(k), b).size();
  const cpp_int m = pow(big(a.size()), static_cast<unsigned>(k));
  for (int j = 0; j <= 4; ++j) {
    if (!lemma8_at(ak, p, j * m, cpp_int(4))) return CheckResult::Fails;
  }
  const cpp_int two_m = 2 * m;
  const cpp_int lemma9_num = two_m < p - 1 ? two_m : cpp_int(p - 1);
  return verdict(lemma8_at(ak, p, lemma9_num, cpp_int(2)));
}

CheckResult check_l9(const BoundInstance& in, SumsetBackend b) {
  const auto& a = in.set("A");
  const auto k = in.scalar("k");
  if (a.size() < 5 || k < 1 || k > kMaxNkIndex) return CheckResult::VacuouslyTrue;
  const std::uint64_t p = in.p.value();
  const std::uint64_t ak = chain_set(a, static_cast<int>(k), b).size();
  const cpp_int two_m = 2 * pow(big(a.size()), static_cast<unsigned>(k));
  const cpp_int u2 = two_m < p - 1 ? two_m : cpp_int(p - 1);
  // 16 |A_k| >= 3 min(2|A|^k, p-1)
  return verdict(16 * big(ak) >= 3 * u2);
}

CheckResult check_l10(const BoundInstance& in, SumsetBackend b) {
  const auto& a = in.set("A");
  const auto k = in.scalar("k");
  if (a.size() < 5 || k < 2 || k > kMaxNkIndex) return CheckResult::VacuouslyTrue;
  const std::uint64_t p = in.p.value();
  // k <= 1 + log((p-1)/2)/log|A|  <=>  2 |A|^{k-1} <= p - 1
  if (2 * pow(big(a.size()), static_cast<unsigned>(k - 1)) > p - 1) return CheckResult::VacuouslyTrue;
  const std::uint64_t s =
      iterated_sum(nk(static_cast<int>(k)).value, product_power(a, static_cast<std::uint64_t>(k)), b).size();
  // |N_k A^k| >= (3/8)|A|^{k-8/7}  <=>  (8s)^7 |A|^8 >= 3^7 |A|^{7k}
  const cpp_int lhs = pow(8 * big(s), 7) * pow(big(a.size()), 8);
  const cpp_int rhs = pow(cpp_int(3), 7) * pow(big(a.size()), static_cast<unsigned>(7 * k));
  return verdict(lhs >= rhs);
}

CheckResult check_t1(const BoundInstance& in, SumsetBackend b) {
  const auto& a = in.set("A");
  const auto n = in.scalar("n");
  const auto num = in.scalar("eps_num");
  const auto den = in.scalar("eps_den");
  if (n < 2 || n > kMaxNkIndex || den <= 0 || num <= 0 || num >= n * den) {
    return CheckResult::VacuouslyTrue;
  }
  const double eps = static_cast<double>(num) / static_cast<double>(den);
  if (!growth_hypothesis_holds(a.size(), in.p.value(), static_cast<int>(n), eps)) {
    return CheckResult::VacuouslyTrue;
  }
  WitnessOptions opts;
  opts.backend = b;
  const auto w = theorem1_construct(a, static_cast<int>(n), eps, opts);
  if (!w.cover_verified) return CheckResult::Fails;
  if (w.cover_order != case_cover_order(w.case_id, static_cast<int>(n), w.k)) return CheckResult::Fails;

  // The selected case's condition holds and every earlier one fails.
  const bool small = a.size() <= 4;
  if ((w.case_id == ProofCase::Case1) != small) return CheckResult::Fails;
  if (small) return CheckResult::Holds;
  const bool four_full = iterated_sum(4, a, b).is_full();
  if ((w.case_id == ProofCase::Case2) != four_full) return CheckResult::Fails;
  if (four_full) return CheckResult::Holds;
  const int n0 = floor_log(a.size(), (in.p.value() - 1) / 2);
  if (!w.n0 || *w.n0 != n0) return CheckResult::Fails;
  if (n0 == n - 1) {
    return verdict(w.case_id == ProofCase::Case3 && w.k == case3_multiplier(eps));
  }
  return verdict(w.case_id == ProofCase::Case4 && !w.k);
}

}  // namespace

CheckResult check_lemma(LemmaId id, const BoundInstance& in, SumsetBackend b) {
  switch (id) {
    case LemmaId::CD: return check_cd(in, b);
    case LemmaId::P1: return check_p1(in);
    case LemmaId::L1: return check_l1(in, b);
    case LemmaId::L2: return check_l2(in, b);
    case LemmaId::L3: return check_l3(in, b);
    case LemmaId::L4: return check_l4(in, b);
    case LemmaId::L5: return check_l5(in, b);
    case LemmaId::L6: return check_l6(in, b);
    case LemmaId::L7: return check_l7(in, b);
    case LemmaId::C3: return check_c3(in, b);
    case LemmaId::C4: return check_c4(in, b);
    case LemmaId::C5: return check_c5(in, b);
    case LemmaId::C6: return check_c6(in, b);
    case LemmaId::C7: return check_c7(in, b);
    case LemmaId::L8: return check_l8(in, b);
    case LemmaId::L9: return check_l9(in, b);
    case LemmaId::L10: return check_l10(in, b);
    case LemmaId::T1: return check_t1(in, b);
  }
  throw Error(Errc::InvalidArgument, "unknown lemma id");
}

}  // namespace sumprod::harness
