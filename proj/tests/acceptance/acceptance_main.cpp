// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// All tolerances, seeds, sample counts and time limits are pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sumprod/constructions.hpp"
#include "sumprod/error.hpp"
#include "sumprod/harness.hpp"
#include "sumprod/set_ops.hpp"

namespace {

using namespace sumprod;
using harness::LemmaId;

constexpr double kMinutes = 60'000.0;
constexpr double kExpSumSlack = 1e-6;
constexpr double kFullSetRelTol = 1e-6;
constexpr std::uint64_t kSeed = 20061127;

struct Verdict {
  bool pass;
  std::string detail;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_ms(double ms) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << ms / 1000.0 << " s";
  return os.str();
}

// Runs every report in `suite` and fails on any failure, on any lemma whose
// run never met its hypothesis, or on exceeding the time limit.
Verdict run_suite(const std::vector<std::function<harness::LemmaReport()>>& suite, double limit_ms) {
  Stopwatch sw;
  std::uint64_t tested = 0, failures = 0;
  std::string bad;
  for (const auto& job : suite) {
    const auto r = job();
    tested += r.tested;
    failures += r.failures.size();
    if (!r.passed() || r.tested == 0) {
      bad += " " + std::string(harness::to_string(r.lemma)) + "@" + std::to_string(r.p) +
             (r.tested == 0 ? "(no non-vacuous instance)" : "(" + std::to_string(r.failures.size()) + " failures)");
    }
  }
  const double ms = sw.ms();
  std::string detail = std::to_string(tested) + " instances, " + std::to_string(failures) +
                       " failures, " + fmt_ms(ms) + " (limit " + fmt_ms(limit_ms) + ")";
  if (!bad.empty()) detail += ";" + bad;
  return {bad.empty() && ms < limit_ms, detail};
}

Verdict criterion1() {
  const auto p = make_modulus(5);
  std::vector<std::function<harness::LemmaReport()>> suite;
  harness::RunOptions opts;
  opts.caps.max_summands = 3;
  opts.caps.max_power = 4;
  for (auto id : {LemmaId::CD, LemmaId::L1, LemmaId::L2, LemmaId::L3, LemmaId::L4, LemmaId::L5,
                  LemmaId::L6, LemmaId::L7, LemmaId::C3, LemmaId::C4, LemmaId::C6, LemmaId::C7}) {
    suite.push_back([=] { return harness::run_exhaustive(id, p, opts); });
  }
  return run_suite(suite, 5 * kMinutes);
}

Verdict criterion2() {
  const auto p = make_modulus(7);
  std::vector<std::function<harness::LemmaReport()>> suite;
  for (auto id : {LemmaId::L1, LemmaId::L2, LemmaId::L3, LemmaId::C6}) {
    suite.push_back([=] { return harness::run_exhaustive(id, p); });
  }
  return run_suite(suite, 10 * kMinutes);
}

Verdict criterion3() {
  std::vector<std::function<harness::LemmaReport()>> suite;
  for (std::uint64_t pv : {101u, 1009u, 10007u}) {
    const auto p = make_modulus(pv);
    for (auto id : {LemmaId::L4, LemmaId::L5, LemmaId::L6, LemmaId::C3, LemmaId::C4, LemmaId::C5,
                    LemmaId::L8, LemmaId::L9, LemmaId::L10}) {
      suite.push_back([=] { return harness::run_random(id, p, 1000, kSeed); });
    }
  }
  return run_suite(suite, 10 * kMinutes);
}

// The checker itself compares against sqrt(p|X||Y|) + 1e-6; the full-set
// value is evaluated here directly.
Verdict criterion4() {
  const auto p = make_modulus(1009);
  const auto r = harness::run_random(LemmaId::P1, p, 500, kSeed);
  const auto full = ZpSet::full(p);
  const double v = exp_sum_magnitude(full, full, ZpElement(p, 1));
  const double rel = std::fabs(v - 1009.0) / 1009.0;
  std::ostringstream os;
  os << r.tested << " instances, " << r.failures.size() << " failures (slack " << kExpSumSlack
     << "); full set |S| = " << v << ", rel err " << rel << " (tol " << kFullSetRelTol << ")";
  return {r.passed() && r.tested == 500 && rel <= kFullSetRelTol, os.str()};
}

// Independent recomputation of the case dispatch from the definitions.
struct ExpectedCase {
  ProofCase c;
  std::uint64_t n;
};

ExpectedCase expected_case(const ZpSet& a, int n, double eps) {
  const std::uint64_t p = a.modulus().value();
  const std::uint64_t size = a.size();
  auto pow4 = [](int e) { return std::uint64_t{1} << (2 * e); };
  if (size <= 4) return {ProofCase::Case1, pow4(n)};
  if (iterated_sum(4, a).is_full()) return {ProofCase::Case2, 4};
  int n0 = 0;
  for (std::uint64_t acc = size; acc <= (p - 1) / 2; acc *= size) ++n0;
  // N_1 = 1, N_2 = 3, N_{k+1} = 4 N_k + 1.
  std::uint64_t n_prev = 1;
  for (int i = 2; i <= n - 1; ++i) n_prev = i == 2 ? 3 : 4 * n_prev + 1;
  if (n0 == n - 1) {
    const auto k = static_cast<std::uint64_t>(std::floor(std::log2(1.0 / eps))) + 3;
    return {ProofCase::Case3, 64 * k * n_prev};
  }
  return {ProofCase::Case4, 192 * n_prev};
}

Verdict criterion5() {
  Stopwatch sw;
  std::mt19937_64 rng(kSeed);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t q = 3; q <= 10000; ++q)
    if (is_prime(q)) primes.push_back(q);
  const int ns[] = {2, 3, 4};
  const double epss[] = {0.25, 0.5, 1.0};
  int done = 0, verified = 0, formula = 0, attempts = 0;
  int cases[5] = {};
  std::string first_bad;
  while (done < 200 && ++attempts < 100000) {
    const auto p = make_modulus(primes[rng() % primes.size()]);
    const int n = ns[rng() % 3];
    const double eps = epss[rng() % 3];
    // Smallest size meeting |A| > p^{1/(n - eps)}.
    std::uint64_t min_size = 1;
    while (min_size <= p.value() && !growth_hypothesis_holds(min_size, p.value(), n, eps)) ++min_size;
    if (min_size > p.value()) continue;
    const std::uint64_t size = min_size + rng() % (std::min<std::uint64_t>(p.value(), 4 * min_size) - min_size + 1);
    std::vector<std::int64_t> elems(p.value());
    for (std::uint32_t i = 0; i < p.value(); ++i) elems[i] = i;
    std::shuffle(elems.begin(), elems.end(), rng);
    elems.resize(size);
    const ZpSet a(p, elems);
    ++done;
    try {
      const auto w = theorem1_construct(a, n, eps);
      const auto want = expected_case(a, n, eps);
      verified += w.cover_verified;
      const bool ok = w.case_id == want.c && w.cover_order == want.n;
      formula += ok;
      ++cases[static_cast<int>(w.case_id)];
      if ((!ok || !w.cover_verified) && first_bad.empty()) {
        first_bad = "p=" + std::to_string(p.value()) + " |A|=" + std::to_string(size) + " n=" +
                    std::to_string(n);
      }
    } catch (const Error& e) {
      if (first_bad.empty()) first_bad = e.what();
    }
  }
  const double ms = sw.ms();
  std::ostringstream os;
  os << done << " witnesses, " << verified << " verified, " << formula << " match the case formula (cases 1-4: "
     << cases[1] << "/" << cases[2] << "/" << cases[3] << "/" << cases[4] << "), " << fmt_ms(ms)
     << " (limit " << fmt_ms(15 * kMinutes) << ")";
  if (!first_bad.empty()) os << "; first problem: " << first_bad;
  return {done == 200 && verified == 200 && formula == 200 && ms < 15 * kMinutes, os.str()};
}

Verdict criterion6() {
  std::ostringstream os;
  bool pass = true;
  {
    const auto p = make_modulus(5);
    const auto w = theorem1_construct(ZpSet(p, {0, 1, 2}), 2, 0.5);
    const bool ok = w.case_id == ProofCase::Case1 && w.cover_order == 16 && w.cover_verified;
    os << "p=5 A={0,1,2}: case " << static_cast<int>(w.case_id) << " N=" << w.cover_order
       << (ok ? " ok" : " WRONG");
    pass = pass && ok;
  }
  {
    const auto p = make_modulus(101);
    const auto a = ZpSet::interval(p, 1, 11);
    os << "; p=101 A={1..11}: ";
    try {
      const auto w = theorem1_construct(a, 2, 0.5);
      const bool ok = w.case_id == ProofCase::Case3 && w.k == 4 && w.cover_order == 256 && w.cover_verified;
      os << "case " << static_cast<int>(w.case_id) << " N=" << w.cover_order << (ok ? " ok" : " WRONG");
      pass = pass && ok;
    } catch (const Error& e) {
      // The arithmetic alone: n0 = 1, k = 4, N = 256, and whether 256 A^2 covers.
      const bool covers = iterated_sum(256, product_power(a, 2)).is_full();
      os << e.what() << " (|A| = 11 <= 101^{2/3}); case arithmetic alone gives n0=" << floor_log(11, 50)
         << " k=" << case3_multiplier(0.5) << " N=" << case_cover_order(ProofCase::Case3, 2, 4)
         << ", 256A^2 " << (covers ? "= Z_101" : "!= Z_101");
      pass = false;
    }
  }
  return {pass, os.str()};
}

Verdict criterion7() {
  Stopwatch sw;
  int checked = 0, verified = 0;
  std::string first_bad;
  for (std::uint32_t pv = 3; pv <= 500; ++pv) {
    if (!is_prime(pv)) continue;
    const auto p = make_modulus(pv);
    for (std::uint64_t d = 1; d < pv; ++d) {
      if ((pv - 1) % d != 0 || d * d * d <= pv) continue;
      ++checked;
      try {
        const auto res = corollary1_check(make_subgroup(p, d));
        verified += res.verified;
        if (!res.verified && first_bad.empty()) first_bad = std::to_string(pv) + "/" + std::to_string(d);
      } catch (const Error& e) {
        if (first_bad.empty()) first_bad = std::to_string(pv) + "/" + std::to_string(d) + ": " + e.what();
      }
    }
  }
  std::string detail = std::to_string(verified) + "/" + std::to_string(checked) + " subgroups covered, " +
                       fmt_ms(sw.ms());
  if (!first_bad.empty()) detail += "; first problem: " + first_bad;
  return {checked > 0 && verified == checked, detail};
}

Verdict criterion8() {
  Stopwatch sw;
  std::mt19937_64 rng(kSeed);
  const std::uint32_t primes[] = {101, 1009, 65537};
  int same = 0;
  constexpr int kInstances = 10000;
  for (int i = 0; i < kInstances; ++i) {
    const auto p = make_modulus(primes[i % 3]);
    auto draw = [&] {
      std::uniform_int_distribution<std::uint32_t> size(1, p.value());
      const auto s = size(rng);
      std::vector<std::int64_t> v(s);
      for (auto& x : v) x = rng() % p.value();
      return ZpSet(p, v);
    };
    const auto x = draw(), y = draw();
    same += sumset(x, y, SumsetBackend::DenseShift) == sumset(x, y, SumsetBackend::NttConvolution);
  }
  return {same == kInstances,
          std::to_string(same) + "/" + std::to_string(kInstances) + " identical, " + fmt_ms(sw.ms())};
}

Verdict criterion9() {
  int good = 0;
  std::uint64_t rec = 0;
  for (int k = 2; k <= 30; ++k) {
    rec = k == 2 ? 3 : 4 * rec + 1;
    const std::uint64_t closed = (5 * (std::uint64_t{1} << (2 * k)) - 8) / 24;
    good += nk(k).value == closed && closed == rec;
  }
  const bool displayed = nk(2).value == 3 && nk(3).value == 13;
  return {good == 29 && displayed,
          std::to_string(good) + "/29 match closed form and recurrence; N_2=" + std::to_string(nk(2).value) +
              " N_3=" + std::to_string(nk(3).value)};
}

Verdict criterion10() {
  int same = 0, total = 0;
  for (auto id : {LemmaId::L4, LemmaId::L6, LemmaId::C5, LemmaId::L10, LemmaId::P1, LemmaId::T1}) {
    const auto p = make_modulus(1009);
    const auto a = harness::to_json(harness::run_random(id, p, 200, kSeed), false).dump();
    const auto b = harness::to_json(harness::run_random(id, p, 200, kSeed), false).dump();
    same += a == b;
    ++total;
  }
  return {same == total, std::to_string(same) + "/" + std::to_string(total) + " repeated reports byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Verdict (*)()>> criteria = {
      {"exhaustive lemma suite at p=5", criterion1},
      {"exhaustive pair lemmas at p=7", criterion2},
      {"random suite at p=101,1009,10007", criterion3},
      {"exponential sum bound at p=1009", criterion4},
      {"witness soundness on 200 random inputs", criterion5},
      {"golden witnesses", criterion6},
      {"subgroup covers for p<=500", criterion7},
      {"sumset backend equivalence", criterion8},
      {"N_k table", criterion9},
      {"seeded report determinism", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first,
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
