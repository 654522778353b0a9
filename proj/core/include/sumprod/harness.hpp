#pragma once

/**
 * @file harness.hpp
 * @brief Computational verification of the sum-product inequalities.
 *
 * Each LemmaId names one quantitative statement.  A checker takes a
 * BoundInstance, first decides whether the statement's hypothesis holds
 * (VacuouslyTrue otherwise) and then evaluates the conclusion exactly.
 * Fractional and irrational bounds are cleared of denominators and roots
 * and compared as big integers; only the exponential-sum bound (P1) is
 * compared in floating point, with a 1e-6 slack.
 *
 * Instance slots per lemma (sets / scalars):
 *
 *   CD   X1..XN            |X1+...+XN| >= min(sum|Xi| - N + 1, p)
 *   P1   X, Y / a          |sum e(axy/p)| <= sqrt(p|X||Y|)
 *   L1   A, B              |A| ceil(|B|/2) > p  =>  8AB = Z_p
 *   L2   A, B              |A||B| > p  =>  16AB = Z_p
 *   L3   X, Y / xi         xi in Q[X,Y]  <=>  |X + xi*Y| < |X||Y|
 *   L4   X, Y / a          Q[X,Y] != Z_p  =>  |2XY-2XY+aY^2-aY^2| >= |X||Y|
 *   L5   X, Y, G           some xi in G has |X+xi*Y| >= |X||Y||G|/(|X||Y|+|G|)
 *   L6   X, Y / xi         xi in Q[X,Y]  =>  |2XY-2XY| >= |X+xi*Y|
 *   L7   X, Y, Z           |X||Y-Z| <= |X-Y||X-Z|
 *   C3   X, Y / a          |2XY-2XY+aY^2-aY^2| >= |X||Y|(p-1)/(|X||Y|+p-1)
 *   C4   Y                 |3Y^2-3Y^2| >= |Y|^2(p-1)/(|Y|^2+p-1)
 *   C5   Y / K, k          same bound for (4K+1)Y^{k+1}-(4K+1)Y^{k+1}, X = KY^k-KY^k
 *   C6   X, Y              |X+Y|^2 >= |X||Y-Y|
 *   C7   X / k             |kX|^{2^{k-1}} >= |X| |X-X|^{2^{k-1}-1}
 *   L8   A / k             |A_k| >= U - 5U^2/(4(p-1)) on a grid of U
 *   L9   A / k             |A_k| >= (3/8) min(|A|^k, (p-1)/2)
 *   L10  A / k             |N_k A^k| >= (3/8) |A|^{k-8/7}
 *   T1   A / n, eps_num, eps_den   verified witness with the case-formula N
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sumprod/set_ops.hpp"
#include "sumprod/zp.hpp"
#include "sumprod/zp_set.hpp"

namespace sumprod::harness {

enum class LemmaId { CD, P1, L1, L2, L3, L4, L5, L6, L7, C3, C4, C5, C6, C7, L8, L9, L10, T1 };

inline constexpr LemmaId kAllLemmas[] = {
    LemmaId::CD, LemmaId::P1, LemmaId::L1, LemmaId::L2, LemmaId::L3, LemmaId::L4,
    LemmaId::L5, LemmaId::L6, LemmaId::L7, LemmaId::C3, LemmaId::C4, LemmaId::C5,
    LemmaId::C6, LemmaId::C7, LemmaId::L8, LemmaId::L9, LemmaId::L10, LemmaId::T1};

std::string_view to_string(LemmaId id) noexcept;
std::optional<LemmaId> parse_lemma_id(std::string_view text) noexcept;

enum class Mode { Exhaustive, Random };
std::string_view to_string(Mode m) noexcept;

/// One concrete instance fed to a checker.  All sets share the modulus.
struct BoundInstance {
  PrimeModulus p;
  std::map<std::string, ZpSet> sets;
  std::map<std::string, std::int64_t> scalars;

  explicit BoundInstance(PrimeModulus m) : p(m) {}

  /// Throws Error(MissingBinding) when absent.
  const ZpSet& set(const std::string& name) const;
  std::int64_t scalar(const std::string& name) const;
  bool has_set(const std::string& name) const { return sets.count(name) != 0; }

  BoundInstance& with(const std::string& name, ZpSet s);
  BoundInstance& with(const std::string& name, std::int64_t v);

  friend bool operator==(const BoundInstance&, const BoundInstance&) = default;
};

enum class CheckResult { Holds, Fails, VacuouslyTrue };
std::string_view to_string(CheckResult r) noexcept;

/// Evaluates one lemma on one instance.  Throws MissingBinding when the
/// instance lacks a slot the lemma names.
CheckResult check_lemma(LemmaId id, const BoundInstance& inst,
                        SumsetBackend backend = SumsetBackend::DenseShift);

/// Size caps for instance spaces.  max_set_size == 0 means "lemma default".
struct Caps {
  std::uint32_t max_set_size = 0;
  int max_summands = 3;    // N in CD
  int max_power = 4;       // k in C5/C7/L8/L9/L10, n in T1
  int max_multiplier = 2;  // K in C5
  std::uint64_t budget = 10'000'000;  // exhaustive checker calls
};

struct Failure {
  std::uint64_t index;
  BoundInstance instance;
};

struct InstanceRecord {
  std::uint64_t index;
  CheckResult result;
  BoundInstance instance;
};

struct LemmaReport {
  LemmaId lemma = LemmaId::CD;
  Mode mode = Mode::Exhaustive;
  std::uint32_t p = 0;
  std::uint64_t seed = 0;
  std::uint64_t tested = 0;   // hypothesis-satisfying instances
  std::uint64_t vacuous = 0;  // instances whose hypothesis failed
  std::vector<Failure> failures;  // sorted by index
  std::int64_t elapsed_ms = 0;
  std::vector<InstanceRecord> records;  // only with RunOptions::record_instances

  bool passed() const noexcept { return failures.empty(); }
};

struct RunOptions {
  Caps caps;
  SumsetBackend backend = SumsetBackend::DenseShift;
  unsigned threads = 1;  // 0 = hardware concurrency
  bool record_instances = false;
};

/// Number of instances the exhaustive enumeration for (id, p, caps) visits,
/// or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> exhaustive_space_size(LemmaId id, PrimeModulus p, const Caps& caps);

/// The index-th instance of the exhaustive enumeration (deterministic order).
BoundInstance exhaustive_instance(LemmaId id, PrimeModulus p, const Caps& caps, std::uint64_t index);

/// The index-th instance of a seeded random run; depends only on
/// (id, p, caps, seed, index).
BoundInstance random_instance(LemmaId id, PrimeModulus p, const Caps& caps, std::uint64_t seed,
                              std::uint64_t index);

/// Checks every instance within caps.  Throws BudgetExceeded when the space
/// exceeds caps.budget.
LemmaReport run_exhaustive(LemmaId id, PrimeModulus p, const RunOptions& opts = {});

LemmaReport run_random(LemmaId id, PrimeModulus p, std::uint64_t samples, std::uint64_t seed,
                       const RunOptions& opts = {});

nlohmann::ordered_json to_json(const BoundInstance& inst);
BoundInstance instance_from_json(PrimeModulus p, const nlohmann::ordered_json& j);

/// {"lemma", "p", "mode", "seed" (string), "tested", "vacuous", "failures",
/// "elapsed_ms"}.  With include_timing false, elapsed_ms is written as 0 so
/// repeated runs serialize byte-identically.
nlohmann::ordered_json to_json(const LemmaReport& r, bool include_timing = true);
LemmaReport report_from_json(const nlohmann::ordered_json& j);

/// Empty string when j matches the report schema, else a description.
std::string report_schema_violation(const nlohmann::ordered_json& j);

/// One row per recorded instance (or per failure when none were recorded).
std::string to_csv(const LemmaReport& r);
/// Single summary line.
std::string to_text(const LemmaReport& r);

}  // namespace sumprod::harness
