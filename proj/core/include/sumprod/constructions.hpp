#pragma once

/**
 * @file constructions.hpp
 * @brief Expansion chain N_k A^k - N_k A^k and the covering-witness pipeline.
 *
 * theorem1_construct follows a four-way case split on a set A with
 * |A| > p^{1/(n - eps)} and produces an explicit order N with N A^n = Z_p:
 *
 *   Case 1  |A| <= 4                          N = 4^n
 *   Case 2  4A = Z_p                          N = 4
 *   Case 3  n0 = n - 1                        N = 64 k N_{n-1}
 *   Case 4  n0 < n - 1                        N = 192 N_{n-1}
 *
 * where n0 = floor(log((p-1)/2) / log|A|) and k = floor(log2(1/eps)) + 3.
 * The cover is always recomputed from scratch, never assumed.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sumprod/set_ops.hpp"
#include "sumprod/zp.hpp"
#include "sumprod/zp_set.hpp"

namespace sumprod {

/// Coefficient of the expansion chain: N_1 = 1, N_2 = 3, N_{k+1} = 4 N_k + 1,
/// so N_k = (5 * 4^k - 8) / 24 for k >= 2.
struct NkCoefficient {
  int k;
  std::uint64_t value;
};

inline constexpr int kMaxNkIndex = 31;  // N_31 < 2^62

/// Throws InvalidArgument outside [1, kMaxNkIndex].
NkCoefficient nk(int k);

/// A_k = N_k A^k - N_k A^k for k >= 2.  Throws RestrictionViolated when |A| < 5.
ZpSet a_k_chain(const ZpSet& a, int k, SumsetBackend backend = SumsetBackend::DenseShift);

/// Smallest xi in Q[X,Y] with xi + a outside Q[X,Y].
/// Throws DegenerateY, ZeroCoefficient, QIsEmpty or QIsFull.
ZpElement find_xi_lemma4(const ZpSet& x, const ZpSet& y, ZpElement a);

enum class ProofCase { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4 };

struct SizeRecord {
  std::string label;
  std::uint64_t size;

  friend bool operator==(const SizeRecord&, const SizeRecord&) = default;
};

struct Witness {
  PrimeModulus p;
  ZpSet a;
  int n;
  double eps;
  ProofCase case_id;
  std::optional<int> n0;  // Cases 3 and 4
  std::optional<int> k;   // Case 3
  std::uint64_t cover_order;
  bool cover_verified;
  std::vector<SizeRecord> intermediate_sizes;
};

struct WitnessOptions {
  SumsetBackend backend = SumsetBackend::DenseShift;
  /// Largest cover order N the pipeline will verify; 2^24 means at most 24
  /// doubling levels.
  std::uint64_t max_cover_order = std::uint64_t{1} << 24;
};

/// |A| > p^{1/(n - eps)}, i.e. (n - eps) log|A| > log p.
bool growth_hypothesis_holds(std::uint64_t set_size, std::uint32_t p, int n, double eps);

/// Largest m >= 0 with base^m <= bound, in exact integer arithmetic; base >= 2.
int floor_log(std::uint64_t base, std::uint64_t bound);

/// floor(log2(1/eps)) + 3.
int case3_multiplier(double eps);

/// Case formula N for the given case; n0 and k as in the header comment.
std::uint64_t case_cover_order(ProofCase c, int n, std::optional<int> k);

/// Throws EpsOutOfRange, InvalidArgument (n < 2), HypothesisViolated or
/// ComputeBudgetExceeded.
Witness theorem1_construct(const ZpSet& a, int n, double eps, const WitnessOptions& opts = {});

nlohmann::ordered_json to_json(const Witness& w);

struct SubgroupSpec {
  PrimeModulus p;
  std::uint32_t order;
  ZpSet elements;
};

/// The order-d subgroup of Z_p^*, generated by g^{(p-1)/d}.  Throws NotADivisor.
SubgroupSpec make_subgroup(PrimeModulus p, std::uint64_t d);

struct CoverCheck {
  std::uint64_t cover_order;
  bool verified;
  Witness witness;
};

/// Runs the witness pipeline on G with eps = 1/2 and the least n >= 2 with
/// |G| > p^{1/(n - 1/2)}; since G^n = G the witness certifies N G = Z_p.
/// Throws HypothesisViolated when |G| = 1.
CoverCheck corollary1_check(const SubgroupSpec& g, const WitnessOptions& opts = {});

/// Least n >= 2 with |G|^{2n-1} > p^2, or nullopt when |G| <= 1.
std::optional<int> corollary1_exponent(std::uint64_t subgroup_order, std::uint32_t p);

}  // namespace sumprod
