#pragma once

/**
 * @file set_ops.hpp
 * @brief Sumsets, product sets and their relatives over Z_p.
 *
 * All operations are pure.  Any operation with an empty operand returns the
 * empty set instead of raising, and every binary operation throws
 * Error(ModulusMismatch) when its operands live in different fields.
 */

#include <cstdint>
#include <string_view>

#include "sumprod/zp.hpp"
#include "sumprod/zp_set.hpp"

namespace sumprod {

enum class SumsetBackend {
  /// OR of cyclically shifted copies of one operand, word at a time.
  DenseShift,
  /// Cyclic convolution of indicator vectors by NTT, thresholded to support.
  NttConvolution,
};

std::string_view to_string(SumsetBackend b) noexcept;

/// X + Y.
ZpSet sumset(const ZpSet& x, const ZpSet& y, SumsetBackend backend = SumsetBackend::DenseShift);
/// X - Y.
ZpSet difference(const ZpSet& x, const ZpSet& y, SumsetBackend backend = SumsetBackend::DenseShift);
/// -X.
ZpSet negate(const ZpSet& x);
/// XY = {xy}.
ZpSet productset(const ZpSet& x, const ZpSet& y);
/// X / Y over the nonzero members of Y.  Throws EmptyDenominator when Y = {0}.
ZpSet quotientset(const ZpSet& x, const ZpSet& y);
/// lambda * A = {lambda a}.
ZpSet dilate(ZpElement lambda, const ZpSet& a);
/// kX, the k-fold sumset, by binary doubling; k >= 1.
ZpSet iterated_sum(std::uint64_t k, const ZpSet& x,
                   SumsetBackend backend = SumsetBackend::DenseShift);
/// X^k, the k-fold product set, by binary powering; k >= 1.
ZpSet product_power(const ZpSet& x, std::uint64_t k);
/// Q[X,Y] = (X - X) / (Y - Y).  Throws DegenerateY when |Y| <= 1.
ZpSet q_set(const ZpSet& x, const ZpSet& y);

/// |sum_{x in X, y in Y} exp(2 pi i a x y / p)| in double precision,
/// accumulated in increasing (x, y) order.  Throws ZeroCoefficient for a = 0.
double exp_sum_magnitude(const ZpSet& x, const ZpSet& y, ZpElement a);

}  // namespace sumprod
