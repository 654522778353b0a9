#pragma once

/**
 * @file ntt.hpp
 * @brief Number-theoretic transforms over two NTT-friendly primes.
 *
 * q = 2^64 - 2^32 + 1: q - 1 = 2^32 * 3 * 5 * 17 * 257 * 65537, so
 * power-of-two transforms up to length 2^32 exist and 7 generates the
 * multiplicative group.  Since q > (2^31)^2, representation counts of a
 * sumset over any accepted Z_p never wrap.
 *
 * q31 = 15 * 2^27 + 1 with generator 31 is the cheaper 32-bit variant,
 * computed in Montgomery form.  Its convolution is exact as long as every
 * true output coefficient is below q31, which holds for 0/1 inputs of
 * length <= 2^26.
 */

#include <cstdint>
#include <span>
#include <vector>

namespace sumprod::ntt {

inline constexpr std::uint64_t kModulus = 0xFFFFFFFF00000001ull;
inline constexpr std::uint64_t kGenerator = 7;
inline constexpr unsigned kMaxLogLength = 32;

inline constexpr std::uint32_t kModulus31 = 2013265921u;
inline constexpr std::uint32_t kGenerator31 = 31;
inline constexpr unsigned kMaxLogLength31 = 27;

std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t sub(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t pow(std::uint64_t base, std::uint64_t exp) noexcept;

/// In-place transform; data.size() must be a power of two <= 2^32.  The
/// inverse includes the 1/n scaling.
void transform(std::span<std::uint64_t> data, bool inverse);

/// Linear convolution of two coefficient vectors with entries < kModulus.
std::vector<std::uint64_t> convolve(std::span<const std::uint64_t> a,
                                    std::span<const std::uint64_t> b);

/// Linear convolution modulo kModulus31; entries < kModulus31 and the output
/// length must not exceed 2^27.
std::vector<std::uint32_t> convolve31(std::span<const std::uint32_t> a,
                                      std::span<const std::uint32_t> b);

}  // namespace sumprod::ntt
