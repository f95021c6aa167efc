#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Inner loops shared by the length function and Laurent polynomial arithmetic.
// Each kernel has a scalar reference in kernels::scalar and, on x86-64, an AVX2
// variant in kernels::avx2. The public entry points dispatch at runtime; set
// AFFHECKE_FORCE_SCALAR=1 in the environment to pin the scalar path.

namespace affhecke::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// True when the AVX2 variants were compiled in and the CPU supports them.
bool avx2_available();
Isa active_isa();
/// Test hook; requesting Avx2 when unavailable leaves Scalar active.
void set_isa(Isa isa);

/// sum_j | sum_k table[k * padded + j] * lambda[k] - neg[j] |, over j < padded.
/// table holds `rank` rows of `padded` entries (padded % 8 == 0, unused entries zero).
/// Callers guarantee |lambda[k]| < 2^20 so 32-bit lanes cannot overflow.
std::int64_t length_sum(const std::int32_t* table, int rank, std::size_t padded, const std::int32_t* lambda,
                        const std::int32_t* neg);

/// dst[i] += src[i] (sign > 0) or dst[i] -= src[i] (sign < 0).
void accumulate(std::int64_t* dst, const std::int64_t* src, std::size_t n, int sign);

namespace scalar {
std::int64_t length_sum(const std::int32_t* table, int rank, std::size_t padded, const std::int32_t* lambda,
                        const std::int32_t* neg);
void accumulate(std::int64_t* dst, const std::int64_t* src, std::size_t n, int sign);
}  // namespace scalar

namespace avx2 {
std::int64_t length_sum(const std::int32_t* table, int rank, std::size_t padded, const std::int32_t* lambda,
                        const std::int32_t* neg);
void accumulate(std::int64_t* dst, const std::int64_t* src, std::size_t n, int sign);
}  // namespace avx2

}  // namespace affhecke::kernels
