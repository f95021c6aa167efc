// Compiled with -mavx2; only reached through the dispatcher after a CPU check.
#include <immintrin.h>

#include "affhecke/kernels.hpp"

namespace affhecke::kernels::avx2 {

std::int64_t length_sum(const std::int32_t* table, int rank, std::size_t padded, const std::int32_t* lambda,
                        const std::int32_t* neg) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t j = 0; j < padded; j += 8) {
    __m256i p = _mm256_setzero_si256();
    for (int k = 0; k < rank; ++k) {
      __m256i row = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + static_cast<std::size_t>(k) * padded + j));
      p = _mm256_add_epi32(p, _mm256_mullo_epi32(row, _mm256_set1_epi32(lambda[k])));
    }
    p = _mm256_sub_epi32(p, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(neg + j)));
    p = _mm256_abs_epi32(p);
    // Widen before accumulating so long sums cannot wrap.
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(p)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(p, 1)));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

void accumulate(std::int64_t* dst, const std::int64_t* src, std::size_t n, int sign) {
  std::size_t i = 0;
  if (sign > 0) {
    for (; i + 4 <= n; i += 4) {
      __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(a, b));
    }
    for (; i < n; ++i) dst[i] += src[i];
  } else {
    for (; i + 4 <= n; i += 4) {
      __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_sub_epi64(a, b));
    }
    for (; i < n; ++i) dst[i] -= src[i];
  }
}

}  // namespace affhecke::kernels::avx2
