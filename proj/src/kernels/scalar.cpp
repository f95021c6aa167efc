#include "affhecke/kernels.hpp"

namespace affhecke::kernels::scalar {

std::int64_t length_sum(const std::int32_t* table, int rank, std::size_t padded, const std::int32_t* lambda,
                        const std::int32_t* neg) {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < padded; ++j) {
    std::int64_t p = 0;
    for (int k = 0; k < rank; ++k) p += static_cast<std::int64_t>(table[static_cast<std::size_t>(k) * padded + j]) * lambda[k];
    p -= neg[j];
    total += p < 0 ? -p : p;
  }
  return total;
}

void accumulate(std::int64_t* dst, const std::int64_t* src, std::size_t n, int sign) {
  if (sign > 0) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
  } else {
    for (std::size_t i = 0; i < n; ++i) dst[i] -= src[i];
  }
}

}  // namespace affhecke::kernels::scalar
