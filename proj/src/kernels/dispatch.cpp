#include <atomic>
#include <cstdlib>
#include <cstring>

#include "affhecke/kernels.hpp"

namespace affhecke::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(AFFHECKE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  const char* force = std::getenv("AFFHECKE_FORCE_SCALAR");
  if (force && std::strcmp(force, "0") != 0) return Isa::Scalar;
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() { return cpu_has_avx2(); }

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_available()) isa = Isa::Scalar;
  selected().store(isa, std::memory_order_relaxed);
}

std::int64_t length_sum(const std::int32_t* table, int rank, std::size_t padded, const std::int32_t* lambda,
                        const std::int32_t* neg) {
#ifdef AFFHECKE_HAVE_AVX2
  if (active_isa() == Isa::Avx2) return avx2::length_sum(table, rank, padded, lambda, neg);
#endif
  return scalar::length_sum(table, rank, padded, lambda, neg);
}

void accumulate(std::int64_t* dst, const std::int64_t* src, std::size_t n, int sign) {
#ifdef AFFHECKE_HAVE_AVX2
  if (active_isa() == Isa::Avx2) return avx2::accumulate(dst, src, n, sign);
#endif
  scalar::accumulate(dst, src, n, sign);
}

#ifndef AFFHECKE_HAVE_AVX2
// Non-x86 builds: keep the symbols so tests link; they forward to scalar.
namespace avx2 {
std::int64_t length_sum(const std::int32_t* table, int rank, std::size_t padded, const std::int32_t* lambda,
                        const std::int32_t* neg) {
  return scalar::length_sum(table, rank, padded, lambda, neg);
}
void accumulate(std::int64_t* dst, const std::int64_t* src, std::size_t n, int sign) {
  scalar::accumulate(dst, src, n, sign);
}
}  // namespace avx2
#endif

}  // namespace affhecke::kernels
