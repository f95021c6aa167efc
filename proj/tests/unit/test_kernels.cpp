#include <gtest/gtest.h>

#include <random>

#include "affhecke/affine.hpp"
#include "affhecke/kernels.hpp"
#include "oracles.hpp"

using namespace affhecke;

namespace {

struct IsaGuard {
  kernels::Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::set_isa(saved); }
};

}  // namespace

TEST(Kernels, LengthSumVariantsAgree) {
  if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 not available";
  std::mt19937 rng(81);
  std::uniform_int_distribution<std::int32_t> entry(-3, 3), lam(-(1 << 19), 1 << 19), bit(0, 1);
  for (std::size_t padded : {8u, 16u, 32u}) {
    for (int rank = 1; rank <= 4; ++rank)
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int32_t> table(padded * static_cast<std::size_t>(rank)), neg(padded);
        std::vector<std::int32_t> l(static_cast<std::size_t>(rank));
        for (auto& t : table) t = entry(rng);
        for (auto& n : neg) n = bit(rng);
        for (auto& x : l) x = lam(rng) / 4;
        EXPECT_EQ(kernels::scalar::length_sum(table.data(), rank, padded, l.data(), neg.data()),
                  kernels::avx2::length_sum(table.data(), rank, padded, l.data(), neg.data()));
      }
  }
}

TEST(Kernels, AccumulateVariantsAgree) {
  if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 not available";
  std::mt19937_64 rng(82);
  for (std::size_t n = 0; n < 40; ++n)
    for (int sign : {1, -1}) {
      std::vector<std::int64_t> a(n), b(n);
      for (auto& x : a) x = static_cast<std::int64_t>(rng() >> 4) - (std::int64_t{1} << 58);
      for (auto& x : b) x = static_cast<std::int64_t>(rng() >> 4) - (std::int64_t{1} << 58);
      auto s = a, v = a;
      kernels::scalar::accumulate(s.data(), b.data(), n, sign);
      kernels::avx2::accumulate(v.data(), b.data(), n, sign);
      EXPECT_EQ(s, v);
    }
}

TEST(Kernels, DispatchIsSwitchable) {
  IsaGuard guard;
  kernels::set_isa(kernels::Isa::Scalar);
  EXPECT_EQ(kernels::active_isa(), kernels::Isa::Scalar);
  kernels::set_isa(kernels::Isa::Avx2);
  EXPECT_EQ(kernels::active_isa(), kernels::avx2_available() ? kernels::Isa::Avx2 : kernels::Isa::Scalar);
  EXPECT_EQ(kernels::to_string(kernels::Isa::Scalar), "scalar");
}

TEST(Kernels, LengthsIndependentOfIsa) {
  IsaGuard guard;
  std::mt19937 rng(83);
  for (const char* label : {"A3", "B4", "F4", "G2"}) {
    auto g = AffineWeylGroup::create(label);
    for (int trial = 0; trial < 100; ++trial) {
      AffineElement x = oracle::random_element(*g, 30, rng);
      kernels::set_isa(kernels::Isa::Scalar);
      Int a = g->length(x);
      kernels::set_isa(kernels::Isa::Avx2);
      Int b = g->length(x);
      EXPECT_EQ(a, b) << label;
    }
  }
}
