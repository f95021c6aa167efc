#pragma once

#include <cstddef>
#include <vector>

#include "affhecke/weight.hpp"

namespace affhecke {

using IntMatrix = std::vector<std::vector<Int>>;

/// Exact rank over Q (fraction-free elimination with arbitrary-precision intermediates).
std::size_t exact_rank(const IntMatrix& m);

/// Integer matrix product; shapes must agree.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_identity(std::size_t n);
IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b);

}  // namespace affhecke
