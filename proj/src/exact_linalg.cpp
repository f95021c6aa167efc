#include "affhecke/exact_linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "affhecke/error.hpp"

namespace affhecke {

using boost::multiprecision::cpp_int;

std::size_t exact_rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
  }
  // Bareiss: after step k every entry is a k x k minor, so divisions are exact.
  cpp_int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) fail(ErrorCode::DimensionMismatch, "matrix shapes do not agree");
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  }
  return c;
}

IntMatrix mat_identity(std::size_t n) {
  IntMatrix c(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 1;
  return c;
}

IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "matrix shapes do not agree");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) fail(ErrorCode::DimensionMismatch, "matrix shapes do not agree");
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] -= b[i][j];
  }
  return c;
}

}  // namespace affhecke
