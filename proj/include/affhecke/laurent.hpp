#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "affhecke/weight.hpp"

namespace affhecke {

/// Integer Laurent polynomial in v, stored densely from the lowest nonzero exponent.
/// The zero polynomial has no coefficients; leading and trailing zeros are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Int constant);  // NOLINT: implicit on purpose, integers are scalars
  static LaurentPoly monomial(Int coeff, Int exponent);
  static LaurentPoly from_terms(const std::vector<std::pair<Int, Int>>& exp_coeff);
  /// v - v^{-1}
  static LaurentPoly v_minus_vinv();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  Int low() const noexcept { return low_; }
  Int high() const noexcept { return low_ + static_cast<Int>(coeffs_.size()) - 1; }
  Int coeff(Int exponent) const noexcept;
  /// (exponent, coefficient) pairs with nonzero coefficient, increasing exponent.
  std::vector<std::pair<Int, Int>> terms() const;
  Int eval_at_one() const noexcept;
  /// v -> v^{-1}
  LaurentPoly bar() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string str() const;

 private:
  void add_shifted(const LaurentPoly& o, int sign);
  void trim();

  Int low_ = 0;
  std::vector<Int> coeffs_;
};

}  // namespace affhecke
