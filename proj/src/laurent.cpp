#include "affhecke/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "affhecke/kernels.hpp"

namespace affhecke {

LaurentPoly::LaurentPoly(Int constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(Int coeff, Int exponent) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<Int, Int>>& exp_coeff) {
  LaurentPoly p;
  for (auto [e, c] : exp_coeff) p += monomial(c, e);
  return p;
}

LaurentPoly LaurentPoly::v_minus_vinv() { return from_terms({{1, 1}, {-1, -1}}); }

Int LaurentPoly::coeff(Int exponent) const noexcept {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<Int, Int>> LaurentPoly::terms() const {
  std::vector<std::pair<Int, Int>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<Int>(i), coeffs_[i]);
  return out;
}

Int LaurentPoly::eval_at_one() const noexcept {
  Int s = 0;
  for (Int c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.low_ = -high();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

void LaurentPoly::trim() {
  std::size_t b = 0;
  while (b < coeffs_.size() && coeffs_[b] == 0) ++b;
  if (b == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t e = coeffs_.size();
  while (coeffs_[e - 1] == 0) --e;
  if (b > 0 || e < coeffs_.size()) {
    coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<std::ptrdiff_t>(b), coeffs_.begin() + static_cast<std::ptrdiff_t>(e));
    low_ += static_cast<Int>(b);
  }
}

void LaurentPoly::add_shifted(const LaurentPoly& o, int sign) {
  if (o.is_zero()) return;
  if (is_zero()) {
    low_ = o.low_;
    coeffs_.assign(o.coeffs_.size(), 0);
  }
  const Int lo = std::min(low_, o.low_);
  const Int hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<Int> grown(static_cast<std::size_t>(hi - lo + 1), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), grown.begin() + (low_ - lo));
    coeffs_ = std::move(grown);
    low_ = lo;
  }
  kernels::accumulate(coeffs_.data() + (o.low_ - low_), o.coeffs_.data(), o.coeffs_.size(), sign);
  trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_shifted(o, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_shifted(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  p.trim();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator-(LaurentPoly a) {
  for (Int& c : a.coeffs_) c = -c;
  return a;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms()) {
    Int mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace affhecke
