#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affhecke/affine.hpp"
#include "affhecke/laurent.hpp"

namespace affhecke {

/// Element of the affine Hecke algebra over Z[v, v^{-1}] in the standard basis H_x,
/// with (H_s - v)(H_s + v^{-1}) = 0. Elements remember their group; mixing
/// groups raises RootSystemMismatch.
class HeckeElement {
 public:
  using Terms = std::unordered_map<AffineElement, LaurentPoly, AffineElementHash>;

  explicit HeckeElement(AffineWeylGroupPtr g);
  static HeckeElement basis(AffineWeylGroupPtr g, const AffineElement& x, const LaurentPoly& c = 1);

  const AffineWeylGroup& group() const noexcept { return *g_; }
  const AffineWeylGroupPtr& group_ptr() const noexcept { return g_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  LaurentPoly coeff(const AffineElement& x) const;
  const Terms& raw_terms() const noexcept { return terms_; }
  /// Terms sorted by (length, finite id, translation).
  std::vector<std::pair<AffineElement, LaurentPoly>> terms() const;
  /// Largest length in the support (0 for the zero element).
  Int max_length() const;

  void add_term(const AffineElement& x, const LaurentPoly& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& scale(const LaurentPoly& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

  /// Image under v -> 1 in the group algebra Z[W^a].
  std::map<AffineElement, Int> specialize_at_one() const;

  void check_same(const HeckeElement& o) const;
  std::string str() const;

 private:
  AffineWeylGroupPtr g_;
  Terms terms_;
};

HeckeElement h_std(AffineWeylGroupPtr g, const AffineElement& x);

/// a * H_s, H_s * a, a * H_s^{-1}, H_s^{-1} * a.
HeckeElement right_mul_gen(const HeckeElement& a, int s);
HeckeElement left_mul_gen(int s, const HeckeElement& a);
HeckeElement right_mul_gen_inverse(const HeckeElement& a, int s);
HeckeElement left_mul_gen_inverse(int s, const HeckeElement& a);

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

/// D_x = H_{x^{-1}}^{-1}.
HeckeElement braid_neg(AffineWeylGroupPtr g, const AffineElement& x);

/// C_lambda = H_{t_mu} H_{t_nu}^{-1} for the splitting lambda = mu - nu with nu = N*2rho
/// the least such multiple making mu dominant.
HeckeElement bernstein(AffineWeylGroupPtr g, const Weight& lambda);
/// C_{mu - nu} from an explicit splitting; InvalidArgument unless mu, nu are dominant.
HeckeElement bernstein_split(AffineWeylGroupPtr g, const Weight& mu, const Weight& nu);

struct StabClass {
  HeckeElement value;
  Int threshold;
};

/// D_{x t_{-lambda}} C_lambda for lambda = n*2rho (D computed by left-multiplying
/// H_{t_lambda} by inverse generators).
HeckeElement stab_class_at(AffineWeylGroupPtr g, const AffineElement& x, Int n);

/// Smallest n with S_n = S_{n+1} and l(x t_{-(n+1)2rho}) = l(x t_{-n 2rho}) + l(t_{-2rho}).
StabClass stab_class(AffineWeylGroupPtr g, const AffineElement& x, Int max_n = 64);

}  // namespace affhecke
