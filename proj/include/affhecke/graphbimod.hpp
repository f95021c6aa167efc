#pragma once

#include <string>
#include <vector>

#include "affhecke/affine.hpp"
#include "affhecke/exact_linalg.hpp"

namespace affhecke {

/// Action of x on hat-h in the basis (alpha_1^vee, ..., alpha_r^vee, hbar); column j is
/// the image of basis vector j. s_i: alpha_j^vee -> alpha_j^vee - <alpha_i, alpha_j^vee> alpha_i^vee;
/// t_lambda: xi -> xi + <lambda, xi> hbar; hbar is fixed.
IntMatrix hh_matrix(const AffineWeylGroup& g, const AffineElement& x);

enum class ExtKind { Zero, SelfExt, Wall, HigherCodim };

struct ExtDatum {
  ExtKind kind = ExtKind::Zero;
  int rank = 0;                        // SelfExt
  std::optional<HyperplaneForm> form;  // Wall
  int codim = 0;                       // HigherCodim

  friend bool operator==(const ExtDatum&, const ExtDatum&) = default;
  std::string str() const;
};

/// Classifies Ext between graph bimodules R_x, R_y by m = rank(A(x^{-1} y) - I).
ExtDatum graph_ext(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y);

/// The linear forms g_j = (A(y^{-1}) - A(x^{-1})) e_j, as columns.
IntMatrix difference_forms(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y);

/// Largest polynomial degree koszul_ext_dims accepts.
inline constexpr int kMaxKoszulDegree = 6;

/// dim H^k_D of the Koszul complex R (x) Lambda^k -> R (x) Lambda^{k+1}, e_S f -> sum_j g_j f e_j ^ e_S,
/// over R = Q[hat-h], for D = 0..max_degree. DegreeCapExceeded beyond kMaxKoszulDegree.
std::vector<long long> koszul_ext_dims(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y,
                                       int max_degree, int k);

/// Same, for explicit linear forms (columns of `forms`, each a vector over n variables).
std::vector<long long> koszul_dims(const IntMatrix& forms, int max_degree, int k);

}  // namespace affhecke
