#pragma once

#include <memory>
#include <string>
#include <vector>

#include "affhecke/weight.hpp"

namespace affhecke {

/// Finite irreducible crystallographic root system.
///
/// Conventions:
///  - cartan(i, j) = <alpha_j, alpha_i^vee>, so the simple reflection s_i sends a
///    weight with root coordinates lambda to lambda - (sum_k cartan(i,k) lambda_k) alpha_i.
///  - Roots are stored in simple-root coordinates, coroots in simple-coroot coordinates.
///  - The invariant form is scaled so that short roots have squared length 2;
///    form_norm(i) = (alpha_i, alpha_i) / 2 lies in {1, 2, 3}.
///  - Positive roots are ordered by height, then by descending lexicographic order
///    of their coordinate vectors (so the simple roots come first, as alpha_1, alpha_2, ...).
class RootSystem {
 public:
  const std::string& type_label() const noexcept { return label_; }
  int rank() const noexcept { return rank_; }
  Int cartan(int i, int j) const noexcept { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  const std::vector<Int>& form_norms() const noexcept { return d_; }

  int num_positive_roots() const noexcept { return static_cast<int>(roots_.size()); }
  const std::vector<Weight>& positive_roots() const noexcept { return roots_; }
  const std::vector<Weight>& positive_coroots() const noexcept { return coroots_; }
  const Weight& root(int j) const { return roots_.at(static_cast<std::size_t>(j)); }
  const Weight& coroot(int j) const { return coroots_.at(static_cast<std::size_t>(j)); }
  /// (alpha_j, alpha_j) / 2 for the j-th positive root.
  Int root_norm(int j) const { return root_norms_.at(static_cast<std::size_t>(j)); }
  /// Index of a positive root, or -1. Accepts negative roots too (returns the index of -beta).
  int root_index(const Weight& beta) const;

  int dominant_short_root() const noexcept { return dominant_short_; }
  /// Index into positive_coroots(); the maximal coroot is the coroot of the dominant short root.
  int maximal_coroot() const noexcept { return dominant_short_; }
  int highest_root() const noexcept { return highest_; }
  int coxeter_number() const noexcept { return coxeter_number_; }

  /// <lambda, alpha_i^vee> for a simple coroot.
  Int pair_simple(const Weight& lambda, int i) const;
  /// <lambda, beta_j^vee> for the j-th positive coroot.
  Int pair_coroot(const Weight& lambda, int j) const;
  /// <rho, beta_j^vee>; equals the height of the coroot.
  Int rho_pair_coroot(int j) const { return coroot_heights_.at(static_cast<std::size_t>(j)); }
  /// Row-major |Phi+| x rank table with pairing_table(j,k) = <alpha_k, beta_j^vee>.
  Int pairing_entry(int j, int k) const noexcept { return pairing_[static_cast<std::size_t>(j * rank_ + k)]; }

  Weight zero() const { return Weight(rank_); }
  Weight simple_root(int i) const;
  /// 2 rho = sum of positive roots, integral in root coordinates.
  const Weight& two_rho() const noexcept { return two_rho_; }
  /// rho in the requested basis (root coordinates may be fractional).
  RationalWeight rho(WeightBasis basis = WeightBasis::Fundamental) const;

  RationalWeight to_fundamental(const RationalWeight& w) const;
  RationalWeight to_root(const RationalWeight& w) const;
  RationalWeight as_rational(const Weight& w) const;

  bool is_dominant(const Weight& lambda) const;
  bool is_antidominant(const Weight& lambda) const;
  /// Simple reflection s_i on root coordinates.
  Weight reflect_simple(const Weight& lambda, int i) const;
  /// Reflection in the j-th positive root.
  Weight reflect(const Weight& lambda, int j) const;

  void check_rank(const Weight& w) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.cartan_ == b.cartan_ && a.rank_ == b.rank_; }

 private:
  friend RootSystem build_root_system(const std::string&);
  friend RootSystem root_system_from_cartan(const std::vector<std::vector<Int>>&, const std::string&);

  void finish();

  std::string label_;
  int rank_ = 0;
  std::vector<Int> cartan_;
  std::vector<Int> d_;
  std::vector<Weight> roots_;
  std::vector<Weight> coroots_;
  std::vector<Int> root_norms_;
  std::vector<Int> coroot_heights_;
  std::vector<Int> pairing_;
  std::vector<Rational> cartan_inverse_;
  Weight two_rho_;
  int dominant_short_ = -1;
  int highest_ = -1;
  int coxeter_number_ = 0;
};

/// Built-in types: A1-A4, B2-B4, C2-C4, D4, F4, G2 (labels like "A2", "b3").
/// Throws UnknownType for anything else.
RootSystem build_root_system(const std::string& type_label);

/// Generic finite-type input; validated (diagonal 2, non-positive off-diagonal,
/// symmetrizable, connected, positive definite). Throws UnknownType otherwise.
RootSystem root_system_from_cartan(const std::vector<std::vector<Int>>& cartan, const std::string& label = "custom");

/// lambda <= mu in dominance order: mu - lambda is a non-negative integer combination of simple roots.
bool dominance_leq(const Weight& lambda, const Weight& mu);
/// Variant for rational input; throws NotInRootLattice when either argument is fractional.
bool dominance_leq(const RationalWeight& lambda, const RationalWeight& mu);

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace affhecke
