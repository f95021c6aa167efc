#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "affhecke/rootdata.hpp"
#include "affhecke/weyl_group.hpp"

namespace affhecke {

/// x = w t_lambda in W^a = W x| Q, with lambda in the root lattice (root coordinates).
struct AffineElement {
  WeylId w = 0;
  Weight t;

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
  friend auto operator<=>(const AffineElement&, const AffineElement&) = default;
};

std::size_t hash_value(const AffineElement& x) noexcept;

struct AffineElementHash {
  std::size_t operator()(const AffineElement& x) const noexcept { return hash_value(x); }
};

/// Subset of the affine simple reflections I^a = {s0, s1, ..., sr}; index 0 is the
/// affine reflection, 1..r the finite simple reflections.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}
  static GeneratorSet all(int rank) { return GeneratorSet((std::uint32_t{1} << (rank + 1)) - 1); }
  static GeneratorSet from_list(std::span<const int> gens);

  bool contains(int s) const noexcept { return (bits_ >> s) & 1U; }
  void insert(int s) noexcept { bits_ |= std::uint32_t{1} << s; }
  bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept { return __builtin_popcount(bits_); }
  std::uint32_t bits() const noexcept { return bits_; }
  std::vector<int> list() const;
  std::string str() const;

  friend bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// The reflection s_alpha t_{k alpha} for the positive root with index `root`.
struct AffineReflection {
  int root = 0;
  Int k = 0;
  friend bool operator==(const AffineReflection&, const AffineReflection&) = default;
};

/// Linear function alpha^vee - k hbar on hat-h^*, stored as (coroot coordinates, k)
/// and normalized: primitive, with the first nonzero coefficient of
/// (coroot_1, ..., coroot_r, hbar-coefficient = -k) positive. Pure hbar is (0, k = -1).
class HyperplaneForm {
 public:
  static HyperplaneForm make(const Weight& coroot_part, Int k);
  static HyperplaneForm hbar(int rank);

  const Weight& coroot() const noexcept { return coroot_; }
  Int k() const noexcept { return k_; }
  bool is_hbar() const noexcept { return coroot_.is_zero(); }
  std::string str() const;

  friend bool operator==(const HyperplaneForm&, const HyperplaneForm&) = default;
  friend auto operator<=>(const HyperplaneForm&, const HyperplaneForm&) = default;

 private:
  Weight coroot_;
  Int k_ = 0;
};

/// The affine Weyl group of a finite root system, with simple reflections taken
/// relative to the anti-dominant alcove: s0 = s_theta t_theta for the dominant
/// short root theta. All operations are const and safe to call concurrently.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootSystem rs);
  static std::shared_ptr<const AffineWeylGroup> create(const std::string& type_label);

  const RootSystem& roots() const noexcept { return rs_; }
  const FiniteWeylGroup& finite() const noexcept { return weyl_; }
  int rank() const noexcept { return rs_.rank(); }
  int num_generators() const noexcept { return rs_.rank() + 1; }

  AffineElement identity() const { return {0, rs_.zero()}; }
  AffineElement generator(int s) const;
  AffineElement translation(const Weight& lambda) const;
  AffineElement finite_element(WeylId w) const { return {w, rs_.zero()}; }
  AffineElement reflection(const AffineReflection& r) const;
  std::optional<AffineReflection> as_reflection(const AffineElement& x) const;
  HyperplaneForm wall(const AffineReflection& r) const { return HyperplaneForm::make(rs_.coroot(r.root), r.k); }

  /// (w1 t_l1)(w2 t_l2) = (w1 w2) t_{w2^{-1} l1 + l2}.
  AffineElement multiply(const AffineElement& x, const AffineElement& y) const;
  AffineElement inverse(const AffineElement& x) const;
  AffineElement left_multiply(int s, const AffineElement& x) const;
  AffineElement right_multiply(const AffineElement& x, int s) const;
  AffineElement from_word(std::span<const int> word) const;

  Int length(const AffineElement& x) const;
  /// l(w) - 2 <rho^vee, lambda>.
  Int stab_length(const AffineElement& x) const;
  bool is_left_descent(int s, const AffineElement& x) const { return length(left_multiply(s, x)) < length(x); }
  bool is_right_descent(const AffineElement& x, int s) const { return length(right_multiply(x, s)) < length(x); }
  GeneratorSet left_descents(const AffineElement& x) const;
  GeneratorSet right_descents(const AffineElement& x) const;
  /// Reduced word over I^a built from leftmost descents: x = s_{w[0]} s_{w[1]} ...
  std::vector<int> reduced_word(const AffineElement& x) const;

  /// Bruhat order via the lifting property.
  bool bruhat_leq(const AffineElement& x, const AffineElement& y) const;

  /// Action on hat-h^* = h^* + C: (mu, z) -> (w(mu + z lambda), z).
  std::pair<Weight, Int> act_dual(const AffineElement& x, const Weight& mu, Int z) const;

  /// Throws RootSystemMismatch if x does not belong to this group.
  void check(const AffineElement& x) const;

  std::string format(const AffineElement& x) const;

 private:
  RootSystem rs_;
  FiniteWeylGroup weyl_;
  std::vector<std::int32_t> kernel_table_;
  AffineElement s0_;
};

using AffineWeylGroupPtr = std::shared_ptr<const AffineWeylGroup>;

}  // namespace affhecke
