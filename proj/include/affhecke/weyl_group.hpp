#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "affhecke/rootdata.hpp"

namespace affhecke {

/// Identifier of an element of the finite Weyl group; 0 is the identity and ids
/// are assigned in breadth-first order, so ids are non-decreasing in length.
using WeylId = std::uint32_t;

/// A finite Weyl group element as a value: its id, its matrix on root
/// coordinates, and a cached reduced word over 0-based simple indices.
struct FiniteWeylElement {
  WeylId id = 0;
  std::vector<Int> matrix;  // row-major rank x rank
  std::vector<int> word;
};

/// Fully enumerated finite Weyl group with multiplication and action tables.
class FiniteWeylGroup {
 public:
  /// Enumeration is refused above this order.
  static constexpr std::size_t kMaxOrder = 200000;

  explicit FiniteWeylGroup(const RootSystem& rs);

  std::size_t order() const noexcept { return lengths_.size(); }
  int rank() const noexcept { return rank_; }
  WeylId identity() const noexcept { return 0; }
  WeylId simple(int i) const { return left_[static_cast<std::size_t>(i)][0]; }
  int length(WeylId w) const { return lengths_[w]; }
  const std::vector<int>& word(WeylId w) const { return words_[w]; }
  WeylId inverse(WeylId w) const { return inverse_[w]; }
  WeylId left_simple(int i, WeylId w) const { return left_[static_cast<std::size_t>(i)][w]; }
  WeylId right_simple(WeylId w, int i) const { return right_[w * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(i)]; }
  WeylId multiply(WeylId u, WeylId v) const;
  WeylId longest() const noexcept { return static_cast<WeylId>(order() - 1); }

  /// Reflection in the j-th positive root.
  WeylId reflection(int j) const { return reflections_[static_cast<std::size_t>(j)]; }
  /// Index of the positive root whose reflection is w, or -1.
  int reflection_root(WeylId w) const { return reflection_root_[w]; }

  /// w(alpha_j) < 0 for the j-th positive root.
  bool sends_negative(WeylId w, int j) const { return neg_[w * nroots_ + static_cast<std::size_t>(j)] != 0; }
  /// 0/1 flags, padded with zeros to a multiple of 8 (the layout the length kernel reads).
  std::span<const std::int32_t> negative_flags(WeylId w) const { return {neg_padded_.data() + w * padded_, padded_}; }
  std::size_t padded_root_count() const noexcept { return padded_; }

  Weight act(WeylId w, const Weight& lambda) const;
  /// w(rho) - rho, which lies in the root lattice.
  const Weight& rho_shift(WeylId w) const { return rho_shift_[w]; }
  /// w . lambda = w(lambda + rho) - rho.
  Weight dot(WeylId w, const Weight& lambda) const { return act(w, lambda) + rho_shift_[w]; }

  FiniteWeylElement element(WeylId w) const;
  WeylId from_word(std::span<const int> word) const;
  /// Id of the element with the given matrix, or throws InvalidArgument.
  WeylId from_matrix(std::span<const Int> matrix) const;

 private:
  WeylId lookup(const Weight& image_of_two_rho) const;

  int rank_;
  std::size_t nroots_;
  std::size_t padded_;
  std::vector<std::vector<Int>> matrices_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<WeylId> inverse_;
  std::vector<std::vector<WeylId>> left_;
  std::vector<WeylId> right_;
  std::vector<WeylId> table_;  // full product table when small enough
  std::vector<WeylId> reflections_;
  std::vector<int> reflection_root_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::int32_t> neg_padded_;
  std::vector<Weight> rho_shift_;
  std::unordered_map<Weight, WeylId, WeightHash> index_;
  Weight two_rho_;
};

/// Apply a finite Weyl element to a weight; throws DimensionMismatch on rank mismatch.
Weight finite_weyl_act(const RootSystem& rs, const FiniteWeylElement& w, const Weight& lambda);

}  // namespace affhecke
