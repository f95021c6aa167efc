#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace affhecke {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Built-in tables go to rank 4; generic Cartan input is accepted up to this rank.
inline constexpr int kMaxRank = 8;

/// Integer vector of fixed small dimension. Used for elements of the root lattice
/// (simple-root coordinates) and for coroot-coordinate vectors. Unused trailing
/// slots are always zero, so defaulted comparison and hashing are exact.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank);
  Weight(std::initializer_list<Int> coords);
  static Weight from_span(std::span<const Int> coords);

  int rank() const noexcept { return rank_; }
  Int operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }
  std::span<const Int> coords() const noexcept { return {c_.data(), static_cast<std::size_t>(rank_)}; }
  const Int* data() const noexcept { return c_.data(); }

  bool is_zero() const noexcept;
  /// Sum of coordinates; for root coordinates this is the pairing with rho-check.
  Int height() const noexcept;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(Int k) noexcept;

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Int k, Weight a) noexcept { return a *= k; }
  friend Weight operator-(Weight a) noexcept { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.c_ <=> b.c_;
  }

  std::string str() const;

 private:
  std::array<Int, kMaxRank> c_{};
  int rank_ = 0;
};

std::size_t hash_value(const Weight& w) noexcept;

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept { return hash_value(w); }
};

enum class WeightBasis { Root, Fundamental };

/// Rational coordinates, used transiently (rho in root coordinates, basis changes).
struct RationalWeight {
  std::vector<Rational> coords;
  WeightBasis basis = WeightBasis::Root;

  friend bool operator==(const RationalWeight&, const RationalWeight&) = default;
  bool is_integral() const;
  Weight to_integral() const;  // throws NotInRootLattice if some coordinate is fractional
  std::string str() const;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace affhecke
