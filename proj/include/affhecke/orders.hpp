#pragma once

#include <functional>

#include "affhecke/affine.hpp"

namespace affhecke {

/// Controls the translated test x t_{-mu} <= y t_{-mu}, mu = N * 2rho.
struct StabOrderOptions {
  /// Give up (StabilizationInconclusive) once N would exceed this.
  Int max_n = 256;
  /// Number of consecutive N past the depth certificate that must agree.
  int agreement = 3;
  /// Answer pairs with l^st(x) >= l^st(y), x != y, as "not below" without the ramp.
  bool length_shortcut = true;
};

struct StabVerdict {
  bool leq = false;
  /// First N of the agreeing run, or -1 when the verdict came from a shortcut.
  Int n = -1;
};

/// Smallest N such that every translation part lambda_z - N*2rho (z in zs) pairs
/// with each simple coroot to less than -margin.
Int depth_certificate(const AffineWeylGroup& g, std::span<const AffineElement> zs, Int margin);

/// Runs test(N) for N = n0, n0+1, ... until `agreement` consecutive answers agree.
StabVerdict ramp_until_stable(Int n0, const StabOrderOptions& opts, const std::function<bool(Int)>& test);

/// Stabilized (semi-infinite) order.
StabVerdict stab_compare(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y,
                         const StabOrderOptions& opts = {});
inline bool stab_leq(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y,
                     const StabOrderOptions& opts = {}) {
  return stab_compare(g, x, y, opts).leq;
}
inline bool stab_less(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y,
                      const StabOrderOptions& opts = {}) {
  return x != y && stab_leq(g, x, y, opts);
}

}  // namespace affhecke
