#include "affhecke/orders.hpp"

#include <algorithm>
#include <deque>

#include "affhecke/error.hpp"

namespace affhecke {

Int depth_certificate(const AffineWeylGroup& g, std::span<const AffineElement> zs, Int margin) {
  const RootSystem& rs = g.roots();
  Int n0 = 1;
  // <2rho, alpha_i^vee> = 2, so we need 2N > <lambda, alpha_i^vee> + margin.
  for (const AffineElement& z : zs)
    for (int i = 0; i < rs.rank(); ++i) {
      Int p = rs.pair_simple(z.t, i) + margin;
      Int need = p >= 0 ? p / 2 + 1 : 1;
      n0 = std::max(n0, need);
    }
  return n0;
}

StabVerdict ramp_until_stable(Int n0, const StabOrderOptions& opts, const std::function<bool(Int)>& test) {
  std::deque<bool> recent;
  for (Int n = n0; n <= opts.max_n; ++n) {
    recent.push_back(test(n));
    if (static_cast<int>(recent.size()) > opts.agreement) recent.pop_front();
    if (static_cast<int>(recent.size()) == opts.agreement &&
        std::all_of(recent.begin(), recent.end(), [&](bool b) { return b == recent.front(); }))
      return {recent.front(), n - opts.agreement + 1};
  }
  fail(ErrorCode::StabilizationInconclusive,
       "translated test did not settle by N = " + std::to_string(opts.max_n) + " (start " + std::to_string(n0) + ")");
}

StabVerdict stab_compare(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y,
                         const StabOrderOptions& opts) {
  g.check(x);
  g.check(y);
  if (x == y) return {true, -1};
  if (opts.length_shortcut && g.stab_length(x) >= g.stab_length(y)) return {false, -1};
  const Int margin = g.finite().length(x.w) + g.finite().length(y.w);
  const AffineElement zs[] = {x, y};
  const Int n0 = depth_certificate(g, zs, margin);
  const Weight& two_rho = g.roots().two_rho();
  return ramp_until_stable(n0, opts, [&](Int n) {
    AffineElement xt{x.w, x.t - n * two_rho};
    AffineElement yt{y.w, y.t - n * two_rho};
    return g.bruhat_leq(xt, yt);
  });
}

}  // namespace affhecke
