#include "affhecke/blocks.hpp"

#include <queue>
#include <unordered_set>

#include "affhecke/error.hpp"

namespace affhecke {

namespace {

void check_d(Int d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "dilation d must be positive");
}

// <lambda + rho, alpha_i^vee>
Int shifted_simple(const RootSystem& rs, const Weight& lambda, int i) { return rs.pair_simple(lambda, i) + 1; }

// <lambda + rho, theta^vee>
Int shifted_theta(const RootSystem& rs, const Weight& lambda) {
  const int th = rs.dominant_short_root();
  return rs.pair_coroot(lambda, th) + rs.rho_pair_coroot(th);
}

}  // namespace

Weight dot_act(const AffineWeylGroup& g, Int d, const AffineElement& x, const Weight& lambda) {
  check_d(d);
  g.check(x);
  g.roots().check_rank(lambda);
  return g.finite().dot(x.w, lambda + d * x.t);
}

bool in_fundamental_domain(const AffineWeylGroup& g, Int d, const Weight& lambda) {
  check_d(d);
  const RootSystem& rs = g.roots();
  rs.check_rank(lambda);
  for (int i = 0; i < rs.rank(); ++i)
    if (shifted_simple(rs, lambda, i) > 0) return false;
  return shifted_theta(rs, lambda) >= -d;
}

GeneratorSet dot_stabilizer(const AffineWeylGroup& g, Int d, const Weight& lambda0) {
  if (!in_fundamental_domain(g, d, lambda0))
    fail(ErrorCode::NotFundamental, lambda0.str() + " is not in the fundamental domain");
  const RootSystem& rs = g.roots();
  GeneratorSet J;
  if (shifted_theta(rs, lambda0) == -d) J.insert(0);
  for (int i = 0; i < rs.rank(); ++i)
    if (shifted_simple(rs, lambda0, i) == 0) J.insert(i + 1);
  return J;
}

BlockLocation locate_block(const AffineWeylGroup& g, Int d, const Weight& lambda, Int max_steps) {
  check_d(d);
  const RootSystem& rs = g.roots();
  rs.check_rank(lambda);
  Weight nu = lambda;
  AffineElement x = g.identity();
  for (Int step = 0;; ++step) {
    if (step > max_steps) fail(ErrorCode::NonTermination, "alcove walk from " + lambda.str() + " did not stop");
    int s = -1;
    for (int i = 0; i < rs.rank() && s < 0; ++i)
      if (shifted_simple(rs, nu, i) > 0) s = i + 1;
    if (s < 0 && shifted_theta(rs, nu) < -d) s = 0;
    if (s < 0) break;
    const AffineElement gen = g.generator(s);
    nu = dot_act(g, d, gen, nu);
    x = g.multiply(gen, x);
  }
  BlockLocation loc{nu, x, dot_stabilizer(g, d, nu)};
  loc.x = coset_min_rep(g, loc.J, x);
  return loc;
}

void check_proper(const AffineWeylGroup& g, GeneratorSet J) {
  if (J.size() >= g.num_generators()) fail(ErrorCode::InfiniteParabolic, "J = I^a generates an infinite group");
  if ((J.bits() >> g.num_generators()) != 0) fail(ErrorCode::InvalidArgument, "J contains an unknown generator");
}

std::vector<AffineElement> parabolic_elements(const AffineWeylGroup& g, GeneratorSet J) {
  check_proper(g, J);
  std::vector<AffineElement> out{g.identity()};
  std::unordered_set<AffineElement, AffineElementHash> seen{g.identity()};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int s : J.list()) {
      AffineElement y = g.right_multiply(out[head], s);
      if (seen.insert(y).second) out.push_back(y);
    }
  return out;
}

AffineElement coset_min_rep(const AffineWeylGroup& g, GeneratorSet J, const AffineElement& x) {
  check_proper(g, J);
  AffineElement y = x;
  Int l = g.length(y);
  for (bool moved = true; moved;) {
    moved = false;
    for (int s : J.list()) {
      AffineElement z = g.left_multiply(s, y);
      Int lz = g.length(z);
      if (lz < l) {
        y = z;
        l = lz;
        moved = true;
      }
    }
  }
  return y;
}

bool is_coset_min_rep(const AffineWeylGroup& g, GeneratorSet J, const AffineElement& x) {
  check_proper(g, J);
  for (int s : J.list())
    if (g.is_left_descent(s, x)) return false;
  return true;
}

bool coset_leq(const AffineWeylGroup& g, GeneratorSet J, const AffineElement& x, const AffineElement& y,
               CosetOrder order, const StabOrderOptions& opts) {
  const AffineElement mx = coset_min_rep(g, J, x);
  const AffineElement my = coset_min_rep(g, J, y);
  if (order == CosetOrder::Bruhat) return g.bruhat_leq(mx, my);
  if (mx == my) return true;
  const Int margin = g.finite().length(mx.w) + g.finite().length(my.w) + 2 * static_cast<Int>(J.size());
  const AffineElement zs[] = {mx, my};
  const Int n0 = depth_certificate(g, zs, margin);
  const Weight& two_rho = g.roots().two_rho();
  return ramp_until_stable(n0, opts, [&](Int n) {
           AffineElement xt = coset_min_rep(g, J, {mx.w, mx.t - n * two_rho});
           AffineElement yt = coset_min_rep(g, J, {my.w, my.t - n * two_rho});
           return g.bruhat_leq(xt, yt);
         })
      .leq;
}

}  // namespace affhecke
