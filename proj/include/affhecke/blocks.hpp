#pragma once

#include <vector>

#include "affhecke/affine.hpp"
#include "affhecke/orders.hpp"

namespace affhecke {

/// x . lambda for x = w t_mu under the d-dilated dot action: w(lambda + d mu + rho) - rho.
Weight dot_act(const AffineWeylGroup& g, Int d, const AffineElement& x, const Weight& lambda);

/// <lambda + rho, alpha_i^vee> <= 0 for all i and <lambda + rho, theta^vee> >= -d.
bool in_fundamental_domain(const AffineWeylGroup& g, Int d, const Weight& lambda);

/// Simple affine reflections fixing a weight of the fundamental domain; NotFundamental otherwise.
GeneratorSet dot_stabilizer(const AffineWeylGroup& g, Int d, const Weight& lambda0);

struct BlockLocation {
  Weight fundamental;  // lambda°
  AffineElement x;     // minimal in W_J x, with x . lambda = lambda°
  GeneratorSet J;
};

BlockLocation locate_block(const AffineWeylGroup& g, Int d, const Weight& lambda, Int max_steps = 1000000);

/// Elements of the (finite) standard parabolic subgroup W_J; InfiniteParabolic if J = I^a.
std::vector<AffineElement> parabolic_elements(const AffineWeylGroup& g, GeneratorSet J);

/// The unique element of W_J x without left descents in J.
AffineElement coset_min_rep(const AffineWeylGroup& g, GeneratorSet J, const AffineElement& x);
bool is_coset_min_rep(const AffineWeylGroup& g, GeneratorSet J, const AffineElement& x);

enum class CosetOrder { Bruhat, Stab };

/// Bruhat: comparison of minimal representatives. Stab: W_J x t_{-mu} <= W_J y t_{-mu}
/// in the coset Bruhat order for deep mu = N * 2rho, ramped like stab_compare.
bool coset_leq(const AffineWeylGroup& g, GeneratorSet J, const AffineElement& x, const AffineElement& y,
               CosetOrder order, const StabOrderOptions& opts = {});

void check_proper(const AffineWeylGroup& g, GeneratorSet J);

}  // namespace affhecke
