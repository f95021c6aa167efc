#include "affhecke/hecke.hpp"

#include <algorithm>
#include <sstream>

#include "affhecke/error.hpp"

namespace affhecke {

namespace {

const LaurentPoly& q() {
  static const LaurentPoly c = LaurentPoly::v_minus_vinv();
  return c;
}

bool canonical_less(const AffineWeylGroup& g, const AffineElement& a, const AffineElement& b) {
  const Int la = g.length(a), lb = g.length(b);
  if (la != lb) return la < lb;
  return a < b;
}

}  // namespace

HeckeElement::HeckeElement(AffineWeylGroupPtr g) : g_(std::move(g)) {
  if (!g_) fail(ErrorCode::InvalidArgument, "Hecke element without a group");
}

HeckeElement HeckeElement::basis(AffineWeylGroupPtr g, const AffineElement& x, const LaurentPoly& c) {
  HeckeElement h(std::move(g));
  h.g_->check(x);
  h.add_term(x, c);
  return h;
}

LaurentPoly HeckeElement::coeff(const AffineElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::vector<std::pair<AffineElement, LaurentPoly>> HeckeElement::terms() const {
  std::vector<std::pair<AffineElement, LaurentPoly>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return canonical_less(*g_, a.first, b.first); });
  return out;
}

Int HeckeElement::max_length() const {
  Int m = 0;
  for (const auto& [x, c] : terms_) m = std::max(m, g_->length(x));
  return m;
}

void HeckeElement::add_term(const AffineElement& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void HeckeElement::check_same(const HeckeElement& o) const {
  if (g_ != o.g_ && !(g_->roots() == o.g_->roots()))
    fail(ErrorCode::RootSystemMismatch, "Hecke elements over " + g_->roots().type_label() + " and " +
                                            o.g_->roots().type_label());
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  check_same(o);
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  check_same(o);
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

HeckeElement& HeckeElement::scale(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, p] : terms_) p *= c;
  return *this;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

std::map<AffineElement, Int> HeckeElement::specialize_at_one() const {
  std::map<AffineElement, Int> out;
  for (const auto& [x, c] : terms_) {
    Int e = c.eval_at_one();
    if (e != 0) out[x] = e;
  }
  return out;
}

std::string HeckeElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : terms()) {
    os << (first ? "" : " + ") << '(' << c.str() << ")H[" << g_->format(x) << ']';
    first = false;
  }
  return os.str();
}

HeckeElement h_std(AffineWeylGroupPtr g, const AffineElement& x) { return HeckeElement::basis(std::move(g), x); }

// H_z H_s = H_{zs} if zs > z, else H_{zs} + (v - v^{-1}) H_z; mirrored on the left.
// H_s^{-1} = H_s - (v - v^{-1}), so H_z H_s^{-1} = H_{zs} if zs < z, else H_{zs} - (v - v^{-1}) H_z.

HeckeElement right_mul_gen(const HeckeElement& a, int s) {
  const AffineWeylGroup& g = a.group();
  HeckeElement out(a.group_ptr());
  for (const auto& [z, c] : a.raw_terms()) {
    AffineElement zs = g.right_multiply(z, s);
    out.add_term(zs, c);
    if (g.length(zs) < g.length(z)) out.add_term(z, c * q());
  }
  return out;
}

HeckeElement left_mul_gen(int s, const HeckeElement& a) {
  const AffineWeylGroup& g = a.group();
  HeckeElement out(a.group_ptr());
  for (const auto& [z, c] : a.raw_terms()) {
    AffineElement sz = g.left_multiply(s, z);
    out.add_term(sz, c);
    if (g.length(sz) < g.length(z)) out.add_term(z, c * q());
  }
  return out;
}

HeckeElement right_mul_gen_inverse(const HeckeElement& a, int s) {
  const AffineWeylGroup& g = a.group();
  HeckeElement out(a.group_ptr());
  for (const auto& [z, c] : a.raw_terms()) {
    AffineElement zs = g.right_multiply(z, s);
    out.add_term(zs, c);
    if (g.length(zs) > g.length(z)) out.add_term(z, -(c * q()));
  }
  return out;
}

HeckeElement left_mul_gen_inverse(int s, const HeckeElement& a) {
  const AffineWeylGroup& g = a.group();
  HeckeElement out(a.group_ptr());
  for (const auto& [z, c] : a.raw_terms()) {
    AffineElement sz = g.left_multiply(s, z);
    out.add_term(sz, c);
    if (g.length(sz) > g.length(z)) out.add_term(z, -(c * q()));
  }
  return out;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  a.check_same(b);
  const AffineWeylGroup& g = a.group();
  Int cost_right = 0, cost_left = 0;
  for (const auto& [y, c] : b.raw_terms()) cost_right += g.length(y);
  for (const auto& [x, c] : a.raw_terms()) cost_left += g.length(x);
  HeckeElement out(a.group_ptr());
  if (cost_right <= cost_left) {
    // sum_y b_y (a H_y), with a H_y built generator by generator.
    for (const auto& [y, c] : b.raw_terms()) {
      HeckeElement t = a;
      for (int s : g.reduced_word(y)) t = right_mul_gen(t, s);
      out += t.scale(c);
    }
  } else {
    for (const auto& [x, c] : a.raw_terms()) {
      HeckeElement t = b;
      auto word = g.reduced_word(x);
      for (auto it = word.rbegin(); it != word.rend(); ++it) t = left_mul_gen(*it, t);
      out += t.scale(c);
    }
  }
  return out;
}

HeckeElement braid_neg(AffineWeylGroupPtr g, const AffineElement& x) {
  HeckeElement out = h_std(g, g->identity());
  // D_x = H_{s_1}^{-1} ... H_{s_k}^{-1} for a reduced word x = s_1 ... s_k.
  for (int s : g->reduced_word(x)) out = right_mul_gen_inverse(out, s);
  return out;
}

HeckeElement bernstein_split(AffineWeylGroupPtr g, const Weight& mu, const Weight& nu) {
  const RootSystem& rs = g->roots();
  rs.check_rank(mu);
  rs.check_rank(nu);
  if (!rs.is_dominant(mu) || !rs.is_dominant(nu))
    fail(ErrorCode::InvalidArgument, "splitting " + mu.str() + " - " + nu.str() + " is not dominant");
  HeckeElement out = h_std(g, g->translation(mu));
  // H_{t_nu}^{-1} = D_{t_{-nu}}.
  for (int s : g->reduced_word(g->translation(-nu))) out = right_mul_gen_inverse(out, s);
  return out;
}

HeckeElement bernstein(AffineWeylGroupPtr g, const Weight& lambda) {
  const RootSystem& rs = g->roots();
  rs.check_rank(lambda);
  Int n = 0;
  while (!rs.is_dominant(lambda + n * rs.two_rho())) ++n;
  return bernstein_split(g, lambda + n * rs.two_rho(), n * rs.two_rho());
}

HeckeElement stab_class_at(AffineWeylGroupPtr g, const AffineElement& x, Int n) {
  g->check(x);
  const Weight lambda = n * g->roots().two_rho();
  HeckeElement out = h_std(g, g->translation(lambda));
  const AffineElement z{x.w, x.t - lambda};
  const auto word = g->reduced_word(z);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = left_mul_gen_inverse(*it, out);
  return out;
}

StabClass stab_class(AffineWeylGroupPtr g, const AffineElement& x, Int max_n) {
  const Weight& two_rho = g->roots().two_rho();
  const Int step = g->length(g->translation(-two_rho));
  HeckeElement cur = stab_class_at(g, x, 0);
  for (Int n = 0; n < max_n; ++n) {
    HeckeElement next = stab_class_at(g, x, n + 1);
    const Int ln = g->length({x.w, x.t - n * two_rho});
    const Int ln1 = g->length({x.w, x.t - (n + 1) * two_rho});
    if (ln1 == ln + step && cur == next) return {std::move(cur), n};
    cur = std::move(next);
  }
  fail(ErrorCode::StabilizationInconclusive, "stabilized class of " + g->format(x) + " did not settle by n = " +
                                                 std::to_string(max_n));
}

}  // namespace affhecke
