#include "affhecke/affine.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "affhecke/error.hpp"
#include "affhecke/kernels.hpp"

namespace affhecke {

std::size_t hash_value(const AffineElement& x) noexcept { return hash_combine(hash_value(x.t), x.w); }

GeneratorSet GeneratorSet::from_list(std::span<const int> gens) {
  GeneratorSet g;
  for (int s : gens) {
    if (s < 0 || s > kMaxRank) fail(ErrorCode::InvalidArgument, "generator index out of range: " + std::to_string(s));
    g.insert(s);
  }
  return g;
}

std::vector<int> GeneratorSet::list() const {
  std::vector<int> out;
  for (int s = 0; s <= kMaxRank; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

std::string GeneratorSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int s : list()) {
    os << (first ? "" : ",") << 's' << s;
    first = false;
  }
  os << '}';
  return os.str();
}

HyperplaneForm HyperplaneForm::make(const Weight& coroot_part, Int k) {
  Int g = std::abs(k);
  for (Int c : coroot_part.coords()) g = std::gcd(g, std::abs(c));
  if (g == 0) fail(ErrorCode::InvalidArgument, "the zero form is not a hyperplane");
  HyperplaneForm f;
  f.coroot_ = coroot_part;
  f.k_ = k;
  for (int i = 0; i < f.coroot_.rank(); ++i) f.coroot_[i] /= g;
  f.k_ /= g;
  Int lead = 0;
  for (Int c : f.coroot_.coords())
    if (c != 0) {
      lead = c;
      break;
    }
  if (lead == 0) lead = -f.k_;  // hbar coefficient
  if (lead < 0) {
    f.coroot_ *= -1;
    f.k_ = -f.k_;
  }
  return f;
}

HyperplaneForm HyperplaneForm::hbar(int rank) { return make(Weight(rank), -1); }

std::string HyperplaneForm::str() const {
  std::ostringstream os;
  if (is_hbar()) return "hbar";
  os << "coroot" << coroot_.str();
  if (k_ > 0) os << " - " << k_ << " hbar";
  if (k_ < 0) os << " + " << -k_ << " hbar";
  return os.str();
}

AffineWeylGroup::AffineWeylGroup(RootSystem rs) : rs_(std::move(rs)), weyl_(rs_) {
  const std::size_t padded = weyl_.padded_root_count();
  kernel_table_.assign(padded * static_cast<std::size_t>(rs_.rank()), 0);
  for (int j = 0; j < rs_.num_positive_roots(); ++j)
    for (int k = 0; k < rs_.rank(); ++k)
      kernel_table_[static_cast<std::size_t>(k) * padded + static_cast<std::size_t>(j)] =
          static_cast<std::int32_t>(rs_.pairing_entry(j, k));
  const int theta = rs_.dominant_short_root();
  s0_ = {weyl_.reflection(theta), rs_.root(theta)};
}

std::shared_ptr<const AffineWeylGroup> AffineWeylGroup::create(const std::string& type_label) {
  return std::make_shared<const AffineWeylGroup>(build_root_system(type_label));
}

void AffineWeylGroup::check(const AffineElement& x) const {
  if (x.t.rank() != rs_.rank() || x.w >= weyl_.order())
    fail(ErrorCode::RootSystemMismatch, "element does not belong to the affine Weyl group of " + rs_.type_label());
}

AffineElement AffineWeylGroup::generator(int s) const {
  if (s < 0 || s > rs_.rank()) fail(ErrorCode::InvalidArgument, "generator index out of range: " + std::to_string(s));
  if (s == 0) return s0_;
  return {weyl_.simple(s - 1), rs_.zero()};
}

AffineElement AffineWeylGroup::translation(const Weight& lambda) const {
  rs_.check_rank(lambda);
  return {0, lambda};
}

AffineElement AffineWeylGroup::reflection(const AffineReflection& r) const {
  if (r.root < 0 || r.root >= rs_.num_positive_roots()) fail(ErrorCode::InvalidArgument, "root index out of range");
  return {weyl_.reflection(r.root), r.k * rs_.root(r.root)};
}

std::optional<AffineReflection> AffineWeylGroup::as_reflection(const AffineElement& x) const {
  const int j = weyl_.reflection_root(x.w);
  if (j < 0) return std::nullopt;
  const Weight& alpha = rs_.root(j);
  Int k = 0;
  for (int i = 0; i < rs_.rank(); ++i)
    if (alpha[i] != 0) {
      if (x.t[i] % alpha[i] != 0) return std::nullopt;
      k = x.t[i] / alpha[i];
      break;
    }
  if (x.t != k * alpha) return std::nullopt;
  return AffineReflection{j, k};
}

AffineElement AffineWeylGroup::multiply(const AffineElement& x, const AffineElement& y) const {
  check(x);
  check(y);
  return {weyl_.multiply(x.w, y.w), weyl_.act(weyl_.inverse(y.w), x.t) + y.t};
}

AffineElement AffineWeylGroup::inverse(const AffineElement& x) const {
  check(x);
  return {weyl_.inverse(x.w), -weyl_.act(x.w, x.t)};
}

AffineElement AffineWeylGroup::left_multiply(int s, const AffineElement& x) const {
  if (s == 0) return multiply(s0_, x);
  check(x);
  return {weyl_.left_simple(s - 1, x.w), x.t};
}

AffineElement AffineWeylGroup::right_multiply(const AffineElement& x, int s) const {
  check(x);
  if (s == 0) return {weyl_.multiply(x.w, s0_.w), weyl_.act(s0_.w, x.t) + s0_.t};
  if (s < 0 || s > rs_.rank()) fail(ErrorCode::InvalidArgument, "generator index out of range: " + std::to_string(s));
  return {weyl_.right_simple(x.w, s - 1), rs_.reflect_simple(x.t, s - 1)};
}

AffineElement AffineWeylGroup::from_word(std::span<const int> word) const {
  AffineElement x = identity();
  for (int s : word) x = right_multiply(x, s);
  return x;
}

Int AffineWeylGroup::length(const AffineElement& x) const {
  check(x);
  constexpr Int kLaneBound = Int{1} << 20;
  bool fits = true;
  std::int32_t lambda[kMaxRank] = {};
  for (int k = 0; k < rs_.rank(); ++k) {
    if (x.t[k] >= kLaneBound || x.t[k] <= -kLaneBound) fits = false;
    lambda[k] = static_cast<std::int32_t>(x.t[k]);
  }
  if (fits)
    return kernels::length_sum(kernel_table_.data(), rs_.rank(), weyl_.padded_root_count(), lambda,
                               weyl_.negative_flags(x.w).data());
  Int total = 0;
  for (int j = 0; j < rs_.num_positive_roots(); ++j) {
    Int p = rs_.pair_coroot(x.t, j) - (weyl_.sends_negative(x.w, j) ? 1 : 0);
    total += p < 0 ? -p : p;
  }
  return total;
}

Int AffineWeylGroup::stab_length(const AffineElement& x) const {
  check(x);
  return weyl_.length(x.w) - 2 * x.t.height();
}

GeneratorSet AffineWeylGroup::left_descents(const AffineElement& x) const {
  GeneratorSet d;
  const Int l = length(x);
  for (int s = 0; s < num_generators(); ++s)
    if (length(left_multiply(s, x)) < l) d.insert(s);
  return d;
}

GeneratorSet AffineWeylGroup::right_descents(const AffineElement& x) const {
  GeneratorSet d;
  const Int l = length(x);
  for (int s = 0; s < num_generators(); ++s)
    if (length(right_multiply(x, s)) < l) d.insert(s);
  return d;
}

std::vector<int> AffineWeylGroup::reduced_word(const AffineElement& x) const {
  std::vector<int> word;
  AffineElement y = x;
  Int l = length(y);
  while (l > 0) {
    bool found = false;
    for (int s = 0; s < num_generators(); ++s) {
      AffineElement z = left_multiply(s, y);
      Int lz = length(z);
      if (lz < l) {
        if (lz != l - 1) fail(ErrorCode::InternalInconsistency, "length dropped by more than one at " + format(y));
        word.push_back(s);
        y = z;
        l = lz;
        found = true;
        break;
      }
    }
    if (!found) fail(ErrorCode::InternalInconsistency, "no descent for non-identity element " + format(y));
  }
  if (y != identity()) fail(ErrorCode::InternalInconsistency, "length-zero element is not the identity: " + format(y));
  return word;
}

bool AffineWeylGroup::bruhat_leq(const AffineElement& x0, const AffineElement& y0) const {
  AffineElement x = x0, y = y0;
  Int lx = length(x), ly = length(y);
  for (;;) {
    if (lx > ly) return false;
    if (lx == ly) return x == y;
    if (lx == 0) return true;
    // y has a left descent s: x <= y iff min(x, sx) <= sy.
    int s = 0;
    AffineElement sy;
    for (; s < num_generators(); ++s) {
      sy = left_multiply(s, y);
      if (length(sy) < ly) break;
    }
    if (s == num_generators()) fail(ErrorCode::InternalInconsistency, "no descent for " + format(y));
    AffineElement sx = left_multiply(s, x);
    Int lsx = length(sx);
    if (lsx < lx) {
      x = sx;
      lx = lsx;
    }
    y = sy;
    --ly;
  }
}

std::pair<Weight, Int> AffineWeylGroup::act_dual(const AffineElement& x, const Weight& mu, Int z) const {
  check(x);
  rs_.check_rank(mu);
  return {weyl_.act(x.w, mu + z * x.t), z};
}

std::string AffineWeylGroup::format(const AffineElement& x) const {
  std::ostringstream os;
  const auto& word = weyl_.word(x.w);
  if (word.empty() && x.t.is_zero()) return "e";
  bool first = true;
  for (int i : word) {
    os << (first ? "" : "*") << 's' << (i + 1);
    first = false;
  }
  if (!x.t.is_zero()) {
    os << (first ? "" : "*") << "t(";
    for (int i = 0; i < x.t.rank(); ++i) os << (i ? "," : "") << x.t[i];
    os << ')';
  }
  return os.str();
}

}  // namespace affhecke
