#include "affhecke/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "affhecke/error.hpp"

namespace affhecke {

namespace {

using Matrix = std::vector<std::vector<Int>>;

Matrix cartan_matrix_for(char series, int n) {
  Matrix c(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
  auto at = [&](int i, int j) -> Int& { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  switch (series) {
    case 'A':
    case 'B':
    case 'C':
      for (int i = 0; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      // B_n: alpha_n short, so <alpha_{n-1}, alpha_n^vee> = -2.
      if (series == 'B' && n >= 2) at(n - 1, n - 2) = -2;
      if (series == 'C' && n >= 2) at(n - 2, n - 1) = -2;
      break;
    case 'D':
      // D4: node 1 is the branch point.
      at(0, 1) = at(1, 0) = -1;
      at(1, 2) = at(2, 1) = -1;
      at(1, 3) = at(3, 1) = -1;
      break;
    case 'F':
      at(0, 1) = at(1, 0) = -1;
      at(1, 2) = -1;
      at(2, 1) = -2;
      at(2, 3) = at(3, 2) = -1;
      break;
    case 'G':
      // alpha_1 short, alpha_2 long.
      at(0, 1) = -3;
      at(1, 0) = -1;
      break;
    default:
      break;
  }
  return c;
}

std::optional<int> expected_root_count(char series, int n) {
  switch (series) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'F': return 24;
    case 'G': return 6;
    default: return std::nullopt;
  }
}

// Integer symmetrizer d with d_i c_ij = d_j c_ji, normalized so min d = 1.
std::vector<Int> symmetrizer(const Matrix& c) {
  const int n = static_cast<int>(c.size());
  std::vector<std::optional<Rational>> d(static_cast<std::size_t>(n));
  d[0] = Rational(1);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      Int cij = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      Int cji = c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (i == j || cij == 0) continue;
      if (cji == 0) fail(ErrorCode::UnknownType, "Cartan matrix is not symmetrizable");
      Rational dj = *d[static_cast<std::size_t>(i)] * Rational(cij, cji);
      auto& slot = d[static_cast<std::size_t>(j)];
      if (!slot) {
        slot = dj;
        queue.push_back(j);
      } else if (*slot != dj) {
        fail(ErrorCode::UnknownType, "Cartan matrix is not symmetrizable");
      }
    }
  }
  Rational dmin;
  bool first = true;
  for (const auto& v : d) {
    if (!v) fail(ErrorCode::UnknownType, "Dynkin diagram is disconnected; only irreducible types are supported");
    if (first || *v < dmin) dmin = *v;
    first = false;
  }
  std::vector<Int> out;
  for (const auto& v : d) {
    Rational r = *v / dmin;
    if (r.denominator() != 1 || r.numerator() < 1 || r.numerator() > 3)
      fail(ErrorCode::UnknownType, "root length ratios outside {1,2,3}");
    out.push_back(r.numerator());
  }
  return out;
}

bool positive_definite(const Matrix& c, const std::vector<Int>& d) {
  const std::size_t n = c.size();
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = Rational(d[i] * c[i][j]);
  // Gaussian elimination without pivoting: all pivots positive iff positive definite.
  for (std::size_t k = 0; k < n; ++k) {
    if (b[k][k].numerator() <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = b[i][k] / b[k][k];
      for (std::size_t j = k; j < n; ++j) b[i][j] -= f * b[k][j];
    }
  }
  return true;
}

std::vector<Rational> invert(const Matrix& c) {
  const std::size_t n = c.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(c[i][j]);
    a[i][n + i] = Rational(1);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].numerator() == 0) ++p;
    if (p == n) fail(ErrorCode::UnknownType, "singular Cartan matrix");
    std::swap(a[p], a[k]);
    Rational piv = a[k][k];
    for (auto& v : a[k]) v /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k].numerator() == 0) continue;
      Rational f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rational> inv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = a[i][n + j];
  return inv;
}

bool is_nonnegative(const Weight& w) {
  for (Int v : w.coords())
    if (v < 0) return false;
  return true;
}

}  // namespace

Weight RootSystem::simple_root(int i) const {
  Weight w(rank_);
  w[i] = 1;
  return w;
}

void RootSystem::check_rank(const Weight& w) const {
  if (w.rank() != rank_)
    fail(ErrorCode::DimensionMismatch, "expected a rank-" + std::to_string(rank_) + " vector, got " + w.str());
}

Int RootSystem::pair_simple(const Weight& lambda, int i) const {
  Int s = 0;
  for (int k = 0; k < rank_; ++k) s += cartan(i, k) * lambda[k];
  return s;
}

Int RootSystem::pair_coroot(const Weight& lambda, int j) const {
  Int s = 0;
  for (int k = 0; k < rank_; ++k) s += pairing_entry(j, k) * lambda[k];
  return s;
}

int RootSystem::root_index(const Weight& beta) const {
  if (beta.rank() != rank_) return -1;
  auto it = std::find(roots_.begin(), roots_.end(), beta);
  if (it != roots_.end()) return static_cast<int>(it - roots_.begin());
  it = std::find(roots_.begin(), roots_.end(), -beta);
  if (it != roots_.end()) return static_cast<int>(it - roots_.begin());
  return -1;
}

RationalWeight RootSystem::as_rational(const Weight& w) const {
  check_rank(w);
  RationalWeight r;
  r.basis = WeightBasis::Root;
  for (Int v : w.coords()) r.coords.emplace_back(v);
  return r;
}

RationalWeight RootSystem::to_fundamental(const RationalWeight& w) const {
  if (w.basis == WeightBasis::Fundamental) return w;
  if (static_cast<int>(w.coords.size()) != rank_) fail(ErrorCode::DimensionMismatch, "weight of wrong rank");
  RationalWeight out;
  out.basis = WeightBasis::Fundamental;
  for (int i = 0; i < rank_; ++i) {
    Rational s(0);
    for (int k = 0; k < rank_; ++k) s += Rational(cartan(i, k)) * w.coords[static_cast<std::size_t>(k)];
    out.coords.push_back(s);
  }
  return out;
}

RationalWeight RootSystem::to_root(const RationalWeight& w) const {
  if (w.basis == WeightBasis::Root) return w;
  if (static_cast<int>(w.coords.size()) != rank_) fail(ErrorCode::DimensionMismatch, "weight of wrong rank");
  RationalWeight out;
  out.basis = WeightBasis::Root;
  for (int i = 0; i < rank_; ++i) {
    Rational s(0);
    for (int k = 0; k < rank_; ++k)
      s += cartan_inverse_[static_cast<std::size_t>(i * rank_ + k)] * w.coords[static_cast<std::size_t>(k)];
    out.coords.push_back(s);
  }
  return out;
}

RationalWeight RootSystem::rho(WeightBasis basis) const {
  RationalWeight r;
  r.basis = WeightBasis::Fundamental;
  r.coords.assign(static_cast<std::size_t>(rank_), Rational(1));
  return basis == WeightBasis::Fundamental ? r : to_root(r);
}

bool RootSystem::is_dominant(const Weight& lambda) const {
  check_rank(lambda);
  for (int i = 0; i < rank_; ++i)
    if (pair_simple(lambda, i) < 0) return false;
  return true;
}

bool RootSystem::is_antidominant(const Weight& lambda) const {
  check_rank(lambda);
  for (int i = 0; i < rank_; ++i)
    if (pair_simple(lambda, i) > 0) return false;
  return true;
}

Weight RootSystem::reflect_simple(const Weight& lambda, int i) const {
  check_rank(lambda);
  Weight out = lambda;
  out[i] -= pair_simple(lambda, i);
  return out;
}

Weight RootSystem::reflect(const Weight& lambda, int j) const {
  check_rank(lambda);
  return lambda - pair_coroot(lambda, j) * root(j);
}

void RootSystem::finish() {
  const auto n = static_cast<std::size_t>(rank_);
  Matrix c(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = cartan_[i * n + j];
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i][i] != 2) fail(ErrorCode::UnknownType, "Cartan diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (c[i][j] > 0 || (c[i][j] == 0) != (c[j][i] == 0)))
        fail(ErrorCode::UnknownType, "invalid off-diagonal Cartan entries");
  }
  d_ = symmetrizer(c);
  if (!positive_definite(c, d_)) fail(ErrorCode::UnknownType, "Cartan matrix is not of finite type");
  cartan_inverse_ = invert(c);

  // Root closure under simple reflections, starting from the simple roots.
  std::set<Weight> seen;
  std::deque<Weight> queue;
  for (int i = 0; i < rank_; ++i) {
    seen.insert(simple_root(i));
    queue.push_back(simple_root(i));
  }
  while (!queue.empty()) {
    Weight beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      Weight img = reflect_simple(beta, i);
      if (is_nonnegative(img) && !img.is_zero() && seen.insert(img).second) {
        if (seen.size() > 4096) fail(ErrorCode::UnknownType, "root closure does not terminate");
        queue.push_back(img);
      }
    }
  }
  roots_.assign(seen.begin(), seen.end());
  std::sort(roots_.begin(), roots_.end(), [](const Weight& a, const Weight& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return b < a;
  });

  auto form = [&](const Weight& a, const Weight& b) {
    Int s = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) s += a[i] * b[j] * d_[static_cast<std::size_t>(i)] * cartan(i, j);
    return s;
  };

  coroots_.clear();
  root_norms_.clear();
  coroot_heights_.clear();
  for (const Weight& beta : roots_) {
    Int sq = form(beta, beta);
    if (sq % 2 != 0) fail(ErrorCode::InternalInconsistency, "odd root norm");
    Int norm = sq / 2;
    Weight cor(rank_);
    for (int i = 0; i < rank_; ++i) {
      Int num = beta[i] * d_[static_cast<std::size_t>(i)];
      if (num % norm != 0) fail(ErrorCode::InternalInconsistency, "non-integral coroot");
      cor[i] = num / norm;
    }
    root_norms_.push_back(norm);
    coroots_.push_back(cor);
    coroot_heights_.push_back(cor.height());
  }

  pairing_.assign(roots_.size() * n, 0);
  for (std::size_t j = 0; j < roots_.size(); ++j)
    for (int k = 0; k < rank_; ++k) {
      Int s = 0;
      for (int i = 0; i < rank_; ++i) s += coroots_[j][i] * cartan(i, k);
      pairing_[j * n + static_cast<std::size_t>(k)] = s;
    }

  two_rho_ = Weight(rank_);
  for (const Weight& beta : roots_) two_rho_ += beta;

  highest_ = static_cast<int>(roots_.size()) - 1;
  coxeter_number_ = static_cast<int>(roots_.back().height()) + 1;
  dominant_short_ = -1;
  for (std::size_t j = 0; j < roots_.size(); ++j)
    if (root_norms_[j] == 1 && is_dominant(roots_[j])) dominant_short_ = static_cast<int>(j);
  if (dominant_short_ < 0) fail(ErrorCode::InternalInconsistency, "no dominant short root");
}

RootSystem root_system_from_cartan(const std::vector<std::vector<Int>>& cartan, const std::string& label) {
  const std::size_t n = cartan.size();
  if (n == 0 || n > static_cast<std::size_t>(kMaxRank))
    fail(ErrorCode::UnknownType, "rank must be between 1 and " + std::to_string(kMaxRank));
  RootSystem rs;
  rs.label_ = label;
  rs.rank_ = static_cast<int>(n);
  for (const auto& row : cartan) {
    if (row.size() != n) fail(ErrorCode::UnknownType, "Cartan matrix must be square");
    rs.cartan_.insert(rs.cartan_.end(), row.begin(), row.end());
  }
  rs.finish();
  return rs;
}

RootSystem build_root_system(const std::string& type_label) {
  if (type_label.size() < 2) fail(ErrorCode::UnknownType, "unsupported type '" + type_label + "'");
  char series = static_cast<char>(std::toupper(static_cast<unsigned char>(type_label[0])));
  int n = 0;
  for (std::size_t i = 1; i < type_label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(type_label[i]))) fail(ErrorCode::UnknownType, "unsupported type '" + type_label + "'");
    n = n * 10 + (type_label[i] - '0');
    if (n > 64) break;
  }
  bool ok = (series == 'A' && n >= 1 && n <= 4) || ((series == 'B' || series == 'C') && n >= 2 && n <= 4) ||
            (series == 'D' && n == 4) || (series == 'F' && n == 4) || (series == 'G' && n == 2);
  if (!ok) fail(ErrorCode::UnknownType, "unsupported type '" + type_label + "'");
  std::string label = std::string(1, series) + std::to_string(n);
  RootSystem rs = root_system_from_cartan(cartan_matrix_for(series, n), label);
  if (auto expected = expected_root_count(series, n); expected && *expected != rs.num_positive_roots())
    fail(ErrorCode::InternalInconsistency, label + ": root closure produced the wrong number of roots");
  return rs;
}

bool dominance_leq(const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != mu.rank()) fail(ErrorCode::DimensionMismatch, "dominance_leq on vectors of different rank");
  for (int i = 0; i < lambda.rank(); ++i)
    if (mu[i] - lambda[i] < 0) return false;
  return true;
}

bool dominance_leq(const RationalWeight& lambda, const RationalWeight& mu) {
  if (lambda.basis != WeightBasis::Root || mu.basis != WeightBasis::Root)
    fail(ErrorCode::InvalidArgument, "dominance_leq expects root coordinates");
  return dominance_leq(lambda.to_integral(), mu.to_integral());
}

}  // namespace affhecke
