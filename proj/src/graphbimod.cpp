#include "affhecke/graphbimod.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "affhecke/error.hpp"

namespace affhecke {

namespace {

IntMatrix simple_matrix(const RootSystem& rs, int i) {
  const std::size_t n = static_cast<std::size_t>(rs.rank()) + 1;
  IntMatrix a = mat_identity(n);
  for (int j = 0; j < rs.rank(); ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= rs.cartan(j, i);
  return a;
}

IntMatrix translation_matrix(const RootSystem& rs, const Weight& lambda) {
  const std::size_t n = static_cast<std::size_t>(rs.rank()) + 1;
  IntMatrix a = mat_identity(n);
  for (int j = 0; j < rs.rank(); ++j) a[n - 1][static_cast<std::size_t>(j)] = rs.pair_simple(lambda, j);
  return a;
}

std::vector<std::vector<int>> monomials(int nvars, int degree) {
  std::vector<std::vector<int>> out;
  if (degree < 0) return out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  // Enumerate exponent vectors of the given total degree.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(var)] = a;
      self(self, var + 1, left - a);
    }
  };
  if (nvars > 0) rec(rec, 0, degree);
  return out;
}

// Matrix of d: C^k_D -> C^{k+1}_{D+1}; rows index the target basis.
IntMatrix koszul_differential(const IntMatrix& forms, int nvars, int degree, int k) {
  const int nforms = forms.empty() ? 0 : static_cast<int>(forms[0].size());
  auto src_mon = monomials(nvars, degree);
  auto dst_mon = monomials(nvars, degree + 1);
  std::map<std::vector<int>, std::size_t> dst_index;
  for (std::size_t i = 0; i < dst_mon.size(); ++i) dst_index[dst_mon[i]] = i;
  std::vector<unsigned> src_sets, dst_sets;
  std::map<unsigned, std::size_t> dst_set_index;
  for (unsigned s = 0; s < (1U << nforms); ++s) {
    if (__builtin_popcount(s) == k) src_sets.push_back(s);
    if (__builtin_popcount(s) == k + 1) {
      dst_set_index[s] = dst_sets.size();
      dst_sets.push_back(s);
    }
  }
  IntMatrix d(dst_mon.size() * dst_sets.size(), std::vector<Int>(src_mon.size() * src_sets.size(), 0));
  for (std::size_t a = 0; a < src_mon.size(); ++a)
    for (std::size_t b = 0; b < src_sets.size(); ++b) {
      const unsigned S = src_sets[b];
      const std::size_t col = a * src_sets.size() + b;
      for (int i = 0; i < nforms; ++i) {
        if ((S >> i) & 1U) continue;
        const Int sign = (__builtin_popcount(S & ((1U << i) - 1)) % 2) ? -1 : 1;
        const std::size_t set_row = dst_set_index.at(S | (1U << i));
        for (int v = 0; v < nvars; ++v) {
          const Int c = forms[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
          if (c == 0) continue;
          auto m = src_mon[a];
          ++m[static_cast<std::size_t>(v)];
          d[dst_index.at(m) * dst_sets.size() + set_row][col] += sign * c;
        }
      }
    }
  return d;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IntMatrix hh_matrix(const AffineWeylGroup& g, const AffineElement& x) {
  g.check(x);
  const RootSystem& rs = g.roots();
  IntMatrix a = mat_identity(static_cast<std::size_t>(rs.rank()) + 1);
  for (int i : g.finite().word(x.w)) a = mat_mul(a, simple_matrix(rs, i));
  return mat_mul(a, translation_matrix(rs, x.t));
}

IntMatrix difference_forms(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y) {
  return mat_sub(hh_matrix(g, g.inverse(y)), hh_matrix(g, g.inverse(x)));
}

ExtDatum graph_ext(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y) {
  g.check(x);
  g.check(y);
  const IntMatrix G = difference_forms(g, x, y);
  const int m = static_cast<int>(exact_rank(G));
  ExtDatum e;
  if (m == 0) {
    e.kind = ExtKind::SelfExt;
    e.rank = g.rank() + 1;
    return e;
  }
  if (m >= 2) {
    e.kind = ExtKind::HigherCodim;
    e.codim = m;
    return e;
  }
  const std::size_t n = G.size();
  for (std::size_t j = 0; j < n; ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) nonzero = nonzero || G[i][j] != 0;
    if (!nonzero) continue;
    Weight c(g.rank());
    for (int i = 0; i < g.rank(); ++i) c[i] = G[static_cast<std::size_t>(i)][j];
    e.kind = ExtKind::Wall;
    // Column (c, h) is the form c + h*hbar = c - k*hbar.
    e.form = HyperplaneForm::make(c, -G[n - 1][j]);
    return e;
  }
  fail(ErrorCode::InternalInconsistency, "rank-one difference with no nonzero column");
}

std::string ExtDatum::str() const {
  switch (kind) {
    case ExtKind::Zero: return "Zero";
    case ExtKind::SelfExt: return "SelfExt(" + std::to_string(rank) + ")";
    case ExtKind::Wall: return "Wall(" + form->str() + ")";
    case ExtKind::HigherCodim: return "HigherCodim(" + std::to_string(codim) + ")";
  }
  return "?";
}

std::vector<long long> koszul_dims(const IntMatrix& forms, int max_degree, int k) {
  if (max_degree > kMaxKoszulDegree)
    fail(ErrorCode::DegreeCapExceeded, "degree " + std::to_string(max_degree) + " exceeds cap " +
                                           std::to_string(kMaxKoszulDegree));
  if (max_degree < 0) fail(ErrorCode::InvalidArgument, "negative degree");
  const int nvars = static_cast<int>(forms.size());
  const int nforms = forms.empty() ? 0 : static_cast<int>(forms[0].size());
  std::vector<long long> dims;
  for (int D = 0; D <= max_degree; ++D) {
    const long long dim_c = binom(nvars + D - 1, D) * binom(nforms, k);
    const long long rank_out = k >= 0 && k < nforms ? static_cast<long long>(exact_rank(koszul_differential(forms, nvars, D, k))) : 0;
    const long long rank_in =
        k >= 1 && D >= 1 ? static_cast<long long>(exact_rank(koszul_differential(forms, nvars, D - 1, k - 1))) : 0;
    dims.push_back(dim_c - rank_out - rank_in);
  }
  return dims;
}

std::vector<long long> koszul_ext_dims(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y,
                                       int max_degree, int k) {
  return koszul_dims(difference_forms(g, x, y), max_degree, k);
}

}  // namespace affhecke
