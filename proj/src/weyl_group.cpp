#include "affhecke/weyl_group.hpp"

#include <algorithm>
#include <deque>

#include "affhecke/error.hpp"

namespace affhecke {

namespace {

std::vector<Int> mat_mul(const std::vector<Int>& a, const std::vector<Int>& b, int n) {
  std::vector<Int> c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Int aik = a[static_cast<std::size_t>(i * n + k)];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] += aik * b[static_cast<std::size_t>(k * n + j)];
    }
  return c;
}

Weight mat_apply(const std::vector<Int>& m, const Weight& v) {
  const int n = v.rank();
  Weight out(n);
  for (int i = 0; i < n; ++i) {
    Int s = 0;
    for (int k = 0; k < n; ++k) s += m[static_cast<std::size_t>(i * n + k)] * v[k];
    out[i] = s;
  }
  return out;
}

}  // namespace

FiniteWeylGroup::FiniteWeylGroup(const RootSystem& rs)
    : rank_(rs.rank()),
      nroots_(static_cast<std::size_t>(rs.num_positive_roots())),
      padded_((nroots_ + 7) / 8 * 8),
      two_rho_(rs.two_rho()) {
  const int n = rank_;
  std::vector<std::vector<Int>> simple(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& m = simple[static_cast<std::size_t>(i)];
    m.assign(static_cast<std::size_t>(n * n), 0);
    for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k * n + k)] = 1;
    for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(i * n + k)] -= rs.cartan(i, k);
  }

  std::vector<Int> id(static_cast<std::size_t>(n * n), 0);
  for (int k = 0; k < n; ++k) id[static_cast<std::size_t>(k * n + k)] = 1;
  matrices_.push_back(id);
  lengths_.push_back(0);
  words_.emplace_back();
  index_.emplace(two_rho_, 0);

  std::deque<WeylId> queue{0};
  while (!queue.empty()) {
    WeylId w = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      auto m = mat_mul(simple[static_cast<std::size_t>(i)], matrices_[w], n);
      Weight key = mat_apply(m, two_rho_);
      if (index_.count(key)) continue;
      if (matrices_.size() >= kMaxOrder) fail(ErrorCode::UnknownType, "Weyl group too large to enumerate");
      auto u = static_cast<WeylId>(matrices_.size());
      index_.emplace(key, u);
      matrices_.push_back(std::move(m));
      lengths_.push_back(lengths_[w] + 1);
      std::vector<int> word{i};
      word.insert(word.end(), words_[w].begin(), words_[w].end());
      words_.push_back(std::move(word));
      queue.push_back(u);
    }
  }

  const std::size_t order = matrices_.size();
  left_.assign(static_cast<std::size_t>(n), std::vector<WeylId>(order));
  right_.assign(order * static_cast<std::size_t>(n), 0);
  for (WeylId w = 0; w < order; ++w)
    for (int i = 0; i < n; ++i) {
      left_[static_cast<std::size_t>(i)][w] = lookup(mat_apply(simple[static_cast<std::size_t>(i)], mat_apply(matrices_[w], two_rho_)));
      right_[w * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
          lookup(mat_apply(matrices_[w], mat_apply(simple[static_cast<std::size_t>(i)], two_rho_)));
    }

  inverse_.resize(order);
  for (WeylId w = 0; w < order; ++w) {
    std::vector<int> rev(words_[w].rbegin(), words_[w].rend());
    inverse_[w] = from_word(rev);
  }

  if (order <= 2048) {
    table_.resize(order * order);
    for (WeylId u = 0; u < order; ++u)
      for (WeylId v = 0; v < order; ++v) {
        WeylId x = u;
        for (int i : words_[v]) x = right_simple(x, i);
        table_[u * order + v] = x;
      }
  }

  neg_.assign(order * nroots_, 0);
  neg_padded_.assign(order * padded_, 0);
  rho_shift_.resize(order);
  reflection_root_.assign(order, -1);
  for (WeylId w = 0; w < order; ++w) {
    for (std::size_t j = 0; j < nroots_; ++j) {
      Weight img = mat_apply(matrices_[w], rs.root(static_cast<int>(j)));
      bool negative = false;
      for (Int v : img.coords())
        if (v < 0) negative = true;
      neg_[w * nroots_ + j] = negative ? 1 : 0;
      neg_padded_[w * padded_ + j] = negative ? 1 : 0;
    }
    Weight shift = mat_apply(matrices_[w], two_rho_) - two_rho_;
    for (int i = 0; i < n; ++i) shift[i] /= 2;
    rho_shift_[w] = shift;
  }
  for (std::size_t j = 0; j < nroots_; ++j) {
    Weight img = rs.reflect(two_rho_, static_cast<int>(j));
    WeylId r = lookup(img);
    reflections_.push_back(r);
    reflection_root_[r] = static_cast<int>(j);
  }
}

WeylId FiniteWeylGroup::lookup(const Weight& image) const {
  auto it = index_.find(image);
  if (it == index_.end()) fail(ErrorCode::InternalInconsistency, "vector is not in the W-orbit of 2rho: " + image.str());
  return it->second;
}

WeylId FiniteWeylGroup::multiply(WeylId u, WeylId v) const {
  if (!table_.empty()) return table_[u * order() + v];
  WeylId x = u;
  for (int i : words_[v]) x = right_simple(x, i);
  return x;
}

Weight FiniteWeylGroup::act(WeylId w, const Weight& lambda) const {
  if (lambda.rank() != rank_) fail(ErrorCode::DimensionMismatch, "weight " + lambda.str() + " has wrong rank");
  return mat_apply(matrices_[w], lambda);
}

FiniteWeylElement FiniteWeylGroup::element(WeylId w) const {
  if (w >= order()) fail(ErrorCode::InvalidArgument, "Weyl id out of range");
  return {w, matrices_[w], words_[w]};
}

WeylId FiniteWeylGroup::from_word(std::span<const int> word) const {
  WeylId x = 0;
  for (int i : word) {
    if (i < 0 || i >= rank_) fail(ErrorCode::InvalidArgument, "simple index out of range: " + std::to_string(i));
    x = right_simple(x, i);
  }
  return x;
}

WeylId FiniteWeylGroup::from_matrix(std::span<const Int> matrix) const {
  if (matrix.size() != static_cast<std::size_t>(rank_ * rank_)) fail(ErrorCode::DimensionMismatch, "matrix of wrong size");
  std::vector<Int> m(matrix.begin(), matrix.end());
  auto it = index_.find(mat_apply(m, two_rho_));
  if (it == index_.end() || matrices_[it->second] != m) fail(ErrorCode::InvalidArgument, "matrix is not a Weyl group element");
  return it->second;
}

Weight finite_weyl_act(const RootSystem& rs, const FiniteWeylElement& w, const Weight& lambda) {
  rs.check_rank(lambda);
  if (w.matrix.size() != static_cast<std::size_t>(rs.rank() * rs.rank()))
    fail(ErrorCode::DimensionMismatch, "Weyl element matrix does not match the root system rank");
  return mat_apply(w.matrix, lambda);
}

}  // namespace affhecke
