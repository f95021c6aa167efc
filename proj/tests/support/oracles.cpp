#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace oracle {

std::map<AffineElement, int> bfs_lengths(const AffineWeylGroup& g, int max_len) {
  std::map<AffineElement, int> dist{{g.identity(), 0}};
  std::queue<AffineElement> q;
  q.push(g.identity());
  while (!q.empty()) {
    AffineElement x = q.front();
    q.pop();
    const int dx = dist.at(x);
    if (dx == max_len) continue;
    for (int s = 0; s < g.num_generators(); ++s) {
      AffineElement y = g.multiply(x, g.generator(s));
      if (dist.emplace(y, dx + 1).second) q.push(y);
    }
  }
  return dist;
}

namespace {

// A reduced word for y by breadth-first search from the identity.
std::vector<int> bfs_word(const AffineWeylGroup& g, const AffineElement& y) {
  std::map<AffineElement, std::pair<AffineElement, int>> parent;
  std::queue<AffineElement> q;
  q.push(g.identity());
  parent.emplace(g.identity(), std::pair{g.identity(), -1});
  while (!q.empty()) {
    AffineElement x = q.front();
    q.pop();
    if (x == y) break;
    for (int s = 0; s < g.num_generators(); ++s) {
      AffineElement z = g.multiply(x, g.generator(s));
      if (parent.emplace(z, std::pair{x, s}).second) q.push(z);
    }
  }
  std::vector<int> word;
  for (AffineElement x = y; parent.at(x).second >= 0; x = parent.at(x).first) word.push_back(parent.at(x).second);
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

bool subword_leq(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y) {
  std::set<AffineElement> products{g.identity()};
  for (int s : bfs_word(g, y)) {
    std::set<AffineElement> next = products;
    for (const auto& z : products) next.insert(g.multiply(z, g.generator(s)));
    products = std::move(next);
  }
  return products.count(x) > 0;
}

Int stab_length(const AffineWeylGroup& g, const AffineElement& x) {
  Int ht = 0;
  for (Int c : x.t.coords()) ht += c;
  return static_cast<Int>(g.finite().word(x.w).size()) - 2 * ht;
}

namespace {

bool chain_search(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y, int K, int L,
                  const std::vector<AffineElement>& reflections) {
  if (x == y) return true;
  if (L == 0) return false;
  const Int lx = stab_length(g, x), ly = stab_length(g, y);
  if (lx >= ly) return false;
  for (const auto& r : reflections) {
    AffineElement z = g.multiply(r, y);
    const Int lz = stab_length(g, z);
    if (lz < ly && lz >= lx && chain_search(g, x, z, K, L - 1, reflections)) return true;
  }
  return false;
}

}  // namespace

bool chain_stab_leq(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y, int K, int L) {
  std::vector<AffineElement> reflections;
  const auto& rs = g.roots();
  for (int j = 0; j < rs.num_positive_roots(); ++j) {
    // s_alpha as a finite element: the unique w with w(alpha) = -alpha fixing alpha's orthogonal;
    // found by searching the finite group for the matrix of the reflection.
    for (affhecke::WeylId w = 0; w < g.finite().order(); ++w) {
      const Weight& a = rs.root(j);
      bool is_refl = g.finite().act(w, a) == -a;
      for (int i = 0; i < rs.rank() && is_refl; ++i) {
        Weight e = rs.simple_root(i);
        Weight diff = e - g.finite().act(w, e);
        // s_alpha(e) = e - <e, alpha^vee> alpha
        is_refl = diff == rs.pair_coroot(e, j) * a;
      }
      if (!is_refl) continue;
      for (Int k = -K; k <= K; ++k) reflections.push_back({w, k * a});
      break;
    }
  }
  return chain_search(g, x, y, K, L, reflections);
}

std::vector<Weight> box_weights(int rank, Int box) {
  std::vector<Weight> out;
  std::vector<Int> c(static_cast<std::size_t>(rank), -box);
  for (;;) {
    Weight t(rank);
    for (int i = 0; i < rank; ++i) t[i] = c[static_cast<std::size_t>(i)];
    out.push_back(t);
    int i = 0;
    while (i < rank && c[static_cast<std::size_t>(i)] == box) c[static_cast<std::size_t>(i++)] = -box;
    if (i == rank) return out;
    ++c[static_cast<std::size_t>(i)];
  }
}

std::vector<AffineElement> stab_window(const AffineWeylGroup& g, Int band, Int box) {
  std::vector<AffineElement> out;
  for (const Weight& t : box_weights(g.rank(), box))
    for (affhecke::WeylId w = 0; w < g.finite().order(); ++w) {
      AffineElement x{w, t};
      if (std::abs(stab_length(g, x)) <= band) out.push_back(x);
    }
  return out;
}

Weight dot(const AffineWeylGroup& g, Int d, const AffineElement& x, const Weight& lambda) {
  // Work with 2(lambda + d mu + rho), which is integral, then halve.
  const auto& rs = g.roots();
  Weight v = 2 * (lambda + d * x.t) + rs.two_rho();
  Weight image = g.finite().act(x.w, v) - rs.two_rho();
  Weight out(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) out[i] = image[i] / 2;
  return out;
}

namespace {

Int translation_range(const Weight& lambda, Int d, Int box) {
  Int m = 0;
  for (Int c : lambda.coords()) m = std::max(m, std::abs(c));
  return (4 * (box + m + 4)) / d + 2;
}

}  // namespace

std::set<Weight> orbit_in_box(const AffineWeylGroup& g, Int d, const Weight& lambda, Int box) {
  std::set<Weight> out;
  const Int M = translation_range(lambda, d, box);
  for (const Weight& mu : box_weights(g.rank(), M))
    for (affhecke::WeylId w = 0; w < g.finite().order(); ++w) {
      Weight nu = dot(g, d, {w, mu}, lambda);
      bool inside = true;
      for (Int c : nu.coords()) inside = inside && std::abs(c) <= box;
      if (inside) out.insert(nu);
    }
  return out;
}

std::vector<AffineElement> stabilizer_in_range(const AffineWeylGroup& g, Int d, const Weight& lambda, Int box) {
  std::vector<AffineElement> out;
  const Int M = translation_range(lambda, d, box);
  for (const Weight& mu : box_weights(g.rank(), M))
    for (affhecke::WeylId w = 0; w < g.finite().order(); ++w)
      if (dot(g, d, {w, mu}, lambda) == lambda) out.push_back({w, mu});
  return out;
}

std::vector<int> random_word(const AffineWeylGroup& g, int len, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, g.num_generators() - 1);
  std::vector<int> w(static_cast<std::size_t>(len));
  for (int& s : w) s = pick(rng);
  return w;
}

AffineElement random_element(const AffineWeylGroup& g, int max_len, std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, max_len);
  AffineElement x = g.identity();
  for (int s : random_word(g, len(rng), rng)) x = g.multiply(x, g.generator(s));
  return x;
}

}  // namespace oracle
