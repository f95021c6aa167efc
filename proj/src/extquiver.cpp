#include "affhecke/extquiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "affhecke/error.hpp"

namespace affhecke {

template <class V>
std::optional<std::size_t> ExtQuiver<V>::index_of(const V& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

template <class V>
const QuiverEdge* ExtQuiver<V>::find_edge(std::size_t s, std::size_t t) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{s, t},
                             [](const QuiverEdge& e, const std::pair<std::size_t, std::size_t>& k) {
                               return std::pair{e.src, e.dst} < k;
                             });
  if (it == edges.end() || it->src != s || it->dst != t) return nullptr;
  return &*it;
}

template struct ExtQuiver<AffineElement>;
template struct ExtQuiver<Weight>;

namespace {

void check_window(const QuiverWindow& w) {
  if (w.band < 0 || w.box < 0) fail(ErrorCode::WindowTooSmall, "window bounds must be non-negative");
}

// Calls f on every weight of the given rank with coordinates in [-box, box].
template <class F>
void for_each_in_box(int rank, Int box, F&& f) {
  std::vector<Int> c(static_cast<std::size_t>(rank), -box);
  for (;;) {
    Weight t(rank);
    for (int i = 0; i < rank; ++i) t[i] = c[static_cast<std::size_t>(i)];
    f(t);
    int i = 0;
    while (i < rank && c[static_cast<std::size_t>(i)] == box) c[static_cast<std::size_t>(i++)] = -box;
    if (i == rank) return;
    ++c[static_cast<std::size_t>(i)];
  }
}

Int max_abs_coord(const Weight& w) {
  Int m = 0;
  for (Int c : w.coords()) m = std::max(m, std::abs(c));
  return m;
}

void sort_edges(std::vector<QuiverEdge>& edges) {
  std::sort(edges.begin(), edges.end(),
            [](const QuiverEdge& a, const QuiverEdge& b) { return std::pair{a.src, a.dst} < std::pair{b.src, b.dst}; });
}

std::string walls_str(const std::set<HyperplaneForm>& walls) {
  std::string s = "{";
  bool first = true;
  for (const auto& f : walls) {
    s += (first ? "" : ", ") + f.str();
    first = false;
  }
  return s + "}";
}

}  // namespace

std::vector<AffineElement> coset_window(const AffineWeylGroup& g, GeneratorSet J, const QuiverWindow& w) {
  check_window(w);
  check_proper(g, J);
  std::vector<AffineElement> out;
  for_each_in_box(g.rank(), w.box, [&](const Weight& t) {
    for (WeylId u = 0; u < g.finite().order(); ++u) {
      AffineElement x{u, t};
      if (std::abs(g.stab_length(x)) <= w.band && is_coset_min_rep(g, J, x)) out.push_back(x);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

HeckeQuiver hecke_quiver(const AffineWeylGroup& g, GeneratorSet J, const QuiverWindow& w) {
  HeckeQuiver q;
  q.J = J;
  q.window = w;
  q.vertices = coset_window(g, J, w);
  const auto parabolic = parabolic_elements(g, J);
  struct Rep {
    AffineElement x, inv;
    Int lst;
  };
  std::vector<std::vector<Rep>> reps(q.vertices.size());
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (const auto& u : parabolic) {
      AffineElement x = g.multiply(u, q.vertices[i]);
      reps[i].push_back({x, g.inverse(x), g.stab_length(x)});
    }
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t j = 0; j < q.vertices.size(); ++j) {
      if (i == j) continue;
      QuiverEdge e{i, j, {}};
      for (const Rep& a : reps[i])
        for (const Rep& b : reps[j]) {
          // For x' and y' = x' r with r a reflection, x' <^st y' iff l^st(x') < l^st(y').
          if (a.lst >= b.lst) continue;
          if (auto r = g.as_reflection(g.multiply(a.inv, b.x))) e.walls.insert(g.wall(*r));
        }
      if (!e.walls.empty()) q.edges.push_back(std::move(e));
    }
  sort_edges(q.edges);
  return q;
}

QuantumWall quantum_wall_classify(const AffineWeylGroup& g, const Weight& lambda, const Weight& mu, Int d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "dilation d must be positive");
  const RootSystem& rs = g.roots();
  rs.check_rank(lambda);
  rs.check_rank(mu);
  if (lambda == mu) fail(ErrorCode::InvalidArgument, "quantum_wall_classify needs distinct weights");
  const Weight diff = mu - lambda;
  QuantumWall out;
  for (int j = 0; j < rs.num_positive_roots(); ++j) {
    const Weight& alpha = rs.root(j);
    Int c = 0;
    for (int i = 0; i < rs.rank(); ++i)
      if (alpha[i] != 0) {
        c = diff[i] / alpha[i];
        break;
      }
    if (c == 0 || diff != c * alpha) continue;
    const Int num = -c - (rs.pair_coroot(lambda, j) + rs.rho_pair_coroot(j));
    if (num % d != 0) break;  // roots are primitive, so no other root is proportional
    out.kind = QuantumWall::Case::B;
    out.root = j;
    out.k = num / d;
    out.wall = HyperplaneForm::make(rs.coroot(j), out.k);
    return out;
  }
  bool divisible = true;
  for (Int c : diff.coords()) divisible = divisible && c % d == 0;
  if (divisible) {
    out.kind = QuantumWall::Case::A;
    out.wall = HyperplaneForm::hbar(rs.rank());
  }
  return out;
}

QuantumQuiver quantum_quiver(const AffineWeylGroup& g, Int d, const Weight& lambda0, const QuiverWindow& w) {
  check_window(w);
  if (!in_fundamental_domain(g, d, lambda0))
    fail(ErrorCode::NotFundamental, lambda0.str() + " is not in the fundamental domain for d = " + std::to_string(d));
  QuantumQuiver q;
  q.d = d;
  q.lambda0 = lambda0;
  q.window = w;
  std::vector<std::pair<Weight, AffineElement>> found;
  for_each_in_box(g.rank(), w.box, [&](const Weight& mu) {
    BlockLocation loc = locate_block(g, d, mu);
    if (loc.fundamental == lambda0) found.emplace_back(mu, loc.x);
  });
  std::sort(found.begin(), found.end());
  for (auto& [mu, x] : found) {
    q.vertices.push_back(mu);
    q.located.push_back(x);
  }
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t j = 0; j < q.vertices.size(); ++j) {
      if (i == j || !dominance_leq(q.vertices[i], q.vertices[j])) continue;
      QuantumWall c = quantum_wall_classify(g, q.vertices[i], q.vertices[j], d);
      if (c.kind == QuantumWall::Case::B) q.edges.push_back({i, j, {*c.wall}});
    }
  sort_edges(q.edges);
  return q;
}

Dictionary::Dictionary(const AffineWeylGroup& g, Int d, Weight lambda0, GeneratorSet J)
    : g_(&g), d_(d), lambda0_(std::move(lambda0)), J_(J) {
  check_proper(g, J);
  for (int s : J.list())
    if (dot_act(g, d, g.generator(s), lambda0_) != lambda0_)
      fail(ErrorCode::StabilizerMismatch, "s" + std::to_string(s) + " moves " + lambda0_.str());
}

Weight Dictionary::operator()(const AffineElement& x) const {
  AffineElement y = twist_ ? g_->multiply(x, *twist_) : x;
  return dot_act(*g_, d_, g_->inverse(y), lambda0_);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::PassWithWarnings: return "PASS-with-warnings";
    case Verdict::Fail: return "FAIL";
  }
  return "?";
}

CompareReport compare(const AffineWeylGroup& g, const HeckeQuiver& hq, const QuantumQuiver& qq, const Dictionary& phi) {
  CompareReport rep;
  rep.hecke_vertices = hq.vertices.size();
  rep.quantum_vertices = qq.vertices.size();

  // Common window: Hecke vertices whose image is a quantum vertex, and quantum vertices
  // located in a Hecke window coset.
  std::vector<std::optional<std::size_t>> image(hq.vertices.size());
  std::map<std::size_t, std::size_t> preimage;  // quantum index -> hecke index
  for (std::size_t i = 0; i < hq.vertices.size(); ++i) {
    image[i] = qq.index_of(phi(hq.vertices[i]));
    if (!image[i]) continue;
    auto [it, fresh] = preimage.emplace(*image[i], i);
    if (!fresh)
      rep.witnesses.push_back("dictionary not injective: " + g.format(hq.vertices[it->second]) + " and " +
                              g.format(hq.vertices[i]) + " both map to " + qq.vertices[*image[i]].str());
  }
  for (std::size_t j = 0; j < qq.vertices.size(); ++j) {
    if (preimage.count(j)) continue;
    if (j < qq.located.size() && hq.index_of(qq.located[j]))
      rep.witnesses.push_back("quantum vertex " + qq.vertices[j].str() + " lies in coset " +
                              g.format(qq.located[j]) + " of the Hecke window but is not hit by the dictionary");
  }
  rep.common_vertices = preimage.size();

  for (const QuiverEdge& e : hq.edges) {
    if (!image[e.src] || !image[e.dst]) continue;
    ++rep.hecke_edges;
    const std::string label = g.format(hq.vertices[e.src]) + " -> " + g.format(hq.vertices[e.dst]);
    if (e.walls.size() > 1) rep.warnings.push_back("edge " + label + " carries walls " + walls_str(e.walls));
    const QuiverEdge* f = qq.find_edge(*image[e.src], *image[e.dst]);
    const std::string qlabel = qq.vertices[*image[e.src]].str() + " -> " + qq.vertices[*image[e.dst]].str();
    if (!f) {
      rep.witnesses.push_back("Hecke edge " + label + " " + walls_str(e.walls) + " has no quantum edge " + qlabel);
      continue;
    }
    const bool ok = e.walls.size() == 1 ? e.walls == f->walls : e.walls.count(*f->walls.begin()) > 0;
    if (!ok) {
      rep.witnesses.push_back("wall mismatch on " + label + ": Hecke " + walls_str(e.walls) + ", quantum " + qlabel +
                              " " + walls_str(f->walls));
      continue;
    }
    ++rep.matched_edges;
  }
  for (const QuiverEdge& f : qq.edges) {
    auto s = preimage.find(f.src), t = preimage.find(f.dst);
    if (s == preimage.end() || t == preimage.end()) continue;
    ++rep.quantum_edges;
    if (!hq.find_edge(s->second, t->second))
      rep.witnesses.push_back("quantum edge " + qq.vertices[f.src].str() + " -> " + qq.vertices[f.dst].str() + " " +
                              walls_str(f.walls) + " has no Hecke edge " + g.format(hq.vertices[s->second]) + " -> " +
                              g.format(hq.vertices[t->second]));
  }
  if (!rep.witnesses.empty())
    rep.verdict = Verdict::Fail;
  else if (!rep.warnings.empty())
    rep.verdict = Verdict::PassWithWarnings;
  return rep;
}

std::string_view to_string(Fault f) {
  switch (f) {
    case Fault::None: return "none";
    case Fault::WallShift: return "wall-shift";
    case Fault::DropEdge: return "drop-edge";
    case Fault::DictTwist: return "dict-twist";
  }
  return "?";
}

Fault parse_fault(std::string_view s) {
  for (Fault f : {Fault::None, Fault::WallShift, Fault::DropEdge, Fault::DictTwist})
    if (to_string(f) == s) return f;
  fail(ErrorCode::InvalidArgument, "unknown fault '" + std::string(s) + "'");
}

std::string inject_fault(const AffineWeylGroup& g, Fault f, HeckeQuiver& hq, const QuantumQuiver& qq,
                         Dictionary& phi) {
  if (f == Fault::None) return "";
  if (f == Fault::DictTwist) {
    for (int s = 0; s < g.num_generators(); ++s)
      if (!phi.J().contains(s)) {
        phi.set_twist(g.generator(s));
        return "dictionary twisted by s" + std::to_string(s);
      }
    return "no generator outside J to twist by";
  }
  for (std::size_t i = 0; i < hq.edges.size(); ++i) {
    QuiverEdge& e = hq.edges[i];
    if (!qq.index_of(phi(hq.vertices[e.src])) || !qq.index_of(phi(hq.vertices[e.dst]))) continue;
    const std::string label = g.format(hq.vertices[e.src]) + " -> " + g.format(hq.vertices[e.dst]);
    if (f == Fault::DropEdge) {
      hq.edges.erase(hq.edges.begin() + static_cast<std::ptrdiff_t>(i));
      return "dropped Hecke edge " + label;
    }
    HyperplaneForm old = *e.walls.begin();
    e.walls.erase(e.walls.begin());
    e.walls.insert(HyperplaneForm::make(old.coroot(), old.k() + 1));
    return "shifted wall " + old.str() + " on " + label;
  }
  return "no Hecke edge inside the common window";
}

EquivalenceResult verify_equivalence(const AffineWeylGroup& g, const EquivalenceRun& run) {
  Weight lambda = run.weight.rank() == 0 ? g.roots().zero() : run.weight;
  EquivalenceResult res;
  res.block = locate_block(g, run.d, lambda);
  res.hecke = hecke_quiver(g, res.block.J, run.window);
  Dictionary phi(g, run.d, res.block.fundamental, res.block.J);
  Int qbox = 0;
  for (const auto& x : res.hecke.vertices) qbox = std::max(qbox, max_abs_coord(phi(x)));
  res.quantum = quantum_quiver(g, run.d, res.block.fundamental, {0, qbox});
  res.fault_note = inject_fault(g, run.fault, res.hecke, res.quantum, phi);
  res.report = compare(g, res.hecke, res.quantum, phi);
  return res;
}

}  // namespace affhecke
